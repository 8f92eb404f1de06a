use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::pairs::{GdKey, PairSet};

/// A-values (invariants of P^4) and per-equation NPT constants for one
/// `(g, d)`. Each equation reads `A = (relative terms) + B * N + NPT`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationInputs {
    pub key: GdKey,
    pub chi_quintic: i64,
    pub a_values: BTreeMap<PairSet, Rational>,
    pub npt_values: BTreeMap<PairSet, Rational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInputs {
    genus: u32,
    degree: u32,
    chi_quintic: i64,
    equations: Vec<RawEquation>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEquation {
    zeta: PairSet,
    #[serde(rename = "A")]
    a: Rational,
    #[serde(rename = "NPT")]
    npt: Rational,
}

impl EquationInputs {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawInputs = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::parse(path, e.into_inner().to_string())
        })?;
        let key = GdKey::new(raw.genus, raw.degree)
            .map_err(|e| Error::parse("degree", e.to_string()))?;
        let mut a_values = BTreeMap::new();
        let mut npt_values = BTreeMap::new();
        for (i, eq) in raw.equations.into_iter().enumerate() {
            if !key.in_s(&eq.zeta) {
                return Err(Error::parse(
                    format!("equations[{i}].zeta"),
                    format!("{} has weight {}, expected {}", eq.zeta, eq.zeta.weight(), key.weight()),
                ));
            }
            if a_values.contains_key(&eq.zeta) {
                return Err(Error::parse(format!("equations[{i}].zeta"), format!("duplicate {}", eq.zeta)));
            }
            a_values.insert(eq.zeta.clone(), eq.a);
            npt_values.insert(eq.zeta, eq.npt);
        }
        Ok(EquationInputs { key, chi_quintic: raw.chi_quintic, a_values, npt_values })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    /// The published (2,1) data set.
    pub fn published_2_1() -> Self {
        Self::from_json_str(PUBLISHED_2_1_JSON).expect("bundled fixture parses")
    }

    /// Multiplies every A and NPT value by `c`.
    pub fn scaled(&self, c: &Rational) -> Self {
        let scale = |m: &BTreeMap<PairSet, Rational>| m.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        EquationInputs {
            key: self.key,
            chi_quintic: self.chi_quintic,
            a_values: scale(&self.a_values),
            npt_values: scale(&self.npt_values),
        }
    }
}

pub const PUBLISHED_2_1_JSON: &str = include_str!("../../fixtures/published_2_1.json");

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_parses() {
        let inp = EquationInputs::published_2_1();
        assert_eq!(inp.key, GdKey::new(2, 1).unwrap());
        assert_eq!(inp.a_values.len(), 5);
        assert_eq!(inp.chi_quintic, -200);
        let zeta = PairSet::new(&[(3, 0), (1, 0)]).unwrap();
        assert_eq!(inp.npt_values[&zeta], Rational::new(157975, 36));
    }

    fn parse_err(text: &str) -> (String, String) {
        match EquationInputs::from_json_str(text) {
            Err(Error::Parse { path, message }) => (path, message),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        let (path, _) = parse_err(
            r#"{"genus":2,"degree":1,"chi_quintic":-200,"equations":[{"zeta":[[4,0]],"A":"3/0","NPT":"0"}]}"#,
        );
        assert_eq!(path, "equations[0].A");
        let (path, _) = parse_err(r#"{"genus":2,"degree":1,"equations":[]}"#);
        assert_eq!(path, ".");
        let (path, _) = parse_err(
            r#"{"genus":2,"degree":1,"chi_quintic":0,"equations":[{"zeta":[[0,0]],"A":"1","NPT":"0"}]}"#,
        );
        assert_eq!(path, "equations[0].zeta");
        let (path, _) = parse_err(
            r#"{"genus":2,"degree":1,"chi_quintic":0,"equations":[{"zeta":[[3,0]],"A":"1","NPT":"0"}]}"#,
        );
        assert_eq!(path, "equations[0].zeta");
        let (path, msg) = parse_err(
            r#"{"genus":2,"degree":1,"chi_quintic":0,"equations":[{"zeta":[[4,0]],"A":"1","NPT":"0"},{"zeta":[[4,0]],"A":"2","NPT":"0"}]}"#,
        );
        assert_eq!(path, "equations[1].zeta");
        assert!(msg.contains("duplicate"));
        let (path, _) = parse_err(r#"{"genus":2,"degree":0,"chi_quintic":0,"equations":[]}"#);
        assert_eq!(path, "degree");
    }
}
