//! The pairing matrix over `S'_{g,d}`, the constants `C_rho`, and the master
//! equation that isolates `N_{g,d}`.
//!
//! Two solve routes exist. The dense one builds the full matrix over
//! `S'_{g,d}`, which is only feasible for small keys (`|S'_{2,5}|` is already
//! near a million). The sparse one restricts to coarsenings of `zeta`: the
//! pairing `F(rho_1 | rho_2)` vanishes unless `rho_1` is a coarsening of
//! `rho_2`, so `C_rho = 0` outside that set and the triangular system closes
//! on it. Both give the same unique solution; tests check this.

use std::collections::BTreeMap;
use std::thread;

use serde::Serialize;

use crate::arith::Rational;
use crate::closed_forms::{b_value, c_master, standard_zeta};
use crate::error::{Error, Result};
use crate::fiber::calf;
use crate::pairs::{aut_order, coarsenings, enumerate_s_prime, EnumerationLimits, GdKey, PairSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverLimits {
    pub enumeration: EnumerationLimits,
    /// Largest `|S'_{g,d}|` for which a dense matrix is built.
    pub max_dense: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits {
            enumeration: EnumerationLimits::default(),
            max_dense: 2000,
        }
    }
}

/// Pair count first, then canonical order.
fn system_order(a: &PairSet, b: &PairSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, Debug)]
pub struct FMatrix {
    key: GdKey,
    labels: Vec<PairSet>,
    entries: Vec<Vec<Rational>>,
}

impl FMatrix {
    pub fn key(&self) -> GdKey {
        self.key
    }

    pub fn labels(&self) -> &[PairSet] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `F(labels[row] | labels[col])`
    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    pub fn position(&self, set: &PairSet) -> Option<usize> {
        self.labels
            .binary_search_by(|probe| system_order(probe, set))
            .ok()
    }

    /// Back-substitution for `F x = rhs`, from the last (largest pair count)
    /// row up.
    pub fn back_substitute(&self, rhs: &[Rational]) -> Vec<Rational> {
        let n = self.len();
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = rhs[i].clone();
            for j in i + 1..n {
                if !x[j].is_zero() && !self.entries[i][j].is_zero() {
                    acc -= &(&self.entries[i][j] * &x[j]);
                }
            }
            x[i] = acc / &self.entries[i][i];
        }
        x
    }

    /// Dense solve of `F(rho_1 | zeta) = sum_rho F(rho_1 | rho) C_rho`.
    pub fn solve(&self, zeta: &PairSet) -> Result<CoefficientSolution> {
        check_zeta(self.key, zeta)?;
        let rhs = self
            .labels
            .iter()
            .map(|row| calf(row, zeta))
            .collect::<Result<Vec<_>>>()?;
        let x = self.back_substitute(&rhs);
        Ok(CoefficientSolution::from_dense(self.key, zeta.clone(), &self.labels, x))
    }
}

fn fill_rows(labels: &[PairSet], rows: &[PairSet]) -> Result<Vec<Vec<Rational>>> {
    rows.iter()
        .map(|row| labels.iter().map(|col| calf(row, col)).collect())
        .collect()
}

/// Full pairing matrix over `S'_{g,d}`. Triangularity and the diagonal are
/// checked here; a violation is an identity error.
pub fn build_fmatrix(key: GdKey, limits: SolverLimits) -> Result<FMatrix> {
    let mut labels = enumerate_s_prime(key, limits.enumeration)?;
    if labels.len() > limits.max_dense {
        return Err(Error::ResourceLimit(format!(
            "|S'_{{{},{}}}| = {} exceeds the dense limit {}",
            key.g,
            key.d,
            labels.len(),
            limits.max_dense
        )));
    }
    labels.sort_by(system_order);

    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(labels.len().max(1));
    let chunk = labels.len().div_ceil(workers).max(1);
    let entries: Vec<Vec<Rational>> = thread::scope(|s| {
        let handles: Vec<_> = labels
            .chunks(chunk)
            .map(|rows| {
                let labels = &labels;
                s.spawn(move || fill_rows(labels, rows))
            })
            .collect();
        let mut out = Vec::with_capacity(labels.len());
        for h in handles {
            out.extend(h.join().expect("matrix worker panicked")?);
        }
        Ok::<_, Error>(out)
    })?;

    for (i, row) in labels.iter().enumerate() {
        for (j, col) in labels.iter().enumerate() {
            let v = &entries[i][j];
            if i == j {
                let aut = Rational::from(aut_order(row));
                if *v != aut {
                    return Err(Error::Identity(format!(
                        "diagonal F({row}|{row}) = {v}, expected {aut}"
                    )));
                }
            } else if row.len() >= col.len() && !v.is_zero() {
                return Err(Error::Identity(format!("F({row}|{col}) = {v} breaks triangularity")));
            }
        }
    }
    Ok(FMatrix { key, labels, entries })
}

fn check_zeta(key: GdKey, zeta: &PairSet) -> Result<()> {
    if key.in_s(zeta) {
        Ok(())
    } else {
        Err(Error::Argument(format!(
            "{zeta} is not in S_{{{},{}}}: weight {} != {}",
            key.g,
            key.d,
            zeta.weight(),
            key.weight()
        )))
    }
}

/// Nonzero `C_rho` for one `zeta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSolution {
    pub zeta: PairSet,
    pub key: GdKey,
    pub coeffs: BTreeMap<PairSet, Rational>,
}

impl CoefficientSolution {
    fn from_dense(key: GdKey, zeta: PairSet, labels: &[PairSet], x: Vec<Rational>) -> Self {
        let coeffs = labels
            .iter()
            .cloned()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        CoefficientSolution { zeta, key, coeffs }
    }

    /// `{"[[a,b],...]": "p/q", ...}`
    pub fn to_json_map(&self) -> serde_json::Map<String, serde_json::Value> {
        self.coeffs
            .iter()
            .map(|(k, v)| (k.to_json_string(), serde_json::Value::String(v.to_string())))
            .collect()
    }

    pub fn get(&self, rho: &PairSet) -> Rational {
        self.coeffs.get(rho).cloned().unwrap_or_default()
    }

    /// `F(row | zeta) - sum_rho F(row | rho) C_rho`
    pub fn residual(&self, row: &PairSet) -> Result<Rational> {
        let mut acc = calf(row, &self.zeta)?;
        for (rho, c) in &self.coeffs {
            acc -= &(calf(row, rho)? * c);
        }
        Ok(acc)
    }

    /// Re-substitutes into every given row; the first nonzero residual is an
    /// identity error.
    pub fn check_rows<'a>(&self, rows: impl IntoIterator<Item = &'a PairSet>) -> Result<()> {
        for row in rows {
            let r = self.residual(row)?;
            if !r.is_zero() {
                return Err(Error::Identity(format!(
                    "relation for {row} fails with residual {r} (zeta = {})",
                    self.zeta
                )));
            }
        }
        Ok(())
    }

    /// Re-substitution over all of `S'_{g,d}`.
    pub fn check_all_rows(&self, limits: EnumerationLimits) -> Result<()> {
        self.check_rows(&enumerate_s_prime(self.key, limits)?)
    }

    /// Rows where either side can be nonzero: coarsenings of `zeta` in `S'`.
    pub fn check_support_rows(&self) -> Result<()> {
        self.check_rows(&closure(self.key, &self.zeta))
    }
}

fn closure(key: GdKey, zeta: &PairSet) -> Vec<PairSet> {
    let mut c: Vec<PairSet> = coarsenings(zeta)
        .into_iter()
        .filter(|s| key.in_s_prime(s))
        .collect();
    c.sort_by(system_order);
    c.dedup();
    c
}

/// Unique `C_rho` for `zeta in S_{g,d}`, solved on the coarsenings of `zeta`.
pub fn solve_crho(key: GdKey, zeta: &PairSet) -> Result<CoefficientSolution> {
    check_zeta(key, zeta)?;
    let labels = closure(key, zeta);
    let n = labels.len();
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let row = &labels[i];
        let mut acc = calf(row, zeta)?;
        for j in i + 1..n {
            if !x[j].is_zero() {
                let f = calf(row, &labels[j])?;
                if !f.is_zero() {
                    acc -= &(f * &x[j]);
                }
            }
        }
        x[i] = acc / Rational::from(aut_order(row));
    }
    Ok(CoefficientSolution::from_dense(key, zeta.clone(), &labels, x))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MasterEquation {
    pub key: GdKey,
    pub zeta: PairSet,
    /// `A(zeta) - sum C_rho A(rho)` as `(set, coefficient)` terms; zeta first.
    pub lhs_terms: Vec<(PairSet, Rational)>,
    /// Coefficient of `N_{g,d}` on the right-hand side.
    pub n_coefficient: Rational,
    /// Set when `zeta` lies in `S'`: the combination is identically zero and
    /// `n_coefficient` must not be divided by.
    pub collapsed: bool,
}

/// `B(zeta) - sum C_rho B(rho)` from the closed-form `B` values.
pub fn b_combination(sol: &CoefficientSolution) -> Result<Rational> {
    let mut acc = b_value(sol.key, &sol.zeta)?;
    for (rho, c) in &sol.coeffs {
        acc -= &(b_value(sol.key, rho)? * c);
    }
    Ok(acc)
}

/// Builds the master equation for `zeta`. `n_coefficient` is computed as
/// `B(zeta) - sum C_rho B(rho)` from the closed-form `B` values; for the
/// standard choice of `zeta` it must agree with `c_master`.
pub fn assemble_master(key: GdKey, zeta: &PairSet) -> Result<MasterEquation> {
    if !(2..=3).contains(&key.g) {
        return Err(Error::Argument(format!(
            "master equation is set up for genus 2 and 3, got {}",
            key.g
        )));
    }
    let sol = solve_crho(key, zeta)?;
    let mut lhs_terms = vec![(zeta.clone(), Rational::one())];
    lhs_terms.extend(sol.coeffs.iter().rev().map(|(rho, c)| (rho.clone(), -c)));

    if key.in_s_prime(zeta) {
        return Ok(MasterEquation {
            key,
            zeta: zeta.clone(),
            lhs_terms,
            n_coefficient: Rational::zero(),
            collapsed: true,
        });
    }

    let n_coefficient = b_combination(&sol)?;
    if *zeta == standard_zeta(key)? {
        let expected = c_master(key.g, key.d)?;
        if n_coefficient != expected {
            return Err(Error::Identity(format!(
                "B-combination gives {n_coefficient}, closed form gives {expected}"
            )));
        }
    }
    Ok(MasterEquation {
        key,
        zeta: zeta.clone(),
        lhs_terms,
        n_coefficient,
        collapsed: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(g: u32, d: u32) -> GdKey {
        GdKey::new(g, d).unwrap()
    }

    fn ps(raw: &[(u32, u8)]) -> PairSet {
        PairSet::new(raw).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn fmatrix_small_keys() {
        for (g, d) in [(2, 1), (3, 1)] {
            let m = build_fmatrix(key(g, d), SolverLimits::default()).unwrap();
            assert_eq!(m.len(), enumerate_s_prime(key(g, d), EnumerationLimits::default()).unwrap().len());
            for (i, l) in m.labels().iter().enumerate() {
                assert_eq!(m.position(l), Some(i));
            }
        }
        let m = build_fmatrix(key(2, 1), SolverLimits::default()).unwrap();
        assert_eq!(&m.labels()[..4], &[ps(&[(1, 3)]), ps(&[(2, 2)]), ps(&[(3, 1)]), ps(&[(4, 0)])]);
    }

    #[test]
    fn dense_limit() {
        let lim = SolverLimits { max_dense: 10, ..SolverLimits::default() };
        assert!(matches!(build_fmatrix(key(2, 1), lim), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn genus_two_table() {
        for d in 1..=5u32 {
            let zeta = standard_zeta(key(2, d)).unwrap();
            let sol = solve_crho(key(2, d), &zeta).unwrap();
            assert_eq!(sol.coeffs.len(), 4);
            for m in 0..=3u8 {
                let rho = ps(&[(5 * d - 1 - m as u32, m)]);
                assert_eq!(sol.get(&rho), r(5i64.pow(m as u32) * (5 * d as i64 - m as i64)));
            }
        }
    }

    #[test]
    fn genus_three_table() {
        for d in 1..=5u32 {
            let dd = d as i64;
            let zeta = standard_zeta(key(3, d)).unwrap();
            let sol = solve_crho(key(3, d), &zeta).unwrap();
            let mut want: BTreeMap<PairSet, Rational> = BTreeMap::new();
            for s in 0..=3u8 {
                let si = s as i64;
                let c = Rational::from((5 * dd - 1 - si) * (si + 1) * 5i64.pow(s as u32))
                    * (Rational::new(si, 2) - r(5 * dd));
                *want.entry(ps(&[(5 * d - 2 - s as u32, s)])).or_default() += c;
                if s <= 2 {
                    *want.entry(ps(&[(5 * d - 4, 0), (2 - s as u32, s)])).or_default() +=
                        r((3 - si) * 5i64.pow(s as u32));
                }
                if 5 * dd - 3 - si >= 0 {
                    *want.entry(ps(&[(5 * d - 3 - s as u32, s), (1, 0)])).or_default() +=
                        r(2 * (5 * dd - 2 - si) * 5i64.pow(s as u32));
                }
            }
            want.retain(|_, c| !c.is_zero());
            assert_eq!(sol.coeffs, want, "d = {d}");
            if d == 1 {
                // the second and third families coincide and add up
                for s in 0..=2u8 {
                    let rho = ps(&[(2 - s as u32, s), (1, 0)]);
                    assert_eq!(sol.get(&rho), r(3 * (3 - s as i64) * 5i64.pow(s as u32)));
                }
            }
        }
    }

    #[test]
    fn dense_and_sparse_agree() {
        for (g, d) in [(2, 1), (3, 1), (3, 2)] {
            let m = build_fmatrix(key(g, d), SolverLimits::default()).unwrap();
            let lim = EnumerationLimits::default();
            for zeta in crate::pairs::enumerate_s(key(g, d), lim).unwrap().iter().step_by(7) {
                let dense = m.solve(zeta).unwrap();
                let sparse = solve_crho(key(g, d), zeta).unwrap();
                assert_eq!(dense, sparse, "zeta = {zeta}");
            }
        }
    }

    #[test]
    fn indicator_inside_s_prime() {
        let lim = EnumerationLimits::default();
        for zeta in enumerate_s_prime(key(2, 1), lim).unwrap() {
            let sol = solve_crho(key(2, 1), &zeta).unwrap();
            assert_eq!(sol.coeffs.len(), 1);
            assert_eq!(sol.get(&zeta), Rational::one());
            let eq = assemble_master(key(2, 1), &zeta).unwrap();
            assert!(eq.collapsed && eq.n_coefficient.is_zero());
        }
    }

    #[test]
    fn resubstitution() {
        for (g, d) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let k = key(g, d);
            let sol = solve_crho(k, &standard_zeta(k).unwrap()).unwrap();
            sol.check_all_rows(EnumerationLimits::default()).unwrap();
        }
        for d in 3..=8 {
            let k = key(3, d);
            solve_crho(k, &standard_zeta(k).unwrap()).unwrap().check_support_rows().unwrap();
        }
    }

    #[test]
    fn rejects_zeta_outside_s() {
        assert!(matches!(solve_crho(key(2, 1), &ps(&[(3, 0)])), Err(Error::Argument(_))));
    }

    #[test]
    fn master_equation_coefficients() {
        for d in 1..=8 {
            for g in [2, 3] {
                let k = key(g, d);
                let eq = assemble_master(k, &standard_zeta(k).unwrap()).unwrap();
                assert_eq!(eq.n_coefficient, c_master(g, d).unwrap());
                assert!(!eq.collapsed);
            }
        }
        let eq = assemble_master(key(2, 1), &ps(&[(3, 0), (1, 0)])).unwrap();
        let coeffs: Vec<Rational> = eq.lhs_terms.iter().map(|(_, c)| c.clone()).collect();
        assert_eq!(coeffs, vec![r(1), r(-5), r(-20), r(-75), r(-250)]);
        assert_eq!(eq.n_coefficient, r(48));
        assert_eq!(assemble_master(key(3, 2), &standard_zeta(key(3, 2)).unwrap()).unwrap().n_coefficient, r(1008));
        assert!(assemble_master(key(4, 1), &ps(&[(1, 0), (1, 0)])).is_err());
    }
}
