//! Closed-form coefficients of `N_{g,d}`: the one- and two-pair `B` values, the
//! genus-3 three-pair value with its localization case split, and the master
//! coefficients `C_{g,d}`.

use serde::Serialize;

use crate::arith::{factorial, PolyQ, Rational};
use crate::error::{Error, Result};
use crate::pairs::{GdKey, PairSet};

fn r(n: i64) -> Rational {
    Rational::from(n)
}

/// `X_{g,d} = (5d+2-g)((5d+1-g)(g-1)+5d)`.
pub fn x_gd(g: i64, d: i64) -> Rational {
    r(5 * d + 2 - g) * (r(5 * d + 1 - g) * r(g - 1) + r(5 * d))
}

/// `Z_{g,d}(l1,l2) = 5d^2(l2+1) + (l1(l1+1) + (2g-1)l2(l2+1))d/2 - (5d+1-g)(5d-g)d/2`.
pub fn z_gd(g: i64, d: i64, l1: i64, l2: i64) -> Rational {
    let (g, d, l1, l2) = (r(g), r(d), r(l1), r(l2));
    let half = Rational::new(1, 2);
    let five_d = &d * 5;
    &five_d * &d * (&l2 + 1)
        + (&l1 * (&l1 + 1) + (&g * 2 - 1) * &l2 * (&l2 + 1)) * &d * &half
        - (&five_d + 1 - &g) * (&five_d - &g) * &d * &half
}

/// The auxiliary `f_{g,d}(l1,l2)` entering `Y`. Symmetric in `l1, l2`.
/// Only meaningful on `l1 + l2 = 5d + 1 - g`, but evaluated anywhere.
pub fn f_gd(g: i64, d: i64, l1: i64, l2: i64) -> Rational {
    let (g, d, l1, l2) = (r(g), r(d), r(l1), r(l2));
    let five_d = &d * 5;
    let cube_part = |l: &Rational| l * l * (l + 1);
    let quartic_part = |l: &Rational| l * (l * l - 1) * (l * 3 + 2);
    let t1 = &five_d * Rational::new(1, 2) * (cube_part(&l1) + cube_part(&l2));
    let t2 = (&g - 1) * Rational::new(1, 12) * (quartic_part(&l1) + quartic_part(&l2));
    let t3 = (&l1 + 1) * (&l2 + 1) * Rational::new(1, 2)
        * (&d * &d * 25 * (&g * 2 + 1) + (&five_d - &l1 * &l2) * (&g * 2 - 1) * (-&g + 1));
    t1 + t2 + t3
}

/// `Y_{g,d}(l1,l2) = f(l1,l2) - f(5d+1-g,0) + 5d X_{g,d} + 5d(5d+1-g)`, defined
/// only on the line `l1 + l2 = 5d + 1 - g`.
pub fn y_gd(g: i64, d: i64, l1: i64, l2: i64) -> Result<Rational> {
    let w = 5 * d + 1 - g;
    if l1 + l2 != w {
        return Err(Error::Argument(format!(
            "Y needs l1 + l2 = 5d + 1 - g = {w}, got {l1} + {l2}"
        )));
    }
    Ok(f_gd(g, d, l1, l2) - f_gd(g, d, w, 0) + r(5 * d) * x_gd(g, d) + r(5 * d * w))
}

/// `1875d^4 + 3875d^3 - 1950d^2 - 2760d + 1344`.
pub fn genus_three_triple_poly() -> PolyQ {
    PolyQ::from_ints(&[1344, -2760, -1950, 3875, 1875])
}

/// `zeta_{2,d}` and `zeta_{3,d}`; other genera have no fixed choice here.
pub fn standard_zeta(key: GdKey) -> Result<PairSet> {
    let d = key.d;
    match key.g {
        2 => PairSet::new(&[(5 * d - 2, 0), (1, 0)]),
        3 => PairSet::new(&[(5 * d - 4, 0), (1, 0), (1, 0)]),
        g => Err(Error::UnsupportedShape(format!("no standard zeta for genus {g}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BShape {
    /// `{(l, m)}`
    OnePair { l: u32, m: u8 },
    /// `{(l1, m), (l2, 0)}`; when both pairs have `b = 0` the larger comes first.
    TwoPair { l1: u32, m: u8, l2: u32 },
    /// `zeta_{3,d} = {(5d-4,0),(1,0),(1,0)}` at genus 3.
    GenusThreeTriple,
}

pub fn classify(key: GdKey, zeta: &PairSet) -> Result<BShape> {
    if !key.in_s(zeta) {
        return Err(Error::Argument(format!(
            "{zeta} has weight {}, expected {} for (g,d) = ({},{})",
            zeta.weight(),
            key.weight(),
            key.g,
            key.d
        )));
    }
    let p = zeta.pairs();
    match p.len() {
        1 => Ok(BShape::OnePair { l: p[0].a, m: p[0].b }),
        2 => match (p[0].b, p[1].b) {
            (m, 0) => Ok(BShape::TwoPair { l1: p[0].a, m, l2: p[1].a }),
            (0, m) => Ok(BShape::TwoPair { l1: p[1].a, m, l2: p[0].a }),
            _ => Err(Error::UnsupportedShape(format!(
                "{zeta}: both pairs carry a hyperplane power"
            ))),
        },
        3 if key.g == 3 && *zeta == standard_zeta(key)? => Ok(BShape::GenusThreeTriple),
        _ => Err(Error::UnsupportedShape(format!("no closed form for B at {zeta}"))),
    }
}

/// Coefficient of `N_{g,d}` in `B_{g,d}(zeta)`.
pub fn b_value(key: GdKey, zeta: &PairSet) -> Result<Rational> {
    let (g, d) = (key.g as i64, key.d as i64);
    match classify(key, zeta)? {
        BShape::OnePair { m: 0, .. } => Ok(x_gd(g, d)),
        BShape::OnePair { m: 1, .. } => Ok(r(d)),
        BShape::OnePair { .. } => Ok(Rational::zero()),
        BShape::TwoPair { l1, m: 0, l2 } => y_gd(g, d, l1 as i64, l2 as i64),
        BShape::TwoPair { l1, m: 1, l2 } => Ok(z_gd(g, d, l1 as i64, l2 as i64)),
        BShape::TwoPair { .. } => Ok(Rational::zero()),
        BShape::GenusThreeTriple => Ok(genus_three_triple_poly().eval_int(d)),
    }
}

pub fn c_master_poly(g: u32) -> Result<PolyQ> {
    let five_d = |c: i64| PolyQ::from_ints(&[c, 5]);
    match g {
        2 => Ok((&five_d(-1) * &five_d(-2)).scale(&r(4))),
        3 => Ok((&five_d(-3) * &five_d(-4)).scale(&r(24))),
        _ => Err(Error::UnsupportedShape(format!("no master coefficient for genus {g}"))),
    }
}

/// `4(5d-1)(5d-2)` for genus 2, `24(5d-3)(5d-4)` for genus 3.
pub fn c_master(g: u32, d: u32) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Argument("degree must be at least 1".into()));
    }
    Ok(c_master_poly(g)?.eval_int(d as i64))
}

/// Contributions to the genus-3 three-pair value from the localization
/// graph types; case (c) repeats case (b).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nf3Cases<T> {
    pub case_i: T,
    pub case_b: T,
    pub case_c: T,
    pub case_d: T,
    pub case_e: T,
}

impl<T> Nf3Cases<T>
where
    for<'a> &'a T: std::ops::Add<&'a T, Output = T>,
{
    /// `case_i + case_b + case_c + case_d + case_e`
    pub fn total(&self) -> T {
        let s = &self.case_i + &self.case_b;
        let s = &s + &self.case_c;
        let s = &s + &self.case_d;
        &s + &self.case_e
    }
}

pub fn nf3_case_polys() -> Nf3Cases<PolyQ> {
    let case_b = PolyQ::from_fracs(&[
        (-188, 1),
        (3820, 3),
        (-12225, 4),
        (125, 24),
        (246875, 24),
        (-315625, 24),
        (109375, 24),
    ]);
    Nf3Cases {
        case_i: PolyQ::from_fracs(&[
            (2280, 1),
            (-7355, 1),
            (33125, 4),
            (-61875, 8),
            (143125, 24),
            (-3125, 8),
            (78125, 24),
        ]),
        case_c: case_b.clone(),
        case_b,
        case_d: PolyQ::from_ints(&[-528, 1605, -975, -375]),
        case_e: PolyQ::from_fracs(&[
            (-32, 1),
            (1330, 3),
            (-12575, 4),
            (287375, 24),
            (-591875, 24),
            (640625, 24),
            (-296875, 24),
        ]),
    }
}

pub fn nf3_cases(d: u32) -> Result<Nf3Cases<Rational>> {
    if d == 0 {
        return Err(Error::Argument("degree must be at least 1".into()));
    }
    let p = nf3_case_polys();
    let d = d as i64;
    Ok(Nf3Cases {
        case_i: p.case_i.eval_int(d),
        case_b: p.case_b.eval_int(d),
        case_c: p.case_c.eval_int(d),
        case_d: p.case_d.eval_int(d),
        case_e: p.case_e.eval_int(d),
    })
}

/// `(-1)^{m+1-D} D^{m+1} / ((m-D)! D!)`, the common weight of the per-`D`
/// summands below.
fn signed_weight(m: i64, big_d: i64) -> Rational {
    let mag = Rational::from(num_bigint::BigInt::from(big_d).pow((m + 1) as u32))
        / Rational::from(factorial((m - big_d) as usize) * factorial(big_d as usize));
    if (m + 1 - big_d) % 2 == 0 {
        mag
    } else {
        -mag
    }
}

fn check_range(d: u32, big_d: i64, m: i64) -> Result<()> {
    if d == 0 {
        return Err(Error::Argument("degree must be at least 1".into()));
    }
    if !(1..=m).contains(&big_d) {
        return Err(Error::Argument(format!("D = {big_d} outside 1..={m}")));
    }
    Ok(())
}

/// Per-`D` summand of the case (b) sum, `1 <= D <= 5d - 3`.
pub fn t_d(d: u32, big_d: i64) -> Result<Rational> {
    let m = 5 * d as i64 - 3;
    check_range(d, big_d, m)?;
    let dd = r(d as i64);
    let bd = r(big_d);
    let d2 = &dd * &dd;
    let d3 = &d2 * &dd;
    let bracket = &d3 * 375 + &d2 * 225 - &dd * 355 + 84
        - r(m) * (&dd * 5) * (&dd * 5 + 8) / &bd
        - &bd * (&d2 * 75 - &dd * 15 + 32)
        + &bd * &bd * 4;
    Ok(signed_weight(m, big_d) * bracket)
}

pub fn t_sum(d: u32) -> Result<Rational> {
    let m = 5 * d as i64 - 3;
    (1..=m).map(|big_d| t_d(d, big_d)).sum()
}

/// The sextic the case (b) sum evaluates to.
pub fn t_sum_poly() -> PolyQ {
    nf3_case_polys().case_b
}

/// Per-`D` summand of the case (e) sum, `1 <= D <= 5d - 2`.
pub fn case_e_d(d: u32, big_d: i64) -> Result<Rational> {
    let m = 5 * d as i64 - 2;
    check_range(d, big_d, m)?;
    let dd = r(d as i64);
    let bd = r(big_d);
    let d2 = &dd * &dd;
    let d3 = &d2 * &dd;
    let d4 = &d3 * &dd;
    let bracket = (&d4 * -625 + &d3 * 1125 - &d2 * 750 + &dd * 160) / (&bd * 2)
        + (&d4 * 1875 - &d3 * 3500 + &d2 * 2475 - &dd * 680 + 64) * Rational::new(1, 2)
        + (&d2 * 25 + &dd * 35 - 28) * &bd
        - &bd * &bd * 4;
    Ok(signed_weight(m, big_d) * bracket)
}

pub fn case_e_sum(d: u32) -> Result<Rational> {
    let m = 5 * d as i64 - 2;
    (1..=m).map(|big_d| case_e_d(d, big_d)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    fn key(g: u32, d: u32) -> GdKey {
        GdKey::new(g, d).unwrap()
    }

    fn ps(raw: &[(u32, u8)]) -> PairSet {
        PairSet::new(raw).unwrap()
    }

    #[test]
    fn x_values() {
        assert_eq!(x_gd(2, 1), r(45));
        assert_eq!(x_gd(1, 1), r(30));
        for d in 1..=10 {
            assert_eq!(x_gd(2, d), r(50 * d * d - 5 * d));
            assert_eq!(x_gd(1, d), r(5 * d * (5 * d + 1)));
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(z_gd(2, 1, 3, 0), r(5));
        assert_eq!(z_gd(2, 1, 2, 1), r(10));
        for g in 0..5 {
            for d in 1..6 {
                assert_eq!(z_gd(g, d, 5 * d - g, 0), r(5 * d * d));
            }
        }
    }

    #[test]
    fn f_and_y_values() {
        assert_eq!(f_gd(2, 1, 3, 1), r(593));
        assert_eq!(y_gd(2, 1, 3, 1).unwrap(), r(293));
        for d in 1..=5 {
            let diff = f_gd(2, d, 5 * d - 2, 1) - f_gd(2, d, 5 * d - 1, 0);
            assert_eq!(diff, r(4 * (5 * d - 1) * (5 * d - 2)));
            let want = r(4 * (5 * d - 1) * (5 * d - 2)) + r(5 * d) * x_gd(2, d) + r(5 * d * (5 * d - 1));
            assert_eq!(y_gd(2, d, 5 * d - 2, 1).unwrap(), want);
            for g in 0..4 {
                let w = 5 * d + 1 - g;
                assert_eq!(y_gd(g, d, w, 0).unwrap(), r(5 * d) * x_gd(g, d) + r(5 * d * w));
                for a in 0..=w {
                    assert_eq!(f_gd(g, d, a, w - a), f_gd(g, d, w - a, a));
                }
            }
        }
        assert!(matches!(y_gd(2, 1, 3, 0), Err(Error::Argument(_))));
    }

    #[test]
    fn b_dispatch() {
        assert_eq!(b_value(key(0, 3), &ps(&[(15, 1)])).unwrap(), r(3));
        assert_eq!(b_value(key(2, 1), &ps(&[(4, 0)])).unwrap(), r(45));
        assert_eq!(b_value(key(2, 1), &ps(&[(3, 1)])).unwrap(), r(1));
        assert!(b_value(key(2, 1), &ps(&[(2, 2)])).unwrap().is_zero());
        assert!(b_value(key(2, 1), &ps(&[(1, 3)])).unwrap().is_zero());
        assert_eq!(b_value(key(2, 1), &ps(&[(3, 0), (1, 0)])).unwrap(), r(293));
        assert_eq!(b_value(key(2, 1), &ps(&[(2, 1), (1, 0)])).unwrap(), r(10));
        // the m-pair is found regardless of position
        assert_eq!(
            b_value(key(2, 2), &ps(&[(7, 0), (1, 1)])).unwrap(),
            z_gd(2, 2, 1, 7)
        );
        assert!(b_value(key(2, 1), &ps(&[(1, 1), (1, 1)])).is_err());
        assert_eq!(b_value(key(3, 1), &ps(&[(1, 0), (1, 0), (1, 0)])).unwrap(), r(2384));
        assert!(matches!(
            b_value(key(2, 2), &ps(&[(7, 0), (1, 0), (1, 0)])),
            Err(Error::UnsupportedShape(_))
        ));
        assert!(matches!(b_value(key(2, 1), &ps(&[(1, 0)])), Err(Error::Argument(_))));
    }

    #[test]
    fn master_coefficients() {
        assert_eq!(c_master(2, 1).unwrap(), r(48));
        assert_eq!(c_master(3, 1).unwrap(), r(48));
        assert_eq!(c_master(3, 2).unwrap(), r(1008));
        assert!(matches!(c_master(4, 1), Err(Error::UnsupportedShape(_))));
    }

    #[test]
    fn nf3_case_sum_is_the_quartic() {
        let p = nf3_case_polys();
        assert_eq!(p.total(), genus_three_triple_poly());
        assert_eq!(nf3_cases(1).unwrap().case_d, r(-273));
        let top = p.case_i.coeff(6) + p.case_b.coeff(6) * r(2) + p.case_e.coeff(6);
        assert!(top.is_zero());
        for d in 1..=6 {
            assert_eq!(nf3_cases(d).unwrap().total(), b_value(key(3, d), &standard_zeta(key(3, d)).unwrap()).unwrap());
        }
    }

    #[test]
    fn case_sums() {
        for d in 1..=5 {
            assert_eq!(t_sum(d).unwrap(), t_sum_poly().eval_int(d as i64), "T sum at d = {d}");
            assert_eq!(
                case_e_sum(d).unwrap(),
                nf3_case_polys().case_e.eval_int(d as i64),
                "case (e) sum at d = {d}"
            );
        }
        let at_one = q(109375 - 315625 + 246875 + 125, 24) - q(12225, 4) + q(3820, 3) - r(188);
        assert_eq!(t_sum(1).unwrap(), at_one);
        assert!(t_d(2, 7).is_ok());
        assert!(t_d(2, 8).is_err());
        assert!(t_d(2, 0).is_err());
        assert!(case_e_d(1, 4).is_err());
    }
}
