//! The alternating sums `C_k(m)`, their generating functions `P^k(x)` with
//! `P = (x/(1-x)) d/dx`, and the reduction of the per-`D` localization sums
//! to `C_k` values.

use serde::Serialize;

use crate::arith::{binomial_conv, factorial, series_compose_operator, PolyQ, Rational, SeriesQ};
use crate::error::{Error, Result};

/// `C_k(m) = sum_{D=1}^m (-1)^{m-D} D^{m+k-1} / ((m-D)! D!)`
pub fn ck_direct(k: u32, m: u32) -> Result<Rational> {
    if m == 0 {
        return Err(Error::Argument("C_k(m) needs m >= 1".into()));
    }
    let mut total = Rational::zero();
    for big_d in 1..=m {
        let num = num_bigint::BigInt::from(big_d).pow(m + k - 1);
        let term = Rational::from(num)
            / Rational::from(factorial((m - big_d) as usize) * factorial(big_d as usize));
        if (m - big_d).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// Binomial closed forms of `C_k(m)` for `1 <= k <= 4`.
pub fn ck_closed(k: u32, m: u32) -> Result<Rational> {
    let m = m as i64;
    let b = |top: i64, bot: i64| binomial_conv(top, bot);
    match k {
        1 => Ok(Rational::one()),
        2 => Ok(b(m + 1, 2)),
        3 => Ok(b(m + 3, 4) + b(m + 2, 4) * 2),
        4 => Ok(b(m + 5, 6) + b(m + 4, 6) * 8 + b(m + 3, 6) * 6),
        _ => Err(Error::UnsupportedShape(format!("no closed form for C_{k}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CkTable {
    pub k: u32,
    /// `C_k(1), ..., C_k(M)`
    pub values: Vec<Rational>,
}

pub fn ck_table(k: u32, max_m: u32) -> Result<CkTable> {
    let values = (1..=max_m).map(|m| ck_direct(k, m)).collect::<Result<_>>()?;
    Ok(CkTable { k, values })
}

/// `P^k(x)` truncated at `order`.
pub fn fk_series(k: u32, order: usize) -> Result<SeriesQ> {
    if order == 0 {
        return Err(Error::Argument("series order must be at least 1".into()));
    }
    let mut s = SeriesQ::x(order);
    for _ in 0..k {
        s = series_compose_operator(&s);
    }
    Ok(s)
}

/// Numerator and denominator exponent of `f_k = num(x) / (1-x)^e`, `k <= 4`.
pub fn fk_rational_form(k: u32) -> Result<(PolyQ, u32)> {
    match k {
        0 => Ok((PolyQ::x(), 0)),
        1 => Ok((PolyQ::x(), 1)),
        2 => Ok((PolyQ::x(), 3)),
        3 => Ok((PolyQ::from_ints(&[0, 1, 2]), 5)),
        4 => Ok((PolyQ::from_ints(&[0, 1, 8, 6]), 7)),
        _ => Err(Error::UnsupportedShape(format!("no rational form for f_{k}"))),
    }
}

/// Expands `num(x) (1-x)^{-e}` to `order`.
pub fn fk_rational_series(k: u32, order: usize) -> Result<SeriesQ> {
    let (num, e) = fk_rational_form(k)?;
    Ok(SeriesQ::from_poly(&num, order).mul(&SeriesQ::inverse_power_of_one_minus_x(e, order)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check { name: name.into(), pass }
    }
}

/// One row per `k`: direct sum, binomial closed form, series coefficient and
/// rational-function expansion agree for `1 <= m <= max_m`. Also checks
/// `C_1(m) = 1`.
pub fn three_way_agreement(max_k: u32, max_m: u32) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        let series = fk_series(k, max_m as usize)?;
        let rational = fk_rational_series(k, max_m as usize)?;
        let mut pass = series.coeff(0).is_zero() && rational.coeff(0).is_zero();
        for m in 1..=max_m {
            let direct = ck_direct(k, m)?;
            pass &= direct == ck_closed(k, m)?
                && direct == series.coeff(m as usize)
                && direct == rational.coeff(m as usize)
                && direct.is_integer();
        }
        out.push(Check::new(format!("C_{k}(m): direct = closed = P^{k}(x) coefficient, m <= {max_m}"), pass));
    }
    let ones = (1..=max_m).all(|m| ck_direct(1, m).map(|c| c == Rational::one()).unwrap_or(false));
    out.push(Check::new(format!("C_1(m) = 1 for m <= {max_m}"), ones));
    Ok(out)
}

fn d_powers(d: u32) -> [Rational; 5] {
    let dd = Rational::from(d);
    let mut p = [Rational::one(), dd.clone(), Rational::zero(), Rational::zero(), Rational::zero()];
    for i in 2..5 {
        p[i] = &p[i - 1] * &dd;
    }
    p
}

/// The case (b) sum rebuilt from `C_1..C_4` at `m = 5d - 3`. Writing the
/// bracket as `c0 - c_{-1}/D - c1 D + 4 D^2` gives
/// `-(c0 C_2 - c_{-1} C_1 - c1 C_3 + 4 C_4)`.
pub fn t_sum_via_ck(d: u32) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Argument("degree must be at least 1".into()));
    }
    let m = 5 * d - 3;
    let p = d_powers(d);
    let c0 = &p[3] * 375 + &p[2] * 225 - &p[1] * 355 + 84;
    let c_inv = Rational::from(5 * d as i64 - 3) * (&p[1] * 5) * (&p[1] * 5 + 8);
    let c1 = &p[2] * 75 - &p[1] * 15 + 32;
    let s = c0 * ck_direct(2, m)? - c_inv * ck_direct(1, m)? - c1 * ck_direct(3, m)?
        + ck_direct(4, m)? * 4;
    Ok(-s)
}

/// Same reduction for the case (e) sum at `m = 5d - 2`.
pub fn case_e_via_ck(d: u32) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Argument("degree must be at least 1".into()));
    }
    let m = 5 * d - 2;
    let p = d_powers(d);
    let half = Rational::new(1, 2);
    let c_inv = (&p[4] * -625 + &p[3] * 1125 - &p[2] * 750 + &p[1] * 160) * &half;
    let c0 = (&p[4] * 1875 - &p[3] * 3500 + &p[2] * 2475 - &p[1] * 680 + 64) * &half;
    let c1 = &p[2] * 25 + &p[1] * 35 - 28;
    let s = c_inv * ck_direct(1, m)? + c0 * ck_direct(2, m)? + c1 * ck_direct(3, m)?
        - ck_direct(4, m)? * 4;
    Ok(-s)
}
