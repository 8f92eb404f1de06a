use crate::error::{Error, Result};

use super::{binomial_conv, Rational};

/// Bernoulli number `B_n` for even `n >= 2`, with `B_2 = 1/6`.
///
/// Uses `sum_{k=0}^{n} C(n+1, k) B_k = 0` starting from `B_0 = 1`,
/// `B_1 = -1/2`.
pub fn bernoulli(n: u32) -> Result<Rational> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::Argument(format!(
            "bernoulli index must be even and at least 2, got {n}"
        )));
    }
    Ok(bernoulli_table(n as usize).swap_remove(n as usize))
}

/// `B_0..=B_n`, odd indices included.
pub(crate) fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for m in 1..=n {
        if m > 1 && m % 2 == 1 {
            b.push(Rational::zero());
            continue;
        }
        let s: Rational = (0..m)
            .map(|k| binomial_conv(m as i64 + 1, k as i64) * &b[k])
            .sum();
        b.push(-s / Rational::from(m as i64 + 1));
    }
    b
}
