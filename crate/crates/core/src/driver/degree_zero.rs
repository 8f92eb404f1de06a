use crate::arith::{bernoulli, factorial, Rational};
use crate::error::{Error, Result};

/// Degree-zero invariant
/// `(-1)^g (chi/2) |B_{2g}| |B_{2g-2}| / (2g (2g-2) (2g-2)!)`.
/// `chi` is the Euler characteristic of the quintic; it is not built in.
pub fn n_g0(g: u32, chi: i64) -> Result<Rational> {
    if g < 2 {
        return Err(Error::Argument(format!("degree-zero formula needs g >= 2, got {g}")));
    }
    let b_top = bernoulli(2 * g)?.abs();
    let b_low = bernoulli(2 * g - 2)?.abs();
    let denom = Rational::from(2 * g as i64 * (2 * g as i64 - 2))
        * Rational::from(factorial(2 * g as usize - 2));
    let v = Rational::new(chi, 2) * b_top * b_low / denom;
    Ok(if g.is_multiple_of(2) { v } else { -v })
}
