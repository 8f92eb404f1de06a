use num_bigint::BigInt;
use num_traits::One;
use once_cell::sync::Lazy;

use super::Rational;

pub const DEFAULT_FACTORIAL_CAP: usize = 200;

/// Memoized factorials `0!..=cap!`. Larger arguments are computed on demand.
#[derive(Debug, Clone)]
pub struct FactorialTable {
    table: Vec<BigInt>,
}

impl FactorialTable {
    pub fn with_cap(cap: usize) -> Self {
        let mut table = Vec::with_capacity(cap + 1);
        table.push(BigInt::one());
        for n in 1..=cap {
            let next = &table[n - 1] * BigInt::from(n);
            table.push(next);
        }
        FactorialTable { table }
    }

    pub fn cap(&self) -> usize {
        self.table.len() - 1
    }

    pub fn get(&self, n: usize) -> BigInt {
        match self.table.get(n) {
            Some(v) => v.clone(),
            None => (self.table.len()..=n).fold(self.table.last().unwrap().clone(), |acc, k| {
                acc * BigInt::from(k)
            }),
        }
    }
}

static FACTORIALS: Lazy<FactorialTable> =
    Lazy::new(|| FactorialTable::with_cap(DEFAULT_FACTORIAL_CAP));

pub fn factorial(n: usize) -> BigInt {
    FACTORIALS.get(n)
}

/// Binomial coefficient under the extended convention used for the fiber
/// formulas: `0` if `alpha < beta`, `1` if `alpha == beta` (any sign), `0` if
/// `alpha > beta` with `beta < 0`, and the usual factorial ratio when `alpha > beta >= 0`.
pub fn binomial_conv(alpha: i64, beta: i64) -> Rational {
    if alpha < beta {
        Rational::zero()
    } else if alpha == beta {
        Rational::one()
    } else if beta < 0 {
        Rational::zero()
    } else {
        Rational::from(binomial(alpha as u64, beta as u64))
    }
}

/// Ordinary binomial coefficient for nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convention_cases() {
        assert_eq!(binomial_conv(5, 2), Rational::from(10));
        assert_eq!(binomial_conv(2, 5), Rational::zero());
        assert_eq!(binomial_conv(-1, -1), Rational::one());
        assert_eq!(binomial_conv(3, -1), Rational::zero());
        assert_eq!(binomial_conv(-2, -2), Rational::one());
        assert_eq!(binomial_conv(0, 0), Rational::one());
        assert_eq!(binomial_conv(6, 6), Rational::one());
    }

    #[test]
    fn factorials_past_cap() {
        let small = FactorialTable::with_cap(5);
        assert_eq!(small.cap(), 5);
        assert_eq!(small.get(7), BigInt::from(5040));
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(factorial(201), factorial(200) * BigInt::from(201));
    }

    #[test]
    fn matches_factorial_ratio() {
        for a in 1..30u64 {
            for b in 0..a {
                let ratio = factorial(a as usize) / (factorial(b as usize) * factorial((a - b) as usize));
                assert_eq!(binomial_conv(a as i64, b as i64), Rational::from(ratio));
            }
        }
    }
}
