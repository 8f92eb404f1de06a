use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zeros are trimmed so equality is coefficientwise.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = PolyQ { coeffs };
        p.trim();
        p
    }

    /// Builds from `(numerator, denominator)` pairs, lowest degree first.
    pub fn from_fracs(coeffs: &[(i64, i64)]) -> Self {
        PolyQ::new(coeffs.iter().map(|&(n, d)| Rational::new(n, d)).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyQ::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        PolyQ::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        PolyQ::from_ints(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&Rational::from(x))
    }
}

pub fn poly_eval(p: &PolyQ, x: &Rational) -> Rational {
    p.eval(x)
}

impl Add for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: PolyQ) -> PolyQ {
        &self + &rhs
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        self + &(-rhs)
    }
}

impl Sub for PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: PolyQ) -> PolyQ {
        &self - &rhs
    }
}

impl Mul for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

impl Mul for PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: PolyQ) -> PolyQ {
        &self * &rhs
    }
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "({mag})d")?,
                _ => write!(f, "({mag})d^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
