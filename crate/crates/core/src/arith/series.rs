use super::{PolyQ, Rational};

/// Power series in `x` truncated at order `N`: coefficients of `x^0..=x^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<Rational>,
}

impl SeriesQ {
    pub fn zero(order: usize) -> Self {
        SeriesQ {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    /// The series `x`, truncated at `order` (which must be at least 1 for the
    /// monomial to survive).
    pub fn x(order: usize) -> Self {
        let mut s = SeriesQ::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        SeriesQ { coeffs }
    }

    pub fn from_poly(p: &PolyQ, order: usize) -> Self {
        SeriesQ::from_coeffs(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Truncated product; the result has the smaller of the two orders.
    pub fn mul(&self, rhs: &SeriesQ) -> SeriesQ {
        let order = self.order().min(rhs.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        SeriesQ { coeffs: out }
    }

    /// Expansion of `(1 - x)^(-k)` up to `order`: coefficient of `x^n` is
    /// `C(n + k - 1, n)`.
    pub fn inverse_power_of_one_minus_x(k: u32, order: usize) -> SeriesQ {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Rational::one();
        coeffs.push(c.clone());
        for n in 1..=order {
            c = c * Rational::from((n as i64) + (k as i64) - 1) / Rational::from(n as i64);
            coeffs.push(c.clone());
        }
        SeriesQ { coeffs }
    }
}

/// Applies `(x / (1 - x)) * d/dx`, keeping the truncation order.
///
/// With `s' = sum_j (j+1) s_{j+1} x^j`, the coefficient of `x^n` in the
/// result is `sum_{j=0}^{n-1} s'_j`; every term needed is available from
/// `s_1..=s_N`, so no precision is lost.
pub fn series_compose_operator(s: &SeriesQ) -> SeriesQ {
    let order = s.order();
    let mut out = vec![Rational::zero(); order + 1];
    let mut running = Rational::zero();
    for n in 1..=order {
        running += &(Rational::from(n as i64) * &s.coeffs[n]);
        out[n] = running.clone();
    }
    SeriesQ { coeffs: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from(c)).collect()
    }

    #[test]
    fn operator_on_x() {
        let r = series_compose_operator(&SeriesQ::x(5));
        assert_eq!(r.coeffs(), ints(&[0, 1, 1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn operator_on_zero() {
        assert!(series_compose_operator(&SeriesQ::zero(6)).is_zero());
    }

    #[test]
    fn operator_twice() {
        let r = series_compose_operator(&series_compose_operator(&SeriesQ::x(4)));
        assert_eq!(r.coeffs(), ints(&[0, 1, 3, 6, 10]).as_slice());
    }

    #[test]
    fn geometric_powers() {
        let s = SeriesQ::inverse_power_of_one_minus_x(3, 4);
        assert_eq!(s.coeffs(), ints(&[1, 3, 6, 10, 15]).as_slice());
        let one_minus_x = SeriesQ::from_coeffs(ints(&[1, -1]), 4);
        let prod = SeriesQ::inverse_power_of_one_minus_x(1, 4).mul(&one_minus_x);
        assert_eq!(prod.coeffs(), ints(&[1, 0, 0, 0, 0]).as_slice());
    }
}
