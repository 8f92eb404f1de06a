//! Genus-0 fiber relative invariants and their disconnected pairing.
//!
//! A connected fiber invariant has one relative marking of contact order `mu`
//! weighted by `H^{rel}`, and insertions `H^{n_i} * prod_{k=0}^{l_i}(k psi + D_inf)`.
//! Because the curve class is a fiber class, every insertion power `H^{n_i}`
//! can be moved onto the relative class, so only the folded budget
//! `h = 3 - rel - sum n_i` matters.

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{binomial_conv, factorial, Rational};
use crate::error::{Error, Result};
use crate::pairs::{IntegerPair, PairSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Insertion {
    /// Hyperplane power `n`.
    pub h_power: u32,
    /// Length `l` of the psi product `prod_{k=0}^{l}`.
    pub psi_len: u32,
}

impl Insertion {
    pub fn new(h_power: u32, psi_len: u32) -> Self {
        Insertion { h_power, psi_len }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberSpec {
    pub mu: u64,
    /// Power of `H` carried by the relative marking.
    pub rel_power: u32,
    pub insertions: Vec<Insertion>,
}

impl FiberSpec {
    pub fn new(mu: u64, rel_power: u32, insertions: Vec<Insertion>) -> Result<Self> {
        if mu == 0 {
            return Err(Error::Argument("contact order must be positive".into()));
        }
        Ok(FiberSpec { mu, rel_power, insertions })
    }

    /// `3 - rel_power - sum n_i`, recomputed on every call.
    pub fn effective_h(&self) -> i64 {
        3 - self.rel_power as i64 - self.insertions.iter().map(|i| i.h_power as i64).sum::<i64>()
    }

    /// The same invariant with all insertion powers moved onto the relative
    /// marking.
    pub fn folded(&self) -> FiberSpec {
        FiberSpec {
            mu: self.mu,
            rel_power: self.rel_power + self.insertions.iter().map(|i| i.h_power).sum::<u32>(),
            insertions: self
                .insertions
                .iter()
                .map(|i| Insertion::new(0, i.psi_len))
                .collect(),
        }
    }
}

/// Closed form of the connected genus-0 fiber invariant:
/// `5^{h+1} mu^{m-2} binom(h+m-2, m-2)` when `1 - mu + sum l_i = h`, `0` when the
/// dimension constraint fails or `h` leaves `0..=3`.
///
/// With `m >= 3` insertions the closed form needs `sum_{i in I} l_i <= mu` for
/// every `I` of size at most `m - 2`; outside that range an error is
/// returned instead of a value.
pub fn fiber_connected(spec: &FiberSpec) -> Result<Rational> {
    let h = spec.effective_h();
    if !(0..=3).contains(&h) {
        return Ok(Rational::zero());
    }
    let mu = spec.mu as i64;
    let lsum: i64 = spec.insertions.iter().map(|i| i.psi_len as i64).sum();
    if 1 - mu + lsum != h {
        return Ok(Rational::zero());
    }
    let m = spec.insertions.len() as i64;
    if m >= 3 {
        // The worst subset of size m-2 is the m-2 largest lengths.
        let mut ls: Vec<i64> = spec.insertions.iter().map(|i| i.psi_len as i64).collect();
        ls.sort_unstable_by(|a, b| b.cmp(a));
        let worst: i64 = ls.iter().take((m - 2) as usize).sum();
        if worst > mu {
            return Err(Error::FormulaHypothesisViolated(format!(
                "insertion lengths {ls:?} have a subset of size {} summing to {worst} > mu = {mu}",
                m - 2
            )));
        }
    }
    let five = Rational::from(5);
    let value = five.pow(h + 1).expect("nonnegative exponent")
        * Rational::from(mu).pow(m - 2).expect("mu is positive")
        * binomial_conv(h + m - 2, m - 2);
    Ok(value)
}

/// Disconnected pairing `F(rho | zeta)`.
///
/// Sums over assignments of zeta's pairs to the pairs of rho. The pair
/// `(r_i, n_i)` of rho contributes a connected invariant of contact order
/// `r_i + 1` with relative class `H^{3-n_i}/5`; the pairs `(l_t, m_t)` sent to it
/// become insertions `(m_t, l_t)`. The product is scaled once by
/// `prod (r_i + 1)`.
///
/// Equal pairs of zeta are distributed by count, each count matrix weighted
/// by its multinomial. A block can only be nonzero when
/// `sum (l_t + m_t) = r_i + n_i` and `sum m_t <= n_i`; partial distributions
/// breaking either bound are pruned.
pub fn calf(rho: &PairSet, zeta: &PairSet) -> Result<Rational> {
    if rho.is_empty() {
        return Ok(if zeta.is_empty() { Rational::one() } else { Rational::zero() });
    }
    if rho.weight() != zeta.weight() {
        return Ok(Rational::zero());
    }
    let h_total = |s: &PairSet| s.pairs().iter().map(|p| p.b as u32).sum::<u32>();
    if h_total(zeta) > h_total(rho) {
        return Ok(Rational::zero());
    }
    let types: Vec<(IntegerPair, usize)> = zeta.multiplicities().into_iter().collect();
    let mut ctx = Distribution {
        rho,
        targets: rho.pairs().iter().map(|p| (p.weight(), p.b as u64)).collect(),
        counts: vec![vec![0; rho.len()]; types.len()],
        load: vec![(0, 0); rho.len()],
        total: Rational::zero(),
        types,
    };
    let first = ctx.types.first().map_or(0, |t| t.1);
    ctx.run(0, 0, first)?;

    let prefactor: Rational = rho.pairs().iter().map(|p| Rational::from(p.contact())).product();
    Ok(prefactor * ctx.total)
}

struct Distribution<'a> {
    rho: &'a PairSet,
    types: Vec<(IntegerPair, usize)>,
    targets: Vec<(u64, u64)>,
    /// `counts[t][i]`: copies of type `t` sent to block `i`.
    counts: Vec<Vec<usize>>,
    load: Vec<(u64, u64)>,
    total: Rational,
}

impl Distribution<'_> {
    fn run(&mut self, t: usize, i: usize, remaining: usize) -> Result<()> {
        if t == self.types.len() {
            return self.evaluate();
        }
        let p = self.targets.len();
        let (w, h) = (self.types[t].0.weight(), self.types[t].0.b as u64);
        let lo = if i + 1 == p { remaining } else { 0 };
        for c in lo..=remaining {
            let (cw, ch) = (w * c as u64, h * c as u64);
            if self.load[i].0 + cw > self.targets[i].0 || self.load[i].1 + ch > self.targets[i].1 {
                break;
            }
            self.load[i].0 += cw;
            self.load[i].1 += ch;
            self.counts[t][i] = c;
            if i + 1 == p {
                let next = self.types.get(t + 1).map_or(0, |x| x.1);
                self.run(t + 1, 0, next)?;
            } else {
                self.run(t, i + 1, remaining - c)?;
            }
            self.counts[t][i] = 0;
            self.load[i].0 -= cw;
            self.load[i].1 -= ch;
        }
        Ok(())
    }

    fn evaluate(&mut self) -> Result<()> {
        if self.load.iter().zip(&self.targets).any(|(l, tg)| l.0 != tg.0) {
            return Ok(());
        }
        let mut term = Rational::one();
        for (i, p) in self.rho.pairs().iter().enumerate() {
            let mut insertions = Vec::new();
            for (t, (z, _)) in self.types.iter().enumerate() {
                for _ in 0..self.counts[t][i] {
                    insertions.push(Insertion::new(z.b as u32, z.a));
                }
            }
            let spec = FiberSpec { mu: p.contact(), rel_power: 3 - p.b as u32, insertions };
            let v = fiber_connected(&spec)?;
            if v.is_zero() {
                return Ok(());
            }
            term *= &(v / Rational::from(5));
        }
        // labelled copies: prod_t k_t! / prod_{t,i} c_{t,i}!
        let mut ways = BigInt::one();
        for (t, (_, k)) in self.types.iter().enumerate() {
            let mut w = factorial(*k);
            for &c in &self.counts[t] {
                w /= factorial(c);
            }
            ways *= w;
        }
        self.total += term * Rational::from(ways);
        Ok(())
    }
}
