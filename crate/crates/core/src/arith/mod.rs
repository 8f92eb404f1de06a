//! Exact arithmetic: rationals, binomials, Bernoulli numbers, polynomials and
//! truncated power series.

mod bernoulli;
mod combinatorics;
mod poly;
mod rational;
mod series;

pub use bernoulli::bernoulli;
pub use combinatorics::{
    binomial, binomial_conv, factorial, FactorialTable, DEFAULT_FACTORIAL_CAP,
};
pub use poly::{poly_eval, PolyQ};
pub use rational::{q, ParseRationalError, Rational};
pub use series::{series_compose_operator, SeriesQ};
