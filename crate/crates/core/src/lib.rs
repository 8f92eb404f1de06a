//! Exact-rational engine for higher-genus invariants `N_{g,d}` of the quintic
//! threefold, built on the degeneration to `(P^4, Q)`.

pub mod arith;
pub mod closed_forms;
pub mod driver;
pub mod error;
pub mod fiber;
pub mod identities;
pub mod pairs;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
