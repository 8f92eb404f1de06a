//! End-to-end assembly: degree-zero values, the master-equation solve from
//! ingested data, and the on-disk cache.

mod degree_zero;
mod inputs;
mod solve;
mod store;

pub use degree_zero::n_g0;
pub use inputs::{EquationInputs, PUBLISHED_2_1_JSON};
pub use solve::{
    consistency_check_published, solve_ngd, solve_ngd_detailed, NgdSolution,
    PUBLISHED_N_COEFFICIENTS,
};
pub use store::{InvariantStore, Provenance, StoreEntry};
