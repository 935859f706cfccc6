//! Block characteristic polynomials, main functions Γ, E-main classification
//! and carry-forward ledgers.

mod block;
mod classify;
mod gamma;
mod ledger;
mod numeric;
mod report;

pub use block::{BlockFactorization, BlockSystem};
pub use classify::{classify_by_denominator, classify_e_main, EigenClass, EigenClassJson};
pub use gamma::{gamma, gamma_bilinear, main_function, MainFunction};
pub use ledger::{carry_forward_rows, class_bound, LedgerRow};
pub use numeric::{classify_e_main_numeric, numeric_spectrum, NumericEigenClass, NumericEigenvalue};
pub use report::{
    adjacency_system, block_charpoly, carry_forward_report, universal_block_charpoly, universal_system, SpectralReport,
};
