pub mod algebra;
pub mod cli;
pub mod cospectral;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod join;
pub mod spectra;

pub use error::{Error, Result};
