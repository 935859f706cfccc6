//! Characteristic polynomial of a join through the per-factor main functions
//! and the polynomial matrix Φ, compared with the direct computation.
//!
//! Run with `cargo run --example block_charpoly`.

use hmjoin::graph::{make_named, NamedKind};
use hmjoin::join::JoinSpec;
use hmjoin::spectra::block_charpoly;

fn main() -> hmjoin::Result<()> {
    let spec = JoinSpec::from_labels(
        make_named(NamedKind::Path, &[3])?,
        3,
        vec![make_named(NamedKind::Complete, &[2])?, make_named(NamedKind::Path, &[3])?, make_named(NamedKind::Star, &[3])?],
        vec![vec![1, 2], vec![1, 2, 3], vec![1, 1, 3, 3]],
    )?;
    let report = block_charpoly(&spec)?;
    for (i, mf) in report.factorization.main_functions.iter().enumerate() {
        println!("Γ_{} (reduced denominator {}):\n{}", i + 1, mf.reduced_denominator, mf.matrix);
    }
    println!("Φ(λ) = {}", report.phi);
    println!("block  = {}", report.charpoly_block);
    println!("direct = {}", report.charpoly_direct);
    println!("factored: {}", report.charpoly_direct.factored());
    Ok(())
}
