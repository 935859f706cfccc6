//! Universal characteristic polynomials: Laplacian-type matrices of a join
//! through its block system, and U(G) of a generalized join with γ ≠ 0.
//!
//! Run with `cargo run --example universal_spectra`.

use hmjoin::algebra::ratio;
use hmjoin::cospectral::{generalized_universal_charpoly, regular_gamma_closed_form, GeneralizedJoinSpec};
use hmjoin::graph::{make_named, NamedKind, UniversalParams};
use hmjoin::join::JoinSpec;
use hmjoin::spectra::universal_block_charpoly;

fn main() -> hmjoin::Result<()> {
    let spec = JoinSpec::from_labels(
        make_named(NamedKind::Path, &[2])?,
        2,
        vec![make_named(NamedKind::Complete, &[2])?, make_named(NamedKind::Complete, &[5])?],
        vec![vec![1, 1], vec![1, 1, 1, 2, 2]],
    )?;
    for preset in ["A", "L", "Q", "Aalpha:1/2"] {
        let params: UniversalParams = preset.parse()?;
        let report = universal_block_charpoly(&spec, &params)?;
        println!("{preset:<11} {}", report.charpoly_direct.factored());
    }

    let params = UniversalParams::new(ratio(3, 2), ratio(-1, 3), ratio(-2, 5), ratio(1, 4))?;
    let generalized = GeneralizedJoinSpec::new(
        make_named(NamedKind::Path, &[3])?,
        vec![make_named(NamedKind::Cycle, &[4])?, make_named(NamedKind::Star, &[3])?, make_named(NamedKind::Complete, &[3])?],
        vec![vec![0, 2], vec![0], vec![1, 2]],
        params.clone(),
    )?;
    println!("U(G) with {params}: {}", generalized_universal_charpoly(&generalized)?);

    let closed = regular_gamma_closed_form(&make_named(NamedKind::Complete, &[5])?, &[0, 1, 2], &UniversalParams::adjacency())?;
    println!("closed-form main function of K_5 over 3 vertices: {} ({:?})", closed.value, closed.case);
    Ok(())
}
