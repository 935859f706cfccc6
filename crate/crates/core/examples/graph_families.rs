//! Realizes classical graph families as joins and checks each against its
//! direct construction, including the characteristic polynomial.
//!
//! Run with `cargo run --example graph_families`.

use hmjoin::families::{cartesian_product, generalized_helm, generalized_petersen, generalized_web, lollipop, tadpole};
use hmjoin::graph::{make_named, NamedKind};
use hmjoin::spectra::block_charpoly;

fn main() -> hmjoin::Result<()> {
    let realizations = [
        ("P_3 □ C_4", cartesian_product(&make_named(NamedKind::Path, &[3])?, &make_named(NamedKind::Cycle, &[4])?)?),
        ("P(5,2)", generalized_petersen(5, 2)?),
        ("P(8,3)", generalized_petersen(8, 3)?),
        ("helm H(4,2)", generalized_helm(4, 2)?),
        ("web W(1,4)", generalized_web(1, 4)?),
        ("lollipop L(4,3)", lollipop(4, 3)?),
        ("tadpole T(5,2)", tadpole(5, 2)?),
    ];
    for (name, r) in &realizations {
        r.check()?;
        let report = block_charpoly(&r.spec)?;
        println!("{name:<16} n={:<3} edges={:<3} m={}  {}", r.direct.n(), r.direct.edge_count(), r.spec.m(), report.charpoly_direct.factored());
    }
    Ok(())
}
