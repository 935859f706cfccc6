//! Exact E-main classification of a factor's eigenvalues, with the numeric
//! projection test alongside as a diagnostic.
//!
//! Run with `cargo run --example e_main_classification`.

use hmjoin::graph::{make_named, NamedKind};
use hmjoin::join::IndexingMap;
use hmjoin::spectra::{classify_e_main, classify_e_main_numeric};

fn main() -> hmjoin::Result<()> {
    let k5 = make_named(NamedKind::Complete, &[5])?;
    let e = IndexingMap::new(2, vec![1, 1, 1, 2, 2])?.matrix();
    let a = k5.adjacency_matrix();
    for c in classify_e_main(&a, &e)? {
        println!("eigenvalue {:>3}  multiplicity {}  E-main {}", c.label(), c.multiplicity, c.e_main);
    }
    for c in classify_e_main_numeric(&a, &e, 1e-9)? {
        println!("numeric {:>8.4}  multiplicity {}  projection {:.3e}  E-main {}", c.value, c.multiplicity, c.projection_norm, c.e_main);
    }
    Ok(())
}
