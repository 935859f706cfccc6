//! Lower bounds on how often factor eigenvalues survive in the join, next to
//! the multiplicities actually observed.
//!
//! Run with `cargo run --example carry_forward`.

use hmjoin::graph::{make_named, NamedKind};
use hmjoin::join::JoinSpec;
use hmjoin::spectra::carry_forward_report;

fn main() -> hmjoin::Result<()> {
    let spec = JoinSpec::from_labels(
        make_named(NamedKind::Path, &[2])?,
        2,
        vec![make_named(NamedKind::Complete, &[2])?, make_named(NamedKind::Complete, &[5])?],
        vec![vec![1, 1], vec![1, 1, 1, 2, 2]],
    )?;
    println!("{:<8} {:<12} {:>6} {:>6} {:>9}", "factor", "class", "main", "bound", "observed");
    for row in carry_forward_report(&spec)? {
        let factor = row.factor.map_or("all".to_string(), |i| (i + 1).to_string());
        let main = row.e_main.map_or("-".to_string(), |m| m.to_string());
        let class = row.root.as_ref().map_or(row.class.to_string(), hmjoin::algebra::display_rational);
        println!("{factor:<8} {class:<12} {main:>6} {:>6} {:>9}", row.bound, row.observed);
        assert!(row.holds());
    }
    Ok(())
}
