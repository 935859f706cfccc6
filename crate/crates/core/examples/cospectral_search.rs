//! Searches the shipped catalog for cospectral generalized joins and prints
//! every certificate, flagging non-isomorphic pairs.
//!
//! Run with `cargo run --example cospectral_search -- [KIND] [BUDGET]`,
//! where KIND is A, S, L or U.

use std::time::Instant;

use hmjoin::cospectral::{search_pairs, shipped_catalog, IsoVerdict, MatrixKind};

fn main() -> hmjoin::Result<()> {
    let mut args = std::env::args().skip(1);
    let kind: MatrixKind = args.next().as_deref().unwrap_or("A").parse()?;
    let budget: usize = args.next().and_then(|b| b.parse().ok()).unwrap_or(256);

    let catalog = shipped_catalog();
    let graphs: Vec<_> = catalog.iter().map(|(_, g)| g.clone()).collect();
    let name_of = |g: &hmjoin::graph::Graph| catalog.iter().find(|(_, h)| h == g).map_or("?", |(n, _)| n.as_str());

    let start = Instant::now();
    let certs = search_pairs(&graphs, budget, kind);
    println!("{} certificates for kind {kind} in {:.2?}", certs.len(), start.elapsed());
    for c in &certs {
        let (a, b) = &c.pair;
        let tag = match c.isomorphic {
            IsoVerdict::NonIsomorphic => "NON-ISOMORPHIC",
            IsoVerdict::Isomorphic => "isomorphic",
            IsoVerdict::Unknown => "unknown",
        };
        println!(
            "{:>9} S={:?}  vs  {:>9} S={:?}  {tag}  reverified={}  {}",
            name_of(&a.factors()[0]),
            a.subsets()[0],
            name_of(&b.factors()[0]),
            b.subsets()[0],
            c.reverify()?,
            c.charpolys.0.factored()
        );
    }
    Ok(())
}
