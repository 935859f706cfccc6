//! Builds an H_m-join from host, factors and indexing maps, and checks the
//! edge-rule construction against the blockwise adjacency matrix.
//!
//! Run with `cargo run --example build_join`.

use hmjoin::graph::{make_named, NamedKind};
use hmjoin::join::{blockwise_adjacency, hm_join, JoinSpec};

fn main() -> hmjoin::Result<()> {
    // K_2 host over P_3 (labels 1,1,2) and P_4 (labels 1,1,1,2).
    let spec = JoinSpec::from_labels(
        make_named(NamedKind::Complete, &[2])?,
        2,
        vec![make_named(NamedKind::Path, &[3])?, make_named(NamedKind::Path, &[4])?],
        vec![vec![1, 1, 2], vec![1, 1, 1, 2]],
    )?;
    let g = hm_join(&spec);
    println!("{} vertices, {} edges", g.n(), g.edge_count());
    print!("{}", g.to_edge_list());

    let blockwise = blockwise_adjacency(&spec);
    assert_eq!(blockwise, g.adjacency_matrix());
    println!("blockwise adjacency:\n{blockwise}");
    Ok(())
}
