//! Deletes labels that can never produce a cross edge and confirms the
//! adjacency matrix is unchanged.
//!
//! Run with `cargo run --example label_reduction`.

use hmjoin::families::lollipop;
use hmjoin::join::{blockwise_adjacency, reduce_labels, ReductionMode};

fn main() -> hmjoin::Result<()> {
    let spec = lollipop(4, 3)?.spec;
    for mode in [ReductionMode::Unused, ReductionMode::GlobalExclusive, ReductionMode::NeighborExclusive] {
        let r = reduce_labels(&spec, mode);
        assert_eq!(blockwise_adjacency(&r.spec), blockwise_adjacency(&spec));
        println!("{mode:?}: deleted labels {:?}, {} of {} remain", r.deleted, r.remaining, spec.m());
        for (i, map) in r.spec.indexing().iter().enumerate() {
            println!("  factor {}: {:?}", i + 1, map.labels());
        }
    }
    Ok(())
}
