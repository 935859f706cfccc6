//! Reads every JSON specification shipped next to the examples and reports
//! its characteristic polynomial.
//!
//! Run with `cargo run --example spec_files`.

use hmjoin::cospectral::generalized_universal_charpoly;
use hmjoin::io::{parse_spec, SpecDocument};
use hmjoin::spectra::block_charpoly;

fn main() -> hmjoin::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut files: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| hmjoin::Error::Io(e.to_string()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    for path in files {
        let text = std::fs::read_to_string(&path).map_err(|e| hmjoin::Error::Io(e.to_string()))?;
        let name = path.file_name().unwrap().to_string_lossy();
        match parse_spec(&text)? {
            SpecDocument::Join(spec) => println!("{name:<30} join        {}", block_charpoly(&spec)?.charpoly_direct.factored()),
            SpecDocument::Generalized(spec) => println!("{name:<30} generalized {}", generalized_universal_charpoly(&spec)?.factored()),
        }
    }
    Ok(())
}
