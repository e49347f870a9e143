//! Shared inputs for the benchmarks.

use std::path::PathBuf;

use uniserial::{parse_presentation, Mast, Presentation};

/// Loads a presentation from the workspace `fixtures/` directory.
pub fn fixture(name: &str) -> Presentation {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    let src = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_presentation(&src).unwrap()
}

pub fn with_mast(name: &str, mast: &str) -> (Presentation, Mast) {
    let pres = fixture(name);
    let m = Mast::parse(&pres.quiver, mast).unwrap();
    (pres, m)
}
