#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use uniserial::{Field, FieldElement, IdealBasis, Mast, Polynomial, Presentation};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> Presentation {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture readable");
    uniserial::parse_presentation(&text).expect("fixture parses")
}

pub fn mast(pres: &Presentation, text: &str) -> Mast {
    Mast::parse(&pres.quiver, text).expect("mast parses")
}

pub fn q(n: i64) -> FieldElement {
    Field::Rational.from_i64(n)
}

pub fn qf(n: i64, d: i64) -> FieldElement {
    Field::Rational.fraction(n, d).unwrap()
}

pub fn point(field: Field, text: &str) -> Vec<FieldElement> {
    uniserial::field::parse_point(field, text).expect("point parses")
}

/// Polynomials written in a source numbering, renamed by `map` (1-based
/// source index `i` goes to 1-based index `map[i-1]`).
pub fn renamed(field: Field, nvars: usize, gens: &[&str], map: &[usize]) -> Vec<Polynomial> {
    let zero_based: Vec<usize> = map.iter().map(|&i| i - 1).collect();
    gens.iter()
        .map(|g| {
            Polynomial::parse(g, field, map.len())
                .unwrap()
                .remap(&zero_based, nvars)
        })
        .collect()
}

pub fn ideal(field: Field, nvars: usize, gens: &[&str]) -> IdealBasis {
    let polys = gens
        .iter()
        .map(|g| Polynomial::parse(g, field, nvars).unwrap())
        .collect();
    IdealBasis::new(field, nvars, polys).unwrap()
}

pub fn identity_map(n: usize) -> Vec<usize> {
    (1..=n).collect()
}
