#![allow(dead_code)]

use gorcheck_core::criteria::LocalRing;
use gorcheck_core::field::PrimeField;
use gorcheck_core::poly::{MonomialOrder, PolyRing};

pub fn field() -> PrimeField {
    PrimeField::new(101).unwrap()
}

pub fn pring(names: &[&str]) -> PolyRing<PrimeField> {
    PolyRing::new(field(), names, MonomialOrder::GrevLex)
}

pub fn local(names: &[&str], rels: &str) -> LocalRing<PrimeField> {
    LocalRing::parse_new(&pring(names), rels).unwrap()
}

/// Artinian rings used across the property tests: (variables, relations, Gorenstein).
pub const ARTINIAN: &[(&[&str], &str, bool)] = &[
    (&["x", "y", "z"], "x^2, y^2 + x*z, z^2", true),
    (&["x", "y"], "x^2, x*y, y^2", false),
    (&["x", "y"], "x^2, y^2", true),
    (&["x", "y"], "x^2, x*y, y^3", false),
    (&["x", "y"], "x^3, y^2", true),
    (&["x", "y"], "x*y, x^3 - y^3", true),
    (&["x"], "x^4", true),
    (&["x", "y", "z"], "x^2, y^2, z^2, x*y", false),
];

pub fn artinian(i: usize) -> LocalRing<PrimeField> {
    let (v, r, _) = ARTINIAN[i % ARTINIAN.len()];
    local(v, r)
}
