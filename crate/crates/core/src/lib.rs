//! Exact computations with local algebras: linear algebra over prime fields
//! and the rationals, Gröbner bases, finite-dimensional local algebras,
//! chain complexes, minimal free resolutions and Gorenstein-type criteria.

pub mod field;
pub mod linalg;
pub mod poly;
pub mod artin;
pub mod ring;
pub mod complex;
pub mod resolution;
pub mod criteria;
