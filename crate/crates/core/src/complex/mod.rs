//! Bounded chain complexes, Koszul complexes and their homology.

mod free;
mod homology;
mod koszul;

pub use free::{ChainMap, ComplexError, FreeComplex};
pub use homology::{amplitude, hom_to_ring, homology, Amplitude, GradedComplex, ModuleComplex};
pub use koszul::{iterated_koszul_object, koszul_object, KoszulComplex, KoszulElem};
