//! Artinian local algebras as multiplication tables, and their modules.

mod algebra;
mod module;

pub use algebra::{AlgebraError, Elem, EzdFailure, FiniteLocalAlgebra};
pub use module::{FGModule, HomSpace};
