//! Exact sparse polynomial arithmetic over the integers.

pub mod berkowitz;
pub mod monomial;
pub mod mpoly;
pub mod tpoly;

pub use monomial::HalfExpVec;
pub use mpoly::{Assignment, JsonTerm, MPoly, Substitution};
pub use tpoly::{discriminant, resultant, sylvester_resultant, TPoly};
