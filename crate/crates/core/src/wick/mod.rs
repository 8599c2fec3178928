//! Exact normal-ordered algebra of two boson modes.

mod coeff;
mod named;
mod poly;
pub mod tables;

pub use coeff::Coeff;
pub use named::{named, named_by_symbol, NamedOp};
pub use poly::{adjoint, commutator, multiply, BosonMonomial, OperatorPoly};
pub use tables::{corrected_identities, structural_identities, verify_tables};
