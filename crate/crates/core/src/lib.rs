//! Verification toolkit for three-dimensional topological loops and their
//! multiplication groups: exact Lie algebras, coordinate group laws, loop
//! laws on R^3, and transversal criteria.

pub mod exprdsl;
pub mod groupcat;
pub mod kepka;
pub mod linalg;
pub mod loopcore;
pub mod liealg;
pub mod rational;
pub mod report;
pub mod sampling;
pub mod solve;
pub mod verify;

pub use groupcat::{GroupError, GroupLaw, SubgroupSpec};
pub use loopcore::{LoopError, LoopLaw, SectionLoop};
pub use liealg::{LieAlgebra, LieError, Subspace};
pub use rational::Rational;
pub use report::{Expectation, Outcome, Report, Witness};
