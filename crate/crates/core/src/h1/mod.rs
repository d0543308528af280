//! Nonabelian first cohomology `H^1(G, X)`.

pub mod class;
pub mod cocycle;
pub mod exactness;
pub mod ggroup;
pub mod witness;

pub use class::{CohClass, FiberVariant, StableVerdict, UnitVerdict};
pub use cocycle::{ClassData, Cocycle};
pub use ggroup::{AbstractCoefficients, GGroup, MatrixCoefficients, MatrixKind};
pub use witness::Witness;
