pub mod action;
pub mod error;
pub mod group;
pub mod h1;
pub mod lattice;
pub mod report;
pub mod ring;
pub mod run;
pub mod scenario;
pub mod skew;

pub use error::{Error, Result};
