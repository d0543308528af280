pub mod abelian;
pub mod multiplicative;
pub mod smith;

pub use abelian::FinAbGroup;
pub use multiplicative::{
    coinvariants, h1_cyclic_lattice, h1_lattice, mono_check, pic_multiplicative, LatticeAction,
};
