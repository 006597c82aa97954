pub mod characters;
pub mod cyclotomic;
pub mod error;
pub mod fusion;
pub mod group;
pub mod hilbert;
pub mod intmat;
pub mod invariants;
pub mod jobspec;
pub mod perm;
pub mod ring;
pub mod run;
pub mod spectrum;
pub mod twisted;

pub use error::{Error, ErrorClass, Result};
pub use group::{extraspecial_p3, make_hom, FiniteGroup, GroupHom, Subgroup};
pub use perm::Perm;
