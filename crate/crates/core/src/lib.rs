//! Finite graded posets and the classification of Eulerian binomial,
//! Sheffer and triangular posets.
//!
//! Posets are stored as ranked Hasse diagrams over dense element ids. The
//! [`constructors`] build the standard families and operators, [`profile`]
//! extracts factorial functions, [`classify`] maps Eulerian posets to their
//! canonical forms and [`enumerate`] checks the low-rank cases exhaustively.

mod bitset;
pub mod catalog;
pub mod classify;
pub mod constructors;
mod count;
pub mod enumerate;
mod error;
pub mod io;
mod iso;
pub mod polytope;
mod poset;
pub mod profile;

pub use count::ChainCount;
pub use error::PosetError;
pub use iso::{is_isomorphic, verify_isomorphism};
pub use polytope::{face_lattice_from_incidence, FaceIncidence};
pub use poset::{Element, GradedPoset, MAX_ELEMENTS};
pub use profile::{FactorialProfile, ProfileKind, TriangularProfile, Witness};
