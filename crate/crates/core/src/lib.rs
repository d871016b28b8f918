//! Edge labellings, lexicographic shellability and Gröbner bases of
//! parallel ideals for finite posets and acyclic categories.

pub mod algebra;
pub mod combinatorics;
pub mod complexes;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod io;
pub mod lab;
pub mod labelling;
pub mod par;

pub use error::{Error, Result};
