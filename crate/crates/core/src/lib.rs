//! Exact computation of the type B and type D Eulerian-like polynomial families, their
//! refinements over inversion sequences, and certification of real-rootedness and
//! mutual interlacing by Sturm root isolation and Hurwitz determinants.

pub mod catalog;
pub mod error;
pub mod exactpoly;
pub mod realroots;
pub mod recurrences;
pub mod report;
pub mod stability;
pub mod verify;
pub mod weylcomb;

pub use error::{Error, Result};
