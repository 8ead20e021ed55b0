//! Exact linear algebra over finite fields and two explicit bijections:
//! pointed nilpotent operators against all operators on `F_q^n`, and
//! doubly-marked trees against self-maps of a finite set.

pub mod bijection;
pub mod census;
pub mod cli;
pub mod error;
pub mod field;
pub mod fitting;
pub mod joyal;
pub mod json;
pub mod linalg;
pub mod subspaces;

pub use error::{Error, Result};
