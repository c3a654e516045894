//! Exact root systems, Weyl groups and the combinatorics of Schubert-variety
//! stabilizers.

pub mod classify;
pub mod cli;
pub mod constructions;
pub mod demazure;
pub mod error;
pub mod extremal;
pub mod rootsys;
pub mod schubert;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{CartanType, Family, ParabolicSet, Root, RootSystem, Weight};
pub use weyl::{WeylElement, DEFAULT_CAP};
