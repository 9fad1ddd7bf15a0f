//! Finite semigroups with a semilattice of idempotents, their E-dense
//! partial acts, coset spaces, and the act-based cryptosystems built on them.

pub mod act;
pub mod closure;
pub mod construction;
pub mod coset;
pub mod crypto;
pub mod error;
pub mod semigroup;
pub mod verify;

#[cfg(test)]
mod proptests;

pub use act::{PartialAct, TotalAct};
pub use error::{Error, PointId, Result};
pub use semigroup::{ElementId, ElementSet, FiniteSemigroup};
