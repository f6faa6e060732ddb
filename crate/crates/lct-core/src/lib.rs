//! Exact computations on monomial ideals: Newton polyhedra, log canonical
//! thresholds, multiplier ideals, jet-scheme dimensions, and the sharp
//! colength/multiplicity bounds they satisfy.
//!
//! Everything is computed in exact rational arithmetic over arbitrary
//! precision integers; no floating point enters any result.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bounds;
pub mod cones;
pub mod error;
pub(crate) mod hull;
pub mod ideal;
pub mod jets;
pub mod newton;
pub mod rat;
pub mod rigidity;
pub mod thresholds;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use rat::Rat;
