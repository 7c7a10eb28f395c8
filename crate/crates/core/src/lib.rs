//! Exact algebra for A-equivariant formal groups on embeddable formal multicurves.
//!
//! The curve ring is `R = k[x]/(f^N)` over a base ring `k` taken from a fixed menu
//! ([`ringkit::RingDescriptor`]).  On top of it sit divisors and their norm
//! generators, residues and duality for `k[x]/f`, and the `v_n`/transfer calculus
//! with the Burnside ring map and Mackey functor.

pub mod abelian;
pub mod cli;
pub mod divisor;
pub mod error;
pub mod multicurve;
pub mod resdual;
pub mod ringkit;
pub mod transfer;

pub use error::{Error, Result};
