//! Regular hyperbolic tessellations whose tiles are fundamental domains.
//!
//! The p-gons of a `{p,q}` tessellation are fundamental domains of some
//! Fuchsian group exactly when `q` has a prime divisor `≤ p`. This crate
//! decides that, builds the edge-pairing involution that witnesses it,
//! cross-checks the answer against an exhaustive search, and verifies the
//! resulting group geometrically in the Poincaré disk.

pub mod cli;
pub mod criterion;
pub mod error;
pub mod hgeom;
pub mod json;
pub mod perm;
pub mod svg;
pub mod tess;

pub use error::{Error, Result};
