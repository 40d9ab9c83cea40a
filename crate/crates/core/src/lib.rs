//! Exact analysis of quadratic packing polynomials on plane sectors.
//!
//! A packing polynomial on `S(α) = {0 ≤ y ≤ αx}` maps the lattice points of
//! the sector bijectively onto `0, 1, 2, …`. The crate provides exact
//! arithmetic for integer-valued quadratics, certified lattice enumeration of
//! sublevel regions, a constructive non-injectivity witness for nonzero
//! discriminant, density computations, a finite verifier, and a pruned
//! coefficient search.

pub mod collision;
pub mod density;
mod error;
pub mod numeric;
pub mod parse;
pub mod plot;
pub mod poly;
pub mod quadrature;
pub mod report;
pub mod search;
pub mod sector;
pub mod verifier;

pub use error::{Error, Result};
pub use numeric::{BigInt, BigRational, LatticePoint, QuadSurd, SectorSlope};
pub use poly::IVQuadratic;
pub use sector::{AffineCone, Region, Sector};
