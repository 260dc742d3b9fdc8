//! Exact projective geometry and arithmetic dynamics of the Pappus-Steiner map.
//!
//! Starting from a Pappus structure (two triples of collinear points on a pair
//! of distinct lines), Steiner's theorem produces two concurrency points for the
//! six Pappus lines. Reading the six lines as a new structure in the dual plane
//! and tracking the signature `[j(r)+j(s), j(r)j(s)]` yields the quadratic map
//!
//! ```text
//! pi([x, y]) = [ 2y(y - x + 2) / (x - y)^2 ,  y^2 / (x - y)^2 ]
//! ```
//!
//! This crate implements the construction side (configurations, Pappus and
//! Leisenring lines, concurrency points, conjugating matrices), the map side
//! (`pi`, its involution `tau`, preimages, the harmonic and balanced loci), a
//! brute-force periodic-point census over prime fields together with the
//! congruence predicates for periods 3 and 4, the invariant pencil of conics
//! through the four small-period points, and floating-point orbit
//! classification over the real plane.
//!
//! Everything is generic over a [`field::Field`]: exact arbitrary-precision
//! rationals, prime fields `F_p`, `f64`, and `Complex<f64>` share one code
//! path. Theorem verification runs over the exact fields; the floating types
//! exist for the orbit and basin analysis in [`dynamics`].
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line interface live in the companion `pappus-steiner-cli` crate.

#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod census;
pub mod conic;
pub mod dynamics;
pub mod field;
pub mod pappus;
pub mod poly;
pub mod proj;
pub mod psmap;

mod error;

pub use error::{Error, Result};
