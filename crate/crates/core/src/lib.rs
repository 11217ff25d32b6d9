//! Universal quantities of hyperbolic collar/tube geometry, plus predicate
//! checkers for explicit discrete-group data.
//!
//! The library is organized around six concerns:
//!
//! * [`special`] — the collar function `r(x) = log coth(x/2)`, sphere areas,
//!   hyperbolic ball volumes, and the sinh/cosh power integrals behind them.
//! * [`collar_tube`] — stable/collar widths, the tubular neighborhood
//!   function `c_n(A)`, tube volumes with their rate-of-growth behavior, and
//!   volume lower bounds for 3-manifolds.
//! * [`models`] — the hyperboloid (Minkowski) model of `H^n` in every
//!   dimension, and an upper-half-plane layer for `H^2` geodesics.
//! * [`combination`] — the quantitative free-product (combination) checker
//!   for pairs of fuchsian subgroups, and the boundary-gluing separation
//!   constructor.
//! * [`stability`] — a lift-enumeration harness over `H^2` surface-group
//!   data: stable-neighborhood verification, self-intersection lower bounds,
//!   and the length-vs-crossing-number trend table.
//! * a private word-enumeration layer shared by the two modules above.
//!
//! All computations are `f64`, curvature is fixed at −1, and every public
//! operation is pure and deterministic.

pub mod collar_tube;
pub mod combination;
mod error;
pub mod models;
pub mod roots;
pub mod special;
pub mod stability;
pub mod types;
pub(crate) mod words;

pub use error::{Error, Result};
pub use types::{Area, Dimension, Length, Radius, Volume, Width};

// Re-exported so downstream crates construct `Matrix2`/`DMatrix` inputs
// against the exact linear-algebra version this crate was built with.
pub use nalgebra;
