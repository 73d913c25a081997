//! Exact optimization algorithms on unit-disk graphs of planar point sets.
//!
//! For points in strictly convex position: minimum(-weight) dominating set,
//! discrete k-center, maximum-weight independent set, and max-min
//! dispersion. For arbitrary point sets: maximum- and minimum-weight
//! independent sets and cliques of size 3 (and pairs) via tree-structured
//! biclique partitions. Every solver is generic over the scalar type:
//! `f64` with a comparison tolerance, or arbitrary-precision rationals for
//! exact verification. The `harness` module holds generators, exhaustive
//! oracles, instance files, and the randomized cross-verification driver
//! behind the `udgx` CLI.

pub mod biclique;
pub mod cycle;
pub mod dispersion;
pub mod domset;
pub mod geom;
pub mod harness;
pub mod indep;
pub mod kcenter;
pub mod scalar;

mod error;

pub use error::{Error, Result};
