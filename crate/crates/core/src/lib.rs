//! Vertex-flip algebra on set systems and delta-matroids.
//!
//! The crate covers pivot, loop complementation and dual pivot on explicit set
//! systems, the interlace polynomials `Q`, `Q1`, `q1`, `q2`, `q3` (both from
//! their defining sums and by recursion), principal pivot transforms of
//! matrices over GF(2), graphs as symmetric GF(2) matrices, and matroids with
//! their Tutte polynomial.

pub mod bits;
pub mod deltamatroid;
mod dense;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod ground;
pub mod interlace;
pub mod matroid;
pub mod orbit;
pub mod poly;
pub mod recursion;
pub mod sample;
pub mod setsystem;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, Gf2Matrix};
pub use graph::Graph;
pub use ground::GroundSet;
pub use interlace::PolyKind;
pub use matroid::{BinaryMatroid, Matroid};
pub use poly::{BiPoly, UniPoly};
pub use recursion::{RecursionOptions, RecursionTrace};
pub use setsystem::{Flip, SetSystem};
