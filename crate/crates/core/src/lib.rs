//! Exact-arithmetic toolkit for independence polynomials of graphs and trees:
//! graph family constructions, three independent polynomial engines,
//! unimodality/log-concavity analysis, Sturm-sequence real-root counting,
//! and mechanized certification of log-concavity for concatenated tree
//! families.

pub mod crosscheck;
pub mod engines;
pub mod error;
pub mod graph;
pub mod poly;
pub mod seq;
pub mod trig;

pub use error::{Error, Result};
pub use poly::{IntPoly, RatPoly};
