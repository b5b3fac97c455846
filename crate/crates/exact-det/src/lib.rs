// index loops mirror the row/column index arithmetic of the algorithms
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

//! Exact determinant computation over integral domains.
//!
//! Three fraction-free algorithms (condensation of surrounding minors, the
//! one-pass minor-by-minor scheme, and their combination with a switch point
//! r), instrumented with exact operation counters, the closed-form count and
//! cost models that predict them, and a modular/CRT pipeline for integer and
//! integer-polynomial matrices.

pub mod complexity;
pub mod det;
pub mod error;
pub mod matrix;
pub mod modular;
pub mod primes;
pub mod ring;
pub mod tally;

pub use det::{
    det_combined, det_dodgson, det_dodgson_rect, det_one_pass, det_oracle, minor_oracle,
    Algorithm, DetResult, RectResult, ORACLE_LIMIT,
};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use ring::{BigIntRing, CoeffRing, MachineIntRing, MultiPoly, PolyRing, PrimeFieldRing, Ring};
pub use tally::OpTally;
