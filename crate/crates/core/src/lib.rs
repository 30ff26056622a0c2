//! Construction and verification of Franklin squares.
//!
//! A Franklin square of order `n = 2^r` (`r >= 3`) holds every integer in
//! `1..=n²` exactly once, has every half row and half column summing to half
//! the magic sum `M = (n/2)(n² + 1)`, and has every bend diagonal and every
//! 2×2 sub-square summing to a common value when the square is treated as a
//! torus.
//!
//! The crate is `no_std` (it needs `alloc`). The [`builder`] module produces
//! squares from a fixed column-pairing schedule of "Up" and "Down" fills, and
//! the [`verifier`] module checks arbitrary even-order grids against every
//! defining property, plus a set of finer structural lemmas that hold for
//! squares built by this construction.
//!
//! All row and column indices at the public surface are 1-based.
//!
//! ```
//! use franklin_core::{builder, verifier};
//!
//! let square = builder::generate(16).unwrap();
//! assert_eq!(square.get(1, 1), 200);
//! let report = verifier::verify_all(&square);
//! assert!(report.is_franklin());
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bend;
pub mod builder;
mod consts;
mod error;
mod square;
pub mod verifier;

pub use crate::bend::{BendOrientation, BendPath};
pub use crate::consts::{constants_for, FranklinConstants, DEFAULT_MAX_ORDER, HARD_MAX_ORDER};
pub use crate::error::{BuildError, OrderError, SquareError};
pub use crate::square::{Cell, Square};
