//! Exact computations with the quantum affine algebra `U_q(gl_n^)` and its
//! finite-dimensional representations.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalar`]: rationals, rational functions of `q` and of `u`;
//! * [`linalg`], [`poly`], [`perm`]: matrices, operator-valued Laurent
//!   polynomials and permutation bookkeeping;
//! * [`combinatorics`]: Gelfand-Tsetlin and trapezium patterns, skew tableaux;
//! * [`rmatrix`]: constant and trigonometric R-matrices;
//! * [`gtrep`]: evaluation modules in the Gelfand-Tsetlin basis;
//! * [`qminor`]: quantum minors, complementary minors and Sylvester maps;
//! * [`skewrep`]: skew modules, highest weights, Drinfeld polynomials, characters;
//! * [`olshanski`]: the twisted-side checks;
//! * [`suites`]: named verification suites producing [`report::Report`]s.

pub mod combinatorics;
pub mod error;
pub mod gtrep;
pub mod linalg;
pub mod olshanski;
pub mod perm;
pub mod poly;
pub mod qminor;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod skewrep;
pub mod suites;

pub use error::{Error, Result};
