//! Exact computer algebra for complex zero decreasing operators and
//! sequences (CZDO / CZDS) over classical polynomial bases.
//!
//! All arithmetic is over arbitrary-precision rationals, so every zero
//! count, operator identity and verification result is exact.

pub mod bases;
pub mod characterize;
#[cfg(feature = "cli")]
pub mod cli;
pub mod corpus;
pub mod counterexample;
pub mod de;
pub mod error;
mod linalg;
pub mod operators;
pub mod poly;
pub mod rational;
pub mod sequences;
pub mod verify;
pub mod zeros;

pub use bases::{basis_poly, expand_in_basis, BasisFamily};
pub use characterize::{characterize_standard_czds, Verdict};
pub use corpus::{CorpusSpec, Mix};
pub use counterexample::sharpness_counterexample;
pub use de::{basis_from_de, de_gamma, DeSolution};
pub use error::{Error, Result};
pub use operators::{DiffOp, PolyMap};
pub use poly::Poly;
pub use rational::Rational;
pub use sequences::{diagonal_apply, gamma, operator_form, SequenceSpec};
pub use verify::{verify_czdo, Budget, VerifyReport};
pub use zeros::{
    count_real_roots, squarefree_decomposition, zero_counts, Degree, Interval, ZeroCount,
};
