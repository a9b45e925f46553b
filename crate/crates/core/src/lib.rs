//! Positive discrete series of the quantum algebra u_q(2,1).
//!
//! Basis enumeration in the U-spin and T-spin reductions, generator matrix
//! elements in both bases, Weyl transformation brackets between them,
//! q-Racah coefficients, and a verification harness that checks the
//! algebraic identities on truncated matrix representations.

pub mod error;
pub mod halfint;
pub mod qarith;
pub mod repspace;
pub mod generators;
pub mod weylracah;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use qarith::{qfact, qfact_inv, qnum, EvalContext, Mode, Scalar, SignedRadical};
