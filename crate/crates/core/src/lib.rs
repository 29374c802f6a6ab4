//! Exact construction and verification of the canonical Spin(9)-invariant
//! 8-form on R^16 = O^2, built from the nine symmetric involutions.

pub mod bpt;
pub mod canonical;
pub mod cli;
pub mod curvature;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod octonion;
pub mod operators;
pub mod perm;
pub mod rational;
pub mod report;
pub mod sample;
pub mod stabilizer;
pub mod suites;

pub use error::{Error, Result};
pub use exterior::AlternatingForm;
pub use octonion::Octonion;
pub use operators::{InvolutionFamily, Operator16, RationalCirclePoint, Vector16};
pub use rational::Rational;
pub use report::{Check, VerificationReport};
