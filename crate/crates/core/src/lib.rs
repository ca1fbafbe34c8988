//! Exact decision procedures for bounded trajectories of linear
//! time-invariant systems with rational coefficients.
//!
//! Given `A = B / q` with integer `B` and positive integer `q`, the crate
//! decides whether `e^(At)` (continuous time) or `A^t` (discrete time) stays
//! bounded as `t` grows. Everything is computed with exact integers and the
//! intermediate values are kept as minors of the input, so bit sizes grow
//! polynomially:
//!
//! 1. [`minpoly`] finds the minimal polynomial by solving annihilation
//!    systems with [`solver`], which in turn uses Bareiss elimination from
//!    [`fraction_free`].
//! 2. For discrete time, [`moebius`] maps the unit disk onto the left
//!    half-plane.
//! 3. [`kernel`] checks the root placement with Hurwitz determinants and a
//!    Sturm chain on the imaginary-axis part.
//!
//! [`pipeline`] ties the stages together and returns a full evidence trail.

pub mod bitsize;
pub mod error;
pub mod fraction_free;
pub mod kernel;
pub mod matrix;
pub mod minpoly;
pub mod moebius;
pub mod pipeline;
pub mod poly;
pub mod solver;

pub use bitsize::bitsize;
pub use error::{Error, Result};
pub use fraction_free::{determinant, eliminate, EliminationResult};
pub use kernel::{has_boundedness_property, KernelReason, KernelVerdict};
pub use matrix::{IntMatrix, RatMatrix};
pub use minpoly::{minimal_polynomial, ScaledMinimalPolynomial};
pub use moebius::{moebius_transform, MoebiusResult};
pub use pipeline::{decide, decide_continuous, decide_discrete, DecisionReport, Mode, Verdict};
pub use poly::{poly_derivative, poly_eval_matrix, IntPoly};
pub use solver::{solve, RationalSolution, SolveOutcome};

/// Arbitrary-precision integer used throughout.
pub type ExactInt = num_bigint::BigInt;
