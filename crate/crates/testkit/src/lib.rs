//! Test support for `lti-bounded`: independent oracles, constructions with
//! known answers, and seeded generators.

pub mod companion;
pub mod gen;
pub mod manifest;
pub mod oracles;
pub mod ratpoly;
pub mod rootspec;

pub use companion::{companion, conjugate, unimodular};
pub use oracles::{cofactor_det_oracle, rational_rank, rational_solve, remainder_chain_oracle};
pub use ratpoly::RatPoly;
pub use rootspec::{Factor, RootSpec};
