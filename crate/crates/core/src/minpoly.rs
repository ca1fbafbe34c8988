//! Minimal polynomial of an integer matrix.
//!
//! For `d = 1, 2, ..., n` we ask whether `A^d + c_1 A^(d-1) + ... + c_d I = 0`
//! has a solution. Vectorized, this is the `n^2 x d` system
//! `[vec(A^(d-1)) ... vec(A^0)] c = -vec(A^d)`. The first feasible degree is the
//! degree of the minimal polynomial, and the solution there is unique.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::poly::IntPoly;
use crate::solver::{solve_with_stats, SolveOutcome};

/// Minimal polynomial as integers `e_0 > 0, e_1, ..., e_d` such that
/// `x^d + (e_1/e_0) x^(d-1) + ... + e_d/e_0` annihilates the matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledMinimalPolynomial {
    coeffs: Vec<BigInt>,
}

impl ScaledMinimalPolynomial {
    /// `e_0, ..., e_d`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scale(&self) -> &BigInt {
        &self.coeffs[0]
    }

    /// `e_0 x^d + e_1 x^(d-1) + ... + e_d`.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }
}

/// Bit-size observations from a minimal polynomial computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MinpolyStats {
    /// Largest entry bit size among `A^0..A^d`.
    pub max_power_bits: u64,
    /// Largest value produced inside the linear solves.
    pub max_solver_bits: u64,
}

/// The annihilation system at degree `d` built from precomputed powers.
pub fn annihilation_system(powers: &[IntMatrix], d: usize) -> Result<(IntMatrix, Vec<BigInt>)> {
    let n2 = powers[0].rows() * powers[0].cols();
    let columns: Vec<Vec<BigInt>> = (0..d).rev().map(|k| powers[k].vectorize()).collect();
    let mut entries = Vec::with_capacity(n2 * d);
    for i in 0..n2 {
        for col in &columns {
            entries.push(col[i].clone());
        }
    }
    let lhs = IntMatrix::new(n2, d, entries)?;
    let rhs = powers[d].vectorize().into_iter().map(|v| -v).collect();
    Ok((lhs, rhs))
}

/// Solves the annihilation system of `a` at degree `d` (`1 <= d <= n`).
pub fn solve_at_degree(a: &IntMatrix, d: usize) -> Result<SolveOutcome> {
    let powers = a.powers(d)?;
    let (lhs, rhs) = annihilation_system(&powers, d)?;
    Ok(solve_with_stats(&lhs, &rhs)?.0)
}

pub fn minimal_polynomial(a: &IntMatrix) -> Result<ScaledMinimalPolynomial> {
    minimal_polynomial_with_stats(a).map(|(p, _)| p)
}

pub fn minimal_polynomial_with_stats(
    a: &IntMatrix,
) -> Result<(ScaledMinimalPolynomial, MinpolyStats)> {
    let n = a.require_square()?;
    let powers = a.powers(n)?;
    let mut stats = MinpolyStats::default();

    for d in 1..=n {
        stats.max_power_bits = stats.max_power_bits.max(powers[d].max_entry_bitsize());
        let (lhs, rhs) = annihilation_system(&powers, d)?;
        let (outcome, solve_stats) = solve_with_stats(&lhs, &rhs)?;
        stats.max_solver_bits = stats.max_solver_bits.max(solve_stats.max_intermediate_bits);
        let SolveOutcome::Feasible(sol) = outcome else {
            continue;
        };

        let mut coeffs = Vec::with_capacity(d + 1);
        coeffs.push(sol.denominator);
        coeffs.extend(sol.numerators);
        if coeffs[0].is_negative() {
            for c in &mut coeffs {
                *c = -&*c;
            }
        }
        let result = ScaledMinimalPolynomial { coeffs };
        let residual = result.to_poly().eval_matrix(a)?;
        assert!(
            residual.is_zero(),
            "minimal polynomial candidate does not annihilate the matrix"
        );
        debug_assert!(!result.coeffs[0].is_zero());
        return Ok((result, stats));
    }
    unreachable!("degree {n} annihilation system is feasible by Cayley-Hamilton")
}
