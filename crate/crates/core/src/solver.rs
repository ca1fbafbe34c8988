//! Exact solution of integer linear systems by Cramer's rule on a maximal
//! nonsingular block found by fraction-free elimination.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fraction_free::eliminate;
use crate::matrix::IntMatrix;

/// Integer representation `x = numerators / denominator` of a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSolution {
    pub denominator: BigInt,
    pub numerators: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Feasible(RationalSolution),
    Infeasible,
}

impl SolveOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SolveOutcome::Feasible(_))
    }

    pub fn solution(&self) -> Option<&RationalSolution> {
        match self {
            SolveOutcome::Feasible(s) => Some(s),
            SolveOutcome::Infeasible => None,
        }
    }
}

/// Diagnostics from one solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub rank: usize,
    pub max_intermediate_bits: u64,
}

/// Solves `a x = b` exactly.
///
/// The candidate is supported on the pivot columns and is checked against
/// every equation before it is returned.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Result<SolveOutcome> {
    solve_with_stats(a, b).map(|(outcome, _)| outcome)
}

pub fn solve_with_stats(a: &IntMatrix, b: &[BigInt]) -> Result<(SolveOutcome, SolveStats)> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            actual: b.len(),
        });
    }
    let elim = eliminate(a);
    let mut stats = SolveStats {
        rank: elim.rank,
        max_intermediate_bits: elim.max_intermediate_bits,
    };

    let mut numerators = vec![BigInt::zero(); a.cols()];
    let denominator = elim.minor.clone();
    if elim.rank > 0 {
        let block = a.select(&elim.rows, &elim.cols)?;
        let rhs: Vec<BigInt> = elim.rows.iter().map(|&i| b[i].clone()).collect();
        for (j, &col) in elim.cols.iter().enumerate() {
            let replaced = block.with_column(j, &rhs)?;
            let cramer = eliminate(&replaced);
            stats.max_intermediate_bits = stats.max_intermediate_bits.max(cramer.max_intermediate_bits);
            numerators[col] = if cramer.rank < elim.rank {
                BigInt::zero()
            } else {
                cramer.minor
            };
        }
    }

    let lhs = a.apply(&numerators)?;
    let consistent = lhs.iter().zip(b).all(|(l, r)| *l == r * &denominator);
    let outcome = if consistent {
        SolveOutcome::Feasible(RationalSolution {
            denominator,
            numerators,
        })
    } else {
        SolveOutcome::Infeasible
    };
    Ok((outcome, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().copied().map(BigInt::from).collect()
    }

    #[test]
    fn identity_system() {
        let s = solve(&IntMatrix::identity(2), &v(&[4, 9])).unwrap();
        assert_eq!(
            s,
            SolveOutcome::Feasible(RationalSolution {
                denominator: BigInt::from(1),
                numerators: v(&[4, 9]),
            })
        );
    }

    #[test]
    fn diagonal_system() {
        let a = IntMatrix::from_rows([[2, 0], [0, 3]]);
        let s = solve(&a, &v(&[4, 9])).unwrap();
        assert_eq!(
            s,
            SolveOutcome::Feasible(RationalSolution {
                denominator: BigInt::from(6),
                numerators: v(&[12, 18]),
            })
        );
    }

    #[test]
    fn inconsistent_system() {
        let a = IntMatrix::from_rows([[1, 1], [1, 1]]);
        assert_eq!(solve(&a, &v(&[1, 2])).unwrap(), SolveOutcome::Infeasible);
    }

    #[test]
    fn underdetermined_uses_pivot_columns() {
        // x + 2y = 3: pivot column 0, so y = 0.
        let a = IntMatrix::from_rows([[1, 2]]);
        let s = solve(&a, &v(&[3])).unwrap();
        let sol = s.solution().unwrap();
        assert_eq!(sol.numerators[1], BigInt::zero());
        assert_eq!(sol.numerators[0], &sol.denominator * 3);
    }

    #[test]
    fn permuted_pivots_restore_column_order() {
        let a = IntMatrix::from_rows([[0, 1], [1, 0]]);
        let sol = solve(&a, &v(&[5, 7])).unwrap();
        let sol = sol.solution().unwrap();
        let x: Vec<BigInt> = sol.numerators.iter().map(|n| n / &sol.denominator).collect();
        assert_eq!(x, v(&[7, 5]));
    }

    #[test]
    fn zero_matrix() {
        let z = IntMatrix::zeros(2, 2);
        assert!(solve(&z, &v(&[0, 0])).unwrap().is_feasible());
        assert_eq!(solve(&z, &v(&[0, 1])).unwrap(), SolveOutcome::Infeasible);
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            solve(&IntMatrix::identity(2), &v(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
