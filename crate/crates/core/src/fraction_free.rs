//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Every intermediate value produced by the one-step recurrence
//!
//! ```text
//! a[i][j] <- (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / previous_pivot
//! ```
//!
//! is a minor of the input matrix, so bit sizes stay polynomial in the input.
//! The division is always exact; a nonzero remainder would mean the
//! implementation is broken and triggers a panic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bitsize::bitsize;
use crate::error::Result;
use crate::matrix::IntMatrix;

/// Rank, pivot sets and a nonzero maximal minor of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationResult {
    pub rank: usize,
    /// Pivot rows, ascending, 0-based.
    pub rows: Vec<usize>,
    /// Pivot columns, ascending, 0-based.
    pub cols: Vec<usize>,
    /// `det A[rows, cols]` with both index lists ascending. Equal to 1 when the rank is 0.
    pub minor: BigInt,
    /// +1 or -1: sign relating the pivot-ordered determinant to `minor`.
    pub parity: i8,
    /// Largest bit size of any value produced by the recurrence.
    pub max_intermediate_bits: u64,
}

/// Runs Bareiss elimination with full pivoting.
///
/// When the current diagonal entry vanishes, the remaining block is scanned in
/// row-major order and the first nonzero entry becomes the pivot.
pub fn eliminate(a: &IntMatrix) -> EliminationResult {
    let (m, n) = (a.rows(), a.cols());
    let mut w: Vec<Vec<BigInt>> = (0..m).map(|i| a.row(i).to_vec()).collect();
    let mut row_perm: Vec<usize> = (0..m).collect();
    let mut col_perm: Vec<usize> = (0..n).collect();
    let mut prev = BigInt::one();
    let mut max_bits = a.max_entry_bitsize();
    let mut rank = 0;

    for k in 0..m.min(n) {
        let Some((pi, pj)) = (k..m)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .find(|&(i, j)| !w[i][j].is_zero())
        else {
            break;
        };
        if pi != k {
            w.swap(pi, k);
            row_perm.swap(pi, k);
        }
        if pj != k {
            for row in &mut w {
                row.swap(pj, k);
            }
            col_perm.swap(pj, k);
        }

        let (head, tail) = w.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let num = pivot * &row[j] - &lead * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                assert!(
                    r.is_zero(),
                    "inexact Bareiss division at step {k}: remainder {r}"
                );
                max_bits = max_bits.max(bitsize(&q));
                row[j] = q;
            }
        }
        prev = pivot.clone();
        rank = k + 1;
    }

    let pivot_rows = &row_perm[..rank];
    let pivot_cols = &col_perm[..rank];
    let parity = permutation_sign(pivot_rows) * permutation_sign(pivot_cols);
    let mut rows = pivot_rows.to_vec();
    let mut cols = pivot_cols.to_vec();
    rows.sort_unstable();
    cols.sort_unstable();
    let minor = if rank == 0 {
        BigInt::one()
    } else if parity < 0 {
        -prev
    } else {
        prev
    };

    EliminationResult {
        rank,
        rows,
        cols,
        minor,
        parity,
        max_intermediate_bits: max_bits,
    }
}

/// Exact determinant of a square integer matrix.
pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    let n = a.require_square()?;
    let res = eliminate(a);
    Ok(if res.rank < n { BigInt::zero() } else { res.minor })
}

/// Sign of the permutation that sorts `items` (distinct values).
fn permutation_sign(items: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            if items[i] > items[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn identity() {
        let r = eliminate(&IntMatrix::identity(3));
        assert_eq!(r.rank, 3);
        assert_eq!(r.rows, vec![0, 1, 2]);
        assert_eq!(r.cols, vec![0, 1, 2]);
        assert_eq!(r.minor, big(1));
    }

    #[test]
    fn rank_deficient() {
        let r = eliminate(&IntMatrix::from_rows([[1, 2], [2, 4]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.rows, vec![0]);
        assert_eq!(r.cols, vec![0]);
        assert_eq!(r.minor, big(1));
    }

    #[test]
    fn swap_keeps_ascending_sign() {
        let r = eliminate(&IntMatrix::from_rows([[0, 1], [1, 0]]));
        assert_eq!(r.rank, 2);
        assert_eq!(r.minor, big(-1));
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let r = eliminate(&IntMatrix::zeros(2, 3));
        assert_eq!(r.rank, 0);
        assert!(r.rows.is_empty() && r.cols.is_empty());
        assert_eq!(r.minor, big(1));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(
            determinant(&IntMatrix::from_rows([[2, 3], [5, 7]])).unwrap(),
            big(-1)
        );
        assert_eq!(determinant(&IntMatrix::zeros(2, 2)).unwrap(), big(0));
        assert!(determinant(&IntMatrix::from_rows([[1, 2, 3]])).is_err());
    }

    #[test]
    fn rectangular_pivots() {
        // Columns 0 and 2 are dependent; rows independent.
        let a = IntMatrix::from_rows([[0, 0, 0], [1, 5, 2], [3, 1, 6]]);
        let r = eliminate(&a);
        assert_eq!(r.rank, 2);
        assert_eq!(r.rows, vec![1, 2]);
        let sub = a.select(&r.rows, &r.cols).unwrap();
        let d = &sub[(0, 0)] * &sub[(1, 1)] - &sub[(0, 1)] * &sub[(1, 0)];
        assert_eq!(d, r.minor);
    }

    #[test]
    fn permutation_sign_counts_inversions() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[2, 0, 1]), 1);
        assert_eq!(permutation_sign(&[]), 1);
    }
}
