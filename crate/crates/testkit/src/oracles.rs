//! Brute-force references. None of these call into the elimination code of
//! `lti_bounded`.

use lti_bounded::{IntMatrix, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::ratpoly::RatPoly;

/// Largest dimension the cofactor oracle accepts.
pub const COFACTOR_MAX_N: usize = 7;
/// Largest degree the remainder-chain oracle is exercised with.
pub const CHAIN_MAX_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension {0} exceeds the oracle cap of {COFACTOR_MAX_N}")]
    TooLarge(usize),
}

/// Determinant by Laplace expansion along the first row.
pub fn cofactor_det_oracle(a: &IntMatrix) -> Result<BigInt, OracleError> {
    if !a.is_square() {
        return Err(OracleError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.rows() > COFACTOR_MAX_N {
        return Err(OracleError::TooLarge(a.rows()));
    }
    let rows: Vec<Vec<BigInt>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    Ok(laplace(&rows))
}

fn laplace(m: &[Vec<BigInt>]) -> BigInt {
    match m.len() {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        n => {
            let mut total = BigInt::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * laplace(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

/// Reduced row echelon form over the rationals.
#[derive(Debug, Clone)]
pub struct RowReduction {
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivot_cols: Vec<usize>,
    pub rows: Vec<Vec<BigRational>>,
}

pub fn row_reduce(rows: Vec<Vec<BigRational>>) -> RowReduction {
    let mut rows = rows;
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    RowReduction {
        rank: r,
        pivot_cols,
        rows,
    }
}

fn rational_rows(a: &IntMatrix) -> Vec<Vec<BigRational>> {
    (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect()
        })
        .collect()
}

pub fn rational_rank(a: &IntMatrix) -> usize {
    row_reduce(rational_rows(a)).rank
}

/// Solves `a x = b` over the rationals. Returns `None` when inconsistent;
/// otherwise the solution with free variables set to zero.
pub fn rational_solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let mut rows = rational_rows(a);
    for (row, v) in rows.iter_mut().zip(b) {
        row.push(BigRational::from_integer(v.clone()));
    }
    let n = a.cols();
    let red = row_reduce(rows);
    if red.pivot_cols.last() == Some(&n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &c) in red.pivot_cols.iter().enumerate() {
        x[c] = red.rows[i][n].clone();
    }
    Some(x)
}

/// Euclidean remainder sequence `p0, p1, p2, ...` with
/// `p(k+1) = -rem(p(k-1), p(k))`, ending with the zero polynomial.
pub fn remainder_chain_oracle(p0: &IntPoly, p1: &IntPoly) -> Vec<RatPoly> {
    assert!(!p0.is_zero(), "p0 must be nonzero");
    let mut chain = vec![RatPoly::from_int(p0), RatPoly::from_int(p1)];
    while !chain.last().unwrap().is_zero() {
        let k = chain.len() - 1;
        let next = chain[k - 1].rem(&chain[k]).neg();
        chain.push(next);
    }
    chain
}
