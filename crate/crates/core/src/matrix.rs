use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bitsize::{bitsize, total_bitsize};
use crate::error::{Error, Result};

/// Dense integer matrix stored in row-major order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::EntryCount {
                rows,
                cols,
                expected: rows * cols,
                actual: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from nested rows of anything convertible to `BigInt`.
    ///
    /// Panics on ragged or empty input; intended for literals and tests.
    pub fn from_rows<T, R>(rows: R) -> Self
    where
        T: Into<BigInt>,
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
    {
        let rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n), "ragged matrix literal");
        Self::new(m, n, rows.into_iter().flatten().collect()).expect("valid matrix literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Block-diagonal matrix with the given square blocks.
    pub fn block_diagonal(blocks: &[IntMatrix]) -> Result<Self> {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        if n == 0 {
            return Err(Error::EmptyMatrix { rows: 0, cols: 0 });
        }
        let mut out = Self::zeros(n, n);
        let mut offset = 0;
        for block in blocks {
            block.require_square()?;
            for i in 0..block.rows {
                for j in 0..block.cols {
                    out[(offset + i, offset + j)] = block[(i, j)].clone();
                }
            }
            offset += block.rows;
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Sum of the entry bit sizes.
    pub fn bitsize(&self) -> u64 {
        total_bitsize(&self.entries)
    }

    /// Largest bit size of a single entry.
    pub fn max_entry_bitsize(&self) -> u64 {
        self.entries.iter().map(bitsize).max().unwrap_or(1)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self[(i, j)].clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// The submatrix keeping `rows` and `cols`, in the order given.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self[(i, j)].clone())
            .collect();
        Self::new(rows.len(), cols.len(), entries)
    }

    /// Copy of `self` with column `j` replaced by `column`.
    pub fn with_column(&self, j: usize, column: &[BigInt]) -> Result<Self> {
        if column.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: column.len(),
            });
        }
        let mut out = self.clone();
        for (i, v) in column.iter().enumerate() {
            out[(i, j)] = v.clone();
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.entries[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                actual: rhs.rows * rhs.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Powers `A^0, A^1, ..., A^max` by iterated multiplication.
    pub fn powers(&self, max: usize) -> Result<Vec<Self>> {
        let n = self.require_square()?;
        let mut out = Vec::with_capacity(max + 1);
        out.push(Self::identity(n));
        for k in 1..=max {
            let next = out[k - 1].checked_mul(self)?;
            out.push(next);
        }
        Ok(out)
    }

    /// Column-major flattening, `vec(A)`.
    pub fn vectorize(&self) -> Vec<BigInt> {
        self.transpose().entries
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.entries[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Rational matrix `B / q` with integer numerator `B` and positive denominator `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    numerator: IntMatrix,
    denominator: BigInt,
}

impl RatMatrix {
    pub fn new(numerator: IntMatrix, denominator: BigInt) -> Result<Self> {
        if !denominator.is_positive() {
            return Err(Error::NonPositiveDenominator);
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn from_integer(numerator: IntMatrix) -> Self {
        Self {
            numerator,
            denominator: BigInt::one(),
        }
    }

    pub fn numerator(&self) -> &IntMatrix {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn bitsize(&self) -> u64 {
        self.numerator.bitsize() + bitsize(&self.denominator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks_shape() {
        assert!(matches!(
            IntMatrix::new(0, 2, vec![]),
            Err(Error::EmptyMatrix { .. })
        ));
        assert!(matches!(
            IntMatrix::new(2, 2, vec![BigInt::one()]),
            Err(Error::EntryCount { .. })
        ));
        assert!(RatMatrix::new(IntMatrix::identity(2), BigInt::zero()).is_err());
    }

    #[test]
    fn bitsize_sums_entries() {
        let a = IntMatrix::from_rows([[0, 1], [-3, 4]]);
        assert_eq!(a.bitsize(), 1 + 2 + 3 + 4);
        let r = RatMatrix::new(a, BigInt::from(2)).unwrap();
        assert_eq!(r.bitsize(), 10 + 3);
    }

    #[test]
    fn multiplication_and_powers() {
        let a = IntMatrix::from_rows([[0, 1], [-1, 0]]);
        let p = a.powers(4).unwrap();
        assert_eq!(p[2], IntMatrix::identity(2).scale(&BigInt::from(-1)));
        assert_eq!(p[4], IntMatrix::identity(2));
    }

    #[test]
    fn vectorize_is_column_major() {
        let a = IntMatrix::from_rows([[1, 2], [3, 4]]);
        let v: Vec<i64> = a
            .vectorize()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect();
        assert_eq!(v, vec![1, 3, 2, 4]);
    }

    #[test]
    fn block_diagonal_places_blocks() {
        let a = IntMatrix::from_rows([[2]]);
        let b = IntMatrix::from_rows([[0, 1], [1, 0]]);
        let d = IntMatrix::block_diagonal(&[a, b]).unwrap();
        assert_eq!(d, IntMatrix::from_rows([[2, 0, 0], [0, 0, 1], [0, 1, 0]]));
    }
}
