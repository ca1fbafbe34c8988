use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bitsize::total_bitsize;
use crate::error::Result;
use crate::matrix::IntMatrix;

/// Univariate polynomial with integer coefficients, stored densely with the
/// leading coefficient first.
///
/// The zero polynomial has an empty coefficient list and no degree. Every
/// other value has a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from coefficients in descending degree order.
    /// Leading zeros are stripped.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero());
        match first {
            Some(0) => Self { coeffs },
            Some(k) => Self {
                coeffs: coeffs[k..].to_vec(),
            },
            None => Self::zero(),
        }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated degrees are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let terms: Vec<(usize, BigInt)> = terms.into_iter().collect();
        let Some(deg) = terms.iter().map(|(d, _)| *d).max() else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (d, c) in terms {
            coeffs[deg - d] += c;
        }
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficients in descending degree order (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Coefficient of `x^k` (zero above the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        match self.degree() {
            Some(d) if k <= d => self.coeffs[d - k].clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn bitsize(&self) -> u64 {
        total_bitsize(&self.coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        Self::new(
            self.coeffs[..d]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(d - i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(BigInt::one()), |acc, _| &acc * self)
    }

    /// Evaluates the polynomial at a square matrix with Horner's scheme.
    pub fn eval_matrix(&self, a: &IntMatrix) -> Result<IntMatrix> {
        let n = a.require_square()?;
        let mut acc = IntMatrix::zeros(n, n);
        for c in &self.coeffs {
            acc = acc.checked_mul(a)?;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        Ok(acc)
    }

    /// Sign of the leading coefficient (0 for the zero polynomial).
    pub fn leading_sign(&self) -> i8 {
        match self.leading() {
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }
}

/// Evaluates `p` at the matrix `a`.
pub fn poly_eval_matrix(p: &IntPoly, a: &IntMatrix) -> Result<IntMatrix> {
    p.eval_matrix(a)
}

/// Formal derivative of `p`.
pub fn poly_derivative(p: &IntPoly) -> IntPoly {
    p.derivative()
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let pad = |p: &IntPoly, k: usize| {
            let off = n - p.coeffs.len();
            if k < off {
                BigInt::zero()
            } else {
                p.coeffs[k - off].clone()
            }
        };
        IntPoly::new((0..n).map(|k| pad(self, k) + pad(rhs, k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = d - i;
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}
