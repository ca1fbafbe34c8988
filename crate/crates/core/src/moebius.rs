//! Reduction of the discrete-time question (roots inside the unit disk, or
//! simple on the unit circle) to the continuous-time one through the
//! self-inverse map `f(x) = (x + 1) / (x - 1)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusResult {
    /// `P(x) = sum_l a_l (x+1)^(d-l) (x-1)^l`.
    pub transformed: IntPoly,
    /// `deg pdisc - deg P`, the multiplicity of 1 as a root of `pdisc`.
    pub delta: usize,
    /// Polynomial to hand to the continuous kernel.
    pub output: IntPoly,
}

/// Rows `0..=n` of Pascal's triangle.
fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for k in 1..=n {
        let prev = &rows[k - 1];
        let mut row = Vec::with_capacity(k + 1);
        row.push(BigInt::one());
        for j in 1..k {
            row.push(&prev[j - 1] + &prev[j]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// `(x + 1)^k` when `minus` is false, `(x - 1)^k` otherwise.
fn binomial_power(row: &[BigInt], minus: bool) -> IntPoly {
    IntPoly::new(
        row.iter()
            .enumerate()
            .map(|(j, c)| if minus && j % 2 == 1 { -c } else { c.clone() })
            .collect(),
    )
}

/// Transforms `pdisc` and selects the polynomial for the continuous kernel.
///
/// A root of multiplicity two or more at 1 already rules out the discrete
/// property, so `x^2` (a double root at 0) is emitted. Otherwise the root at
/// 1, if present, is simple and admissible, and `P` carries every other root.
pub fn moebius_transform(pdisc: &IntPoly) -> Result<MoebiusResult> {
    let d = pdisc.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let rows = pascal(d);
    let mut transformed = IntPoly::zero();
    for (l, a) in pdisc.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = &binomial_power(&rows[d - l], false) * &binomial_power(&rows[l], true);
        transformed = &transformed + &term.scale(a);
    }
    let deg_p = transformed
        .degree()
        .expect("the transform of a nonzero polynomial is nonzero");
    let delta = d - deg_p;
    let output = if delta >= 2 {
        IntPoly::monomial(2)
    } else {
        transformed.clone()
    };
    Ok(MoebiusResult {
        transformed,
        delta,
        output,
    })
}
