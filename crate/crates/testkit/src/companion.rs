//! Companion matrices and unimodular similarity transforms.

use lti_bounded::{IntMatrix, IntPoly};
use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompanionError {
    #[error("companion matrix needs a monic polynomial of degree at least 1")]
    NotMonic,
}

/// Companion matrix with ones on the subdiagonal and `-c_n, ..., -c_1` down
/// the last column, for `p = x^n + c_1 x^(n-1) + ... + c_n`.
pub fn companion(p: &IntPoly) -> Result<IntMatrix, CompanionError> {
    let n = match p.degree() {
        Some(n) if n >= 1 && p.is_monic() => n,
        _ => return Err(CompanionError::NotMonic),
    };
    let c = p.coeffs();
    let mut m = IntMatrix::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = BigInt::one();
    }
    for i in 0..n {
        m[(i, n - 1)] = -&c[n - i];
    }
    Ok(m)
}

/// A unimodular matrix and its inverse, built from random elementary row
/// operations. Entries of both stay below `cap` in absolute value.
pub fn unimodular(seed: u64, n: usize, cap: i64) -> (IntMatrix, IntMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n < 2 {
        return (u, inv);
    }
    let cap = BigInt::from(cap);
    let within = |m: &IntMatrix| m.entries().iter().all(|v| v.magnitude() <= cap.magnitude());
    for _ in 0..4 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let k = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=2i64));
        // U <- E U with E = I + k e_i e_j^T, inverse <- inverse E^-1.
        let mut nu = u.clone();
        for c in 0..n {
            let delta = &k * &u[(j, c)];
            nu[(i, c)] += delta;
        }
        let mut ninv = inv.clone();
        for r in 0..n {
            let delta = &k * &inv[(r, i)];
            ninv[(r, j)] -= delta;
        }
        if within(&nu) && within(&ninv) {
            u = nu;
            inv = ninv;
        }
    }
    debug_assert_eq!(&u * &inv, IntMatrix::identity(n));
    (u, inv)
}

/// `U B U^-1` for a seeded unimodular `U`.
pub fn conjugate(b: &IntMatrix, seed: u64, cap: i64) -> IntMatrix {
    let (u, inv) = unimodular(seed, b.rows(), cap);
    &(&u * b) * &inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn companion_layout() {
        let m = companion(&IntPoly::from_coeffs([1, 0, 1])).unwrap();
        assert_eq!(m, IntMatrix::from_rows([[0, -1], [1, 0]]));
        let m = companion(&IntPoly::from_coeffs([1, -3])).unwrap();
        assert_eq!(m, IntMatrix::from_rows([[3]]));
        let m = companion(&IntPoly::from_coeffs([1, -3, 2])).unwrap();
        assert_eq!(m, IntMatrix::from_rows([[0, -2], [1, 3]]));
        assert!(companion(&IntPoly::from_coeffs([2, 1])).is_err());
        assert!(companion(&IntPoly::from_coeffs([5])).is_err());
    }

    #[test]
    fn companion_is_annihilated() {
        let p = IntPoly::from_coeffs([1, 2, -7, 0, 4]);
        let m = companion(&p).unwrap();
        assert!(p.eval_matrix(&m).unwrap().is_zero());
    }

    #[test]
    fn unimodular_inverse() {
        for seed in 0..20 {
            let (u, inv) = unimodular(seed, 6, 50);
            assert_eq!(&u * &inv, IntMatrix::identity(6));
            assert_eq!(&inv * &u, IntMatrix::identity(6));
            assert_ne!(u, IntMatrix::identity(6));
        }
    }
}
