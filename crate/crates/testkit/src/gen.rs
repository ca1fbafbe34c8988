//! Seeded random generators.

use lti_bounded::kernel::{HurwitzPair, PairOrigin};
use lti_bounded::{IntMatrix, IntPoly};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rootspec::{Factor, RootSpec};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::new(rows, cols, entries).expect("entry count matches")
}

/// Entries drawn from `[-2^(bits-1), 2^(bits-1))`.
pub fn random_matrix_bits(rng: &mut impl Rng, n: usize, bits: u32) -> IntMatrix {
    let half = 1i64 << (bits - 1);
    let entries = (0..n * n)
        .map(|_| BigInt::from(rng.gen_range(-half..half)))
        .collect();
    IntMatrix::new(n, n, entries).expect("entry count matches")
}

/// Random `m x n` matrix of rank at most `r`, as a product of two factors.
pub fn random_low_rank(rng: &mut impl Rng, m: usize, n: usize, r: usize, bound: i64) -> IntMatrix {
    if r == 0 {
        return IntMatrix::zeros(m, n);
    }
    let left = random_matrix(rng, m, r, bound);
    let right = random_matrix(rng, r, n, bound);
    &left * &right
}

pub fn random_monic(rng: &mut impl Rng, degree: usize, bound: i64) -> IntPoly {
    let mut c = vec![BigInt::from(1)];
    c.extend((0..degree).map(|_| BigInt::from(rng.gen_range(-bound..=bound))));
    IntPoly::new(c)
}

/// Factors whose roots land left of, on, or right of the imaginary axis.
pub fn continuous_factor(rng: &mut impl Rng) -> Factor {
    let side: i64 = match rng.gen_range(0..10) {
        0..=4 => -1,
        5..=7 => 0,
        _ => 1,
    };
    if rng.gen_bool(0.5) {
        let den = rng.gen_range(1..=3);
        let num = if side == 0 {
            0
        } else {
            side * rng.gen_range(1..=4)
        };
        if num == den {
            Factor::UnitOne
        } else {
            Factor::Linear { num, den }
        }
    } else {
        let scale = rng.gen_range(1..=2);
        let re = if side == 0 {
            0
        } else {
            side * rng.gen_range(1..=3)
        };
        Factor::Quadratic {
            re,
            im_sq: rng.gen_range(1..=9),
            scale,
        }
    }
}

/// Quadratics with both roots on the unit circle.
pub const UNIT_CIRCLE_PAIRS: [(i64, i64, i64); 9] = [
    (0, 1, 1),
    (3, 16, 5),
    (-3, 16, 5),
    (4, 9, 5),
    (1, 3, 2),
    (-1, 3, 2),
    (5, 144, 13),
    (-12, 25, 13),
    (0, 4, 2),
];

/// Factors whose roots land inside, on, or outside the unit circle.
pub fn discrete_factor(rng: &mut impl Rng) -> Factor {
    match rng.gen_range(0..10) {
        0..=4 => {
            if rng.gen_bool(0.5) {
                let den = rng.gen_range(2..=4);
                Factor::Linear {
                    num: rng.gen_range(-(den - 1)..den),
                    den,
                }
            } else {
                let scale = rng.gen_range(2..=4);
                loop {
                    let re = rng.gen_range(-(scale - 1)..scale);
                    let im_sq = rng.gen_range(1..scale * scale);
                    if re * re + im_sq < scale * scale {
                        break Factor::Quadratic { re, im_sq, scale };
                    }
                }
            }
        }
        5..=7 => match rng.gen_range(0..4) {
            0 => Factor::UnitOne,
            1 => Factor::Linear { num: -1, den: 1 },
            _ => {
                let &(re, im_sq, scale) = UNIT_CIRCLE_PAIRS.choose(rng).unwrap();
                Factor::Quadratic { re, im_sq, scale }
            }
        },
        _ => {
            if rng.gen_bool(0.5) {
                let den = rng.gen_range(1..=2);
                let num = rng.gen_range(den + 1..=3 * den);
                Factor::Linear {
                    num: if rng.gen_bool(0.5) { num } else { -num },
                    den,
                }
            } else {
                Factor::Quadratic {
                    re: rng.gen_range(-2..=2),
                    im_sq: rng.gen_range(2..=6),
                    scale: 1,
                }
            }
        }
    }
}

/// Draws factors until the degree would exceed `max_degree`.
pub fn random_root_spec<R: Rng>(
    rng: &mut R,
    max_degree: usize,
    mut factor: impl FnMut(&mut R) -> Factor,
) -> RootSpec {
    let target = rng.gen_range(1..=max_degree);
    let mut spec = RootSpec::default();
    for _ in 0..4 * max_degree {
        if spec.degree() >= target {
            break;
        }
        let f = factor(rng);
        let k = *[1u32, 1, 1, 2, 2, 3].choose(rng).unwrap();
        let k = (1..=k)
            .rev()
            .find(|&k| spec.degree() + f.degree() * k as usize <= target);
        if let Some(k) = k {
            spec.factors.push((f, k));
        }
    }
    if spec.factors.is_empty() {
        spec.factors.push((Factor::Linear { num: -1, den: 1 }, 1));
    }
    spec
}

/// Gap-two polynomial of exact degree `d` with entries in `[-bound, bound]`.
fn gap_two_poly(rng: &mut impl Rng, d: usize, bound: i64) -> IntPoly {
    let terms = (0..=d / 2).map(|l| {
        let mut c = rng.gen_range(-bound..=bound);
        if l == 0 && c == 0 {
            c = if rng.gen_bool(0.5) { 1 } else { -1 };
        }
        (d - 2 * l, BigInt::from(c))
    });
    IntPoly::from_terms(terms.collect::<Vec<_>>())
}

/// A pair `(p0, p1)` with `deg p1 = deg p0 - 1` and the gap-two layout.
pub fn random_hurwitz_pair(rng: &mut impl Rng, d: usize, bound: i64) -> HurwitzPair {
    assert!(d >= 1);
    HurwitzPair {
        p0: gap_two_poly(rng, d, bound),
        p1: gap_two_poly(rng, d - 1, bound),
        f: d / 2,
        origin: if d.is_multiple_of(2) {
            PairOrigin::Even
        } else {
            PairOrigin::Odd
        },
    }
}

/// Monic blocks whose block-diagonal companion has total size `n`. Some
/// blocks repeat or share factors so that the minimal polynomial is a proper
/// divisor of the characteristic polynomial.
pub fn random_companion_blocks(rng: &mut impl Rng, n: usize) -> Vec<IntPoly> {
    let mut blocks: Vec<IntPoly> = Vec::new();
    let mut used = 0;
    while used < n {
        let left = n - used;
        let poly = if !blocks.is_empty() && rng.gen_bool(0.3) {
            let prev = blocks.choose(rng).unwrap().clone();
            if prev.degree().unwrap() <= left {
                prev
            } else {
                random_monic(rng, 1, 3)
            }
        } else {
            let deg = rng.gen_range(1..=left.min(3));
            random_monic(rng, deg, 3)
        };
        used += poly.degree().unwrap();
        blocks.push(poly);
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use lti_bounded::kernel::hurwitz_matrix;

    #[test]
    fn root_specs_respect_degree() {
        let mut r = rng(7);
        for _ in 0..200 {
            let s = random_root_spec(&mut r, 10, continuous_factor);
            assert!((1..=10).contains(&s.degree()));
            assert_eq!(s.expand().degree(), Some(s.degree()));
        }
    }

    #[test]
    fn pairs_are_well_shaped() {
        let mut r = rng(11);
        for d in 1..=10 {
            let pair = random_hurwitz_pair(&mut r, d, 5);
            assert!(hurwitz_matrix(&pair).is_ok());
        }
    }

    #[test]
    fn discrete_quadratics_on_circle() {
        for (re, im_sq, scale) in UNIT_CIRCLE_PAIRS {
            assert_eq!(re * re + im_sq, scale * scale);
        }
    }

    #[test]
    fn blocks_fill_dimension() {
        let mut r = rng(3);
        for n in 1..=8 {
            let b = random_companion_blocks(&mut r, n);
            assert_eq!(b.iter().map(|p| p.degree().unwrap()).sum::<usize>(), n);
        }
    }
}
