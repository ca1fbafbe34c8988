//! End-to-end decisions for `sup_t ||e^(At)||` and `sup_t ||A^t||`.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use crate::bitsize::bitsize;
use crate::error::Result;
use crate::kernel::{has_boundedness_property, KernelVerdict};
use crate::matrix::RatMatrix;
use crate::minpoly::{minimal_polynomial_with_stats, ScaledMinimalPolynomial};
use crate::moebius::{moebius_transform, MoebiusResult};
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Continuous,
    Discrete,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Continuous => "continuous",
            Mode::Discrete => "discrete",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Bounded,
    Unbounded,
}

impl Verdict {
    pub fn is_bounded(self) -> bool {
        self == Verdict::Bounded
    }

    /// `YES` or `NO`.
    pub fn answer(self) -> &'static str {
        match self {
            Verdict::Bounded => "YES",
            Verdict::Unbounded => "NO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageTiming {
    pub stage: &'static str,
    pub elapsed: Duration,
}

/// Largest bit sizes seen in each stage.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BitStats {
    pub input: u64,
    pub minpoly_powers: u64,
    pub minpoly_solver: u64,
    pub scaled_poly: u64,
    pub kernel_minors: u64,
}

#[derive(Debug, Clone)]
pub struct DecisionReport {
    pub verdict: Verdict,
    pub mode: Mode,
    pub denominator: BigInt,
    /// Continuous mode drops the denominator: positive time scaling does not
    /// change boundedness.
    pub denominator_ignored: bool,
    pub minimal_poly: ScaledMinimalPolynomial,
    /// `p` (continuous) or `pdisc` (discrete).
    pub scaled_poly: IntPoly,
    pub moebius: Option<MoebiusResult>,
    /// Polynomial handed to the kernel.
    pub kernel_input: IntPoly,
    pub kernel: KernelVerdict,
    pub timings: Vec<StageTiming>,
    pub bit_stats: BitStats,
}

impl DecisionReport {
    /// Human-readable reason for the verdict.
    pub fn explanation(&self) -> String {
        match &self.moebius {
            Some(m) if m.delta >= 2 => {
                format!("eigenvalue 1 has multiplicity {} in the minimal polynomial", m.delta)
            }
            _ => self.kernel.reason.to_string(),
        }
    }

    /// Equality of everything except wall-clock timings.
    pub fn same_evidence(&self, other: &Self) -> bool {
        self.verdict == other.verdict
            && self.mode == other.mode
            && self.denominator == other.denominator
            && self.denominator_ignored == other.denominator_ignored
            && self.minimal_poly == other.minimal_poly
            && self.scaled_poly == other.scaled_poly
            && self.moebius == other.moebius
            && self.kernel_input == other.kernel_input
            && self.kernel == other.kernel
            && self.bit_stats == other.bit_stats
    }

    pub fn total_time(&self) -> Duration {
        self.timings.iter().map(|t| t.elapsed).sum()
    }
}

fn max_coeff_bits(p: &IntPoly) -> u64 {
    p.coeffs().iter().map(bitsize).max().unwrap_or(1)
}

fn timed<T>(timings: &mut Vec<StageTiming>, stage: &'static str, f: impl FnOnce() -> T) -> T {
    let start = Instant::now();
    let out = f();
    timings.push(StageTiming {
        stage,
        elapsed: start.elapsed(),
    });
    out
}

/// Is `sup_{t >= 0} ||e^(At)||` finite?
pub fn decide_continuous(a: &RatMatrix) -> Result<DecisionReport> {
    let mut timings = Vec::new();
    let b = a.numerator();
    let (minimal_poly, mp_stats) =
        timed(&mut timings, "minimal_polynomial", || minimal_polynomial_with_stats(b))?;
    let scaled_poly = minimal_poly.to_poly();
    let kernel = timed(&mut timings, "kernel", || has_boundedness_property(&scaled_poly))?;

    let bit_stats = BitStats {
        input: a.bitsize(),
        minpoly_powers: mp_stats.max_power_bits,
        minpoly_solver: mp_stats.max_solver_bits,
        scaled_poly: max_coeff_bits(&scaled_poly),
        kernel_minors: kernel.max_minor_bits,
    };
    Ok(DecisionReport {
        verdict: if kernel.bounded {
            Verdict::Bounded
        } else {
            Verdict::Unbounded
        },
        mode: Mode::Continuous,
        denominator: a.denominator().clone(),
        denominator_ignored: true,
        minimal_poly,
        kernel_input: scaled_poly.clone(),
        scaled_poly,
        moebius: None,
        kernel,
        timings,
        bit_stats,
    })
}

/// Minimal polynomial of `B / q` with denominators cleared: the coefficient
/// of `x^(d-l)` is `e_l * q^(d-l)`.
pub fn discrete_scaled_poly(minimal_poly: &ScaledMinimalPolynomial, q: &BigInt) -> IntPoly {
    let e = minimal_poly.coeffs();
    let d = e.len() - 1;
    let mut power = BigInt::one();
    let mut coeffs = vec![BigInt::one(); d + 1];
    for l in (0..=d).rev() {
        coeffs[l] = &e[l] * &power;
        power *= q;
    }
    IntPoly::new(coeffs)
}

/// Is `sup_{t >= 0} ||A^t||` finite?
pub fn decide_discrete(a: &RatMatrix) -> Result<DecisionReport> {
    let mut timings = Vec::new();
    let (minimal_poly, mp_stats) = timed(&mut timings, "minimal_polynomial", || {
        minimal_polynomial_with_stats(a.numerator())
    })?;
    let scaled_poly = discrete_scaled_poly(&minimal_poly, a.denominator());
    let moebius = timed(&mut timings, "moebius", || moebius_transform(&scaled_poly))?;
    let kernel_input = moebius.output.clone();
    let kernel = timed(&mut timings, "kernel", || has_boundedness_property(&kernel_input))?;

    let bit_stats = BitStats {
        input: a.bitsize(),
        minpoly_powers: mp_stats.max_power_bits,
        minpoly_solver: mp_stats.max_solver_bits,
        scaled_poly: max_coeff_bits(&scaled_poly).max(max_coeff_bits(&moebius.transformed)),
        kernel_minors: kernel.max_minor_bits,
    };
    Ok(DecisionReport {
        verdict: if kernel.bounded {
            Verdict::Bounded
        } else {
            Verdict::Unbounded
        },
        mode: Mode::Discrete,
        denominator: a.denominator().clone(),
        denominator_ignored: false,
        minimal_poly,
        scaled_poly,
        moebius: Some(moebius),
        kernel_input,
        kernel,
        timings,
        bit_stats,
    })
}

/// Dispatches on `mode`.
pub fn decide(a: &RatMatrix, mode: Mode) -> Result<DecisionReport> {
    match mode {
        Mode::Continuous => decide_continuous(a),
        Mode::Discrete => decide_discrete(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;

    fn int(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_integer(IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied())))
    }

    fn cont(rows: &[&[i64]]) -> Verdict {
        decide_continuous(&int(rows)).unwrap().verdict
    }

    fn disc(a: RatMatrix) -> Verdict {
        decide_discrete(&a).unwrap().verdict
    }

    #[test]
    fn continuous_examples() {
        assert_eq!(cont(&[&[0, 0], &[0, 0]]), Verdict::Bounded);
        assert_eq!(cont(&[&[0, 1], &[0, 0]]), Verdict::Unbounded);
        assert_eq!(cont(&[&[0, 1], &[-1, 0]]), Verdict::Bounded);
        assert_eq!(cont(&[&[-1, 0], &[0, -2]]), Verdict::Bounded);
        assert_eq!(cont(&[&[0, 1], &[1, 0]]), Verdict::Unbounded);
    }

    #[test]
    fn discrete_examples() {
        assert_eq!(disc(int(&[&[0, 1], &[-1, 0]])), Verdict::Bounded);
        assert_eq!(disc(int(&[&[1, 1], &[0, 1]])), Verdict::Unbounded);
        assert_eq!(disc(int(&[&[1]])), Verdict::Bounded);
        let half = RatMatrix::new(IntMatrix::from_rows([[1]]), BigInt::from(2)).unwrap();
        let report = decide_discrete(&half).unwrap();
        assert_eq!(report.scaled_poly, IntPoly::from_coeffs([2, -1]));
        assert_eq!(report.verdict, Verdict::Bounded);
    }

    #[test]
    fn discrete_scaling_uses_descending_powers_of_q() {
        let a = RatMatrix::new(IntMatrix::from_rows([[1, 0], [0, 3]]), BigInt::from(2)).unwrap();
        let report = decide_discrete(&a).unwrap();
        let e0 = report.minimal_poly.scale().clone();
        // (x - 1)(x - 3) = x^2 - 4x + 3 -> 4x^2 - 8x + 3 = (2x - 1)(2x - 3).
        assert_eq!(
            report.scaled_poly,
            IntPoly::from_coeffs([4, -8, 3]).scale(&e0)
        );
        assert_eq!(report.verdict, Verdict::Unbounded);
    }

    #[test]
    fn double_root_at_one_is_explained() {
        let report = decide_discrete(&int(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(report.moebius.as_ref().unwrap().delta, 2);
        assert!(report.explanation().contains("multiplicity 2"));
    }

    #[test]
    fn reports_are_deterministic() {
        let a = int(&[&[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        for mode in [Mode::Continuous, Mode::Discrete] {
            let r1 = decide(&a, mode).unwrap();
            let r2 = decide(&a, mode).unwrap();
            assert!(r1.same_evidence(&r2));
        }
    }

    #[test]
    fn continuous_ignores_denominator() {
        let b = IntMatrix::from_rows([[0, 1], [-4, -1]]);
        let r1 = decide_continuous(&RatMatrix::new(b.clone(), BigInt::from(1)).unwrap()).unwrap();
        let r2 = decide_continuous(&RatMatrix::new(b, BigInt::from(9)).unwrap()).unwrap();
        assert_eq!(r1.verdict, r2.verdict);
        assert!(r2.denominator_ignored);
    }

    #[test]
    fn rejects_rectangular() {
        let a = RatMatrix::from_integer(IntMatrix::from_rows([[1, 2, 3]]));
        assert!(decide_continuous(&a).is_err());
        assert!(decide_discrete(&a).is_err());
    }
}
