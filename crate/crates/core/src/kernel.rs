//! Decides whether an integer polynomial has the boundedness property: every
//! root either has negative real part, or is purely imaginary and simple.
//!
//! The polynomial is split into real polynomials `p0`, `p1` with
//! `p(ix) = p0(x) + i p1(x)` (even degree) or `i p(ix) = p0(x) + i p1(x)`
//! (odd degree). The Euclidean remainder sequence `p0, p1, p2, ...` with
//! `p(k+1) = -rem(p(k-1), p(k))` is never formed explicitly. Instead, the
//! products of its leading coefficients are read off minors of the
//! interleaved coefficient matrix `M`:
//!
//! ```text
//! a0_0 * a1_0 * ... * a(k-1)_0 * ak_l = sigma_k * det M[0..=k, 0..k + {l + k}]
//! ```
//!
//! with `sigma_k = -1` when `k = 2 mod 4` and `1` otherwise. When the chain
//! stops early at `p_m` (the GCD of `p0` and `p1`), a Sturm chain
//! `p_m, -p_m', ...` is run through the same machinery to check that `p_m`
//! has only simple real roots, i.e. that the imaginary-axis roots of `p` are
//! simple.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bitsize::bitsize;
use crate::error::{Error, Result};
use crate::fraction_free::determinant;
use crate::matrix::IntMatrix;
use crate::poly::IntPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairOrigin {
    /// `p(ix) = p0(x) + i p1(x)`.
    Even,
    /// `i p(ix) = p0(x) + i p1(x)`.
    Odd,
    /// `p1 = -p0'`.
    Sturm,
}

/// Real/imaginary split of a polynomial on the imaginary axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzPair {
    pub p0: IntPoly,
    pub p1: IntPoly,
    /// `floor(deg p0 / 2)`: index of the last coefficient of `p0` in the
    /// every-other-power layout.
    pub f: usize,
    pub origin: PairOrigin,
}

impl HurwitzPair {
    /// The pair `(q, -q')` used for the Sturm phase.
    pub fn sturm(q: &IntPoly) -> Result<Self> {
        let d = q.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        Ok(Self {
            p0: q.clone(),
            p1: -&q.derivative(),
            f: d / 2,
            origin: PairOrigin::Sturm,
        })
    }

    pub fn degree(&self) -> usize {
        self.p0.degree().unwrap_or(0)
    }
}

/// Splits `p` into `p0`, `p1`.
pub fn decompose(p: &IntPoly) -> Result<HurwitzPair> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let odd = d % 2 == 1;
    let mut real = Vec::new();
    let mut imag = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        let power = d - k;
        // c (ix)^power, times an extra i for odd degree.
        let turns = (power + usize::from(odd)) % 4;
        let term = match turns {
            0 => (c.clone(), true),
            1 => (c.clone(), false),
            2 => (-c, true),
            _ => (-c, false),
        };
        match term {
            (v, true) => real.push((power, v)),
            (v, false) => imag.push((power, v)),
        }
    }
    Ok(HurwitzPair {
        p0: IntPoly::from_terms(real),
        p1: IntPoly::from_terms(imag),
        f: d / 2,
        origin: if odd { PairOrigin::Odd } else { PairOrigin::Even },
    })
}

/// Coefficients of `x^top, x^(top-2), ...` down to degree 0 or 1.
fn gap_two_coeffs(p: &IntPoly, top: usize) -> Vec<BigInt> {
    (0..=top / 2).map(|l| p.coeff(top - 2 * l)).collect()
}

/// Checks that `x^(top-1), x^(top-3), ...` have zero coefficients.
fn check_gap_two(p: &IntPoly, top: usize, name: &str) -> Result<()> {
    let bad = (0..top)
        .rev()
        .step_by(2)
        .find(|&k| !p.coeff(k).is_zero());
    match bad {
        Some(k) => Err(Error::ShapeViolation(format!(
            "{name} has a nonzero x^{k} term"
        ))),
        None => Ok(()),
    }
}

/// The `(d+1) x (d+1)` interleaved coefficient matrix of a pair with
/// `deg p1 = deg p0 - 1`.
///
/// Row 0 holds the coefficients of `p0`. Rows `2j - 1` and `2j` hold the
/// coefficients of `p1` and `p0`, both shifted right by `j` columns.
pub fn hurwitz_matrix(pair: &HurwitzPair) -> Result<IntMatrix> {
    let d = pair
        .p0
        .degree()
        .ok_or_else(|| Error::ShapeViolation("p0 is zero".into()))?;
    if d == 0 || pair.p1.degree() != Some(d - 1) {
        return Err(Error::ShapeViolation(format!(
            "need deg p1 = deg p0 - 1, got deg p0 = {d}, deg p1 = {:?}",
            pair.p1.degree()
        )));
    }
    check_gap_two(&pair.p0, d, "p0")?;
    check_gap_two(&pair.p1, d - 1, "p1")?;

    let top = gap_two_coeffs(&pair.p0, d);
    let next = gap_two_coeffs(&pair.p1, d - 1);
    let size = d + 1;
    let mut m = IntMatrix::zeros(size, size);
    for row in 0..size {
        let (coeffs, shift) = if row == 0 {
            (&top, 0)
        } else if row % 2 == 1 {
            (&next, row.div_ceil(2))
        } else {
            (&top, row / 2)
        };
        for (l, c) in coeffs.iter().enumerate() {
            if shift + l < size {
                m[(row, shift + l)] = c.clone();
            }
        }
    }
    Ok(m)
}

/// `sigma_k` from the minor/coefficient relation.
pub fn minor_sign(k: usize) -> i8 {
    if k % 4 == 2 {
        -1
    } else {
        1
    }
}

/// `det M[0..=k, 0..k + {l + k}]`.
pub fn chain_minor(m: &IntMatrix, k: usize, l: usize) -> BigInt {
    let rows: Vec<usize> = (0..=k).collect();
    let mut cols: Vec<usize> = (0..k).collect();
    cols.push(l + k);
    determinant(&m.select(&rows, &cols).expect("minor indices in range"))
        .expect("minor is square")
}

fn sign_of(v: &BigInt) -> i8 {
    if v.is_negative() {
        -1
    } else if v.is_zero() {
        0
    } else {
        1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainStatus {
    /// Every leading principal minor is nonzero; the chain runs to a constant.
    AllNonzeroMinors,
    /// `p(m+1)` vanishes identically: the chain ends at the GCD `p_m`.
    S1 { m: usize },
    /// At index `k` the leading coefficient vanishes but the polynomial does
    /// not: the degree drops by more than one.
    S2 { k: usize },
    /// `p1` is nonzero with `deg p1 < deg p0 - 1`.
    NotStepOne,
}

/// Leading-coefficient signs of a remainder chain, recovered from minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignChainReport {
    /// Signs of `a0_0, a1_0, ..., am_0`.
    pub leading_signs: Vec<i8>,
    /// Leading principal minors `det M[0..=k, 0..=k]` for `k = 0..=m`.
    pub leading_minors: Vec<BigInt>,
    pub m: usize,
    pub status: ChainStatus,
    /// Largest bit size among all minors evaluated.
    pub max_minor_bits: u64,
}

impl SignChainReport {
    /// True when consecutive leading signs all differ.
    pub fn alternating(&self) -> bool {
        self.leading_signs.windows(2).all(|w| w[0] != w[1])
    }

    /// `V(+inf) - V(-inf)` for the chain `p_0..p_m`, assuming each step
    /// drops the degree by exactly one.
    pub fn variation_difference(&self) -> i64 {
        let changes = self.leading_signs.windows(2).filter(|w| w[0] != w[1]).count() as i64;
        // At -inf the sign of p_k flips with parity of its degree, so each
        // non-change at +inf is a change at -inf and vice versa.
        let steps = self.leading_signs.len().saturating_sub(1) as i64;
        changes - (steps - changes)
    }

    fn single(sign: i8, lead: BigInt, status: ChainStatus) -> Self {
        Self {
            leading_signs: vec![sign],
            max_minor_bits: bitsize(&lead),
            leading_minors: vec![lead],
            m: 0,
            status,
        }
    }
}

/// Evaluates leading principal minors of a Hurwitz matrix and classifies
/// the chain.
pub fn chain_signs(m: &IntMatrix) -> SignChainReport {
    let d = m.rows() - 1;
    let mut minors: Vec<BigInt> = Vec::with_capacity(d + 1);
    let mut max_bits = 1;
    let mut status = ChainStatus::AllNonzeroMinors;

    for k in 0..=d {
        let lead = chain_minor(m, k, 0);
        max_bits = max_bits.max(bitsize(&lead));
        if !lead.is_zero() {
            minors.push(lead);
            continue;
        }
        assert!(k > 0, "leading coefficient of p0 must be nonzero");
        status = ChainStatus::S1 { m: k - 1 };
        for l in 1..=(d - k) / 2 {
            let probe = chain_minor(m, k, l);
            max_bits = max_bits.max(bitsize(&probe));
            if !probe.is_zero() {
                status = ChainStatus::S2 { k };
                break;
            }
        }
        break;
    }

    let mut signs = Vec::with_capacity(minors.len());
    let mut prev_product_sign = 1i8;
    for (k, minor) in minors.iter().enumerate() {
        let product_sign = minor_sign(k) * sign_of(minor);
        signs.push(product_sign * prev_product_sign);
        prev_product_sign = product_sign;
    }
    SignChainReport {
        leading_signs: signs,
        m: minors.len() - 1,
        leading_minors: minors,
        status,
        max_minor_bits: max_bits,
    }
}

/// Positive multiple `|a0_0 * ... * a(m-1)_0| * p_m` of the `m`-th chain
/// polynomial, read off minors of the Hurwitz matrix.
pub fn extract_pm(m: &IntMatrix, index: usize) -> IntPoly {
    let d = m.rows() - 1;
    let prev_sign = if index == 0 {
        1
    } else {
        minor_sign(index - 1) * sign_of(&chain_minor(m, index - 1, 0))
    };
    let scale = BigInt::from(prev_sign * minor_sign(index));
    let deg = d - index;
    IntPoly::from_terms(
        (0..=deg / 2).map(|l| (deg - 2 * l, &scale * chain_minor(m, index, l))),
    )
}

/// Why the kernel answered the way it did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelReason {
    /// No roots at all.
    ConstantPolynomial,
    /// The chain reached a constant with alternating signs: all roots in the
    /// open left half-plane.
    AllRootsStable,
    /// Off-axis roots are stable and the GCD part has only simple real roots.
    SimpleImaginaryRoots,
    /// `p1` nonzero with a degree gap larger than one.
    InitialDegreeGap,
    /// Degree drop larger than one inside the remainder chain.
    ChainDegreeDrop { k: usize },
    /// Leading signs of the remainder chain do not alternate.
    ChainSignsNotAlternating,
    /// Degree drop larger than one inside the Sturm chain.
    SturmDegreeDrop { k: usize },
    /// The Sturm chain stopped early: the GCD part has repeated roots.
    SturmChainShort { m: usize, degree: usize },
    /// Leading signs of the Sturm chain do not alternate: the GCD part has
    /// non-real roots.
    SturmSignsNotAlternating,
}

impl fmt::Display for KernelReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ConstantPolynomial => write!(f, "constant polynomial, no roots"),
            Self::AllRootsStable => write!(f, "all roots in the open left half-plane"),
            Self::SimpleImaginaryRoots => {
                write!(f, "stable roots plus simple roots on the imaginary axis")
            }
            Self::InitialDegreeGap => write!(f, "deg p1 < deg p0 - 1"),
            Self::ChainDegreeDrop { k } => write!(f, "remainder chain degree drop at k = {k}"),
            Self::ChainSignsNotAlternating => {
                write!(f, "remainder chain leading signs do not alternate")
            }
            Self::SturmDegreeDrop { k } => write!(f, "Sturm chain degree drop at k = {k}"),
            Self::SturmChainShort { m, degree } => {
                write!(f, "Sturm chain ends at m = {m} < {degree}: repeated imaginary roots")
            }
            Self::SturmSignsNotAlternating => {
                write!(f, "Sturm chain leading signs do not alternate: roots off both axes")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelVerdict {
    pub bounded: bool,
    pub reason: KernelReason,
    /// `None` only for constant input.
    pub chain: Option<SignChainReport>,
    pub sturm: Option<SignChainReport>,
    /// Positive multiple of the GCD of `p0` and `p1` (zero when not reached).
    pub p_ext0: IntPoly,
    pub max_minor_bits: u64,
}

impl KernelVerdict {
    fn new(
        bounded: bool,
        reason: KernelReason,
        chain: Option<SignChainReport>,
        sturm: Option<SignChainReport>,
        p_ext0: IntPoly,
    ) -> Self {
        let max_minor_bits = chain
            .iter()
            .chain(sturm.iter())
            .map(|r| r.max_minor_bits)
            .max()
            .unwrap_or(1)
            .max(p_ext0.coeffs().iter().map(bitsize).max().unwrap_or(1));
        Self {
            bounded,
            reason,
            chain,
            sturm,
            p_ext0,
            max_minor_bits,
        }
    }
}

/// Decides the boundedness property of `p`.
pub fn has_boundedness_property(p: &IntPoly) -> Result<KernelVerdict> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)?;
    if d == 0 {
        return Ok(KernelVerdict::new(
            true,
            KernelReason::ConstantPolynomial,
            None,
            None,
            IntPoly::zero(),
        ));
    }

    let pair = decompose(p)?;
    let lead = pair.p0.leading().cloned().unwrap_or_else(BigInt::one);
    let lead_sign = sign_of(&lead);

    if pair.p1.is_zero() {
        // No chain to run: p_m = p0 and the first phase contributes nothing.
        let chain = SignChainReport::single(lead_sign, lead, ChainStatus::S1 { m: 0 });
        return sturm_phase(chain, pair.p0);
    }
    if pair.p1.degree() != Some(d - 1) {
        let chain = SignChainReport::single(lead_sign, lead, ChainStatus::NotStepOne);
        return Ok(KernelVerdict::new(
            false,
            KernelReason::InitialDegreeGap,
            Some(chain),
            None,
            IntPoly::zero(),
        ));
    }

    let matrix = hurwitz_matrix(&pair)?;
    let chain = chain_signs(&matrix);
    match chain.status {
        ChainStatus::S2 { k } => Ok(KernelVerdict::new(
            false,
            KernelReason::ChainDegreeDrop { k },
            Some(chain),
            None,
            IntPoly::zero(),
        )),
        _ if !chain.alternating() => Ok(KernelVerdict::new(
            false,
            KernelReason::ChainSignsNotAlternating,
            Some(chain),
            None,
            IntPoly::zero(),
        )),
        ChainStatus::AllNonzeroMinors => {
            let p_ext0 = extract_pm(&matrix, d);
            Ok(KernelVerdict::new(
                true,
                KernelReason::AllRootsStable,
                Some(chain),
                None,
                p_ext0,
            ))
        }
        ChainStatus::S1 { m } => {
            let p_ext0 = extract_pm(&matrix, m);
            sturm_phase(chain, p_ext0)
        }
        ChainStatus::NotStepOne => unreachable!("chain_signs never reports NotStepOne"),
    }
}

fn sturm_phase(chain: SignChainReport, p_ext0: IntPoly) -> Result<KernelVerdict> {
    let degree = p_ext0.degree().ok_or(Error::ZeroPolynomial)?;
    let pair = HurwitzPair::sturm(&p_ext0)?;
    let matrix = hurwitz_matrix(&pair)?;
    let sturm = chain_signs(&matrix);
    let (bounded, reason) = match sturm.status {
        ChainStatus::S2 { k } => (false, KernelReason::SturmDegreeDrop { k }),
        ChainStatus::S1 { m } => (false, KernelReason::SturmChainShort { m, degree }),
        _ if !sturm.alternating() => (false, KernelReason::SturmSignsNotAlternating),
        _ => (true, KernelReason::SimpleImaginaryRoots),
    };
    Ok(KernelVerdict::new(
        bounded,
        reason,
        Some(chain),
        Some(sturm),
        p_ext0,
    ))
}
