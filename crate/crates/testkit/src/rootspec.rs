//! Polynomials and matrices with root placement known by construction.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use lti_bounded::{IntMatrix, IntPoly, RatMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::One;
use thiserror::Error;

use crate::companion::companion;

/// One irreducible real factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    /// `den * x - num`, root `num / den` (`den > 0`).
    Linear { num: i64, den: i64 },
    /// `scale^2 x^2 - 2 re scale x + re^2 + im_sq`, roots `(re +- i sqrt(im_sq)) / scale`
    /// (`im_sq > 0`, `scale > 0`).
    Quadratic { re: i64, im_sq: i64, scale: i64 },
    /// `x - 1`.
    UnitOne,
}

/// Where a root sits relative to the stability boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    Inside,
    Boundary,
    Outside,
}

/// Canonical identity of a root pair, used to merge repeated factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum RootKey {
    Real(Ratio<i64>),
    Pair { re: Ratio<i64>, im_sq: Ratio<i64> },
}

impl Factor {
    pub fn degree(self) -> usize {
        match self {
            Factor::Quadratic { .. } => 2,
            _ => 1,
        }
    }

    pub fn poly(self) -> IntPoly {
        match self {
            Factor::Linear { num, den } => IntPoly::from_coeffs([den, -num]),
            Factor::UnitOne => IntPoly::from_coeffs([1, -1]),
            Factor::Quadratic { re, im_sq, scale } => IntPoly::from_coeffs([
                scale * scale,
                -2 * re * scale,
                re * re + im_sq,
            ]),
        }
    }

    fn key(self) -> RootKey {
        match self {
            Factor::Linear { num, den } => RootKey::Real(Ratio::new(num, den)),
            Factor::UnitOne => RootKey::Real(Ratio::one()),
            Factor::Quadratic { re, im_sq, scale } => RootKey::Pair {
                re: Ratio::new(re, scale),
                im_sq: Ratio::new(im_sq, scale * scale),
            },
        }
    }

    /// Real part against zero.
    pub fn continuous_placement(self) -> Placement {
        let re = match self {
            Factor::Linear { num, .. } => num,
            Factor::UnitOne => 1,
            Factor::Quadratic { re, .. } => re,
        };
        match re.signum() {
            -1 => Placement::Inside,
            0 => Placement::Boundary,
            _ => Placement::Outside,
        }
    }

    /// Modulus against one.
    pub fn discrete_placement(self) -> Placement {
        let (modulus_sq, radius_sq) = match self {
            Factor::Linear { num, den } => (num * num, den * den),
            Factor::UnitOne => (1, 1),
            Factor::Quadratic { re, im_sq, scale } => (re * re + im_sq, scale * scale),
        };
        match modulus_sq.cmp(&radius_sq) {
            std::cmp::Ordering::Less => Placement::Inside,
            std::cmp::Ordering::Equal => Placement::Boundary,
            std::cmp::Ordering::Greater => Placement::Outside,
        }
    }

    fn validate(self) -> Result<Self, SpecError> {
        match self {
            Factor::Linear { den, .. } if den <= 0 => Err(SpecError::Invalid(
                "linear factor needs a positive denominator".into(),
            )),
            Factor::Quadratic { im_sq, scale, .. } if im_sq <= 0 || scale <= 0 => Err(
                SpecError::Invalid("quadratic factor needs im_sq > 0 and scale > 0".into()),
            ),
            f => Ok(f),
        }
    }

    /// Monic integer polynomial whose roots are `q` times the roots of this
    /// factor. `q` must clear the factor's denominator.
    fn scaled_monic(self, q: i64) -> IntPoly {
        match self {
            Factor::Linear { num, den } => IntPoly::from_coeffs([1, -(num * (q / den))]),
            Factor::UnitOne => IntPoly::from_coeffs([1, -q]),
            Factor::Quadratic { re, im_sq, scale } => {
                let t = q / scale;
                IntPoly::from_coeffs([1, -2 * t * re, t * t * (re * re + im_sq)])
            }
        }
    }

    fn denominator(self) -> i64 {
        match self {
            Factor::Linear { den, .. } => den,
            Factor::UnitOne => 1,
            Factor::Quadratic { scale, .. } => scale,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Linear { num, den } => write!(f, "lin({num}/{den})"),
            Factor::Quadratic { re, im_sq, scale } => write!(f, "quad({re},{im_sq},{scale})"),
            Factor::UnitOne => write!(f, "one"),
        }
    }
}

/// A product of factors with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootSpec {
    pub factors: Vec<(Factor, u32)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("cannot parse factor `{0}`")]
    Syntax(String),
    #[error("{0}")]
    Invalid(String),
}

impl RootSpec {
    pub fn new(factors: Vec<(Factor, u32)>) -> Self {
        Self { factors }
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, k)| f.degree() * *k as usize)
            .sum()
    }

    /// Product of all factors.
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::from_coeffs([1]), |acc, (f, k)| &acc * &f.poly().pow(*k))
    }

    /// Multiplicity of every distinct root, with a representative factor.
    fn multiplicities(&self) -> BTreeMap<RootKey, (Factor, u32)> {
        let mut out: BTreeMap<RootKey, (Factor, u32)> = BTreeMap::new();
        for &(f, k) in &self.factors {
            if k == 0 {
                continue;
            }
            out.entry(f.key()).or_insert((f, 0)).1 += k;
        }
        out
    }

    /// Merges factors sharing roots, summing multiplicities.
    pub fn canonical(&self) -> Self {
        Self::new(self.multiplicities().into_values().collect())
    }

    /// Multiplicity of 1 as a root.
    pub fn multiplicity_of_one(&self) -> u32 {
        self.multiplicities()
            .get(&RootKey::Real(Ratio::one()))
            .map_or(0, |(_, k)| *k)
    }

    /// Every root has negative real part, or zero real part and multiplicity one.
    pub fn continuous_truth(&self) -> bool {
        self.multiplicities()
            .values()
            .all(|&(f, k)| admissible(f.continuous_placement(), k))
    }

    /// Every root is strictly inside the unit disk, or on the circle and simple.
    pub fn discrete_truth(&self) -> bool {
        self.multiplicities()
            .values()
            .all(|&(f, k)| admissible(f.discrete_placement(), k))
    }

    /// Smallest `q > 0` such that `q` times every root is an algebraic integer
    /// of the scaled factors.
    pub fn common_denominator(&self) -> i64 {
        self.factors
            .iter()
            .fold(1i64, |acc, (f, _)| acc.lcm(&f.denominator()))
    }

    /// `B / q` whose minimal polynomial is `expand(canonical())` up to scaling:
    /// `B` is block diagonal with one companion block of `g^k` per distinct
    /// root, where `g` is the factor rescaled by `q`.
    pub fn matrix(&self) -> RatMatrix {
        let q = self.common_denominator();
        let blocks: Vec<IntMatrix> = self
            .canonical()
            .factors
            .iter()
            .map(|&(f, k)| companion(&f.scaled_monic(q).pow(k)).expect("monic block"))
            .collect();
        let b = IntMatrix::block_diagonal(&blocks).expect("nonempty spec");
        RatMatrix::new(b, BigInt::from(q)).expect("positive denominator")
    }
}

fn admissible(placement: Placement, multiplicity: u32) -> bool {
    match placement {
        Placement::Inside => true,
        Placement::Boundary => multiplicity <= 1,
        Placement::Outside => false,
    }
}

impl fmt::Display for RootSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(fac, k)| {
                if *k == 1 {
                    fac.to_string()
                } else {
                    format!("{fac}^{k}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn parse_ints(inner: &str, sep: char, n: usize, token: &str) -> Result<Vec<i64>, SpecError> {
    let vals: Result<Vec<i64>, _> = inner.split(sep).map(|s| s.trim().parse::<i64>()).collect();
    match vals {
        Ok(v) if v.len() == n => Ok(v),
        _ => Err(SpecError::Syntax(token.to_string())),
    }
}

impl FromStr for Factor {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, SpecError> {
        let syntax = || SpecError::Syntax(s.to_string());
        if s == "one" {
            return Ok(Factor::UnitOne);
        }
        let (name, rest) = s.split_once('(').ok_or_else(syntax)?;
        let inner = rest.strip_suffix(')').ok_or_else(syntax)?;
        let factor = match name {
            "lin" => {
                let v = parse_ints(inner, '/', 2, s)?;
                Factor::Linear {
                    num: v[0],
                    den: v[1],
                }
            }
            "quad" => {
                let v = parse_ints(inner, ',', 3, s)?;
                Factor::Quadratic {
                    re: v[0],
                    im_sq: v[1],
                    scale: v[2],
                }
            }
            _ => return Err(syntax()),
        };
        factor.validate()
    }
}

impl FromStr for RootSpec {
    type Err = SpecError;

    /// Whitespace-separated factors, each optionally followed by `^k`.
    fn from_str(s: &str) -> Result<Self, SpecError> {
        let mut factors = Vec::new();
        for token in s.split_whitespace() {
            let (base, mult) = match token.rsplit_once('^') {
                Some((b, k)) if !b.ends_with(')') && b != "one" => {
                    return Err(SpecError::Syntax(format!("{b}^{k}")))
                }
                Some((b, k)) => (
                    b,
                    k.parse::<u32>()
                        .map_err(|_| SpecError::Syntax(token.to_string()))?,
                ),
                None => (token, 1),
            };
            factors.push((base.parse()?, mult));
        }
        if factors.is_empty() {
            return Err(SpecError::Invalid("empty root spec".into()));
        }
        Ok(Self::new(factors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_examples() {
        let s: RootSpec = "quad(0,1,1)^2".parse().unwrap();
        assert_eq!(s.expand(), IntPoly::from_coeffs([1, 0, 2, 0, 1]));
        let s: RootSpec = "lin(-1/1) quad(0,1,1)".parse().unwrap();
        assert_eq!(s.expand(), IntPoly::from_coeffs([1, 1, 1, 1]));
        let s: RootSpec = "one^2".parse().unwrap();
        assert_eq!(s.expand(), IntPoly::from_coeffs([1, -2, 1]));
    }

    #[test]
    fn display_round_trips() {
        let text = "lin(-2/3)^2 quad(3,16,5) one^3";
        let s: RootSpec = text.parse().unwrap();
        assert_eq!(s.to_string(), text);
        assert!("lin(1/0)".parse::<RootSpec>().is_err());
        assert!("quad(1,0,1)".parse::<RootSpec>().is_err());
        assert!("foo(1)".parse::<RootSpec>().is_err());
        assert!("".parse::<RootSpec>().is_err());
    }

    #[test]
    fn truth_merges_repeated_roots() {
        let s: RootSpec = "lin(0/1) lin(0/2)".parse().unwrap();
        assert!(!s.continuous_truth());
        assert_eq!(s.canonical().factors.len(), 1);
        let s: RootSpec = "one lin(1/1)".parse().unwrap();
        assert_eq!(s.multiplicity_of_one(), 2);
        assert!(!s.discrete_truth());
    }

    #[test]
    fn placements() {
        let f: Factor = "quad(3,16,5)".parse().unwrap();
        assert_eq!(f.discrete_placement(), Placement::Boundary);
        assert_eq!(f.continuous_placement(), Placement::Outside);
        let f: Factor = "lin(-1/2)".parse().unwrap();
        assert_eq!(f.discrete_placement(), Placement::Inside);
        assert_eq!(f.continuous_placement(), Placement::Inside);
    }

    #[test]
    fn matrix_scales_rational_roots() {
        let s: RootSpec = "lin(1/2) quad(1,3,2)".parse().unwrap();
        let a = s.matrix();
        assert_eq!(a.denominator(), &BigInt::from(2));
        assert_eq!(a.numerator().rows(), 3);
        // Roots 1 and 1 +- i sqrt(3) for B.
        let b = a.numerator();
        assert!(IntPoly::from_coeffs([1, -1])
            .eval_matrix(b)
            .map(|m| !m.is_zero())
            .unwrap());
    }
}
