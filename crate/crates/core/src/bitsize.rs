use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Bit size of an integer: the smallest `b` such that `-2^(b-1) + 1 <= a <= 2^(b-1) - 1`,
/// i.e. `ceil(log2(|a| + 1)) + 1`.
pub fn bitsize(a: &BigInt) -> u64 {
    // ceil(log2(x + 1)) is the bit length of x for x >= 0.
    a.abs().bits() + 1
}

/// Sum of the bit sizes of `values`.
pub fn total_bitsize<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> u64 {
    values.into_iter().map(bitsize).sum()
}

/// Largest value `a` with `bitsize(a) <= b` (for `b >= 1`).
pub fn bitsize_bound(b: u64) -> BigInt {
    assert!(b >= 1, "bit sizes start at 1");
    (BigInt::one() << (b - 1)) - 1
}
