//! Partition counts with parts restricted to residue classes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use crate::coeff::Coefficient;
use crate::dissection::{quotient_series, PParams};
use crate::error::{usage, Result};
use crate::series::{Comparison, LaurentSeries};

/// Positive integers lying in a set of residue classes modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueClassSet {
    modulus: i64,
    classes: BTreeSet<i64>,
}

impl ResidueClassSet {
    pub fn new(modulus: i64, classes: impl IntoIterator<Item = i64>) -> Result<Self> {
        if modulus < 1 {
            return Err(usage(format!("modulus must be positive, got {modulus}")));
        }
        let classes = classes.into_iter().map(|c| c.rem_euclid(modulus)).collect();
        Ok(Self { modulus, classes })
    }

    /// `{s : s ≡ ±a (mod M)}` for each listed `a`.
    pub fn plus_minus(modulus: i64, reps: &[i64]) -> Result<Self> {
        Self::new(modulus, reps.iter().flat_map(|&a| [a, -a]))
    }

    /// `{s : s ≢ ±a (mod M)}` for every listed `a`.
    pub fn excluding_plus_minus(modulus: i64, reps: &[i64]) -> Result<Self> {
        let out = Self::plus_minus(modulus, reps)?;
        Self::new(modulus, (0..modulus).filter(|c| !out.classes.contains(c)))
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn classes(&self) -> &BTreeSet<i64> {
        &self.classes
    }

    pub fn contains(&self, s: i64) -> bool {
        s >= 1 && self.classes.contains(&s.rem_euclid(self.modulus))
    }

    /// Members `1 ≤ s ≤ n` in increasing order.
    pub fn parts_through(&self, n: i64) -> impl Iterator<Item = i64> + '_ {
        (1..=n).filter(move |&s| self.contains(s))
    }
}

impl fmt::Display for ResidueClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.classes.iter().map(i64::to_string).collect();
        write!(f, "{{{}}} mod {}", list.join(","), self.modulus)
    }
}

/// `∏_{s ∈ S} (1 - q^s)` through `q^n`: even-length minus odd-length
/// distinct-part partitions with parts in `S`.
pub fn signed_distinct_counts(set: &ResidueClassSet, n: i64) -> LaurentSeries<BigInt> {
    let top = n.max(0) as usize;
    let mut c = vec![BigInt::from(0); top + 1];
    c[0] = BigInt::from(1);
    for s in set.parts_through(n) {
        let s = s as usize;
        for i in (s..=top).rev() {
            let prev = c[i - s].clone();
            c[i].sub_assign_ref(&prev);
        }
    }
    LaurentSeries::from_coeffs(0, c).truncate(n)
}

/// Largest `n` accepted by [`distinct_counts_split`].
pub const SPLIT_LIMIT: i64 = 250;

/// `(even-length, odd-length)` counts of distinct-part partitions of `n`
/// with parts in `S`.
pub fn distinct_counts_split(set: &ResidueClassSet, n: i64) -> Result<(u128, u128)> {
    if n > SPLIT_LIMIT {
        return Err(usage(format!(
            "n = {n} exceeds {SPLIT_LIMIT}; use the signed counts for larger n"
        )));
    }
    if n < 0 {
        return Ok((0, 0));
    }
    let top = n as usize;
    let mut even = vec![0u128; top + 1];
    let mut odd = vec![0u128; top + 1];
    even[0] = 1;
    for s in set.parts_through(n) {
        let s = s as usize;
        for i in (s..=top).rev() {
            even[i] += odd[i - s];
            odd[i] += even[i - s];
        }
    }
    Ok((even[top], odd[top]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartKind {
    /// Parts may repeat: `1 / ∏ (1 - q^s)`.
    Unrestricted,
    /// Parts are distinct: `∏ (1 + q^s)`.
    Distinct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartFactor {
    pub kind: PartKind,
    pub set: ResidueClassSet,
}

/// Number of tuples of partitions, one per factor, of total size `k`, for each `k ≤ n`.
pub fn restricted_partition_product(factors: &[PartFactor], n: i64) -> LaurentSeries<BigInt> {
    let top = n.max(0) as usize;
    let mut c = vec![BigInt::from(0); top + 1];
    c[0] = BigInt::from(1);
    for f in factors {
        for s in f.set.parts_through(n) {
            let s = s as usize;
            match f.kind {
                PartKind::Unrestricted => {
                    for i in s..=top {
                        let prev = c[i - s].clone();
                        c[i].add_assign_ref(&prev);
                    }
                }
                PartKind::Distinct => {
                    for i in (s..=top).rev() {
                        let prev = c[i - s].clone();
                        c[i].add_assign_ref(&prev);
                    }
                }
            }
        }
    }
    LaurentSeries::from_coeffs(0, c).truncate(n)
}

/// Compares the product over `(q^p; q^p)∞²` with `∏_{s ∈ S} (1 - q^s)`.
pub fn verify_quotient_identity(
    params: &PParams,
    set: &ResidueClassSet,
    n: i64,
) -> Comparison {
    let quotient = quotient_series::<BigInt>(params, n);
    quotient.compare(&signed_distinct_counts(set, n))
}

/// Number of `(a, b)` with `a, b ≥ 0` and `ax + by = k`.
pub fn two_part_representations(x: i64, y: i64, k: i64) -> Result<u64> {
    if x < 1 || y < 1 {
        return Err(usage(format!("part sizes must be positive, got {x} and {y}")));
    }
    if k < 0 {
        return Ok(0);
    }
    Ok((0..=k / x).filter(|a| (k - a * x) % y == 0).count() as u64)
}
