//! Vanishing, parity and eventual-sign behaviour of residue classes.
//!
//! Predictions come from closed formulas in the dissection parameters;
//! observations come from the coefficients themselves. The two are kept apart
//! so that every claim can be checked against data.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::arith::{exact_div, is_prime, mod_inv, modp};
use crate::coeff::Coefficient;
use crate::dissection::{dissect, Case, PParams};
use crate::error::{usage, Error, Result};
use crate::products::{reduce_quintuple, PochhammerSpec, QuintupleSpec, Sign};
use crate::series::LaurentSeries;
use crate::term::{expand_product, Factor};

/// Residues `r` for which the `r`-component of the product vanishes identically.
pub fn predicted_zero_residues(params: &PParams) -> BTreeSet<i64> {
    let (p, b, w) = (params.p, params.b, params.w);
    if params.case.is_one_mod_12() {
        [b * w, b * (w - 3 * b)].into_iter().map(|r| modp(r, p)).collect()
    } else {
        let m_inv = mod_inv(params.m, p).expect("p does not divide m");
        let n_inv = mod_inv(params.n, p).expect("p does not divide n");
        [m_inv, n_inv]
            .into_iter()
            .map(|inv| modp(modp(b * w, p) * modp(1 - 3 * b * inv, p), p))
            .collect()
    }
}

/// Residues whose coefficients are all even (`p ≡ 5 mod 12` only).
pub fn predicted_even_residues(params: &PParams) -> Result<BTreeSet<i64>> {
    if params.case.is_one_mod_12() {
        return Err(usage("parity residues are predicted only for p ≡ 5 (mod 12)"));
    }
    let (p, b, w) = (params.p, params.b, params.w);
    Ok([b * w, b * (w - 3 * b)].into_iter().map(|r| modp(r, p)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PredictedSign {
    Positive,
    Negative,
    Zero,
}

impl PredictedSign {
    fn from_parity(negative: bool) -> Self {
        if negative {
            PredictedSign::Negative
        } else {
            PredictedSign::Positive
        }
    }

    pub fn value(self) -> i64 {
        match self {
            PredictedSign::Positive => 1,
            PredictedSign::Negative => -1,
            PredictedSign::Zero => 0,
        }
    }
}

impl fmt::Display for PredictedSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PredictedSign::Positive => "+",
            PredictedSign::Negative => "-",
            PredictedSign::Zero => "0",
        })
    }
}

/// Eventual sign of each residue class of the product over `(q^p; q^p)∞²`,
/// indexed by `r = 0..p`.
pub fn predicted_signs(params: &PParams) -> Result<Vec<PredictedSign>> {
    let (p, p2) = (params.p, params.p2());
    let (m, n, s) = (params.m, params.n, params.s);
    (0..p)
        .map(|r| {
            let k = params.kappa(r)?;
            let (a, b) = (params.alpha(k), params.beta(k));
            let over = |x: i64| exact_div(x, 3 * p, "sign exponent");
            let (h1, h2) = match params.case {
                Case::OneMod12MOne => (over(a - p2)?, over(2 * p2 - b)?),
                Case::OneMod12MTwo => (over(2 * p2 - a)?, over(b - p2)?),
                Case::FiveMod12Opposite => {
                    (over(a + b - n * s * p2)?, over(a - b + n * s * p2)?)
                }
                Case::FiveMod12Same => (over(b + a - m * s * p2)?, over(b - a + m * s * p2)?),
            };
            if modp(h1, p) == 0 || modp(h2, p) == 0 {
                return Ok(PredictedSign::Zero);
            }
            let negative = if params.case.is_one_mod_12() {
                let (e1, e2) = (reduce_quintuple(h1, p)?, reduce_quintuple(h2, p)?);
                e1.sign * e2.sign < 0
            } else {
                (h1.div_euclid(p) + h2.div_euclid(p)).rem_euclid(2) == 1
            };
            Ok(PredictedSign::from_parity(negative))
        })
        .collect()
}

/// What the coefficients of one residue class were seen to do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A dissection row for this class carries an identically zero factor.
    IdenticallyZeroProved,
    /// Every computed coefficient is zero.
    ZeroObserved,
    /// Every computed coefficient is even and at least one is nonzero.
    AllEven,
    /// All coefficients at indices `t > onset` have this strict sign.
    SignPattern { sign: i64, onset: i64 },
    Mixed,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::IdenticallyZeroProved => "zero-proved",
            Verdict::ZeroObserved => "zero-observed",
            Verdict::AllEven => "all-even",
            Verdict::SignPattern { .. } => "sign",
            Verdict::Mixed => "mixed",
        }
    }
}

/// Per-residue observation. Indices `t` refer to exponents `pt + r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueReport<C = BigInt> {
    pub r: i64,
    pub verdict: Verdict,
    /// Highest `t` whose coefficient was examined.
    pub depth: i64,
    /// First nonzero coefficient `(t, c)` of the class, if any.
    pub first_nonzero: Option<(i64, C)>,
}

/// Shortest tail accepted as evidence of an eventual sign.
pub const MIN_SIGN_TAIL: usize = 20;

fn check_depth<C: Coefficient>(series: &LaurentSeries<C>, p: i64, factor: i64) -> Result<()> {
    if p < 2 {
        return Err(usage(format!("modulus must be at least 2, got {p}")));
    }
    let required = factor * p;
    if series.valid_through() < required {
        return Err(Error::InsufficientDepth {
            valid_through: series.valid_through(),
            required,
        });
    }
    Ok(())
}

fn class_depth(vt: i64, p: i64, r: i64) -> i64 {
    (vt - r).div_euclid(p)
}

/// Zero / eventual-sign / mixed verdict for each residue class.
pub fn observe_residue_behavior<C: Coefficient>(
    series: &LaurentSeries<C>,
    p: i64,
) -> Result<Vec<ResidueReport<C>>> {
    check_depth(series, p, 5)?;
    let vt = series.valid_through();
    Ok((0..p)
        .into_par_iter()
        .map(|r| {
            let values = series.progression(p, r);
            let first_nonzero = values.iter().find(|(_, c)| !c.is_zero()).cloned();
            let verdict = if first_nonzero.is_none() {
                Verdict::ZeroObserved
            } else {
                sign_verdict(&values)
            };
            ResidueReport {
                r,
                verdict,
                depth: class_depth(vt, p, r),
                first_nonzero,
            }
        })
        .collect())
}

/// Strict sign of the longest tail; the onset is the index just before it.
fn sign_verdict<C: Coefficient>(values: &[(i64, C)]) -> Verdict {
    let positive = values.last().expect("nonempty class").1.is_positive();
    let off = values
        .iter()
        .rposition(|(_, c)| c.is_zero() || c.is_positive() != positive);
    let tail = values.len() - off.map_or(0, |i| i + 1);
    if tail < MIN_SIGN_TAIL {
        return Verdict::Mixed;
    }
    let onset = match off {
        Some(i) => values[i].0,
        None => values[0].0 - 1,
    };
    Verdict::SignPattern {
        sign: if positive { 1 } else { -1 },
        onset,
    }
}

/// Zero / all-even / mixed verdict for each residue class.
pub fn parity_scan<C: Coefficient>(
    series: &LaurentSeries<C>,
    p: i64,
) -> Result<Vec<ResidueReport<C>>> {
    check_depth(series, p, 5)?;
    let vt = series.valid_through();
    let two = C::from_int(2);
    Ok((0..p)
        .into_par_iter()
        .map(|r| {
            let values = series.progression(p, r);
            let first_nonzero = values.iter().find(|(_, c)| !c.is_zero()).cloned();
            let verdict = if first_nonzero.is_none() {
                Verdict::ZeroObserved
            } else if values.iter().all(|(_, c)| c.is_multiple_of(&two)) {
                Verdict::AllEven
            } else {
                Verdict::Mixed
            };
            ResidueReport {
                r,
                verdict,
                depth: class_depth(vt, p, r),
                first_nonzero,
            }
        })
        .collect())
}

/// Residue classes whose dissection row carries an identically zero factor.
pub fn certified_zero_residues(params: &PParams) -> Result<BTreeSet<i64>> {
    Ok(dissect(params)?
        .iter()
        .filter(|s| s.normalize().zero)
        .map(|s| s.residue(params.p))
        .collect())
}

/// Classes with no nonzero coefficient through the window.
pub fn observed_zero_residues<C: Coefficient>(series: &LaurentSeries<C>, p: i64) -> BTreeSet<i64> {
    (0..p)
        .filter(|&r| series.progression(p, r).iter().all(|(_, c)| c.is_zero()))
        .collect()
}

/// A pair of consecutive part sizes guaranteeing positivity beyond `bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub pair: (i64, i64),
    /// `x(x+1) - x - (x+1)`: every larger integer is a sum of `x`s and `(x+1)`s.
    pub bound: i64,
}

/// Finds consecutive `x, x+1` in `1..p` avoiding `ℓ, 2ℓ, p-ℓ, p-2ℓ`.
pub fn positivity_certificate(l: i64, p: i64) -> Result<Certificate> {
    if p <= 10 || !is_prime(p) {
        return Err(usage(format!("positivity needs a prime p > 10, got {p}")));
    }
    if l <= 0 || 2 * l >= p {
        return Err(usage(format!("need 0 < l < p/2, got l = {l}, p = {p}")));
    }
    let excluded = [l, 2 * l, p - l, p - 2 * l];
    let allowed = |x: i64| !excluded.contains(&x);
    let x = (1..p - 1)
        .find(|&x| allowed(x) && allowed(x + 1))
        .ok_or_else(|| Error::Internal(format!("no consecutive pair for l = {l}, p = {p}")))?;
    Ok(Certificate {
        pair: (x, x + 1),
        bound: x * (x + 1) - x - (x + 1),
    })
}

/// `Q(q^ℓ, q^p) / (q; q)∞` checked against its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityCheck {
    pub certificate: Certificate,
    /// First index above the bound with a coefficient that is not positive.
    pub first_violation: Option<i64>,
    /// First index anywhere with a negative coefficient.
    pub first_negative: Option<i64>,
    pub depth: i64,
}

impl PositivityCheck {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none() && self.first_negative.is_none()
    }
}

pub fn check_positivity(l: i64, p: i64, n: i64) -> Result<PositivityCheck> {
    let certificate = positivity_certificate(l, p)?;
    let euler = PochhammerSpec {
        sign: Sign::Plus,
        a: 1,
        b: 1,
    };
    let factors = [
        (Factor::Quintuple(QuintupleSpec::new(l, p)?), 1),
        (Factor::Pochhammer(euler), -1),
    ];
    let s: LaurentSeries<BigInt> = expand_product(1, 0, &factors, n)?;
    let first_violation = (certificate.bound + 1..=n).find(|&e| !s.coeff(e).is_positive());
    let first_negative = (0..=n).find(|&e| s.coeff(e).is_negative());
    Ok(PositivityCheck {
        certificate,
        first_violation,
        first_negative,
        depth: n,
    })
}

/// Residue classes with no nonzero coefficient in a product of quintuple
/// products sharing one modulus. Empirical: nothing here is proved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntResult {
    pub modulus: i64,
    pub zero_residues: BTreeSet<i64>,
    pub depth: i64,
}

impl fmt::Display for HuntResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.zero_residues.iter().map(i64::to_string).collect();
        write!(
            f,
            "empirical zeros mod {}: {{{}}} (depth {})",
            self.modulus,
            list.join(","),
            self.depth
        )
    }
}

pub fn hunt(specs: &[QuintupleSpec], n: i64) -> Result<HuntResult> {
    let first = specs
        .first()
        .ok_or_else(|| usage("hunt needs at least one quintuple product"))?;
    let p = first.y;
    if let Some(other) = specs.iter().find(|s| s.y != p) {
        return Err(usage(format!(
            "all factors must share one modulus: found q^{p} and q^{}",
            other.y
        )));
    }
    if p < 2 {
        return Err(usage(format!("modulus must be at least 2, got {p}")));
    }
    if n < 20 * p {
        return Err(Error::InsufficientDepth {
            valid_through: n,
            required: 20 * p,
        });
    }
    let factors: Vec<(Factor, i32)> = specs.iter().map(|s| (Factor::Quintuple(*s), 1)).collect();
    let series: LaurentSeries<BigInt> = expand_product(1, 0, &factors, n)?;
    Ok(HuntResult {
        modulus: p,
        zero_residues: observed_zero_residues(&series, p),
        depth: n,
    })
}
