//! Products of q-product factors raised to integer powers.
//!
//! Each factor is expanded only as deep as the others allow: if the rest of the
//! product cannot reach below exponent `L`, a factor contributes to the result
//! through `q^N` only via its own terms through `q^{N-L}`. This keeps windows
//! small when factors carry large negative exponents.

use std::fmt;

use num_bigint::BigInt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::products::{
    pochhammer, quintuple, triple, winquist_sum, PochhammerSpec, QuintupleSpec, Sign, TripleSpec,
    WinquistSpec,
};
use crate::series::LaurentSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Triple(TripleSpec),
    Quintuple(QuintupleSpec),
    Pochhammer(PochhammerSpec),
    Winquist(WinquistSpec),
}

impl Factor {
    /// No exponent below this can carry a nonzero coefficient.
    pub fn support_floor(&self) -> i64 {
        match self {
            Factor::Triple(t) => t.support_floor(),
            Factor::Quintuple(q) => q.support_floor(),
            Factor::Pochhammer(p) => p.support_floor(),
            Factor::Winquist(w) => w.support_floor(),
        }
    }

    pub fn expand<C: Coefficient>(&self, n: i64) -> LaurentSeries<C> {
        match self {
            Factor::Triple(t) => triple(t, n),
            Factor::Quintuple(q) => quintuple(q, n),
            Factor::Pochhammer(p) => pochhammer(p, n),
            Factor::Winquist(w) => winquist_sum(w, n),
        }
    }

    /// True when the factor contains `(1 - q^0)` or an equivalent zero.
    pub fn is_identically_zero(&self) -> bool {
        match *self {
            Factor::Triple(t) => triple_is_zero(&t),
            // Q(z, q) contains (z; q) and (q z²; q²).
            Factor::Quintuple(QuintupleSpec { x, y }) => {
                x.rem_euclid(y) == 0 || (2 * x + y).rem_euclid(2 * y) == 0
            }
            Factor::Pochhammer(p) => {
                p.sign == Sign::Plus && p.a <= 0 && p.a.rem_euclid(p.b) == 0
            }
            Factor::Winquist(w) => w.quotient_triples().iter().any(triple_is_zero),
        }
    }

    /// Exponent of the lowest nonzero term, or `None` for a zero factor.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_identically_zero() {
            return None;
        }
        let floor = self.support_floor();
        let mut span = 64;
        loop {
            if let Some(v) = self.expand::<BigInt>(floor + span).valuation() {
                return Some(v);
            }
            span *= 2;
        }
    }
}

fn triple_is_zero(t: &TripleSpec) -> bool {
    t.sign == Sign::Plus && t.x.rem_euclid(t.y) == 0
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Triple(t) => write!(f, "T({},{},{})", t.sign, t.x, t.y),
            Factor::Quintuple(q) => write!(f, "Q({},{})", q.x, q.y),
            Factor::Pochhammer(p) => {
                if p.sign == Sign::Plus {
                    write!(f, "P({},{})", p.a, p.b)
                } else {
                    write!(f, "P(-,{},{})", p.a, p.b)
                }
            }
            Factor::Winquist(w) => {
                // `-3` reads as -q^3, so negative exponents need the q^ form.
                let arg = |m: crate::products::Monomial| {
                    let sign = if m.sign == Sign::Minus { "-" } else { "" };
                    if m.exp < 0 {
                        format!("{sign}q^{}", m.exp)
                    } else {
                        format!("{sign}{}", m.exp)
                    }
                };
                write!(f, "W({},{},{})", arg(w.a), arg(w.b), w.y)
            }
        }
    }
}

/// `coeff · q^shift · ∏ factor^power`; negative powers denote division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub shift: i64,
    pub factors: Vec<(Factor, i32)>,
}

impl Term {
    pub fn new(coeff: i64, shift: i64, factors: Vec<(Factor, i32)>) -> Self {
        Self {
            coeff,
            shift,
            factors,
        }
    }

    /// Lower bound on the exponents present. Inverse factors need their
    /// valuation; a zero divisor makes the bound meaningless and yields `shift`.
    pub fn support_floor(&self) -> i64 {
        let mut floor = self.shift;
        for (f, k) in &self.factors {
            if *k >= 0 {
                floor += i64::from(*k) * f.support_floor();
            } else if let Some(v) = f.valuation() {
                floor += i64::from(*k) * v;
            }
        }
        floor
    }

    pub fn is_identically_zero(&self) -> bool {
        self.coeff == 0
            || self
                .factors
                .iter()
                .any(|(f, k)| *k > 0 && f.is_identically_zero())
    }

    pub fn expand<C: Coefficient>(&self, n: i64) -> Result<LaurentSeries<C>> {
        expand_product(self.coeff, self.shift, &self.factors, n)
    }
}

/// Evaluates `coeff · q^shift · ∏ f^k` exactly through `q^n`.
pub fn expand_product<C: Coefficient>(
    coeff: i64,
    shift: i64,
    factors: &[(Factor, i32)],
    n: i64,
) -> Result<LaurentSeries<C>> {
    if coeff == 0
        || factors
            .iter()
            .any(|(f, k)| *k > 0 && f.is_identically_zero())
    {
        return Ok(LaurentSeries::zero(n));
    }
    // Lower bound contributed by each factor power.
    let mut bounds = Vec::with_capacity(factors.len());
    for (f, k) in factors {
        let b = match k.cmp(&0) {
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => i64::from(*k) * f.support_floor(),
            std::cmp::Ordering::Less => {
                let v = f.valuation().ok_or(Error::NotInvertible)?;
                i64::from(*k) * v
            }
        };
        bounds.push(b);
    }
    let total: i64 = shift + bounds.iter().sum::<i64>();
    let mut acc: Option<LaurentSeries<C>> = None;
    for ((f, k), b) in factors.iter().zip(&bounds) {
        if *k == 0 {
            continue;
        }
        let target = n - (total - b);
        let part = if *k > 0 {
            let e = i64::from(*k);
            let floor = f.support_floor();
            // Never below the floor: a zero window there would understate the
            // validity of the power.
            let depth = (target - (e - 1) * floor).max(floor);
            f.expand::<C>(depth).pow(*k as u32)
        } else {
            let e = i64::from(-*k);
            let v = f.valuation().ok_or(Error::NotInvertible)?;
            let depth = (target + (e + 1) * v).max(v);
            let unit = f.expand::<C>(depth).shift(-v);
            unit.invert()?.pow(e as u32).shift(-e * v)
        };
        acc = Some(match acc {
            None => part,
            Some(a) => a.mul(&part),
        });
    }
    let body = acc.unwrap_or_else(|| LaurentSeries::one(n - shift));
    let out = body.shift(shift).scale(coeff);
    if out.valid_through() < n {
        return Err(Error::Internal(format!(
            "product evaluated only through {}, wanted {n}",
            out.valid_through()
        )));
    }
    Ok(out.truncate(n))
}
