//! Truncated Laurent series over exact integers.
//!
//! A [`LaurentSeries`] stores dense coefficients for the exponents
//! `lo..=valid_through`. Coefficients below `lo` are zero; coefficients above
//! `valid_through` are unknown. Every operation propagates the window through
//! which its result is provably exact, so a truncated product is never read
//! past the point where the convolution is complete.
//!
//! The stored `lo` is normalized to the first nonzero coefficient. A series
//! that is zero throughout its window stores a single zero at `valid_through`.

use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Coefficient;
use crate::error::{usage, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries<C> {
    lo: i64,
    coeffs: Vec<C>,
}

/// Outcome of comparing two series on the intersection of their windows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub equal: bool,
    /// Lowest exponent examined.
    pub from: i64,
    /// Highest exponent examined: the smaller of the two `valid_through`s.
    pub through: i64,
    pub first_mismatch: Option<i64>,
}

impl Comparison {
    pub fn window_len(&self) -> i64 {
        self.through - self.from + 1
    }
}

impl<C: Coefficient> LaurentSeries<C> {
    /// Builds a series from dense coefficients starting at exponent `lo`.
    ///
    /// Panics if `coeffs` is empty; the window must contain at least one exponent.
    pub fn from_coeffs(lo: i64, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series window must be nonempty");
        let mut s = Self { lo, coeffs };
        s.normalize();
        s
    }

    /// Builds a series valid through `valid_through` from sparse terms.
    /// Terms above the window are dropped; repeated exponents accumulate.
    pub fn from_terms<I>(valid_through: i64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
    {
        let terms: Vec<(i64, C)> = terms
            .into_iter()
            .filter(|(e, _)| *e <= valid_through)
            .collect();
        let lo = terms
            .iter()
            .map(|(e, _)| *e)
            .min()
            .unwrap_or(valid_through);
        let mut coeffs = vec![C::zero(); (valid_through - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize].add_assign_ref(&c);
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn zero(valid_through: i64) -> Self {
        Self {
            lo: valid_through,
            coeffs: vec![C::zero()],
        }
    }

    pub fn one(valid_through: i64) -> Self {
        Self::monomial(0, C::one(), valid_through)
    }

    /// `c q^e`, valid through `valid_through`.
    pub fn monomial(e: i64, c: C, valid_through: i64) -> Self {
        Self::from_terms(valid_through, [(e, c)])
    }

    fn normalize(&mut self) {
        let first = self.coeffs.iter().position(|c| !c.is_zero());
        match first {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.lo += k as i64;
            }
            None => {
                let vt = self.valid_through();
                self.coeffs.clear();
                self.coeffs.push(C::zero());
                self.lo = vt;
            }
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn valid_through(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `q^e`, or `None` if `e` lies above the validity window.
    pub fn try_coeff(&self, e: i64) -> Option<C> {
        if e > self.valid_through() {
            None
        } else if e < self.lo {
            Some(C::zero())
        } else {
            Some(self.coeffs[(e - self.lo) as usize].clone())
        }
    }

    /// Coefficient of `q^e`. Panics when `e` is past the validity window.
    pub fn coeff(&self, e: i64) -> C {
        self.try_coeff(e).unwrap_or_else(|| {
            panic!(
                "coefficient q^{e} requested past valid_through = {}",
                self.valid_through()
            )
        })
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exponent of the first nonzero coefficient within the window.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo)
        }
    }

    /// Forgets everything above exponent `n`.
    pub fn truncate(&self, n: i64) -> Self {
        if n >= self.valid_through() {
            return self.clone();
        }
        if n < self.lo {
            return Self::zero(n);
        }
        let keep = (n - self.lo + 1) as usize;
        Self::from_coeffs(self.lo, self.coeffs[..keep].to_vec())
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            lo: self.lo + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(self.valid_through());
        }
        let coeffs = self.coeffs.iter().map(|c| c.checked_scale(k)).collect();
        Self::from_coeffs(self.lo, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        let lo = self.lo.min(other.lo);
        let vt = self.valid_through().min(other.valid_through());
        if vt < lo {
            return Self::zero(vt);
        }
        let mut coeffs = vec![C::zero(); (vt - lo + 1) as usize];
        for (e, c) in self.terms().take_while(|(e, _)| *e <= vt) {
            coeffs[(e - lo) as usize].add_assign_ref(c);
        }
        for (e, c) in other.terms().take_while(|(e, _)| *e <= vt) {
            let slot = &mut coeffs[(e - lo) as usize];
            if subtract {
                slot.sub_assign_ref(c);
            } else {
                slot.add_assign_ref(c);
            }
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    /// Exact convolution, valid through
    /// `min(a.valid_through + b.lo, b.valid_through + a.lo)`.
    pub fn mul(&self, other: &Self) -> Self {
        let lo = self.lo + other.lo;
        let vt = (self.valid_through() + other.lo).min(other.valid_through() + self.lo);
        let len = (vt - lo + 1) as usize;
        let a: Vec<(usize, &C)> = self
            .terms()
            .map(|(e, c)| ((e - self.lo) as usize, c))
            .take_while(|(i, _)| *i < len)
            .collect();
        let b: Vec<(usize, &C)> = other
            .terms()
            .map(|(e, c)| ((e - other.lo) as usize, c))
            .take_while(|(j, _)| *j < len)
            .collect();
        let mut coeffs = vec![C::zero(); len];
        for &(i, x) in &a {
            for &(j, y) in &b {
                if i + j >= len {
                    break;
                }
                coeffs[i + j].add_product(x, y);
            }
        }
        Self::from_coeffs(lo, coeffs)
    }

    /// `self^k`; `self^0` is the constant 1 over a window as long as `self`'s.
    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one(self.valid_through() - self.lo);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal inverse of a power series with constant term `±1`.
    pub fn invert(&self) -> Result<Self> {
        if self.lo != 0 || !self.coeffs[0].abs().is_one() {
            return Err(Error::NotInvertible);
        }
        let lead = self.coeffs[0].clone();
        let len = self.coeffs.len();
        let tail: Vec<(usize, &C)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut out: Vec<C> = Vec::with_capacity(len);
        out.push(lead.clone());
        for n in 1..len {
            let mut acc = C::zero();
            for &(k, a) in &tail {
                if k > n {
                    break;
                }
                acc.add_product(a, &out[n - k]);
            }
            // b_n = -a_0^{-1} * acc, and a_0^{-1} = a_0 for a unit.
            let bn = if lead.is_one() { -acc } else { acc };
            out.push(bn);
        }
        Ok(Self::from_coeffs(0, out))
    }

    /// `self / other` where `other` has a unit leading coefficient.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let v = other.valuation().ok_or(Error::NotInvertible)?;
        let inv = other.shift(-v).invert()?.shift(-v);
        Ok(self.mul(&inv))
    }

    /// Terms whose exponent is congruent to `r` modulo `p`.
    pub fn residue_component(&self, p: i64, r: i64) -> Result<Self> {
        if p < 2 {
            return Err(usage(format!("modulus must be at least 2, got {p}")));
        }
        if !(0..p).contains(&r) {
            return Err(usage(format!("residue {r} out of range 0..{p}")));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if (self.lo + i as i64).rem_euclid(p) == r {
                    c.clone()
                } else {
                    C::zero()
                }
            })
            .collect();
        Ok(Self::from_coeffs(self.lo, coeffs))
    }

    /// Coefficient-wise comparison on the intersection of the two windows.
    pub fn compare(&self, other: &Self) -> Comparison {
        let from = self.lo.min(other.lo);
        let through = self.valid_through().min(other.valid_through());
        let first_mismatch = (from..=through).find(|&e| self.coeff(e) != other.coeff(e));
        Comparison {
            equal: first_mismatch.is_none(),
            from,
            through,
            first_mismatch,
        }
    }

    /// Coefficients at exponents `p*t + r` for every `t` in the window, as `(t, c)`.
    pub fn progression(&self, p: i64, r: i64) -> Vec<(i64, C)> {
        let vt = self.valid_through();
        let t_lo = (self.lo - r).div_euclid(p) + i64::from((self.lo - r).rem_euclid(p) != 0);
        let mut out = Vec::new();
        let mut t = t_lo;
        while p * t + r <= vt {
            out.push((t, self.coeff(p * t + r)));
            t += 1;
        }
        out
    }

    /// Line-oriented text form: a `# lo=.. valid_through=..` header followed by
    /// one `t,c` line per nonzero coefficient in ascending `t`.
    pub fn to_text(&self) -> String {
        let mut out = format!("# lo={} valid_through={}\n", self.lo, self.valid_through());
        for (e, c) in self.terms() {
            let _ = writeln!(out, "{e},{c}");
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| usage("empty series text"))?;
        let (lo, vt) = parse_header(header)?;
        if lo > vt {
            return Err(usage("header has lo > valid_through"));
        }
        let mut coeffs = vec![C::zero(); (vt - lo + 1) as usize];
        for (idx, line) in lines.enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let bad = || usage(format!("malformed term on line {}: {line:?}", idx + 2));
            let (t, c) = line.split_once(',').ok_or_else(bad)?;
            let t: i64 = t.trim().parse().map_err(|_| bad())?;
            let c: C = c.trim().parse().map_err(|_| bad())?;
            if t < lo || t > vt {
                return Err(usage(format!("exponent {t} outside header window")));
            }
            coeffs[(t - lo) as usize] = c;
        }
        Ok(Self::from_coeffs(lo, coeffs))
    }
}

fn parse_header(line: &str) -> Result<(i64, i64)> {
    let bad = || usage(format!("malformed series header: {line:?}"));
    let rest = line.strip_prefix("# ").ok_or_else(bad)?;
    let mut lo = None;
    let mut vt = None;
    for field in rest.split_whitespace() {
        match field.split_once('=') {
            Some(("lo", v)) => lo = Some(v.parse::<i64>().map_err(|_| bad())?),
            Some(("valid_through", v)) => vt = Some(v.parse::<i64>().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    Ok((lo.ok_or_else(bad)?, vt.ok_or_else(bad)?))
}

impl<C: Coefficient> Add for &LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn add(self, rhs: Self) -> LaurentSeries<C> {
        LaurentSeries::add(self, rhs)
    }
}

impl<C: Coefficient> Sub for &LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn sub(self, rhs: Self) -> LaurentSeries<C> {
        LaurentSeries::sub(self, rhs)
    }
}

impl<C: Coefficient> Mul for &LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn mul(self, rhs: Self) -> LaurentSeries<C> {
        LaurentSeries::mul(self, rhs)
    }
}

impl<C: Coefficient> Neg for &LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn neg(self) -> LaurentSeries<C> {
        LaurentSeries::neg(self)
    }
}
