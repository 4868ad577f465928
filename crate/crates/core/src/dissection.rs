//! p-dissections of `Q(q^{bm}, q^p) Q(q^{bn}, q^p)` for primes `p = m² + n²`.
//!
//! Everything here is symbolic until asked: summands are returned as a
//! prefactor exponent plus product specs, and are expanded only for checks.

use std::fmt;

use rayon::prelude::*;

use crate::arith::{exact_div, is_prime, mod_inv, modp, two_squares};
use crate::coeff::Coefficient;
use crate::error::{usage, Error, Result};
use crate::products::{
    reduce_quintuple, Monomial, PochhammerSpec, QuintupleSpec, Sign, TripleSpec, WinquistSpec,
};
use crate::series::{Comparison, LaurentSeries};
use crate::term::{expand_product, Factor, Term};

/// Which dissection formula applies, by `p mod 12` and `m, n mod 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// `p ≡ 1 (mod 12)`, `m ≡ 1 (mod 3)`.
    OneMod12MOne,
    /// `p ≡ 1 (mod 12)`, `m ≡ 2 (mod 3)`.
    OneMod12MTwo,
    /// `p ≡ 5 (mod 12)`, `m ≡ -n (mod 3)`.
    FiveMod12Opposite,
    /// `p ≡ 5 (mod 12)`, `m ≡ n (mod 3)`.
    FiveMod12Same,
}

impl Case {
    pub fn is_one_mod_12(self) -> bool {
        matches!(self, Case::OneMod12MOne | Case::OneMod12MTwo)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::OneMod12MOne => "p = 1 mod 12, m = 1 mod 3",
            Case::OneMod12MTwo => "p = 1 mod 12, m = 2 mod 3",
            Case::FiveMod12Opposite => "p = 5 mod 12, m = -n mod 3",
            Case::FiveMod12Same => "p = 5 mod 12, m = n mod 3",
        })
    }
}

/// The arithmetic frame of one dissection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PParams {
    pub p: i64,
    pub m: i64,
    pub n: i64,
    pub b: i64,
    /// `3p²`, the base of the intermediate triple products.
    pub y: i64,
    /// Least nonnegative solution of `3mμ ≡ 1 (mod p)`.
    pub mu: i64,
    /// `(3mμ - 1) / p`.
    pub s: i64,
    /// `(m + n) / 2 mod p`.
    pub w: i64,
    pub case: Case,
}

/// Validates `p`, `b` and the orientation `(m, n)` and derives the rest.
///
/// Without an orientation the default is the positive pair with `3 | n` when
/// `p ≡ 1 (mod 12)` and the pair with `m > n > 0` when `p ≡ 5 (mod 12)`.
pub fn derive_params(p: i64, b: i64, orientation: Option<(i64, i64)>) -> Result<PParams> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(usage(format!("p must be prime ≡ 1 (mod 4), got {p}")));
    }
    if b < 1 {
        return Err(usage(format!("b must be positive, got {b}")));
    }
    let one_mod_12 = p % 12 == 1;
    let (m, n) = match orientation {
        Some((m, n)) => {
            if m * m + n * n != p {
                return Err(Error::Orientation(format!(
                    "m² + n² = p is required, but {m}² + {n}² ≠ {p}"
                )));
            }
            if one_mod_12 && n % 3 != 0 {
                return Err(Error::Orientation(format!(
                    "3 | n is required when p ≡ 1 (mod 12), got n = {n}"
                )));
            }
            (m, n)
        }
        None => {
            let pairs = two_squares(p);
            let pick = if one_mod_12 {
                pairs.into_iter().find(|&(_, n)| n % 3 == 0)
            } else {
                pairs.into_iter().find(|&(m, n)| m > n)
            };
            pick.ok_or_else(|| Error::Internal(format!("no two-square decomposition of {p}")))?
        }
    };
    let mu = mod_inv(3 * m, p)
        .ok_or_else(|| Error::Internal(format!("3m = {} is not invertible mod {p}", 3 * m)))?;
    let s = exact_div(3 * m * mu - 1, p, "s")?;
    let w = modp((m + n) * mod_inv(2, p).expect("p is odd"), p);
    let case = match (one_mod_12, modp(m, 3), modp(m + n, 3)) {
        (true, 1, _) => Case::OneMod12MOne,
        (true, 2, _) => Case::OneMod12MTwo,
        (false, _, 0) => Case::FiveMod12Opposite,
        (false, _, _) => Case::FiveMod12Same,
        (true, _, _) => {
            return Err(Error::Orientation(format!(
                "m must not be divisible by 3 when p ≡ 1 (mod 12), got m = {m}"
            )))
        }
    };
    Ok(PParams {
        p,
        m,
        n,
        b,
        y: 3 * p * p,
        mu,
        s,
        w,
        case,
    })
}

impl PParams {
    pub fn p2(&self) -> i64 {
        self.p * self.p
    }

    /// `3bp + 3kmp - (m+n)p/2 + 3p²/2`, computed in doubled units.
    pub fn alpha(&self, k: i64) -> i64 {
        let (p, m, n, b) = (self.p, self.m, self.n, self.b);
        let twice = 6 * b * p + 6 * k * m * p - (m + n) * p + 3 * p * p;
        exact_div(twice, 2, "alpha").expect("m + n and p are odd")
    }

    /// `3knp + (m-n)p/2 + 3p²/2`, computed in doubled units.
    pub fn beta(&self, k: i64) -> i64 {
        let (p, m, n) = (self.p, self.m, self.n);
        let twice = 6 * k * n * p + (m - n) * p + 3 * p * p;
        exact_div(twice, 2, "beta").expect("m - n and p are odd")
    }

    /// `3bkm + k(3k-1)p/2`.
    pub fn gamma(&self, k: i64) -> i64 {
        3 * self.b * k * self.m + k * (3 * k - 1) / 2 * self.p
    }

    /// Prefactor exponent of the Winquist summand `k` (`p ≡ 5 mod 12` only).
    pub fn chi(&self, k: i64) -> Result<i64> {
        let (p, m, n, b, s) = (self.p, self.m, self.n, self.b, self.s);
        let num = match self.case {
            Case::FiveMod12Opposite => p * (1 - n * s) * (6 * k * n + p + m - n * (1 + p * s)),
            Case::FiveMod12Same => {
                p * (1 - m * s) * (6 * b + 6 * k * m + p - m * (1 + p * s) - n)
            }
            _ => return Err(usage("Winquist prefactors exist only for p ≡ 5 (mod 12)")),
        };
        Ok(self.gamma(k) + exact_div(num, 6, "chi")?)
    }

    /// `κ` with `3bκm ≡ r (mod p)`, `0 ≤ κ < p`.
    pub fn kappa(&self, r: i64) -> Result<i64> {
        if !(0..self.p).contains(&r) {
            return Err(usage(format!("residue {r} out of range 0..{}", self.p)));
        }
        let inv = mod_inv(3 * self.b * self.m, self.p).ok_or(Error::ResidueNeedsUnit)?;
        Ok(modp(r * inv, self.p))
    }

    /// Residue class `3bkm mod p` of summand `k`.
    pub fn residue_of(&self, k: i64) -> i64 {
        modp(3 * self.b * k * self.m, self.p)
    }

    /// The two quintuple factors `Q(q^{bm}, q^p)` and `Q(q^{bn}, q^p)`.
    pub fn product_factors(&self) -> [(Factor, i32); 2] {
        let q = |x| {
            (
                Factor::Quintuple(QuintupleSpec { x, y: self.p }),
                1,
            )
        };
        [q(self.b * self.m), q(self.b * self.n)]
    }

    /// The product together with `(q^p; q^p)∞^{-2}`.
    pub fn quotient_factors(&self) -> [(Factor, i32); 3] {
        let [a, b] = self.product_factors();
        let euler = PochhammerSpec {
            sign: Sign::Plus,
            a: self.p,
            b: self.p,
        };
        [a, b, (Factor::Pochhammer(euler), -2)]
    }
}

/// `Q(q^{bm}, q^p) Q(q^{bn}, q^p)` through `q^n`.
pub fn product_series<C: Coefficient>(params: &PParams, n: i64) -> LaurentSeries<C> {
    expand_product(1, 0, &params.product_factors(), n).expect("no division involved")
}

/// The product divided by `(q^p; q^p)∞²` through `q^n`.
pub fn quotient_series<C: Coefficient>(params: &PParams, n: i64) -> LaurentSeries<C> {
    expand_product(1, 0, &params.quotient_factors(), n).expect("(q^p; q^p) is a unit")
}

/// Per-residue data of the four-term component formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentData {
    pub r: i64,
    pub kappa: i64,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    /// Shift of the second term, independent of `κ`.
    pub xi_second: i64,
    /// Shift of the third term.
    pub xi_third: i64,
    /// Winquist prefactor at `κ`; `None` when `p ≡ 1 (mod 12)`.
    pub chi: Option<i64>,
}

pub fn component_data(params: &PParams, r: i64) -> Result<ComponentData> {
    let kappa = params.kappa(r)?;
    let (p, m, n, b, s) = (params.p, params.m, params.n, params.b, params.s);
    let p2 = params.p2();
    let common = exact_div((1 + p * s) * p2 * s, 6, "xi")?;
    let chi = if params.case.is_one_mod_12() {
        None
    } else {
        Some(params.chi(kappa)?)
    };
    Ok(ComponentData {
        r,
        kappa,
        alpha: params.alpha(kappa),
        beta: params.beta(kappa),
        gamma: params.gamma(kappa),
        xi_second: -b * n * p * s + common,
        xi_third: -b * m * p * s - kappa * p2 * s + common,
        chi,
    })
}

fn theta_pair(a: i64, b: i64, y: i64) -> Vec<(Factor, i32)> {
    let t = |x| Factor::Triple(TripleSpec {
        sign: Sign::Minus,
        x,
        y,
    });
    vec![(t(a), 1), (t(b), 1)]
}

/// The four triple-product terms whose sum is the `r`-component of the product.
pub fn rcomponent_terms(params: &PParams, r: i64) -> Result<[Term; 4]> {
    let d = component_data(params, r)?;
    let y = params.y;
    let ms = params.m * params.s * params.p2();
    let ns = params.n * params.s * params.p2();
    let (a, b, g) = (d.alpha, d.beta, d.gamma);
    Ok([
        Term::new(1, g, theta_pair(a, b, y)),
        Term::new(-1, g + d.xi_second, theta_pair(a - ns, b + ms, y)),
        Term::new(-1, g + d.xi_third, theta_pair(a - ms, b - ns, y)),
        Term::new(
            1,
            g + d.xi_second + d.xi_third,
            theta_pair(a - ms - ns, b + ms - ns, y),
        ),
    ])
}

/// The `r`-component of the product evaluated from its four-term formula.
pub fn rcomponent_formula<C: Coefficient>(
    params: &PParams,
    r: i64,
    n: i64,
) -> Result<LaurentSeries<C>> {
    sum_terms(&rcomponent_terms(params, r)?, n)
}

/// Sums expanded terms in parallel; the order of addition is fixed.
pub fn sum_terms<C: Coefficient>(terms: &[Term], n: i64) -> Result<LaurentSeries<C>> {
    let parts: Vec<LaurentSeries<C>> = terms
        .par_iter()
        .map(|t| t.expand(n))
        .collect::<Result<_>>()?;
    Ok(parts
        .into_iter()
        .fold(LaurentSeries::zero(n), |acc, s| acc.add(&s)))
}

/// The four expansions of a product of two triple products with base `q^{3p}`
/// into `p` products with base `q^{3p²}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    A,
    B,
    C,
    D,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::A, Variant::B, Variant::C, Variant::D];

    /// `(lhs first offset, lhs second offset)` in units of `p`.
    fn lhs_offsets(self) -> (i64, i64) {
        match self {
            Variant::A => (1, 1),
            Variant::B => (1, 2),
            Variant::C => (2, 1),
            Variant::D => (2, 2),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "a",
            Variant::B => "b",
            Variant::C => "c",
            Variant::D => "d",
        })
    }
}

/// `⟨-q^{3bm+ip}, -q^{3bn+jp}; q^{3p}⟩` for the variant's `(i, j)`.
pub fn liu_yang_lhs(params: &PParams, variant: Variant) -> Term {
    let (i, j) = variant.lhs_offsets();
    let (p, m, n, b) = (params.p, params.m, params.n, params.b);
    Term::new(1, 0, theta_pair(3 * b * m + i * p, 3 * b * n + j * p, 3 * p))
}

/// Summand `k` of the variant's right-hand side; any integer `k` is accepted.
pub fn liu_yang_summand(params: &PParams, variant: Variant, k: i64) -> Term {
    let (p, m, n) = (params.p, params.m, params.n);
    let (a, b, g) = (params.alpha(k), params.beta(k), params.gamma(k));
    let (da, db, dg) = match variant {
        Variant::A => (0, 0, 0),
        Variant::B => (n * p, -m * p, 0),
        Variant::C => (m * p, n * p, p * k),
        Variant::D => ((m + n) * p, -(m - n) * p, p * k),
    };
    Term::new(1, g + dg, theta_pair(a + da, b + db, params.y))
}

/// Both sides of one expansion through `q^n`.
pub fn liu_yang_expansions<C: Coefficient>(
    params: &PParams,
    variant: Variant,
    n: i64,
) -> Result<(LaurentSeries<C>, LaurentSeries<C>)> {
    let lhs = liu_yang_lhs(params, variant).expand(n)?;
    let terms: Vec<Term> = (0..params.p)
        .map(|k| liu_yang_summand(params, variant, k))
        .collect();
    Ok((lhs, sum_terms(&terms, n)?))
}

/// The factors of one dissection summand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummandBody {
    Quintuples(QuintupleSpec, QuintupleSpec),
    Winquist(WinquistSpec),
}

/// `q^prefactor` times a body whose exponents are all multiples of `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Summand {
    pub k: i64,
    pub prefactor: i64,
    pub body: SummandBody,
}

impl Summand {
    pub fn term(&self) -> Term {
        let factors = match self.body {
            SummandBody::Quintuples(a, b) => {
                vec![(Factor::Quintuple(a), 1), (Factor::Quintuple(b), 1)]
            }
            SummandBody::Winquist(w) => vec![(Factor::Winquist(w), 1)],
        };
        Term::new(1, self.prefactor, factors)
    }

    pub fn residue(&self, p: i64) -> i64 {
        modp(self.prefactor, p)
    }

    /// Rewrites the summand with every argument exponent in `[0, base/2]`.
    pub fn normalize(&self) -> Row {
        match self.body {
            SummandBody::Quintuples(a, b) => normalize_quintuples(self.prefactor, a, b),
            SummandBody::Winquist(w) => normalize_winquist(self.prefactor, w),
        }
    }
}

/// Summands for `p ≡ 1 (mod 12)`: `q^{γ_k}` times two quintuple products with base `q^{p²}`.
pub fn dissect_1mod12(params: &PParams) -> Result<Vec<Summand>> {
    let p2 = params.p2();
    let case = params.case;
    if !case.is_one_mod_12() {
        return Err(usage("this dissection needs p ≡ 1 (mod 12)"));
    }
    (0..params.p)
        .map(|k| {
            let (a, b) = (params.alpha(k), params.beta(k));
            let (x1, x2) = if case == Case::OneMod12MOne {
                (a - p2, 2 * p2 - b)
            } else {
                (2 * p2 - a, b - p2)
            };
            let f1 = QuintupleSpec::new(exact_div(x1, 3, "quintuple argument")?, p2)?;
            let f2 = QuintupleSpec::new(exact_div(x2, 3, "quintuple argument")?, p2)?;
            Ok(Summand {
                k,
                prefactor: params.gamma(k),
                body: SummandBody::Quintuples(f1, f2),
            })
        })
        .collect()
}

/// Summands for `p ≡ 5 (mod 12)`: `q^{χ_k}` times a Winquist product with base `q^{p²}`.
pub fn dissect_5mod12(params: &PParams) -> Result<Vec<Summand>> {
    let p2 = params.p2();
    let (m, n, s) = (params.m, params.n, params.s);
    (0..params.p)
        .map(|k| {
            let (a, b) = (params.alpha(k), params.beta(k));
            let (x1, x2) = match params.case {
                Case::FiveMod12Opposite => (a, b - n * s * p2),
                Case::FiveMod12Same => (b, a - m * s * p2),
                _ => return Err(usage("this dissection needs p ≡ 5 (mod 12)")),
            };
            let arg = |x| -> Result<Monomial> {
                Ok(Monomial::new(Sign::Minus, exact_div(x, 3, "Winquist argument")?))
            };
            Ok(Summand {
                k,
                prefactor: params.chi(k)?,
                body: SummandBody::Winquist(WinquistSpec::new(arg(x1)?, arg(x2)?, p2)?),
            })
        })
        .collect()
}

/// The dissection matching the parameters' case.
pub fn dissect(params: &PParams) -> Result<Vec<Summand>> {
    if params.case.is_one_mod_12() {
        dissect_1mod12(params)
    } else {
        dissect_5mod12(params)
    }
}

/// A normalized summand: `sign · q^exponent · ∏ factors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub sign: i64,
    pub exponent: i64,
    pub factors: Vec<Factor>,
    /// A factor such as `Q(1, q^y)` or `W(x, x; q^y)` vanishes identically.
    pub zero: bool,
}

impl Row {
    pub fn term(&self) -> Term {
        Term::new(
            self.sign,
            self.exponent,
            self.factors.iter().map(|f| (*f, 1)).collect(),
        )
    }

    pub fn residue(&self, p: i64) -> i64 {
        modp(self.exponent, p)
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign < 0 { "- " } else { "+ " })?;
        match self.exponent {
            0 => {}
            1 => f.write_str("q ")?,
            e => write!(f, "q^{e} ")?,
        }
        let mut i = 0;
        while i < self.factors.len() {
            let fac = &self.factors[i];
            let mut power = 1;
            while i + power < self.factors.len() && self.factors[i + power] == *fac {
                power += 1;
            }
            write_factor(f, fac)?;
            if power > 1 {
                write!(f, "^{power}")?;
            }
            i += power;
        }
        Ok(())
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, fac: &Factor) -> fmt::Result {
    match fac {
        Factor::Quintuple(q) => write!(f, "{q}"),
        Factor::Winquist(w) => write!(f, "{w}"),
        other => write!(f, "{other}"),
    }
}

fn normalize_quintuples(prefactor: i64, a: QuintupleSpec, b: QuintupleSpec) -> Row {
    let mut sign = 1;
    let mut exponent = prefactor;
    let mut specs = Vec::with_capacity(2);
    let mut zero = false;
    for q in [a, b] {
        let mut x = q.x;
        // A factor at a nonzero multiple of the period vanishes, so its sign is
        // conventional; it is reached through one reflection
        // Q(q^x) = -q^{y-2x} Q(q^{y-x}) before the period shift.
        if x != 0 && x % q.y == 0 {
            sign = -sign;
            exponent += q.y - 2 * x;
            x = q.y - x;
        }
        let red = reduce_quintuple(x, q.y).expect("base is p²");
        sign *= red.sign;
        exponent += red.offset;
        zero |= red.is_zero();
        specs.push(QuintupleSpec { x: red.l, y: q.y });
    }
    specs.sort();
    Row {
        sign,
        exponent,
        factors: specs.into_iter().map(Factor::Quintuple).collect(),
        zero,
    }
}

/// Monomial prefactor accumulated while rewriting a Winquist product.
struct Prefactor {
    sign: i64,
    exponent: i64,
}

impl Prefactor {
    /// Moves the first argument into `[0, y)` via `W(aq, b) = -a⁻³ W(a, b)`.
    fn shift_first(&mut self, a: &mut Monomial, y: i64) {
        while a.exp >= y {
            a.exp -= y;
            self.sign *= -a.sign.value();
            self.exponent -= 3 * a.exp;
        }
        while a.exp < 0 {
            self.sign *= -a.sign.value();
            self.exponent += 3 * a.exp;
            a.exp += y;
        }
    }

    /// Moves the second argument into `[0, y)` via `W(a, bq) = -b⁻³q⁻¹ W(a, b)`.
    fn shift_second(&mut self, b: &mut Monomial, y: i64) {
        while b.exp >= y {
            b.exp -= y;
            self.sign *= -b.sign.value();
            self.exponent -= 3 * b.exp + y;
        }
        while b.exp < 0 {
            self.sign *= -b.sign.value();
            self.exponent += 3 * b.exp + y;
            b.exp += y;
        }
    }

    /// `W(a, b) = -(a/b) W(b, a)` when the first argument is the smaller one.
    fn order(&mut self, a: &mut Monomial, b: &mut Monomial) {
        if a.exp < b.exp {
            self.sign *= -(a.sign.value() * b.sign.value());
            self.exponent += a.exp - b.exp;
            std::mem::swap(a, b);
        }
    }
}

/// Brings `W(a, b; q^y)` to `0 ≤ B ≤ A ≤ y/2`: both arguments are moved into
/// one period, ordered, folded into the half period with `W(q/a, b) = W(a, b)`
/// and `W(a, q/b) = b²q⁻¹ W(a, b)`, and ordered again. When the result is
/// `W(x, x)` the row vanishes and its sign reflects this order of steps.
fn normalize_winquist(prefactor: i64, w: WinquistSpec) -> Row {
    let y = w.y;
    let (mut a, mut b) = (w.a, w.b);
    let mut pre = Prefactor {
        sign: 1,
        exponent: prefactor,
    };
    pre.shift_first(&mut a, y);
    pre.shift_second(&mut b, y);
    pre.order(&mut a, &mut b);
    if 2 * a.exp > y {
        a.exp = y - a.exp;
    }
    if 2 * b.exp > y {
        pre.exponent += y - 2 * b.exp;
        b.exp = y - b.exp;
    }
    pre.order(&mut a, &mut b);
    let factor = Factor::Winquist(WinquistSpec { a, b, y });
    Row {
        sign: pre.sign,
        exponent: pre.exponent,
        factors: vec![factor],
        zero: factor.is_identically_zero(),
    }
}

/// Outcome of checking a dissection against the product it claims to equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DissectionCheck {
    /// Sum of all summands against the product.
    pub full_sum: Comparison,
    /// Summands whose support leaves their residue class `3bkm mod p`.
    pub misplaced: Vec<i64>,
    /// Rows whose normalized form differs from the raw summand.
    pub normalization_mismatches: Vec<i64>,
}

impl DissectionCheck {
    pub fn passed(&self) -> bool {
        self.full_sum.equal && self.misplaced.is_empty() && self.normalization_mismatches.is_empty()
    }
}

/// Expands every summand and its normalized row through `q^n` and compares.
pub fn verify_dissection<C: Coefficient>(
    params: &PParams,
    summands: &[Summand],
    n: i64,
) -> Result<DissectionCheck> {
    let expanded: Vec<(LaurentSeries<C>, LaurentSeries<C>)> = summands
        .par_iter()
        .map(|s| Ok((s.term().expand(n)?, s.normalize().term().expand(n)?)))
        .collect::<Result<_>>()?;
    let mut total = LaurentSeries::<C>::zero(n);
    let mut misplaced = Vec::new();
    let mut normalization_mismatches = Vec::new();
    for (s, (raw, row)) in summands.iter().zip(&expanded) {
        total = total.add(raw);
        let r = params.residue_of(s.k);
        if s.residue(params.p) != r || raw.terms().any(|(e, _)| modp(e, params.p) != r) {
            misplaced.push(s.k);
        }
        if !raw.compare(row).equal {
            normalization_mismatches.push(s.k);
        }
    }
    let product = product_series::<C>(params, n);
    Ok(DissectionCheck {
        full_sum: total.compare(&product),
        misplaced,
        normalization_mismatches,
    })
}

/// Normalized rows ordered by residue class, as they are usually displayed.
pub fn rows_by_residue(params: &PParams, summands: &[Summand]) -> Vec<(i64, Row)> {
    let mut rows: Vec<(i64, Row)> = summands
        .iter()
        .map(|s| (s.residue(params.p), s.normalize()))
        .collect();
    rows.sort_by_key(|(r, _)| *r);
    rows
}
