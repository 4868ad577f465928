//! Triple, quintuple, Pochhammer and Winquist products as truncated series.
//!
//! Notation: `⟨z; q⟩ = (z, q/z, q; q)∞` and
//! `Q(z, q) = ⟨z; q⟩ (q z², q / z²; q²)∞`. Every argument is a signed monomial
//! `±q^x` and every base is `q^y` with `y > 0`, so all products are formal
//! Laurent series in `q` with finitely many negative exponents.
//!
//! The primary constructors use theta-sum forms, which need only `O(√N)` terms.
//! Product forms are kept alongside as independent cross-checks.

use std::fmt;

use crate::arith::neg_one_pow;
use crate::coeff::Coefficient;
use crate::error::{usage, Result};
use crate::series::LaurentSeries;
use crate::term::{expand_product, Factor, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        Sign::from_value(self.value() * other.value())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `±q^e`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub sign: Sign,
    pub exp: i64,
}

impl Monomial {
    pub fn new(sign: Sign, exp: i64) -> Self {
        Self { sign, exp }
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.sign.times(other.sign), self.exp + other.exp)
    }

    pub fn over(self, other: Monomial) -> Monomial {
        Monomial::new(self.sign.times(other.sign), self.exp - other.exp)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign == Sign::Minus { "-" } else { "" };
        match self.exp {
            0 => write!(f, "{sign}1"),
            1 => write!(f, "{sign}q"),
            e => write!(f, "{sign}q^{e}"),
        }
    }
}

/// The triple product `⟨±q^x; q^y⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TripleSpec {
    pub sign: Sign,
    pub x: i64,
    pub y: i64,
}

impl TripleSpec {
    pub fn new(sign: Sign, x: i64, y: i64) -> Result<Self> {
        check_base(y)?;
        Ok(Self { sign, x, y })
    }

    /// The `(-z)^k q^{y k(k-1)/2}` summation's exponent is `(y k² + (2x - y) k) / 2`.
    fn quadratic(&self) -> Quadratic {
        Quadratic {
            a: self.y,
            b: 2 * self.x - self.y,
            c: 0,
        }
    }

    pub fn support_floor(&self) -> i64 {
        self.quadratic().min()
    }
}

/// The quintuple product `Q(q^x, q^y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuintupleSpec {
    pub x: i64,
    pub y: i64,
}

impl QuintupleSpec {
    pub fn new(x: i64, y: i64) -> Result<Self> {
        check_base(y)?;
        Ok(Self { x, y })
    }

    /// Exponents of the `+q^{k(3k-1)y/2} z^{3k}` and `-q^{k(3k+1)y/2} z^{3k+1}` terms.
    fn quadratics(&self) -> [Quadratic; 2] {
        let (x, y) = (self.x, self.y);
        [
            Quadratic {
                a: 3 * y,
                b: 6 * x - y,
                c: 0,
            },
            Quadratic {
                a: 3 * y,
                b: 6 * x + y,
                c: x,
            },
        ]
    }

    pub fn support_floor(&self) -> i64 {
        let [p, m] = self.quadratics();
        p.min().min(m.min())
    }
}

impl fmt::Display for QuintupleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = Monomial::new(Sign::Plus, self.x);
        write!(f, "Q({z},q^{})", self.y)
    }
}

/// `(±q^a; q^b)∞ = ∏_{k≥0} (1 ∓ q^{a+kb})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochhammerSpec {
    pub sign: Sign,
    pub a: i64,
    pub b: i64,
}

impl PochhammerSpec {
    pub fn new(sign: Sign, a: i64, b: i64) -> Result<Self> {
        check_base(b)?;
        Ok(Self { sign, a, b })
    }

    /// Sum of the negative factor exponents: the lowest exponent the product can reach.
    pub fn support_floor(&self) -> i64 {
        let mut e = self.a;
        let mut floor = 0;
        while e < 0 {
            floor += e;
            e += self.b;
        }
        floor
    }
}

/// `W(a, b; q^y) = ⟨a, b, ab, a/b; q^y⟩∞ / (q^y; q^y)∞²` at signed monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WinquistSpec {
    pub a: Monomial,
    pub b: Monomial,
    pub y: i64,
}

impl WinquistSpec {
    pub fn new(a: Monomial, b: Monomial, y: i64) -> Result<Self> {
        check_base(y)?;
        Ok(Self { a, b, y })
    }

    /// The four terms of Winquist's identity with `q → q^y`:
    /// `⟨a³, b³q; q³⟩ - b⟨a³, b³q²; q³⟩ - (a/b)⟨a³q, b³; q³⟩ + (a²/b)⟨a³q², b³; q³⟩`.
    pub fn sum_terms(&self) -> [Term; 4] {
        let (sa, a) = (self.a.sign, self.a.exp);
        let (sb, b) = (self.b.sign, self.b.exp);
        let y3 = 3 * self.y;
        let t = |sign, x| Factor::Triple(TripleSpec { sign, x, y: y3 });
        let term = |coeff: i64, shift, f1, f2| Term::new(coeff, shift, vec![(f1, 1), (f2, 1)]);
        // a³ = sa q^{3A} since sa³ = sa.
        [
            term(1, 0, t(sa, 3 * a), t(sb, 3 * b + self.y)),
            term(-sb.value(), b, t(sa, 3 * a), t(sb, 3 * b + 2 * self.y)),
            term(
                -(sa.value() * sb.value()),
                a - b,
                t(sa, 3 * a + self.y),
                t(sb, 3 * b),
            ),
            term(sb.value(), 2 * a - b, t(sa, 3 * a + 2 * self.y), t(sb, 3 * b)),
        ]
    }

    pub fn support_floor(&self) -> i64 {
        self.sum_terms()
            .iter()
            .map(Term::support_floor)
            .min()
            .expect("four terms")
    }

    /// `⟨a, b, ab, a/b; q^y⟩` as triple-product specs.
    pub fn quotient_triples(&self) -> [TripleSpec; 4] {
        let y = self.y;
        let mk = |m: Monomial| TripleSpec {
            sign: m.sign,
            x: m.exp,
            y,
        };
        [
            mk(self.a),
            mk(self.b),
            mk(self.a.times(self.b)),
            mk(self.a.over(self.b)),
        ]
    }
}

impl fmt::Display for WinquistSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W({},{},q^{})", self.a, self.b, self.y)
    }
}

fn check_base(y: i64) -> Result<()> {
    if y <= 0 {
        Err(usage(format!("base exponent must be positive, got {y}")))
    } else {
        Ok(())
    }
}

/// `(a k² + b k) / 2 + c` with `a > 0` and `a ≡ b (mod 2)`.
#[derive(Clone, Copy, Debug)]
struct Quadratic {
    a: i64,
    b: i64,
    c: i64,
}

impl Quadratic {
    fn at(&self, k: i64) -> i64 {
        (self.a * k * k + self.b * k) / 2 + self.c
    }

    /// `floor(-b / 2a)`; the minimum is attained at this `k` or the next one.
    fn vertex(&self) -> i64 {
        (-self.b).div_euclid(2 * self.a)
    }

    fn min(&self) -> i64 {
        let k = self.vertex();
        self.at(k).min(self.at(k + 1))
    }

    /// All `(k, exponent)` with exponent at most `n`.
    fn terms_through(&self, n: i64) -> Vec<(i64, i64)> {
        let k0 = self.vertex();
        let mut out = Vec::new();
        let mut k = k0;
        loop {
            let e = self.at(k);
            if e > n {
                break;
            }
            out.push((k, e));
            k -= 1;
        }
        let mut k = k0 + 1;
        loop {
            let e = self.at(k);
            if e > n {
                break;
            }
            out.push((k, e));
            k += 1;
        }
        out
    }
}

/// `⟨±q^x; q^y⟩` through `q^n` via `Σ_k (-z)^k q^{y k(k-1)/2}`.
pub fn triple<C: Coefficient>(spec: &TripleSpec, n: i64) -> LaurentSeries<C> {
    let terms = spec.quadratic().terms_through(n).into_iter().map(|(k, e)| {
        let c = match spec.sign {
            Sign::Plus => neg_one_pow(k),
            Sign::Minus => 1,
        };
        (e, C::from_int(c))
    });
    LaurentSeries::from_terms(n, terms)
}

/// `Q(q^x, q^y)` through `q^n` via `Σ_k q^{k(3k-1)y/2} z^{3k} (1 - z q^{ky})`.
pub fn quintuple<C: Coefficient>(spec: &QuintupleSpec, n: i64) -> LaurentSeries<C> {
    let [plus, minus] = spec.quadratics();
    let terms = plus
        .terms_through(n)
        .into_iter()
        .map(|(_, e)| (e, C::one()))
        .chain(
            minus
                .terms_through(n)
                .into_iter()
                .map(|(_, e)| (e, -C::one())),
        );
    LaurentSeries::from_terms(n, terms)
}

/// `(±q^a; q^b)∞` through `q^n`. A factor `(1 - q^0)` makes the product vanish.
pub fn pochhammer<C: Coefficient>(spec: &PochhammerSpec, n: i64) -> LaurentSeries<C> {
    pochhammer_product(std::slice::from_ref(spec), n)
}

/// `⟨±q^x; q^y⟩` as the product `(z, q/z, q; q)∞`. Independent of [`triple`].
pub fn triple_product_form<C: Coefficient>(spec: &TripleSpec, n: i64) -> LaurentSeries<C> {
    let (s, x, y) = (spec.sign, spec.x, spec.y);
    let factors = [
        PochhammerSpec { sign: s, a: x, b: y },
        PochhammerSpec { sign: s, a: y - x, b: y },
        PochhammerSpec { sign: Sign::Plus, a: y, b: y },
    ];
    pochhammer_product(&factors, n)
}

/// `Q(q^x, q^y) = (z, q/z, q; q)∞ (q z², q/z²; q²)∞`, all as Pochhammer products.
pub fn quintuple_product_form<C: Coefficient>(spec: &QuintupleSpec, n: i64) -> LaurentSeries<C> {
    let (x, y) = (spec.x, spec.y);
    let p = |a, b| PochhammerSpec {
        sign: Sign::Plus,
        a,
        b,
    };
    let factors = [p(x, y), p(y - x, y), p(y, y), p(y + 2 * x, 2 * y), p(y - 2 * x, 2 * y)];
    pochhammer_product(&factors, n)
}

/// `Q(q^x, q^y) = ⟨-q^{y+3x}; q^{3y}⟩ - q^x ⟨-q^{2y+3x}; q^{3y}⟩` via triple sums.
pub fn quintuple_triple_form<C: Coefficient>(spec: &QuintupleSpec, n: i64) -> LaurentSeries<C> {
    let (x, y) = (spec.x, spec.y);
    let first = TripleSpec {
        sign: Sign::Minus,
        x: y + 3 * x,
        y: 3 * y,
    };
    let second = TripleSpec {
        sign: Sign::Minus,
        x: 2 * y + 3 * x,
        y: 3 * y,
    };
    let lhs: LaurentSeries<C> = triple(&first, n);
    let rhs: LaurentSeries<C> = triple(&second, n - x).shift(x);
    lhs.sub(&rhs).truncate(n)
}

/// Product of Pochhammer symbols through `q^n`, one binomial factor at a time
/// in a single buffer.
fn pochhammer_product<C: Coefficient>(specs: &[PochhammerSpec], n: i64) -> LaurentSeries<C> {
    let floor: i64 = specs.iter().map(PochhammerSpec::support_floor).sum();
    let top = n.max(0);
    // No factor beyond this exponent reaches back into the window.
    let limit = top - floor;
    let mut factors: Vec<(i64, i64)> = Vec::new();
    for spec in specs {
        let s = spec.sign.value();
        let mut e = spec.a;
        while e <= limit {
            if e == 0 && s == 1 {
                return LaurentSeries::zero(n);
            }
            factors.push((e, s));
            e += spec.b;
        }
    }
    // 1 - s q^e = -s q^e (1 - s q^{-e}) turns every factor into a power series
    // factor; the monomials collect into ±q^floor. Intermediate coefficients
    // stay far smaller than with a Laurent polynomial buffer.
    let mut sign = 1;
    let mut buf = vec![C::zero(); (limit + 1) as usize];
    buf[0] = C::one();
    for &(e, s) in &factors {
        if e == 0 {
            // (1 + q^0)
            for c in buf.iter_mut() {
                *c = c.checked_scale(2);
            }
            continue;
        }
        if e < 0 {
            sign *= -s;
        }
        let shift = e.unsigned_abs() as usize;
        for i in (shift..buf.len()).rev() {
            let (head, tail) = buf.split_at_mut(i);
            if s == 1 {
                tail[0].sub_assign_ref(&head[i - shift]);
            } else {
                tail[0].add_assign_ref(&head[i - shift]);
            }
        }
    }
    if sign < 0 {
        for c in buf.iter_mut() {
            *c = c.checked_scale(-1);
        }
    }
    LaurentSeries::from_coeffs(floor, buf).truncate(n)
}

/// `W(a, b; q^y)` through `q^n` by Winquist's four-term identity.
pub fn winquist_sum<C: Coefficient>(spec: &WinquistSpec, n: i64) -> LaurentSeries<C> {
    spec.sum_terms()
        .iter()
        .map(|t| t.expand(n).expect("triple factors are always expandable"))
        .reduce(|acc, s| acc.add(&s))
        .expect("four terms")
}

/// `W(a, b; q^y)` through `q^n` as `⟨a, b, ab, a/b; q^y⟩ / (q^y; q^y)∞²`.
pub fn winquist_quotient<C: Coefficient>(spec: &WinquistSpec, n: i64) -> LaurentSeries<C> {
    let mut factors: Vec<(Factor, i32)> = spec
        .quotient_triples()
        .into_iter()
        .map(|t| (Factor::Triple(t), 1))
        .collect();
    let euler = PochhammerSpec {
        sign: Sign::Plus,
        a: spec.y,
        b: spec.y,
    };
    factors.push((Factor::Pochhammer(euler), -2));
    expand_product(1, 0, &factors, n).expect("(q^y; q^y) has unit constant term")
}

/// `Q(q^h, q^p) = sign · q^offset · Q(q^l, q^p)` with `0 ≤ l ≤ p/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuintupleReduction {
    pub sign: i64,
    pub offset: i64,
    pub l: i64,
    pub base: i64,
}

impl QuintupleReduction {
    /// `Q(1, q^p)` vanishes identically, and so does `Q(q^{p/2}, q^p)`.
    pub fn is_zero(&self) -> bool {
        self.l == 0 || 2 * self.l == self.base
    }
}

/// Normalizes `Q(q^h, q^p)`: write `h = kp + l` with `0 ≤ l < p`; shifting by
/// `k` periods contributes `q^{-3kl - k(3k-1)p/2}`, and reflecting `l > p/2` to
/// `p - l` contributes `-q^{p - 2l}`.
pub fn reduce_quintuple(h: i64, p: i64) -> Result<QuintupleReduction> {
    if p < 2 {
        return Err(usage(format!("quintuple base must be at least 2, got {p}")));
    }
    let k = h.div_euclid(p);
    let l = h.rem_euclid(p);
    let big_h = -3 * k * l - k * (3 * k - 1) * p / 2;
    let eps = if 2 * l <= p { 0 } else { p - 2 * l };
    Ok(QuintupleReduction {
        sign: if eps == 0 { 1 } else { -1 },
        offset: big_h + eps,
        l: l + eps,
        base: p,
    })
}
