//! Slow reference computations, written without the library's theta sums,
//! shift lemmas or generating-function DPs.

#![allow(dead_code)]

use num_bigint::BigInt;
use qdissect_core::Series;

/// `∏ (1 + c q^e)` over `(e, c)` through `q^n`, with `c = ±1`.
///
/// Factors with `e < 0` form a finite polynomial and are applied exactly
/// first; every other factor only reaches down, so truncating at `n` is safe.
pub fn binomial_product(factors: &[(i64, i64)], n: i64) -> Series {
    if factors.iter().any(|&(e, c)| e == 0 && c == -1) {
        return Series::zero(n);
    }
    let lo: i64 = factors.iter().map(|&(e, _)| e.min(0)).sum();
    let hi = n.max(lo);
    let len = (hi - lo + 1) as usize;
    let mut c = vec![BigInt::from(0); len];
    c[(-lo) as usize] = BigInt::from(1);
    let mut neg: Vec<_> = factors.iter().filter(|f| f.0 < 0).collect();
    neg.sort();
    for &&(e, s) in &neg {
        // Multiplying by (1 + s q^e), e < 0: index i takes i - e > i.
        for i in 0..len {
            let src = i as i64 - e;
            if src < len as i64 {
                let v = c[src as usize].clone() * s;
                c[i] += v;
            }
        }
    }
    for &(e, s) in factors.iter().filter(|f| f.0 >= 0) {
        if e == 0 {
            for v in c.iter_mut() {
                *v *= 1 + s;
            }
            continue;
        }
        for i in (e as usize..len).rev() {
            let v = c[i - e as usize].clone() * s;
            c[i] += v;
        }
    }
    Series::from_coeffs(lo, c).truncate(n)
}

/// Members `a, a + d, a + 2d, …` that can affect coefficients through `q^n`.
fn progression(a: i64, d: i64, limit: i64) -> impl Iterator<Item = i64> {
    (0..).map(move |k| a + k * d).take_while(move |&e| e <= limit)
}

/// Binomial factors of `∏_{k≥0} (1 + c q^{a+kd})` for several progressions.
fn families(fams: &[(i64, i64, i64)], n: i64) -> Vec<(i64, i64)> {
    // The lowest reachable exponent bounds how far up a factor can matter.
    let lo: i64 = fams
        .iter()
        .map(|&(a, d, _)| progression(a, d, -1).sum::<i64>())
        .sum();
    let limit = n - lo;
    fams.iter()
        .flat_map(|&(a, d, c)| progression(a, d, limit).map(move |e| (e, c)))
        .collect()
}

/// `⟨s q^x; q^y⟩∞ = (z, q/z, q; q)∞` with `z = s q^x`, `q → q^y`.
pub fn triple_by_product(s: i64, x: i64, y: i64, n: i64) -> Series {
    let f = families(&[(x, y, -s), (y - x, y, -s), (y, y, -1)], n);
    binomial_product(&f, n)
}

/// `Q(q^x, q^y) = (z, q/z, q; q)∞ (q z², q/z²; q²)∞` with `z = q^x`, `q → q^y`.
pub fn quintuple_by_product(x: i64, y: i64, n: i64) -> Series {
    let f = families(
        &[
            (x, y, -1),
            (y - x, y, -1),
            (y, y, -1),
            (y + 2 * x, 2 * y, -1),
            (y - 2 * x, 2 * y, -1),
        ],
        n,
    );
    binomial_product(&f, n)
}

/// `(q; q)∞` from Euler's pentagonal number theorem: `(-1)^j` at `j(3j-1)/2`.
pub fn euler_by_pentagonal(n: i64) -> Series {
    let mut c = vec![BigInt::from(0); (n + 1) as usize];
    let mut j: i64 = 0;
    while j * (3 * j - 1) / 2 <= n {
        for k in [j, -j] {
            let e = k * (3 * k - 1) / 2;
            if e <= n {
                c[e as usize] = BigInt::from(if j % 2 == 0 { 1 } else { -1 });
            }
        }
        j += 1;
    }
    Series::from_coeffs(0, c)
}

/// Partition numbers via the pentagonal recurrence.
pub fn partitions_by_recurrence(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(0); n + 1];
    p[0] = BigInt::from(1);
    for i in 1..=n {
        let mut acc = BigInt::from(0);
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += &p[i - g1] * sign;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                acc += &p[i - g2] * sign;
            }
        }
        p[i] = acc;
    }
    p
}

/// Partition numbers by the coin-change DP.
pub fn partitions_by_dp(n: usize) -> Vec<u128> {
    let mut c = vec![0u128; n + 1];
    c[0] = 1;
    for s in 1..=n {
        for i in s..=n {
            c[i] += c[i - s];
        }
    }
    c
}

/// Multiplies by `1 / (q^y; q^y)∞^k` via repeated coin-change passes.
pub fn divide_by_euler_power(s: &Series, y: i64, k: usize) -> Series {
    let lo = s.lo();
    let n = s.valid_through();
    let mut c: Vec<BigInt> = (lo..=n).map(|e| s.coeff(e)).collect();
    for _ in 0..k {
        let mut part = y;
        while part <= n - lo {
            let step = part as usize;
            for i in step..c.len() {
                let v = c[i - step].clone();
                c[i] += v;
            }
            part += y;
        }
    }
    Series::from_coeffs(lo, c)
}

/// `W(s_a q^a, s_b q^b; q^y) = ⟨A, B, AB, A/B; q^y⟩∞ / (q^y; q^y)∞²` from products.
pub fn winquist_by_product(sa: i64, a: i64, sb: i64, b: i64, y: i64, n: i64) -> Series {
    let mut fams = Vec::new();
    for (s, x) in [(sa, a), (sb, b), (sa * sb, a + b), (sa * sb, a - b)] {
        fams.push((x, y, -s));
        fams.push((y - x, y, -s));
    }
    // The denominator (q^y; q^y)∞² cancels two of the four (q^y; q^y) factors.
    fams.push((y, y, -1));
    fams.push((y, y, -1));
    let f = families(&fams, n);
    binomial_product(&f, n)
}

/// Even- and odd-length partitions of `n` into distinct parts from `parts`
/// (ascending), by explicit enumeration.
pub fn distinct_split_by_enumeration(parts: &[i64], n: i64) -> (u64, u64) {
    fn walk(parts: &[i64], remaining: i64, len: usize, out: &mut (u64, u64)) {
        if remaining == 0 {
            if len % 2 == 0 {
                out.0 += 1;
            } else {
                out.1 += 1;
            }
            return;
        }
        for (i, &s) in parts.iter().enumerate() {
            if s > remaining {
                break;
            }
            walk(&parts[i + 1..], remaining - s, len + 1, out);
        }
    }
    let mut out = (0, 0);
    walk(parts, n, 0, &mut out);
    out
}

/// Tuples of partitions with total size `n`; each factor is `(distinct, parts)`.
pub fn partition_tuples_by_enumeration(factors: &[(bool, Vec<i64>)], n: i64) -> u64 {
    fn count(parts: &[i64], distinct: bool, n: i64) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut total = 0;
        for (i, &s) in parts.iter().enumerate() {
            if s > n {
                break;
            }
            let rest = if distinct { &parts[i + 1..] } else { &parts[i..] };
            total += count(rest, distinct, n - s);
        }
        total
    }
    match factors.split_first() {
        None => u64::from(n == 0),
        Some(((distinct, parts), rest)) => (0..=n)
            .map(|k| count(parts, *distinct, k) * partition_tuples_by_enumeration(rest, n - k))
            .sum(),
    }
}

/// Members of `{s ≥ 1 : s mod m ∈ classes}` up to `n`.
pub fn parts_in_classes(m: i64, classes: &[i64], n: i64) -> Vec<i64> {
    (1..=n)
        .filter(|s| classes.iter().any(|c| (s - c).rem_euclid(m) == 0))
        .collect()
}

/// `#{(a, b) ≥ 0 : ax + by = k}` by a double loop.
pub fn rho_by_enumeration(x: i64, y: i64, k: i64) -> u64 {
    let mut count = 0;
    for a in 0..=k.max(0) {
        for b in 0..=k.max(0) {
            if a * x + b * y == k {
                count += 1;
            }
        }
    }
    count
}

/// Least `t ≥ 0` with `f(t)`, scanning `0..limit`.
pub fn search(limit: i64, f: impl Fn(i64) -> bool) -> Option<i64> {
    (0..limit).find(|&t| f(t))
}
