//! Small exact integer helpers shared by the dissection and analysis layers.

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};

pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Least nonnegative residue.
pub fn modp(a: i64, p: i64) -> i64 {
    a.rem_euclid(p)
}

/// Inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inv(a: i64, m: i64) -> Option<i64> {
    let eg = modp(a, m).extended_gcd(&m);
    if eg.gcd != 1 {
        return None;
    }
    Some(modp(eg.x, m))
}

/// All `(m, n)` with `m, n > 0` and `m^2 + n^2 = p`.
pub fn two_squares(p: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut m = 1;
    while m * m < p {
        let rest = p - m * m;
        let n = rest.sqrt();
        if n > 0 && n * n == rest {
            out.push((m, n));
        }
        m += 1;
    }
    out
}

/// `num / den`, failing loudly when the division is not exact.
pub fn exact_div(num: i64, den: i64, what: &str) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::Internal(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(num / den)
}

/// `(-1)^e` for any integer `e`.
pub fn neg_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
