//! Small exact integer helpers shared by the number-theoretic modules.

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
        (old_t, t) = (t, old_t - quot * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let (g, x, _) = extended_gcd(a.rem_euclid(m), m);
    (g == 1).then(|| x.rem_euclid(m))
}

pub fn checked_mul(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub fn checked_sub(a: i64, b: i64, what: &'static str) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

/// `sum_{i=0}^{n-1} floor((a*i + b) / m)` for non-negative `a`, `b` and positive `m`.
pub fn floor_sum(n: i64, m: i64, a: i64, b: i64) -> Result<i64> {
    let ov = || Error::Overflow("floor_sum");
    let (mut n, mut m) = (n as i128, m as i128);
    let (mut a, mut b) = (a as i128, b as i128);
    let mut ans: i128 = 0;
    loop {
        if a >= m {
            ans += n * (n - 1) / 2 * (a / m);
            a %= m;
        }
        if b >= m {
            ans += n * (b / m);
            b %= m;
        }
        let y_max = a * n + b;
        if y_max < m {
            break;
        }
        n = y_max / m;
        b = y_max % m;
        std::mem::swap(&mut m, &mut a);
    }
    i64::try_from(ans).map_err(|_| ov())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_gcd() {
        assert_eq!(gcd(16, 7), 1);
        assert_eq!(gcd(-12, 18), 6);
        assert_eq!(mod_inverse(7, 16), Some(7));
        assert_eq!(mod_inverse(9, 16), Some(9));
        assert_eq!(mod_inverse(4, 16), None);
        let (g, x, y) = extended_gcd(240, 46);
        assert_eq!(g, 2);
        assert_eq!(240 * x + 46 * y, 2);
    }

    #[test]
    fn floor_sum_matches_naive() {
        for n in 0..20 {
            for m in 1..9 {
                for a in 0..12 {
                    for b in 0..12 {
                        let naive: i64 = (0..n).map(|i| (a * i + b) / m).sum();
                        assert_eq!(floor_sum(n, m, a, b).unwrap(), naive);
                    }
                }
            }
        }
    }
}
