//! Small integer helpers used for exponent arithmetic.

use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= n {
        if n % k == 0 {
            small.push(k);
            if k * k != n {
                large.push(n / k);
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `a mod m` in `[0, m)` for a signed wide `a`.
pub fn rem_wide(a: i128, m: u64) -> u64 {
    a.mod_floor(&(m as i128)) as u64
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(rem_wide(e.x, m))
}

/// `r^2 mod s == 1 mod s`, computed without overflow.
pub fn r_squared_is_one(r: u64, s: u64) -> bool {
    let r = r as u128;
    (r * r) % s as u128 == 1 % s as u128
}

/// Integer power with overflow detection.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}
