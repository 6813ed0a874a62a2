//! Finite fields F_{p^n} in a polynomial basis.
//!
//! An element is the coefficient vector `(c_0, ..., c_{n-1})` over Z_p,
//! stored packed as its integer encoding `sum c_i p^i`. Fields with at most
//! 2^16 elements additionally carry exp/log tables over the cached primitive
//! element; every table-backed operation agrees with the plain polynomial
//! arithmetic it shortcuts.

pub mod embed;
mod text;
pub(crate) mod zp;

use std::collections::HashMap;
use std::fmt;

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numth;

pub use embed::Embedding;

/// Largest supported field size.
pub const MAX_Q: u64 = 1 << 31;
/// Fields up to this size get exp/log tables.
pub const TABLE_LIMIT: u64 = 1 << 16;

/// A field element, packed as the integer encoding of its coefficient vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone)]
struct Tables {
    /// `exp[k] = alpha^k` for `k < q - 1`.
    exp: Vec<u32>,
    /// `log[x] = k` with `alpha^k = x`; `log[0]` unused.
    log: Vec<u32>,
}

/// An immutable finite field context.
#[derive(Clone)]
pub struct Field {
    p: u64,
    n: u32,
    q: u64,
    modulus: Vec<u32>,
    alpha: Elem,
    order_factors: Vec<u64>,
    tables: Option<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .field("alpha", &self.alpha)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// Builds F_{p^n}. Without an explicit modulus the lexicographically
    /// smallest monic irreducible (coefficients compared from the constant
    /// term upward) is used. The cached primitive element is the one with the
    /// smallest integer encoding.
    pub fn new(p: u64, n: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !numth::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::BadModulus("extension degree must be at least 1".into()));
        }
        let q = match numth::checked_pow(p, n) {
            Some(q) if q <= MAX_Q => q,
            _ => return Err(Error::Overflow { p, n }),
        };
        let modulus: Vec<u32> = match modulus {
            Some(m) => {
                if m.len() != n as usize + 1 {
                    return Err(Error::BadModulus(format!(
                        "expected {} coefficients for degree {n}, got {}",
                        n + 1,
                        m.len()
                    )));
                }
                if m[n as usize] != 1 {
                    return Err(Error::BadModulus("modulus must be monic".into()));
                }
                if m.iter().any(|&c| c as u64 >= p) {
                    return Err(Error::BadModulus(format!("coefficients must lie in [0, {p})")));
                }
                let wide: Vec<u64> = m.iter().map(|&c| c as u64).collect();
                if !zp::is_irreducible(&wide, p) {
                    return Err(Error::NotIrreducible(m.to_vec()));
                }
                m.to_vec()
            }
            None => smallest_irreducible(p, n),
        };
        let mut field = Field {
            p,
            n,
            q,
            modulus,
            alpha: Elem::ONE,
            order_factors: numth::prime_factors(q - 1),
            tables: None,
        };
        field.alpha = field.find_primitive();
        if q <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    /// The prime field Z_p.
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, None)
    }

    fn find_primitive(&self) -> Elem {
        if self.q == 2 {
            return Elem::ONE;
        }
        (1..self.q as u32)
            .map(Elem)
            .find(|&x| self.has_full_order(x))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    fn has_full_order(&self, x: Elem) -> bool {
        let m = self.q - 1;
        self.order_factors.iter().all(|&r| self.pow_slow(x, m / r) != Elem::ONE)
    }

    fn build_tables(&self) -> Tables {
        let m = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(m);
        let mut log = vec![0u32; self.q as usize];
        let mut cur = Elem::ONE;
        for k in 0..m {
            exp.push(cur.0);
            log[cur.0 as usize] = k as u32;
            cur = self.mul_slow(cur, self.alpha);
        }
        Tables { exp, log }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Element from its integer encoding.
    pub fn elem(&self, encoding: u64) -> Result<Elem> {
        if encoding >= self.q {
            return Err(Error::ElementOutOfRange(encoding));
        }
        Ok(Elem(encoding as u32))
    }

    /// Element from its coefficient vector (constant term first).
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() > self.n as usize || coeffs.iter().any(|&c| c as u64 >= self.p) {
            return Err(Error::BadModulus(format!("bad coefficient vector {coeffs:?}")));
        }
        let mut enc = 0u64;
        for &c in coeffs.iter().rev() {
            enc = enc * self.p + c as u64;
        }
        Ok(Elem(enc as u32))
    }

    /// Coefficient vector of length n, constant term first.
    pub fn coeffs(&self, x: Elem) -> Vec<u32> {
        let mut v = vec![0u32; self.n as usize];
        let mut e = x.0 as u64;
        for c in v.iter_mut() {
            *c = (e % self.p) as u32;
            e /= self.p;
        }
        v
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> Elem {
        Elem(numth::rem_wide(k as i128, self.p) as u32)
    }

    /// All elements in ascending encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.q as u32).map(Elem)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let p = self.p as u32;
        let (mut x, mut y) = (a.0, b.0);
        let (mut out, mut place) = (0u32, 1u32);
        while x != 0 || y != 0 {
            let digit = (x % p + y % p) % p;
            out += digit * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let p = self.p as u32;
        let mut x = a.0;
        let (mut out, mut place) = (0u32, 1u32);
        while x != 0 {
            let digit = (p - x % p) % p;
            out += digit * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let m = self.q as usize - 1;
                let k = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                Elem(t.exp[if k >= m { k - m } else { k }])
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Schoolbook product reduced by the modulus; no tables.
    pub fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let n = self.n as usize;
        let p = self.p;
        let mut da = [0u64; 32];
        let mut db = [0u64; 32];
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        for i in 0..n {
            da[i] = x % p;
            db[i] = y % p;
            x /= p;
            y /= p;
        }
        let mut prod = [0u64; 64];
        for i in 0..n {
            if da[i] == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        // modulus is monic of degree n: x^n = -sum m_i x^i
        for k in (n..2 * n.max(1) - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let sub = c * self.modulus[i] as u64 % p;
                prod[k - n + i] = (prod[k - n + i] + p - sub) % p;
            }
        }
        let mut enc = 0u64;
        for i in (0..n).rev() {
            enc = enc * p + prod[i];
        }
        Elem(enc as u32)
    }

    fn pow_slow(&self, x: Elem, mut e: u64) -> Elem {
        let mut acc = Elem::ONE;
        let mut b = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        acc
    }

    /// `x^e` for a non-negative exponent; `0^0 = 1`.
    pub fn pow(&self, x: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if x.is_zero() {
            return Elem::ZERO;
        }
        let m = self.q - 1;
        match &self.tables {
            Some(t) => {
                let k = (t.log[x.0 as usize] as u128 * (e % m) as u128) % m as u128;
                Elem(t.exp[k as usize])
            }
            None => self.pow_slow(x, e % m),
        }
    }

    /// `x^e` for any integer exponent; negative exponents need `x != 0`.
    pub fn pow_signed(&self, x: Elem, e: i128) -> Result<Elem> {
        if x.is_zero() {
            return match e {
                0 => Ok(Elem::ONE),
                e if e > 0 => Ok(Elem::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        Ok(self.pow(x, numth::rem_wide(e, self.q - 1)))
    }

    pub fn inv(&self, x: Elem) -> Result<Elem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, self.q - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `alpha^k` with `k` reduced modulo `q - 1`.
    pub fn alpha_pow(&self, k: i128) -> Elem {
        let m = self.q - 1;
        let k = numth::rem_wide(k, m);
        match &self.tables {
            Some(t) => Elem(t.exp[k as usize]),
            None => self.pow_slow(self.alpha, k),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, x: Elem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.q - 1;
        for &r in &self.order_factors {
            while ord % r == 0 && self.pow(x, ord / r) == Elem::ONE {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// Whether `x` is a nonzero square (Euler criterion; every element is a
    /// square in even characteristic).
    pub fn is_square(&self, x: Elem) -> bool {
        if x.is_zero() {
            return true;
        }
        if self.p == 2 {
            return true;
        }
        self.pow(x, (self.q - 1) / 2) == Elem::ONE
    }

    /// `k` with `alpha^k = x`, `0 <= k < q - 1`.
    pub fn discrete_log(&self, x: Elem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.tables {
            Some(t) => Ok(t.log[x.0 as usize] as u64),
            None => self.discrete_log_bsgs(x),
        }
    }

    /// Baby-step giant-step logarithm to base alpha, independent of the tables.
    pub fn discrete_log_bsgs(&self, x: Elem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = self.q - 1;
        let m = {
            let r = order.sqrt();
            if r * r < order { r + 1 } else { r }
        }
        .max(1);
        let mut baby: HashMap<u32, u64> = HashMap::with_capacity(m as usize);
        let mut cur = Elem::ONE;
        for j in 0..m {
            baby.entry(cur.0).or_insert(j);
            cur = self.mul_slow(cur, self.alpha);
        }
        // alpha^{-m}
        let giant = self.pow_slow(self.alpha, (order - m % order) % order);
        let mut gamma = x;
        for i in 0..m {
            if let Some(&j) = baby.get(&gamma.0) {
                return Ok((i * m + j) % order);
            }
            gamma = self.mul_slow(gamma, giant);
        }
        Err(Error::Internal("discrete logarithm not found".into()))
    }

    /// The subgroup mu_d of d-th roots of unity with generator omega = alpha^s.
    pub fn subgroup(&self, d: u64) -> Result<Subgroup> {
        let m = self.q - 1;
        if d == 0 || m % d != 0 {
            return Err(Error::NotADivisor { d, modulus: m });
        }
        let s = m / d;
        let omega = self.alpha_pow(s as i128);
        let mut elements = Vec::with_capacity(d as usize);
        let mut cur = Elem::ONE;
        for _ in 0..d {
            elements.push(cur);
            cur = self.mul(cur, omega);
        }
        Ok(Subgroup { d, s, omega, elements })
    }

    /// Whether `size` is a subfield size, i.e. q' = p^k with k | n.
    pub fn has_subfield(&self, size: u64) -> bool {
        let mut k = 0u32;
        let mut v = 1u64;
        while v < size {
            v *= self.p;
            k += 1;
        }
        v == size && k > 0 && self.n % k == 0
    }

    /// Whether `x` lies in the subfield F_{size}, i.e. x^size = x.
    pub fn in_subfield(&self, x: Elem, size: u64) -> bool {
        self.pow(x, size) == x
    }
}

/// mu_d inside a field, listed as omega^0, ..., omega^{d-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub d: u64,
    pub s: u64,
    pub omega: Elem,
    pub elements: Vec<Elem>,
}

impl Subgroup {
    pub fn contains(&self, field: &Field, z: Elem) -> bool {
        !z.is_zero() && field.pow(z, self.d) == Elem::ONE
    }

    /// `i` with `omega^i = z`, if `z` lies in mu_d.
    pub fn index_of(&self, field: &Field, z: Elem) -> Option<usize> {
        if z.is_zero() {
            return None;
        }
        let k = field.discrete_log(z).ok()?;
        (k % self.s == 0).then_some((k / self.s) as usize)
    }
}

fn smallest_irreducible(p: u64, n: u32) -> Vec<u32> {
    let n = n as usize;
    let total = p.pow(n as u32);
    for t in 0..total {
        // c_0 is the most significant digit of t so the scan is lexicographic
        // from the constant term upward.
        let mut f = vec![0u64; n + 1];
        let mut rest = t;
        for i in (0..n).rev() {
            f[i] = rest % p;
            rest /= p;
        }
        f[n] = 1;
        if zp::is_irreducible(&f, p) {
            return f.into_iter().map(|c| c as u32).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
