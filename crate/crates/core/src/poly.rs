//! Sparse polynomials over a [`Field`], treated as functions on F_q.
//!
//! The canonical form reduces every positive exponent into `[1, q-1]` via
//! `x^q = x` (exponent 0 is kept), merges equal exponents and drops zero
//! coefficients. Two polynomials induce the same map on F_q iff their
//! canonical forms are equal.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::numth;

/// Default bound on `q` for operations that interpolate over the whole field.
pub const INTERPOLATION_CAP: u64 = 1 << 13;

/// Functional exponent reduction: `e > 0` maps into `[1, q-1]`.
pub fn reduce_exponent(e: u64, q: u64) -> u64 {
    if e == 0 {
        0
    } else {
        (e - 1) % (q - 1) + 1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparsePoly {
    terms: BTreeMap<u64, Elem>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Canonical polynomial from arbitrary `(exponent, coefficient)` pairs.
    pub fn from_terms(field: &Field, terms: impl IntoIterator<Item = (u64, Elem)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            if c.is_zero() {
                continue;
            }
            let e = reduce_exponent(e, field.q());
            let slot = out.entry(e).or_insert(Elem::ZERO);
            *slot = field.add(*slot, c);
        }
        out.retain(|_, c| !c.is_zero());
        SparsePoly { terms: out }
    }

    /// Dense coefficients (index = exponent), then canonicalised.
    pub fn from_dense(field: &Field, coeffs: &[Elem]) -> Self {
        Self::from_terms(field, coeffs.iter().enumerate().map(|(i, &c)| (i as u64, c)))
    }

    pub fn monomial(field: &Field, c: Elem, e: u64) -> Self {
        Self::from_terms(field, [(e, c)])
    }

    pub fn constant(field: &Field, c: Elem) -> Self {
        Self::monomial(field, c, 0)
    }

    /// The identity map `x`.
    pub fn x(field: &Field) -> Self {
        Self::monomial(field, Elem::ONE, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u64, Elem)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: u64) -> Elem {
        self.terms.get(&e).copied().unwrap_or(Elem::ZERO)
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<u64> {
        self.terms.keys().next().copied()
    }

    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        if x.is_zero() {
            return self.coeff(0);
        }
        self.terms
            .iter()
            .fold(Elem::ZERO, |acc, (&e, &c)| field.add(acc, field.mul(c, field.pow(x, e))))
    }

    /// Values at every element, in ascending encoding order.
    pub fn value_table(&self, field: &Field) -> Vec<Elem> {
        field.elements().map(|x| self.eval(field, x)).collect()
    }

    /// Text form, e.g. `a^1*x^62 + a^2*x^41 + a^2*x^20`.
    pub fn display(&self, field: &Field) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, &c)| {
                let mono = match e {
                    0 => String::new(),
                    1 => "x".to_string(),
                    e => format!("x^{e}"),
                };
                match (c == Elem::ONE, mono.is_empty()) {
                    (_, true) => field.format_coeff(c),
                    (true, false) => mono,
                    (false, false) => format!("{}*{mono}", field.format_coeff(c)),
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Parses a sum of terms `c*x^e`, `c*x`, `x^e`, `x` or `c`, with `c` in
    /// element text form. Terms may come in any order; duplicates merge.
    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut offset = 0usize;
        for raw in text.split('+') {
            terms.push(parse_term(field, raw, offset)?);
            offset += raw.len() + 1;
        }
        Ok(Self::from_terms(field, terms))
    }
}

fn parse_term(field: &Field, raw: &str, offset: usize) -> Result<(u64, Elem)> {
    let lead = offset + (raw.len() - raw.trim_start().len());
    let t = raw.trim();
    if t.is_empty() {
        return Err(Error::parse(lead, "empty term"));
    }
    let (coeff, mono, mono_pos) = match t.rfind('*') {
        Some(i) => (Some(&t[..i]), &t[i + 1..], lead + i + 1),
        None if t.starts_with('x') => (None, t, lead),
        None => (Some(t), "", lead + t.len()),
    };
    let c = match coeff {
        Some(c) => field.parse_elem_at(c, lead)?,
        None => Elem::ONE,
    };
    let mono_trim = mono.trim();
    let e = if coeff.is_some() && mono.is_empty() {
        0
    } else if mono_trim == "x" {
        1
    } else if let Some(exp) = mono_trim.strip_prefix("x^") {
        exp.trim()
            .parse::<u64>()
            .map_err(|_| Error::parse(mono_pos + 2, format!("bad exponent '{exp}'")))?
    } else {
        return Err(Error::parse(mono_pos, format!("expected 'x' or 'x^e', found '{mono_trim}'")));
    };
    Ok((e, c))
}

/// Lagrange interpolation through `(nodes[i], values[i])`; dense coefficients
/// of degree < nodes.len(). Nodes must be distinct.
pub fn lagrange(field: &Field, nodes: &[Elem], values: &[Elem]) -> Result<Vec<Elem>> {
    assert_eq!(nodes.len(), values.len());
    let k = nodes.len();
    // master = prod (x - x_i), dense, length k + 1
    let mut master = vec![Elem::ONE];
    for &xi in nodes {
        let mut next = vec![Elem::ZERO; master.len() + 1];
        for (j, &c) in master.iter().enumerate() {
            next[j + 1] = field.add(next[j + 1], c);
            next[j] = field.sub(next[j], field.mul(c, xi));
        }
        master = next;
    }
    let mut out = vec![Elem::ZERO; k];
    for (i, &xi) in nodes.iter().enumerate() {
        if values[i].is_zero() {
            continue;
        }
        // master / (x - x_i) by synthetic division
        let mut quot = vec![Elem::ZERO; k];
        let mut carry = Elem::ZERO;
        for j in (0..k).rev() {
            carry = field.add(master[j + 1], field.mul(carry, xi));
            quot[j] = carry;
        }
        let denom = quot.iter().rev().fold(Elem::ZERO, |acc, &c| field.add(field.mul(acc, xi), c));
        let scale = field.div(values[i], denom)?;
        for (o, &c) in out.iter_mut().zip(&quot) {
            *o = field.add(*o, field.mul(c, scale));
        }
    }
    Ok(out)
}

/// The unique `h` of degree < d with `h(omega^i) = values[i]`, omega = alpha^s.
pub fn interpolate_on_subgroup(field: &Field, d: u64, values: &[Elem]) -> Result<SparsePoly> {
    let mu = field.subgroup(d)?;
    if values.len() as u64 != d {
        return Err(Error::precondition(format!("expected {d} values, got {}", values.len())));
    }
    let coeffs = lagrange(field, &mu.elements, values)?;
    Ok(SparsePoly::from_dense(field, &coeffs))
}

/// Canonical polynomial of degree < q inducing the given value table
/// (`values[x]` for every encoding x).
///
/// With `c(x) = sum c_k x^k`: `c_0 = f(0)`, `c_k = -sum_{x != 0} f(x) x^{-k}`
/// for `1 <= k <= q-2`, and `c_{q-1} = -sum_x f(x)`.
pub fn interpolate_function(field: &Field, values: &[Elem], cap: u64) -> Result<SparsePoly> {
    let q = field.q();
    if q > cap {
        return Err(Error::FieldTooLarge { q, cap });
    }
    assert_eq!(values.len() as u64, q);
    let m = q - 1;
    // f(alpha^t) for t in [0, q-1)
    let by_log: Vec<Elem> = (0..m).map(|t| values[field.alpha_pow(t as i128).encoding() as usize]).collect();
    let mut terms = Vec::with_capacity(q as usize);
    terms.push((0, values[0]));
    for k in 1..m {
        let mut acc = Elem::ZERO;
        for (t, &v) in by_log.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let e = (m - (t as u64 * k) % m) % m;
            acc = field.add(acc, field.mul(v, field.alpha_pow(e as i128)));
        }
        terms.push((k, field.neg(acc)));
    }
    let total = values.iter().fold(Elem::ZERO, |acc, &v| field.add(acc, v));
    terms.push((m, field.neg(total)));
    Ok(SparsePoly::from_terms(field, terms))
}

/// Canonical form of `f(g(x))`, by evaluation at every point and full
/// interpolation.
pub fn compose_reduce(field: &Field, f: &SparsePoly, g: &SparsePoly, cap: u64) -> Result<SparsePoly> {
    if field.q() > cap {
        return Err(Error::FieldTooLarge { q: field.q(), cap });
    }
    let values: Vec<Elem> = field.elements().map(|x| f.eval(field, g.eval(field, x))).collect();
    interpolate_function(field, &values, cap)
}

/// `f(x) = x^r h(x^s)` with `s | q-1` and `h` reduced modulo `x^d - 1`,
/// `d = (q-1)/s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsForm {
    r: u64,
    s: u64,
    d: u64,
    h: SparsePoly,
}

impl RhsForm {
    /// Validates `r >= 1` and `s | q-1`, and reduces `h` modulo `x^d - 1`.
    pub fn new(field: &Field, r: u64, s: u64, h: &SparsePoly) -> Result<Self> {
        let m = field.q() - 1;
        if s == 0 || m % s != 0 {
            return Err(Error::NotADivisor { d: s, modulus: m });
        }
        if r == 0 {
            return Err(Error::precondition("r must be at least 1"));
        }
        let d = m / s;
        let h = SparsePoly::from_terms(field, h.terms().map(|(e, c)| (e % d, c)));
        Ok(RhsForm { r, s, d, h })
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn h(&self) -> &SparsePoly {
        &self.h
    }

    /// The canonical polynomial `x^r h(x^s)`.
    pub fn expand(&self, field: &Field) -> SparsePoly {
        SparsePoly::from_terms(field, self.h.terms().map(|(i, c)| (self.r + self.s * i, c)))
    }

    /// Pointwise value `x^r h(x^s)`.
    pub fn eval(&self, field: &Field, x: Elem) -> Elem {
        field.mul(field.pow(x, self.r), self.h.eval(field, field.pow(x, self.s)))
    }
}

/// Writes `f` as `x^r h(x^s)` with `r` the least exponent and the largest
/// admissible `s = gcd(q-1, e_i - r)`.
pub fn decompose(field: &Field, f: &SparsePoly) -> Result<RhsForm> {
    let r = f.min_exponent().ok_or(Error::ZeroPolynomial)?;
    if r == 0 {
        return Err(Error::HasConstantTerm);
    }
    let s = f.terms().fold(field.q() - 1, |acc, (e, _)| numth::gcd(acc, e - r));
    decompose_with(field, f, s)
}

/// Like [`decompose`] with a caller-chosen `s`, which must divide `q-1` and
/// every exponent difference.
pub fn decompose_with(field: &Field, f: &SparsePoly, s: u64) -> Result<RhsForm> {
    let r = f.min_exponent().ok_or(Error::ZeroPolynomial)?;
    if r == 0 {
        return Err(Error::HasConstantTerm);
    }
    let m = field.q() - 1;
    if s == 0 || m % s != 0 {
        return Err(Error::NotADivisor { d: s, modulus: m });
    }
    if let Some((e, _)) = f.terms().find(|(e, _)| (e - r) % s != 0) {
        return Err(Error::precondition(format!("s = {s} does not divide exponent gap {}", e - r)));
    }
    let h = SparsePoly::from_terms(field, f.terms().map(|(e, c)| ((e - r) / s, c)));
    RhsForm::new(field, r, s, &h)
}
