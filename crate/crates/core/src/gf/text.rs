//! Text forms: fields as `p^n`, `q` or `p^n/c0,...,cn`; elements as `0`,
//! `a^k` (a power of the cached primitive element) or a decimal encoding.

use super::{Elem, Field};
use crate::error::{Error, Result};

fn parse_u64(s: &str, pos: usize) -> Result<u64> {
    s.trim()
        .parse::<u64>()
        .map_err(|_| Error::parse(pos, format!("expected an integer, found '{}'", s.trim())))
}

/// Splits a prime power `q` into `(p, n)`.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = crate::numth::prime_factors(q)[0];
    let mut n = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

impl Field {
    /// Parses `p^n`, a bare prime power `q`, or `p^n/c0,c1,...,cn`.
    pub fn parse(text: &str) -> Result<Field> {
        let text = text.trim();
        let (head, modulus) = match text.split_once('/') {
            Some((h, m)) => (h, Some((m, h.len() + 1))),
            None => (text, None),
        };
        let (p, n) = match head.split_once('^') {
            Some((p, n)) => {
                let p = parse_u64(p, 0)?;
                let n = parse_u64(n, p.to_string().len() + 1)?;
                let n = u32::try_from(n).map_err(|_| Error::Overflow { p, n: u32::MAX })?;
                (p, n)
            }
            None => {
                let q = parse_u64(head, 0)?;
                prime_power(q).ok_or_else(|| Error::parse(0, format!("{q} is not a prime power")))?
            }
        };
        match modulus {
            None => Field::new(p, n, None),
            Some((m, offset)) => {
                let mut coeffs = Vec::new();
                let mut pos = offset;
                for part in m.split(',') {
                    let c = parse_u64(part, pos)?;
                    coeffs.push(u32::try_from(c).map_err(|_| Error::parse(pos, "coefficient too large"))?);
                    pos += part.len() + 1;
                }
                Field::new(p, n, Some(&coeffs))
            }
        }
    }

    /// `p^n/c0,...,cn`, pinning the modulus.
    pub fn descriptor(&self) -> String {
        let m: Vec<String> = self.modulus().iter().map(|c| c.to_string()).collect();
        format!("{}^{}/{}", self.p(), self.n(), m.join(","))
    }

    /// Parses `0`, `a`, `a^k` (k may be negative) or a decimal encoding.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        self.parse_elem_at(text, 0)
    }

    pub(crate) fn parse_elem_at(&self, text: &str, pos: usize) -> Result<Elem> {
        let t = text.trim();
        let lead = pos + (text.len() - text.trim_start().len());
        if let Some(rest) = t.strip_prefix('a') {
            if rest.is_empty() {
                return Ok(self.alpha());
            }
            let k = rest
                .strip_prefix('^')
                .ok_or_else(|| Error::parse(lead + 1, "expected '^' after 'a'"))?;
            let k: i128 = k
                .trim()
                .trim_start_matches('(')
                .trim_end_matches(')')
                .parse()
                .map_err(|_| Error::parse(lead + 2, format!("bad exponent '{k}'")))?;
            return Ok(self.alpha_pow(k));
        }
        let v: u64 = t
            .parse()
            .map_err(|_| Error::parse(lead, format!("bad element '{t}'")))?;
        self.elem(v).map_err(|_| Error::parse(lead, format!("element {v} out of range for q = {}", self.q())))
    }

    /// Decimal encoding.
    pub fn format_elem(&self, x: Elem) -> String {
        x.0.to_string()
    }

    /// `0` or `a^k`.
    pub fn format_elem_power(&self, x: Elem) -> String {
        match self.discrete_log(x) {
            Ok(k) => format!("a^{k}"),
            Err(_) => "0".to_string(),
        }
    }

    /// Coefficient text used in polynomial output: decimal in prime fields,
    /// `a^k` otherwise, with 1 always written as `1`.
    pub fn format_coeff(&self, x: Elem) -> String {
        if self.n() == 1 || x == Elem::ONE {
            self.format_elem(x)
        } else {
            self.format_elem_power(x)
        }
    }
}
