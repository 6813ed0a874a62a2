//! The palindromic family over F_{q^m} (d | gcd(q-1, m), r = -1 mod s) and
//! its two corollaries with fixed shapes of h.

use super::{check, ConditionCheck};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::numth;
use crate::poly::{RhsForm, SparsePoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PalindromicShape {
    pub q: u64,
    pub m: u32,
    pub d: u64,
    pub s: u64,
    pub r: u64,
    /// `(r^2-1)/s mod d`.
    pub e: u64,
}

/// Checks every arithmetic hypothesis; the shape is returned only when they
/// all hold.
pub fn palindromic_conditions(
    field: &Field,
    q: u64,
    m: u32,
    d: u64,
    r: u64,
) -> (Vec<ConditionCheck>, Option<PalindromicShape>) {
    let mut out = Vec::new();
    let size_ok = numth::checked_pow(q, m) == Some(field.q()) && q >= 2;
    out.push(check("field is F_(q^m)", size_ok, format!("|F| = {}, q^m = {q}^{m}", field.q())));
    if !size_ok {
        return (out, None);
    }
    let g = numth::gcd(q - 1, m as u64);
    let divides = d > 0 && g % d == 0;
    out.push(check("d | gcd(q-1, m)", divides, format!("d = {d}, gcd = {g}")));
    if !divides {
        return (out, None);
    }
    let s = (field.q() - 1) / d;
    let minus_one = (r as u128 + 1) % s as u128 == 0;
    out.push(check("r = -1 mod s", minus_one, format!("s = {s}, r mod s = {}", r % s)));
    if !minus_one || r == 0 {
        return (out, None);
    }
    let e = (((r as u128 * r as u128 - 1) / s as u128) % d as u128) as u64;
    (out, Some(PalindromicShape { q, m, d, s, r, e }))
}

/// Partner of position `i` under the coefficient symmetry.
pub fn mirror(d: u64, e: u64, i: u64) -> u64 {
    if i <= e {
        e - i
    } else {
        d + e - i
    }
}

/// One representative per symmetry orbit: `{0..=e/2}` then `{e+1..=(d+e)/2}`.
pub fn free_positions(d: u64, e: u64) -> Vec<u64> {
    (0..=e / 2).chain(e + 1..=(d + e) / 2).filter(|&i| i < d).collect()
}

/// Dense coefficient vector from values at [`free_positions`].
pub fn complete_coefficients(d: u64, e: u64, free: &[Elem]) -> Result<Vec<Elem>> {
    let positions = free_positions(d, e);
    if positions.len() != free.len() {
        return Err(Error::precondition(format!(
            "expected {} free coefficients (positions {positions:?}), got {}",
            positions.len(),
            free.len()
        )));
    }
    let mut h = vec![Elem::ZERO; d as usize];
    for (&i, &c) in positions.iter().zip(free) {
        h[i as usize] = c;
        h[mirror(d, e, i) as usize] = c;
    }
    Ok(h)
}

fn coefficient_checks(field: &Field, shape: &PalindromicShape, h: &[Elem]) -> Vec<ConditionCheck> {
    let PalindromicShape { q, d, e, .. } = *shape;
    let mut out = Vec::new();
    let len_ok = h.len() as u64 == d;
    out.push(check("h has d coefficients", len_ok, format!("{} given, d = {d}", h.len())));
    if !len_ok {
        return out;
    }
    let outside: Vec<u64> = (0..d).filter(|&i| !field.in_subfield(h[i as usize], q)).collect();
    out.push(check("coefficients lie in F_q", outside.is_empty(), format!("positions outside: {outside:?}")));
    let broken: Vec<u64> = (0..d).filter(|&i| h[i as usize] != h[mirror(d, e, i) as usize]).collect();
    out.push(check(
        "h_(e-i) = h_i and h_(d+e-i) = h_i",
        broken.is_empty(),
        format!("e = {e}, asymmetric positions: {broken:?}"),
    ));
    out
}

/// All hypotheses, including root-freeness of h on mu_d.
pub fn validate_palindromic(field: &Field, q: u64, m: u32, d: u64, r: u64, h: &[Elem]) -> Vec<ConditionCheck> {
    let (mut out, shape) = palindromic_conditions(field, q, m, d, r);
    let Some(shape) = shape else { return out };
    out.extend(coefficient_checks(field, &shape, h));
    if out.iter().all(|c| c.passed) {
        let poly = SparsePoly::from_dense(field, h);
        let root = super::conj::first_root(field, &poly, d).ok().flatten();
        out.push(check(
            "h has no root in mu_d",
            root.is_none(),
            root.map(|b| format!("h({}) = 0", field.format_elem_power(b))).unwrap_or_default(),
        ));
    }
    out
}

/// `f = x^r h(x^s)` over F_{q^m} from the full coefficient vector `h_0..h_{d-1}`.
pub fn gen_palindromic_dense(field: &Field, q: u64, m: u32, d: u64, r: u64, h: &[Elem]) -> Result<RhsForm> {
    let (conds, shape) = palindromic_conditions(field, q, m, d, r);
    let mut failed: Vec<String> = conds.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    let Some(shape) = shape else {
        return Err(Error::PreconditionViolated(failed));
    };
    failed.extend(coefficient_checks(field, &shape, h).iter().filter(|c| !c.passed).map(|c| c.to_string()));
    if !failed.is_empty() {
        return Err(Error::PreconditionViolated(failed));
    }
    let poly = SparsePoly::from_dense(field, h);
    if let Some(beta) = super::conj::first_root(field, &poly, d)? {
        return Err(Error::HValueZero(beta.encoding()));
    }
    RhsForm::new(field, r, shape.s, &poly)
}

/// Same as [`gen_palindromic_dense`], taking only the free coefficients.
pub fn gen_palindromic(field: &Field, q: u64, m: u32, d: u64, r: u64, free: &[Elem]) -> Result<RhsForm> {
    let (conds, shape) = palindromic_conditions(field, q, m, d, r);
    let Some(shape) = shape else {
        return Err(Error::PreconditionViolated(
            conds.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect(),
        ));
    };
    let h = complete_coefficients(d, shape.e, free)?;
    gen_palindromic_dense(field, q, m, d, r, &h)
}

/// q = 2^k, m = d = q-1, r = s-1: `h = a x^{q-2} + b x^{q-3} + b`.
pub fn mdq1_parts(field: &Field, q: u64, a: Elem, b: Elem) -> Result<(u32, u64, u64, Vec<Elem>)> {
    if q < 4 || !q.is_power_of_two() || field.p() != 2 {
        return Err(Error::WrongFieldShape(format!("need q = 2^k >= 4, got q = {q}")));
    }
    let m = (q - 1) as u32;
    let d = q - 1;
    let total = numth::checked_pow(q, m).filter(|&t| t == field.q()).ok_or_else(|| {
        Error::WrongFieldShape(format!("field must be F_(q^(q-1)) = F_({q}^{m}), got q = {}", field.q()))
    })?;
    let s = (total - 1) / d;
    let mut h = vec![Elem::ZERO; d as usize];
    h[(q - 2) as usize] = field.add(h[(q - 2) as usize], a);
    h[(q - 3) as usize] = field.add(h[(q - 3) as usize], b);
    h[0] = field.add(h[0], b);
    Ok((m, d, s - 1, h))
}

pub fn gen_cor_mdq1(field: &Field, q: u64, a: Elem, b: Elem) -> Result<RhsForm> {
    let (m, d, r, h) = mdq1_parts(field, q, a, b)?;
    gen_palindromic_dense(field, q, m, d, r, &h)
}

/// q = 3^{2k}, m = d = 4, r = q^4 - 2: `h = a x^3 + b x^2 + a x + c`.
pub fn m4d4_parts(field: &Field, q: u64, a: Elem, b: Elem, c: Elem) -> Result<(u32, u64, u64, Vec<Elem>)> {
    let power_of_nine = {
        let mut t = q;
        while t > 1 && t % 9 == 0 {
            t /= 9;
        }
        t == 1 && q > 1
    };
    if !power_of_nine || field.p() != 3 || numth::checked_pow(q, 4) != Some(field.q()) {
        return Err(Error::WrongFieldShape(format!("need q = 3^(2k) and field F_(q^4), got q = {q}")));
    }
    Ok((4, 4, field.q() - 2, vec![c, a, b, a]))
}

pub fn gen_cor_m4d4(field: &Field, q: u64, a: Elem, b: Elem, c: Elem) -> Result<RhsForm> {
    let (m, d, r, h) = m4d4_parts(field, q, a, b, c)?;
    gen_palindromic_dense(field, q, m, d, r, &h)
}
