//! Families over F_{q^2} with s = q-1, where h restricted to mu_{q+1} takes
//! values in F_q: the conjugate-symmetric construction and its two-term
//! corollary.

use super::{check, quadratic_base, ConditionCheck};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::{RhsForm, SparsePoly};

fn is_minus_one_mod(r: u64, m: u64) -> bool {
    (r as u128 + 1) % m as u128 == 0
}

/// Arithmetic hypotheses: `r = -1 (mod q-1)` and `2(r^2-1)/(q-1) = 0 (mod q+1)`.
pub fn conj_conditions(q: u64, r: u64) -> Vec<ConditionCheck> {
    let minus_one = is_minus_one_mod(r, q - 1);
    let mut out = vec![check("r = -1 mod q-1", minus_one, format!("r mod {} = {}", q - 1, r % (q - 1)))];
    let r2 = r as u128 * r as u128 - 1;
    let quotient_ok = r2 % (q as u128 - 1) == 0;
    let value = if quotient_ok { (2 * (r2 / (q as u128 - 1))) % (q as u128 + 1) } else { u128::MAX };
    out.push(check(
        "2(r^2-1)/(q-1) = 0 mod q+1",
        value == 0,
        if quotient_ok { format!("value {value}") } else { "q-1 does not divide r^2-1".into() },
    ));
    out
}

/// `{ 0 <= i <= q : ((r+1)/(q-1) + i)(r-1) = 0 (mod q+1) }`.
pub fn omega_set(q: u64, r: u64) -> Result<Vec<u64>> {
    if q < 2 || !is_minus_one_mod(r, q - 1) {
        return Err(Error::precondition(format!("r = {r} is not -1 mod q-1 = {}", q.saturating_sub(1))));
    }
    let t = (r as u128 + 1) / (q as u128 - 1);
    let modulus = q as u128 + 1;
    Ok((0..=q).filter(|&i| ((t + i as u128) * (r as u128 - 1)) % modulus == 0).collect())
}

/// First element of mu_d (in generator order) where `h` vanishes.
pub(crate) fn first_root(field: &Field, h: &SparsePoly, d: u64) -> Result<Option<Elem>> {
    Ok(field.subgroup(d)?.elements.into_iter().find(|&b| h.eval(field, b).is_zero()))
}

/// `h = sum_i (h_i x^i + h_i^q x^{qi})` over the supplied `(i, h_i)`, with
/// `f = x^r h(x^{q-1})` over F_{q^2}.
pub fn gen_conj_symmetric(field: &Field, r: u64, coeffs: &[(u64, Elem)]) -> Result<RhsForm> {
    let q = quadratic_base(field)?;
    let mut violations: Vec<String> =
        conj_conditions(q, r).into_iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    if violations.is_empty() {
        let omega = omega_set(q, r)?;
        for &(i, _) in coeffs {
            if !omega.contains(&i) {
                violations.push(format!("index {i} is not in Omega = {omega:?}"));
            }
        }
    }
    if !violations.is_empty() {
        return Err(Error::PreconditionViolated(violations));
    }
    let h = conj_symmetric_h(field, q, coeffs);
    if let Some(beta) = first_root(field, &h, q + 1)? {
        return Err(Error::HValueZero(beta.encoding()));
    }
    RhsForm::new(field, r, q - 1, &h)
}

pub(crate) fn conj_symmetric_h(field: &Field, q: u64, coeffs: &[(u64, Elem)]) -> SparsePoly {
    let d = q + 1;
    SparsePoly::from_terms(
        field,
        coeffs
            .iter()
            .flat_map(|&(i, c)| [(i % d, c), ((q * i) % d, field.pow(c, q))]),
    )
}

/// The residue/square table: `q = 1 (mod 4)` with `b` a square, or
/// `q = 3 (mod 4)` with `b` a non-square.
pub fn qb_conditions(field: &Field, q: u64, i: u64, b: Elem) -> Vec<ConditionCheck> {
    let square = field.is_square(b);
    let table = match q % 4 {
        1 => square,
        3 => !square,
        _ => false,
    };
    vec![
        check("q odd", q % 2 == 1, format!("q = {q}")),
        check("1 <= i <= q", (1..=q).contains(&i), format!("i = {i}")),
        check("b != 0", !b.is_zero(), field.format_elem_power(b)),
        check(
            "q = 1 mod 4 with b square, or q = 3 mod 4 with b non-square",
            table && !b.is_zero(),
            format!("q mod 4 = {}, b {}", q % 4, if square { "square" } else { "non-square" }),
        ),
    ]
}

/// `f = b x^{q^2+(i-1)q-1-i} + b^q x^{(1+i)q^2-(1+i)q-1}`, i.e.
/// `r = q^2-q-1`, `s = q-1`, `h = b x^i + b^q x^{qi}`.
pub fn gen_cor_qb(field: &Field, i: u64, b: Elem) -> Result<RhsForm> {
    let q = quadratic_base(field)?;
    let failed: Vec<String> =
        qb_conditions(field, q, i, b).into_iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    if !failed.is_empty() {
        return Err(Error::PreconditionViolated(failed));
    }
    gen_conj_symmetric(field, q * q - q - 1, &[(i, b)])
}
