//! The reversal family over F_{q^2}: `(x^D h(1/x))^q = h(x^q)`, where the
//! map is an involution exactly when h has no root in mu_{q+1}; plus the
//! binomial corollary `a x^{q^2-3q+1} + a^q x^{q-2}`.

use super::{check, quadratic_base, ConditionCheck};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::numth;
use crate::poly::{RhsForm, SparsePoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversalOutcome {
    pub rhs: RhsForm,
    /// A root of h in mu_{q+1}; its presence means f is not an involution.
    pub root: Option<Elem>,
}

impl ReversalOutcome {
    pub fn is_involution(&self) -> bool {
        self.root.is_none()
    }
}

/// Hypotheses on `(r, a_0..a_D)`; the root test is not included.
pub fn reversal_conditions(field: &Field, q: u64, r: u64, coeffs: &[Elem]) -> Vec<ConditionCheck> {
    let mut out = Vec::new();
    out.push(check("at least one coefficient", !coeffs.is_empty(), String::new()));
    if coeffs.is_empty() {
        return out;
    }
    let deg = coeffs.len() as u64 - 1;
    out.push(check("r >= 1", r >= 1, format!("r = {r}")));
    out.push(check("r = -1 mod q-1", (r as u128 + 1) % (q as u128 - 1) == 0, format!("r mod {} = {}", q - 1, r % (q - 1))));
    let gap = numth::rem_wide(r as i128 - 1 - deg as i128, q + 1);
    out.push(check("deg h = r-1 mod q+1", gap == 0, format!("deg = {deg}, r-1-deg = {gap} mod {}", q + 1)));
    out.push(check("a_0 != 0", !coeffs[0].is_zero(), String::new()));
    out.push(check("a_deg != 0", !coeffs[deg as usize].is_zero(), String::new()));
    let broken: Vec<u64> =
        (0..=deg / 2).filter(|&i| coeffs[(deg - i) as usize] != field.pow(coeffs[i as usize], q)).collect();
    out.push(check("a_(deg-i) = a_i^q", broken.is_empty(), format!("failing i: {broken:?}")));
    out
}

/// Builds `f = x^r h(x^{q-1})` with `h = sum a_i x^i` and decides it by the
/// root test on mu_{q+1}.
pub fn gen_reversal(field: &Field, r: u64, coeffs: &[Elem]) -> Result<ReversalOutcome> {
    let q = quadratic_base(field)?;
    let failed: Vec<String> = reversal_conditions(field, q, r, coeffs)
        .into_iter()
        .filter(|c| !c.passed)
        .map(|c| c.to_string())
        .collect();
    if !failed.is_empty() {
        return Err(Error::PreconditionViolated(failed));
    }
    let h = SparsePoly::from_dense(field, coeffs);
    let root = super::conj::first_root(field, &h, q + 1)?;
    Ok(ReversalOutcome { rhs: RhsForm::new(field, r, q - 1, &h)?, root })
}

/// `r = q-2`, `s = q-1`, `h = a x^{q-3} + a^q`, without any check on `a`.
pub fn exm_rhs(field: &Field, a: Elem) -> Result<RhsForm> {
    let q = quadratic_base(field)?;
    if q < 3 {
        return Err(Error::WrongFieldShape("q = 2 gives r = 0".into()));
    }
    let h = SparsePoly::from_terms(field, [(q - 3, a), (0, field.pow(a, q))]);
    RhsForm::new(field, q - 2, q - 1, &h)
}

/// The residue-class table. Errors for even q, where no `a` works.
pub fn exm_case_verdict(field: &Field, a: Elem) -> Result<bool> {
    let q = quadratic_base(field)?;
    if q % 2 == 0 {
        return Err(Error::EvenQNoSolution);
    }
    let minus_one = field.neg(Elem::ONE);
    let big = field.q() - 1;
    Ok(match (q % 4, q % 8) {
        (1, _) => field.pow(a, big / 2) != minus_one,
        (_, 3) => field.pow(a, big / 4) != minus_one,
        _ => field.pow(a, big / 4) != Elem::ONE,
    })
}

/// `(-a^{q-1})^{(q+1)/gcd(q+1, q-3)} != 1`, valid for every q.
pub fn exm_gcd_verdict(field: &Field, a: Elem) -> Result<bool> {
    let q = quadratic_base(field)?;
    let g = numth::gcd(q + 1, q.abs_diff(3));
    let base = field.neg(field.pow(a, q - 1));
    Ok(field.pow(base, (q + 1) / g) != Elem::ONE)
}

pub fn exm_conditions(field: &Field, a: Elem) -> Result<Vec<ConditionCheck>> {
    let q = quadratic_base(field)?;
    let mut out = vec![
        check("q odd", q % 2 == 1, format!("q = {q}")),
        check("a != 0", !a.is_zero(), String::new()),
    ];
    if q % 2 == 1 && !a.is_zero() {
        let case = exm_case_verdict(field, a)?;
        let which = match (q % 4, q % 8) {
            (1, _) => "q = 1 mod 4 and a^((q^2-1)/2) != -1",
            (_, 3) => "q = 3 mod 8 and a^((q^2-1)/4) != -1",
            _ => "q = 7 mod 8 and a^((q^2-1)/4) != 1",
        };
        out.push(check(which, case, String::new()));
        let gcd_form = exm_gcd_verdict(field, a)?;
        out.push(check("(-a^(q-1))^((q+1)/gcd(q+1,q-3)) != 1", gcd_form, String::new()));
    }
    Ok(out)
}

/// `f = a x^{q^2-3q+1} + a^q x^{q-2}` when the case table admits `a`.
pub fn gen_cor_exm(field: &Field, a: Elem) -> Result<RhsForm> {
    let q = quadratic_base(field)?;
    if q % 2 == 0 {
        return Err(Error::EvenQNoSolution);
    }
    if a.is_zero() {
        return Err(Error::precondition("a must be nonzero"));
    }
    let case = exm_case_verdict(field, a)?;
    let gcd_form = exm_gcd_verdict(field, a)?;
    if case != gcd_form {
        return Err(Error::Internal(format!("case table says {case}, gcd form says {gcd_form}")));
    }
    if !case {
        return Err(Error::precondition(format!(
            "a = {} fails the case table for q = {q}",
            field.format_elem_power(a)
        )));
    }
    exm_rhs(field, a)
}
