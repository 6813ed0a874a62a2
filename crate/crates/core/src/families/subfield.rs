//! Involutions decided on mu_d alone: the subgroup iff (gcd(s, d) = 1 and
//! h(mu_d) inside mu_d) and lifting from F_q to F_{q^m}.

use super::{check, ConditionCheck};
use crate::construct::SubgroupInvolution;
use crate::error::{Error, Result};
use crate::gf::embed::Embedding;
use crate::gf::{Elem, Field};
use crate::numth;
use crate::oracle::{report_from_table, Witness, DEFAULT_CAP};
use crate::poly::{interpolate_on_subgroup, RhsForm, SparsePoly};

fn hypothesis(which: &str, witness: Option<Elem>) -> Error {
    Error::HypothesisViolated { which: which.to_string(), witness: witness.map(Elem::encoding) }
}

/// Decides whether `x^r h(x^s)` is an involution by testing `g(g(z)) = z`
/// on mu_d only. Requires `r^2 = 1 (mod s)`, `gcd(s, d) = 1` and
/// `h(mu_d)` inside mu_d.
pub fn check_iff_subgroup(field: &Field, rhs: &RhsForm) -> Result<bool> {
    let (r, s, d) = (rhs.r(), rhs.s(), rhs.d());
    if !numth::r_squared_is_one(r, s) {
        return Err(hypothesis("r^2 = 1 mod s", None));
    }
    if numth::gcd(s, d) != 1 {
        return Err(hypothesis("gcd(s, d) = 1", None));
    }
    let mu = field.subgroup(d)?;
    let g = |z: Elem| -> Result<Elem> {
        let hz = rhs.h().eval(field, z);
        if !mu.contains(field, hz) {
            return Err(hypothesis("h(mu_d) inside mu_d", Some(z)));
        }
        Ok(field.mul(field.pow(z, r), field.pow(hz, s)))
    };
    // check the image hypothesis everywhere before deciding
    let images = mu.elements.iter().map(|&z| g(z)).collect::<Result<Vec<_>>>()?;
    for (&z, &gz) in mu.elements.iter().zip(&images) {
        if g(gz)? != z {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `h` with `h(omega^i) = omega^{t_i}`, so that `h(mu_d)` lies in mu_d.
pub fn subgroup_instance(field: &Field, s: u64, r: u64, t: &[u64]) -> Result<RhsForm> {
    let m = field.q() - 1;
    if s == 0 || m % s != 0 {
        return Err(Error::NotADivisor { d: s, modulus: m });
    }
    let d = m / s;
    if t.len() as u64 != d {
        return Err(Error::precondition(format!("need {d} exponents, got {}", t.len())));
    }
    let omega = field.alpha_pow(s as i128);
    let values: Vec<Elem> = t.iter().map(|&e| field.pow(omega, e)).collect();
    let h = interpolate_on_subgroup(field, d, &values)?;
    RhsForm::new(field, r, s, &h)
}

/// Exponents `t_i` making `g` act on mu_d as sigma:
/// `t_i = s^{-1} (ell_i - i r) mod d`. Needs `gcd(s, d) = 1`.
pub fn forcing_exponents(s: u64, r: u64, sigma: &SubgroupInvolution) -> Option<Vec<u64>> {
    let d = sigma.d() as u64;
    let s_inv = numth::inv_mod(s % d, d)?;
    Some(
        sigma
            .ell()
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let v = numth::rem_wide(l as i128 - i as i128 * r as i128, d);
                ((v as u128 * s_inv as u128) % d as u128) as u64
            })
            .collect(),
    )
}

pub fn lift_conditions(base: &Field, m: u32, r: u64) -> Vec<ConditionCheck> {
    let q = base.q();
    let g = numth::gcd(q - 1, m as u64);
    let mut out = vec![
        check("m >= 1", m >= 1, format!("m = {m}")),
        check("gcd(q-1, m) = 1", g == 1, format!("gcd = {g}")),
    ];
    match numth::checked_pow(q, m) {
        Some(qm) => {
            let big_s = (qm - 1) / (q - 1);
            out.push(check(
                "r^2 = 1 mod (q^m-1)/(q-1)",
                r >= 1 && numth::r_squared_is_one(r, big_s),
                format!("(q^m-1)/(q-1) = {big_s}, r = {r}"),
            ));
        }
        None => out.push(check("q^m fits", false, format!("{q}^{m}"))),
    }
    out
}

/// Value table of `g(x) = x^r h(x)^m` over the base field.
pub fn base_map_values(base: &Field, m: u32, r: u64, h: &SparsePoly) -> Result<Vec<Elem>> {
    if base.q() > DEFAULT_CAP {
        return Err(Error::FieldTooLarge { q: base.q(), cap: DEFAULT_CAP });
    }
    Ok(base
        .elements()
        .map(|x| base.mul(base.pow(x, r), base.pow(h.eval(base, x), m as u64)))
        .collect())
}

/// Lifts an involution `g = x^r h(x)^m` of F_q to `f = x^r h(x^{(q^m-1)/(q-1)})`
/// over F_{q^m}. The base involution is checked exhaustively first.
pub fn lift_involution(base: &Field, ext: &Field, m: u32, r: u64, h: &SparsePoly) -> Result<RhsForm> {
    if ext.p() != base.p() || ext.n() != base.n() * m {
        return Err(Error::WrongFieldShape(format!(
            "extension must be F_({}^{}), got F_({}^{})",
            base.p(),
            base.n() * m,
            ext.p(),
            ext.n()
        )));
    }
    let failed: Vec<String> =
        lift_conditions(base, m, r).into_iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    if !failed.is_empty() {
        return Err(Error::PreconditionViolated(failed));
    }
    let report = report_from_table(base, &base_map_values(base, m, r, h)?);
    if report.is_involution != Some(true) {
        let x = match report.witness {
            Some(Witness::NotInvolution { x, .. }) | Some(Witness::Collision { x, .. }) => x,
            None => 0,
        };
        return Err(Error::BaseNotInvolution(x));
    }
    let emb = Embedding::new(base, ext)?;
    let lifted = SparsePoly::from_terms(ext, h.terms().map(|(e, c)| (e, emb.map(base, ext, c))));
    RhsForm::new(ext, r, (ext.q() - 1) / (base.q() - 1), &lifted)
}

/// Square root in characteristic 2: `c^{q/2}`.
fn sqrt_char2(field: &Field, c: Elem) -> Elem {
    field.pow(c, field.q() / 2)
}

/// The r = 1 example over F_{q^2}, q = 2^{2k}: `h` is chosen with
/// `x h(x)^2` equal to the three-term r = 1 involution on F_q, so
/// `h = h_2^{1/2} x^{e_2} + h_1^{1/2} x^{e_1} + h_0^{1/2}` with
/// `e_2 = (2q-2)/3 / 2` and `e_1 = (q-1)/3 / 2` modulo `q-1`.
pub fn lift_example_r1(base: &Field, ext: &Field, n1: u64) -> Result<RhsForm> {
    let g = crate::construct::construct_cor_r1(base, n1)?;
    let q = base.q();
    let inv2 = numth::inv_mod(2, q - 1).ok_or_else(|| Error::Internal("q-1 is odd here".into()))?;
    let half = |e: u64| ((e as u128 * inv2 as u128) % (q as u128 - 1)) as u64;
    let (h2, h1, h0) = (g.coeff((2 * q + 1) / 3), g.coeff((q + 2) / 3), g.coeff(1));
    let h = SparsePoly::from_terms(
        base,
        [
            (half((2 * q - 2) / 3), sqrt_char2(base, h2)),
            (half((q - 1) / 3), sqrt_char2(base, h1)),
            (0, sqrt_char2(base, h0)),
        ],
    );
    lift_involution(base, ext, 2, 1, &h)
}

/// Characteristic 3, base F_{q^2} with q = 3^k, m = 3:
/// `h = a^{1/3} x^{(q^2-3q)/3} + a^{q/3} x^{(q-3)/3}`, so that
/// `x h(x)^3 = a x^{q^2-3q+1} + a^q x^{q-2}`. Cube roots exist because
/// `gcd(3, q^2-1) = 1`.
pub fn lift_example_exm(base: &Field, ext: &Field, a: Elem) -> Result<RhsForm> {
    let q = super::quadratic_base(base)?;
    if base.p() != 3 {
        return Err(Error::WrongFieldShape("the cube-root example needs characteristic 3".into()));
    }
    let big = base.q() - 1;
    let inv3 = numth::inv_mod(3, big).ok_or_else(|| Error::precondition("3 divides q^2-1"))?;
    let cube_root = |x: Elem| base.pow(x, inv3);
    let h = SparsePoly::from_terms(
        base,
        [((q * q - 3 * q) / 3, cube_root(a)), ((q - 3) / 3, cube_root(base.pow(a, q)))],
    );
    lift_involution(base, ext, 3, 1, &h)
}
