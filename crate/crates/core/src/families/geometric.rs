//! `f = x (1 + x^s + ... + x^{(k-1)s})` over F_{q^m} with m even and
//! q = -1 mod d.
//!
//! `m` here is the degree of the field over F_q, so the field is
//! F_{q^{2M}} with `M = m/2`, and `M` is what enters the gcd condition.

use super::{check, ConditionCheck};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::numth;
use crate::poly::SparsePoly;

/// Hypothesis table plus `s` when the shape hypotheses hold.
pub fn geometric_conditions(field: &Field, q: u64, d: u64, m: u32, k: u64) -> (Vec<ConditionCheck>, Option<u64>) {
    let mut out = Vec::new();
    let size_ok = q >= 2 && numth::checked_pow(q, m) == Some(field.q());
    out.push(check("field is F_(q^m)", size_ok, format!("|F| = {}, q^m = {q}^{m}", field.q())));
    out.push(check("m even", m % 2 == 0 && m > 0, format!("m = {m}")));
    out.push(check("q = -1 mod d", d > 0 && (q + 1) % d == 0, format!("d = {d}, (q+1) mod d = {}", (q + 1) % d.max(1))));
    out.push(check("k >= 1", k >= 1, format!("k = {k}")));
    if out.iter().any(|c| !c.passed) {
        return (out, None);
    }
    let s = (field.q() - 1) / d;
    let half_m = (m / 2) as u128;
    let num = half_m * (q as u128 * q as u128 - 1);
    let integral = num % (2 * d as u128) == 0;
    out.push(check(
        "M(q^2-1)/(2d) is an integer",
        integral,
        format!("M = {half_m}, M(q^2-1) = {num}"),
    ));
    if integral {
        let t = (num / (2 * d as u128)) as u64;
        let g = numth::gcd(k + 1, t.abs_diff(1));
        let lhs = ((k - 1) as u128 * g as u128) % d as u128;
        out.push(check(
            "(k-1) gcd(k+1, M(q^2-1)/(2d) - 1) = 0 mod d",
            lhs == 0,
            format!("gcd = {g}, value mod d = {lhs}"),
        ));
    }
    let p = field.p();
    out.push(check(
        "k^2 = 1 mod p",
        (k as u128 * k as u128 - 1) % p as u128 == 0,
        format!("k^2 mod {p} = {}", (k as u128 * k as u128) % p as u128),
    ));
    let ok = out.iter().all(|c| c.passed);
    (out, ok.then_some(s))
}

/// `x (1 + x^s + ... + x^{(k-1)s})`, exponents reduced functionally.
pub fn geometric_poly(field: &Field, s: u64, k: u64) -> SparsePoly {
    SparsePoly::from_terms(field, (0..k).map(|j| (1 + (j as u128 * s as u128 % (field.q() as u128 - 1)) as u64, Elem::ONE)))
}

pub fn gen_geometric(field: &Field, q: u64, d: u64, m: u32, k: u64) -> Result<SparsePoly> {
    let (conds, s) = geometric_conditions(field, q, d, m, k);
    match s {
        Some(s) => Ok(geometric_poly(field, s, k)),
        None => Err(Error::PreconditionViolated(
            conds.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;

    #[test]
    fn quadrinomial_over_f3_8() {
        let f = Field::parse("3^8").unwrap();
        let (conds, s) = geometric_conditions(&f, 9, 5, 4, 4);
        assert!(conds.iter().all(|c| c.passed), "{conds:?}");
        assert_eq!(s, Some(1312));
        let poly = gen_geometric(&f, 9, 5, 4, 4).unwrap();
        assert_eq!(poly, SparsePoly::parse(&f, "x + x^1313 + x^2625 + x^3937").unwrap());
        let rep = Oracle::default().is_involution(&f, &poly).unwrap();
        assert_eq!(rep.is_involution, Some(true));
    }

    #[test]
    fn k_one_is_identity() {
        let f = Field::parse("3^8").unwrap();
        assert_eq!(gen_geometric(&f, 9, 5, 4, 1).unwrap(), SparsePoly::x(&f));
    }

    #[test]
    fn k_fails_mod_p() {
        let f = Field::parse("3^8").unwrap();
        let (conds, s) = geometric_conditions(&f, 9, 5, 4, 3);
        assert_eq!(s, None);
        let bad: Vec<_> = conds.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert!(bad.contains(&"k^2 = 1 mod p"));
    }

    #[test]
    fn small_fields_sweep() {
        // (field, q, d, m)
        for (t, q, d, m) in [("3^2", 3u64, 4u64, 2u32), ("3^4", 3, 4, 4), ("3^4", 3, 2, 4), ("5^2", 5, 3, 2), ("2^8", 4, 5, 4), ("7^2", 7, 4, 2)] {
            let f = Field::parse(t).unwrap();
            let mut admitted = 0;
            for k in 1..=20 {
                if let Ok(poly) = gen_geometric(&f, q, d, m, k) {
                    admitted += 1;
                    let rep = Oracle::default().is_involution(&f, &poly).unwrap();
                    assert_eq!(rep.is_involution, Some(true), "{t} d={d} k={k}");
                }
            }
            assert!(admitted > 0, "{t} d={d}");
        }
    }
}
