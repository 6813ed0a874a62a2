//! Fast tests for `f = x^r h(x^s)` that only look at the d-element subgroup
//! mu_d.
//!
//! `f` maps the coset `{x : x^s = z}` onto the coset labelled by
//! `g(z) = z^r h(z)^s`, acting there as multiplication by `h(z)` after
//! `x -> x^r`. Composing twice gives `h(g(z)) h(z)^r x^{r^2}` on each coset,
//! so `f` is an involution exactly when `r^2 = 1 mod s` and
//! `phi(z) = z^{(r^2-1)/s} h(g(z)) h(z)^r` equals 1 on all of mu_d.
//! Likewise `f` permutes F_q exactly when `gcd(r, s) = 1` and `g` permutes
//! mu_d.

use std::collections::HashMap;

use serde::Serialize;

use crate::construct::SubgroupInvolution;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field, Subgroup};
use crate::numth;
use crate::poly::RhsForm;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    /// `r^2 = 1 mod s`.
    pub r_condition: bool,
    /// `gcd(r, s) = 1`; reported for reference, not part of the verdict.
    pub gcd_condition: bool,
    /// Whether phi is 1 on all of mu_d; `None` when phi is undefined because
    /// the r-condition fails.
    pub phi_all_one: Option<bool>,
    /// First `omega^i` (by i) with `phi != 1`, as an encoding.
    pub failing_z: Option<u32>,
    /// First root of h in mu_d, if any.
    pub h_root: Option<u32>,
    pub verdict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubgroupWitness {
    GcdFails { r: u64, s: u64 },
    /// `h(z) = 0`, so the whole coset of z collapses onto 0.
    HRoot { z: u32 },
    /// `g(z1) = g(z2)` for distinct subgroup elements.
    Collision { z1: u32, z2: u32, value: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationCheck {
    pub gcd_condition: bool,
    pub verdict: bool,
    pub witness: Option<SubgroupWitness>,
}

fn phi_exponent(rhs: &RhsForm, q: u64) -> u64 {
    let r = rhs.r() as u128;
    ((r * r - 1) / rhs.s() as u128 % (q as u128 - 1).max(1)) as u64
}

fn g_unchecked(field: &Field, rhs: &RhsForm, z: Elem) -> Elem {
    field.mul(field.pow(z, rhs.r()), field.pow(rhs.h().eval(field, z), rhs.s()))
}

fn phi_unchecked(field: &Field, rhs: &RhsForm, z: Elem, exponent: u64) -> Elem {
    let hz = rhs.h().eval(field, z);
    let g = field.mul(field.pow(z, rhs.r()), field.pow(hz, rhs.s()));
    let hg = rhs.h().eval(field, g);
    field.mul(field.pow(z, exponent), field.mul(hg, field.pow(hz, rhs.r())))
}

fn ensure_member(field: &Field, mu: &Subgroup, z: Elem) -> Result<()> {
    if !mu.contains(field, z) {
        return Err(Error::NotInSubgroup(z.encoding(), mu.d));
    }
    Ok(())
}

/// `g(z) = z^r h(z)^s` for `z` in mu_d.
pub fn g_map(field: &Field, rhs: &RhsForm, z: Elem) -> Result<Elem> {
    let mu = field.subgroup(rhs.d())?;
    ensure_member(field, &mu, z)?;
    Ok(g_unchecked(field, rhs, z))
}

/// `phi(z) = z^{(r^2-1)/s} h(g(z)) h(z)^r`.
pub fn phi(field: &Field, rhs: &RhsForm, z: Elem) -> Result<Elem> {
    if !numth::r_squared_is_one(rhs.r(), rhs.s()) {
        return Err(Error::RSquareCondition { r: rhs.r(), s: rhs.s() });
    }
    let mu = field.subgroup(rhs.d())?;
    ensure_member(field, &mu, z)?;
    Ok(phi_unchecked(field, rhs, z, phi_exponent(rhs, field.q())))
}

/// Decides whether `x^r h(x^s)` is an involution of F_q with O(d) work.
pub fn check_involution(field: &Field, rhs: &RhsForm) -> CriterionReport {
    let r_condition = numth::r_squared_is_one(rhs.r(), rhs.s());
    let gcd_condition = numth::gcd(rhs.r(), rhs.s()) == 1;
    let mu = field.subgroup(rhs.d()).expect("RhsForm guarantees d | q-1");
    let h_root = mu
        .elements
        .iter()
        .find(|&&z| rhs.h().eval(field, z).is_zero())
        .map(|z| z.encoding());
    let (phi_all_one, failing_z) = if r_condition {
        let exponent = phi_exponent(rhs, field.q());
        let failing = mu
            .elements
            .iter()
            .find(|&&z| phi_unchecked(field, rhs, z, exponent) != Elem::ONE)
            .map(|z| z.encoding());
        (Some(failing.is_none()), failing)
    } else {
        (None, None)
    };
    CriterionReport {
        r_condition,
        gcd_condition,
        phi_all_one,
        failing_z,
        h_root,
        verdict: r_condition && phi_all_one == Some(true),
    }
}

/// Decides whether `x^r h(x^s)` permutes F_q: `gcd(r, s) = 1` and `g`
/// permutes mu_d (a root of h in mu_d counts as failure).
pub fn check_permutation(field: &Field, rhs: &RhsForm) -> PermutationCheck {
    let gcd_condition = numth::gcd(rhs.r(), rhs.s()) == 1;
    if !gcd_condition {
        return PermutationCheck {
            gcd_condition,
            verdict: false,
            witness: Some(SubgroupWitness::GcdFails { r: rhs.r(), s: rhs.s() }),
        };
    }
    let mu = field.subgroup(rhs.d()).expect("RhsForm guarantees d | q-1");
    let mut seen: HashMap<Elem, Elem> = HashMap::with_capacity(mu.elements.len());
    for &z in &mu.elements {
        let hz = rhs.h().eval(field, z);
        if hz.is_zero() {
            return PermutationCheck {
                gcd_condition,
                verdict: false,
                witness: Some(SubgroupWitness::HRoot { z: z.encoding() }),
            };
        }
        let g = field.mul(field.pow(z, rhs.r()), field.pow(hz, rhs.s()));
        if let Some(&prev) = seen.get(&g) {
            return PermutationCheck {
                gcd_condition,
                verdict: false,
                witness: Some(SubgroupWitness::Collision { z1: prev.encoding(), z2: z.encoding(), value: g.encoding() }),
            };
        }
        seen.insert(g, z);
    }
    PermutationCheck { gcd_condition, verdict: true, witness: None }
}

/// The exponent permutation `l` with `g(omega^i) = omega^{l_i}`, provided g
/// is an involution of mu_d.
pub fn induced_subgroup_involution(field: &Field, rhs: &RhsForm) -> Result<SubgroupInvolution> {
    let mu = field.subgroup(rhs.d())?;
    let mut ell = Vec::with_capacity(mu.elements.len());
    for (i, &z) in mu.elements.iter().enumerate() {
        let g = g_unchecked(field, rhs, z);
        let j = mu
            .index_of(field, g)
            .ok_or_else(|| Error::NotInvolutionOnSubgroup(format!("g(omega^{i}) = {g} is not in mu_{}", mu.d)))?;
        ell.push(j);
    }
    SubgroupInvolution::new(ell).map_err(|e| Error::NotInvolutionOnSubgroup(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SparsePoly;

    fn f7_instance() -> (Field, RhsForm) {
        let f = Field::prime(7).unwrap();
        let h = SparsePoly::parse(&f, "2*x^2 + 3*x + 3").unwrap();
        let rhs = RhsForm::new(&f, 1, 2, &h).unwrap();
        (f, rhs)
    }

    #[test]
    fn g_and_phi_on_f7() {
        let (f, rhs) = f7_instance();
        assert_eq!(g_map(&f, &rhs, Elem(2)).unwrap(), Elem(4));
        assert_eq!(g_map(&f, &rhs, Elem(4)).unwrap(), Elem(2));
        assert_eq!(g_map(&f, &rhs, Elem(1)).unwrap(), Elem(1));
        for z in [1, 2, 4] {
            assert_eq!(phi(&f, &rhs, Elem(z)).unwrap(), Elem::ONE);
        }
        assert_eq!(g_map(&f, &rhs, Elem(3)), Err(Error::NotInSubgroup(3, 3)));
    }

    #[test]
    fn monomial_g_is_power_map() {
        let f = Field::prime(13).unwrap();
        let one = SparsePoly::constant(&f, Elem::ONE);
        let rhs = RhsForm::new(&f, 5, 3, &one).unwrap();
        for &z in &f.subgroup(4).unwrap().elements {
            assert_eq!(g_map(&f, &rhs, z).unwrap(), f.pow(z, 5));
        }
        // z = 1 gives h(1)^s
        let h = SparsePoly::parse(&f, "3*x + 4").unwrap();
        let rhs = RhsForm::new(&f, 5, 3, &h).unwrap();
        assert_eq!(g_map(&f, &rhs, Elem::ONE).unwrap(), f.pow(Elem(7), 3));
    }

    #[test]
    fn phi_rejections_and_f4_example() {
        let f4 = Field::new(2, 2, None).unwrap();
        let h = SparsePoly::constant(&f4, f4.alpha());
        let rhs = RhsForm::new(&f4, 1, 3, &h).unwrap();
        assert_eq!(phi(&f4, &rhs, Elem::ONE).unwrap(), f4.pow(f4.alpha(), 2));
        let f7 = Field::prime(7).unwrap();
        let rhs = RhsForm::new(&f7, 3, 3, &SparsePoly::constant(&f7, Elem::ONE)).unwrap();
        assert_eq!(phi(&f7, &rhs, Elem::ONE), Err(Error::RSquareCondition { r: 3, s: 3 }));
        let ident = RhsForm::new(&f7, 1, 1, &SparsePoly::constant(&f7, Elem::ONE)).unwrap();
        for z in f7.elements().skip(1) {
            assert_eq!(phi(&f7, &ident, z).unwrap(), Elem::ONE);
        }
    }

    #[test]
    fn involution_verdicts() {
        let (f, rhs) = f7_instance();
        let rep = check_involution(&f, &rhs);
        assert!(rep.verdict && rep.r_condition && rep.gcd_condition);
        assert_eq!(rep.failing_z, None);

        let ident = RhsForm::new(&f, 1, 6, &SparsePoly::constant(&f, Elem::ONE)).unwrap();
        assert!(check_involution(&f, &ident).verdict);

        let bad = RhsForm::new(&f, 3, 3, &SparsePoly::constant(&f, Elem::ONE)).unwrap();
        let rep = check_involution(&f, &bad);
        assert!(!rep.verdict && !rep.r_condition);
        assert_eq!(rep.phi_all_one, None);
    }

    #[test]
    fn f64_example_is_an_involution_under_the_coefficient_field_reading() {
        let f = Field::parse("2^6").unwrap();
        let h = SparsePoly::parse(&f, "a^21*x^2 + a^42*x + a^42").unwrap();
        let rhs = RhsForm::new(&f, 20, 21, &h).unwrap();
        assert!(check_involution(&f, &rhs).verdict);
    }

    #[test]
    fn permutation_verdicts() {
        let f = Field::prime(7).unwrap();
        let one = SparsePoly::constant(&f, Elem::ONE);
        let c = check_permutation(&f, &RhsForm::new(&f, 3, 6, &one).unwrap());
        assert_eq!(c.witness, Some(SubgroupWitness::GcdFails { r: 3, s: 6 }));
        assert!(check_permutation(&f, &RhsForm::new(&f, 5, 6, &one).unwrap()).verdict);
        let (f, rhs) = f7_instance();
        assert!(check_permutation(&f, &rhs).verdict);
        // h(x) = x - 1 vanishes at 1
        let h = SparsePoly::parse(&f, "x + 6").unwrap();
        let c = check_permutation(&f, &RhsForm::new(&f, 1, 2, &h).unwrap());
        assert_eq!(c.witness, Some(SubgroupWitness::HRoot { z: 1 }));
    }

    #[test]
    fn induced_permutations() {
        let (f, rhs) = f7_instance();
        assert_eq!(induced_subgroup_involution(&f, &rhs).unwrap().ell(), &[0, 2, 1]);
        let one = SparsePoly::constant(&f, Elem::ONE);
        let ident = RhsForm::new(&f, 1, 2, &one).unwrap();
        assert_eq!(induced_subgroup_involution(&f, &ident).unwrap().ell(), &[0, 1, 2]);
        let inverse = RhsForm::new(&f, 5, 6, &one).unwrap();
        assert_eq!(induced_subgroup_involution(&f, &inverse).unwrap().ell(), &[0]);
        // z -> z^2 swaps omega and omega^2
        let sq = RhsForm::new(&f, 2, 2, &one).unwrap();
        assert_eq!(induced_subgroup_involution(&f, &sq).unwrap().ell(), &[0, 2, 1]);
        // h with a root: g(1) = 0 is outside mu_d
        let h = SparsePoly::parse(&f, "x + 6").unwrap();
        assert!(matches!(
            induced_subgroup_involution(&f, &RhsForm::new(&f, 1, 2, &h).unwrap()),
            Err(Error::NotInvolutionOnSubgroup(_))
        ));
    }
}
