use invol_core::construct::{build_rhs, construct_from_inverse, construct_general, valid_params};
use invol_core::criterion::induced_subgroup_involution;
use invol_core::numth;
use invol_core::poly::{interpolate_on_subgroup, reduce_exponent};
use invol_core::{check_involution, check_permutation, decompose, Elem, Field, Oracle, RhsForm, SparsePoly, SubgroupInvolution};
use proptest::prelude::*;

const SMALL: &[&str] = &["2", "3", "2^2", "5", "7", "2^3", "3^2", "11", "13", "2^4", "17", "19", "23", "5^2", "3^3", "29", "31", "2^5", "37", "41", "43", "47", "7^2", "2^6", "61"];

fn field_strategy(upto: usize) -> impl Strategy<Value = Field> {
    (0..upto).prop_map(|i| Field::parse(SMALL[i]).unwrap())
}

fn sparse_poly(field: &Field, terms: &[(u64, u64)]) -> SparsePoly {
    let q = field.q();
    SparsePoly::from_terms(field, terms.iter().map(|&(e, c)| (1 + e % (q - 1), field.elem(c % q).unwrap())))
}

fn random_rhs(field: &Field, s_pick: usize, r: u64, coeffs: &[u64]) -> RhsForm {
    let divisors = numth::divisors(field.q() - 1);
    let s = divisors[s_pick % divisors.len()];
    let d = (field.q() - 1) / s;
    let h = SparsePoly::from_terms(
        field,
        coeffs.iter().enumerate().map(|(i, &c)| (i as u64 % d, field.elem(c % field.q()).unwrap())),
    );
    RhsForm::new(field, 1 + r % (field.q() - 1), s, &h).unwrap()
}

/// Random involution of {0..d-1} from a shuffled pairing.
fn random_sigma(d: usize, picks: &[usize]) -> SubgroupInvolution {
    let mut idx: Vec<usize> = (0..d).collect();
    for (k, &p) in picks.iter().enumerate().take(d) {
        let j = k + p % (d - k);
        idx.swap(k, j);
    }
    let mut ell: Vec<usize> = (0..d).collect();
    let pairs = picks.first().copied().unwrap_or(0) % (d / 2 + 1);
    for t in 0..pairs {
        let (a, b) = (idx[2 * t], idx[2 * t + 1]);
        ell[a] = b;
        ell[b] = a;
    }
    SubgroupInvolution::new(ell).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn units_satisfy_fermat_and_have_inverses(f in field_strategy(SMALL.len()), x in 1u64..1_000_000) {
        let x = f.elem(1 + x % (f.q() - 1)).unwrap();
        prop_assert_eq!(f.pow(x, f.q() - 1), Elem::ONE);
        prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
        prop_assert_eq!(f.alpha_pow(f.discrete_log(x).unwrap() as i128), x);
    }

    #[test]
    fn pow_reduces_negative_exponents(f in field_strategy(SMALL.len()), x in 1u64..1_000_000, e in -5000i128..5000) {
        let x = f.elem(1 + x % (f.q() - 1)).unwrap();
        let reduced = numth::rem_wide(e, f.q() - 1);
        prop_assert_eq!(f.pow_signed(x, e).unwrap(), f.pow(x, reduced));
    }

    #[test]
    fn canonical_reduction_preserves_values(f in field_strategy(SMALL.len()), e in 1u64..100_000, x in 0u64..1_000_000) {
        let x = f.elem(x % f.q()).unwrap();
        prop_assert_eq!(f.pow(x, e), f.pow(x, reduce_exponent(e, f.q())));
    }

    #[test]
    fn expand_decompose_roundtrip(f in field_strategy(SMALL.len()), terms in prop::collection::vec((0u64..10_000, 1u64..10_000), 1..6)) {
        let poly = sparse_poly(&f, &terms);
        prop_assume!(!poly.is_zero());
        let rhs = decompose(&f, &poly).unwrap();
        prop_assert_eq!(rhs.expand(&f), poly);
    }

    #[test]
    fn expand_agrees_with_pointwise_form(f in field_strategy(SMALL.len()), s_pick in 0usize..64, r in 0u64..1000, coeffs in prop::collection::vec(0u64..1000, 0..6)) {
        let rhs = random_rhs(&f, s_pick, r, &coeffs);
        let expanded = rhs.expand(&f);
        for x in f.elements() {
            let direct = f.mul(f.pow(x, rhs.r()), rhs.h().eval(&f, f.pow(x, rhs.s())));
            prop_assert_eq!(expanded.eval(&f, x), direct);
        }
    }

    #[test]
    fn subgroup_interpolation_roundtrip(f in field_strategy(SMALL.len()), s_pick in 0usize..64, coeffs in prop::collection::vec(0u64..1000, 0..8)) {
        let divisors = numth::divisors(f.q() - 1);
        let d = divisors[s_pick % divisors.len()];
        let h = SparsePoly::from_terms(&f, coeffs.iter().enumerate().filter(|(i, _)| (*i as u64) < d).map(|(i, &c)| (i as u64, f.elem(c % f.q()).unwrap())));
        let mu = f.subgroup(d).unwrap();
        let values: Vec<Elem> = mu.elements.iter().map(|&z| h.eval(&f, z)).collect();
        prop_assert_eq!(interpolate_on_subgroup(&f, d, &values).unwrap(), h);
    }

    #[test]
    fn subgroups_are_closed(f in field_strategy(SMALL.len()), s_pick in 0usize..64) {
        let divisors = numth::divisors(f.q() - 1);
        let d = divisors[s_pick % divisors.len()];
        let mu = f.subgroup(d).unwrap();
        prop_assert_eq!(mu.elements.len() as u64, d);
        for &a in &mu.elements {
            for &b in &mu.elements {
                prop_assert!(mu.contains(&f, f.mul(a, b)));
            }
        }
    }

    #[test]
    fn criterion_matches_oracle(f in field_strategy(SMALL.len()), s_pick in 0usize..64, r in 0u64..1000, coeffs in prop::collection::vec(0u64..1000, 1..5)) {
        let rhs = random_rhs(&f, s_pick, r, &coeffs);
        let report = Oracle::default().is_involution(&f, &rhs.expand(&f)).unwrap();
        prop_assert_eq!(check_involution(&f, &rhs).verdict, report.is_involution == Some(true));
        prop_assert_eq!(check_permutation(&f, &rhs).verdict, report.is_permutation);
        if report.is_involution == Some(true) {
            prop_assert!(induced_subgroup_involution(&f, &rhs).is_ok());
        }
    }

    #[test]
    fn oracle_inverse_characterises_involutions(f in field_strategy(14), terms in prop::collection::vec((0u64..10_000, 1u64..10_000), 1..4)) {
        let poly = sparse_poly(&f, &terms);
        prop_assume!(!poly.is_zero());
        let oracle = Oracle::default();
        let report = oracle.is_involution(&f, &poly).unwrap();
        if report.is_permutation {
            let inverse = oracle.compositional_inverse(&f, &poly).unwrap();
            prop_assert_eq!(report.is_involution == Some(true), inverse == poly);
            let fixed = report.fixed_point_count.unwrap();
            prop_assert_eq!(fixed == f.q(), poly == SparsePoly::x(&f));
        }
    }

    #[test]
    fn construction_is_sound_and_recovers_sigma(f in field_strategy(SMALL.len()), s_pick in 0usize..64, r_pick in 0usize..64, picks in prop::collection::vec(0usize..10_000, 64)) {
        let divisors = numth::divisors(f.q() - 1);
        let s = divisors[s_pick % divisors.len()];
        let d = ((f.q() - 1) / s) as usize;
        let sigma = random_sigma(d, &picks);
        let rs: Vec<u64> = (1..f.q()).filter(|&r| numth::r_squared_is_one(r, s)).collect();
        let space = valid_params(s, &sigma, Some(rs[r_pick % rs.len()])).unwrap();
        let mut it = picks.iter().rev();
        let params = space.pick(|k| it.next().copied().unwrap_or(0) % k);
        let rhs = construct_general(&f, s, &sigma, &params).unwrap();
        let report = Oracle::default().is_involution(&f, &rhs.expand(&f)).unwrap();
        prop_assert_eq!(report.is_involution, Some(true));
        prop_assert_eq!(&induced_subgroup_involution(&f, &rhs).unwrap(), &sigma);
        if sigma == SubgroupInvolution::inversion(d) {
            prop_assert_eq!(construct_from_inverse(&f, s, &params).unwrap(), rhs);
        }
    }

    #[test]
    fn inverse_sigma_consistency(f in field_strategy(SMALL.len()), s_pick in 0usize..64, picks in prop::collection::vec(0usize..10_000, 64)) {
        let divisors = numth::divisors(f.q() - 1);
        let s = divisors[s_pick % divisors.len()];
        let d = ((f.q() - 1) / s) as usize;
        let sigma = SubgroupInvolution::inversion(d);
        let r = (1..f.q()).filter(|&r| numth::r_squared_is_one(r, s)).nth(picks[0] % 3).unwrap_or(1);
        let space = valid_params(s, &sigma, Some(r)).unwrap();
        let mut it = picks.iter();
        let params = space.pick(|k| it.next().copied().unwrap_or(0) % k);
        prop_assert_eq!(construct_from_inverse(&f, s, &params).unwrap(), construct_general(&f, s, &sigma, &params).unwrap());
    }

    #[test]
    fn broken_congruences_break_the_involution(f in field_strategy(SMALL.len()), s_pick in 0usize..64, picks in prop::collection::vec(0usize..10_000, 64)) {
        let divisors: Vec<u64> = numth::divisors(f.q() - 1).into_iter().filter(|&s| s > 1).collect();
        prop_assume!(!divisors.is_empty());
        let s = divisors[s_pick % divisors.len()];
        let d = ((f.q() - 1) / s) as usize;
        let sigma = random_sigma(d, &picks);
        let r = 1;
        // shift one n_i off the solution lattice
        let space = valid_params(s, &sigma, Some(r)).unwrap();
        let mut it = picks.iter();
        let mut params = space.pick(|k| it.next().copied().unwrap_or(0) % k);
        let i = picks[1] % d;
        params.n[i] = (params.n[i] + 1 + (picks[2] as u64 % (s - 1))) % s;
        prop_assume!(!invol_core::construct::param_violations(s, &sigma, &params).is_empty());
        let rhs = build_rhs(&f, s, &sigma, r, &params.n).unwrap();
        prop_assert!(!check_involution(&f, &rhs).verdict);
        prop_assert!(construct_general(&f, s, &sigma, &params).is_err());
    }
}

#[test]
fn fields_are_deterministic() {
    for t in SMALL.iter().chain(&["3^8", "2^8", "2^12"]) {
        let a = Field::parse(t).unwrap();
        let b = Field::parse(t).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.alpha(), b.alpha());
        assert_eq!(a.order(a.alpha()).unwrap(), a.q() - 1);
    }
}

#[test]
fn exhaustive_field_axioms_up_to_2_12() {
    for t in ["2^12", "3^7", "5^5", "4093"] {
        let f = Field::parse(t).unwrap();
        for x in f.elements().skip(1) {
            assert_eq!(f.pow(x, f.q() - 1), Elem::ONE);
            assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
            assert_eq!(f.alpha_pow(f.discrete_log(x).unwrap() as i128), x, "{t} {x}");
        }
    }
}

#[test]
fn non_sufficiency_witness_exists() {
    // g an involution on mu_d while f is not an involution of F_q
    let mut found = None;
    'outer: for t in ["5", "7", "2^3", "3^2", "11", "13", "2^4"] {
        let f = Field::parse(t).unwrap();
        for s in numth::divisors(f.q() - 1) {
            for r in 1..f.q() {
                for c in f.elements().skip(1) {
                    let rhs = RhsForm::new(&f, r, s, &SparsePoly::constant(&f, c)).unwrap();
                    let on_mu = induced_subgroup_involution(&f, &rhs).is_ok();
                    let full = Oracle::default().is_involution(&f, &rhs.expand(&f)).unwrap().is_involution == Some(true);
                    if on_mu && !full {
                        found = Some((t, r, s, c));
                        break 'outer;
                    }
                }
            }
        }
    }
    assert!(found.is_some());
}
