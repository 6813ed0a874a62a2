//! Golden values. Each polynomial was first confirmed by the exhaustive
//! oracle, then frozen here so regressions in field setup or construction
//! show up as text diffs.

use invol_core::construct::{construct_cor_r1, construct_cor_rq43, construct_d3, construct_general};
use invol_core::families::{self, lift_example_r1};
use invol_core::oracle::Witness;
use invol_core::{ConstructionParams, Elem, Field, FamilySpec, Oracle, SparsePoly, SubgroupInvolution};

fn assert_involution(f: &Field, p: &SparsePoly) {
    let rep = Oracle::default().is_involution(f, p).unwrap();
    assert_eq!(rep.is_involution, Some(true), "{}", p.display(f));
}

#[test]
fn default_moduli_and_generators() {
    let expected: [(&str, &[u32], u32); 10] = [
        ("2^2", &[1, 1, 1], 2),
        ("2^3", &[1, 0, 1, 1], 2),
        ("2^4", &[1, 0, 0, 1, 1], 2),
        ("3^2", &[1, 0, 1], 4),
        ("5^2", &[1, 1, 1], 7),
        ("7^2", &[1, 0, 1], 9),
        ("2^6", &[1, 0, 0, 0, 0, 1, 1], 2),
        ("2^8", &[1, 0, 0, 0, 1, 1, 0, 1, 1], 6),
        ("3^4", &[1, 0, 1, 1, 1], 10),
        ("3^8", &[1, 0, 0, 0, 0, 1, 1, 0, 1], 4),
    ];
    for (t, modulus, alpha) in expected {
        let f = Field::parse(t).unwrap();
        assert_eq!((f.modulus(), f.alpha().encoding()), (modulus, alpha), "{t}");
    }
}

#[test]
fn frozen_constructions() {
    let f13 = Field::parse("13").unwrap();
    let f16 = Field::parse("2^4").unwrap();
    let f256 = Field::parse("2^8").unwrap();
    let f11 = Field::parse("11").unwrap();
    let sigma = SubgroupInvolution::new(vec![0, 4, 3, 2, 1]).unwrap();
    let cases = [
        (&f13, construct_d3(&f13, 1, 0, 0, 0).unwrap(), "6*x^9 + 9*x^5 + 12*x"),
        (&f13, construct_d3(&f13, 5, 2, 1, 3).unwrap(), "8*x^9 + 9*x^5 + 8*x"),
        (&f16, construct_cor_r1(&f16, 0).unwrap(), "a^5*x^11 + a^9*x^6 + a^6*x"),
        (&f16, construct_cor_rq43(&f16, 0, 0).unwrap(), "x^14 + a^4*x^9 + a^4*x^4"),
        (&f256, construct_cor_r1(&f256, 5).unwrap(), "a^27*x^171 + a^220*x^86 + a^37*x"),
        (&f256, construct_cor_rq43(&f256, 3, 7).unwrap(), "a^9*x^254 + a^195*x^169 + a^195*x^84"),
        (
            &f11,
            construct_general(&f11, 2, &sigma, &ConstructionParams { r: 1, n: vec![1, 1, 0, 0, 1] }).unwrap().expand(&f11),
            "2*x^9 + 5*x^7 + 10*x^5 + 10*x^3 + 5*x",
        ),
    ];
    for (f, poly, text) in cases {
        assert_eq!(poly.display(f), text);
        assert_involution(f, &poly);
    }
}

#[test]
fn frozen_family_outputs() {
    let cases = [
        ("2^6", "cor-mdq1", "q=4,a=a^21,b=a^42", "a^21*x^62 + a^42*x^41 + a^42*x^20"),
        ("5^2", "cor-qb", "i=1,b=a^0", "x^23 + x^15"),
        ("5^2", "cor-qb", "i=2,b=a^2", "a^10*x^11 + a^2*x^3"),
    ];
    for (t, id, params, text) in cases {
        let f = Field::parse(t).unwrap();
        let out = families::generate(&f, &FamilySpec::parse(id, params).unwrap()).unwrap();
        assert_eq!(out.poly.display(&f), text);
        assert_involution(&f, &out.poly);
    }
    let base = Field::parse("2^4").unwrap();
    let ext = Field::parse("2^8").unwrap();
    let lifted = lift_example_r1(&base, &ext, 0).unwrap().expand(&ext);
    assert_eq!(lifted.display(&ext), "a^51*x^171 + a^170*x^86 + a^204*x");
    assert_involution(&ext, &lifted);
}

#[test]
fn frozen_oracle_reports() {
    let o = Oracle::default();
    let f = Field::parse("3^8").unwrap();
    let rep = o.is_involution(&f, &SparsePoly::parse(&f, "x + x^1313 + x^2625 + x^3937").unwrap()).unwrap();
    assert_eq!((rep.is_involution, rep.fixed_point_count), (Some(true), Some(1313)));

    let f = Field::parse("7").unwrap();
    let rep = o.is_involution(&f, &SparsePoly::parse(&f, "x^5").unwrap()).unwrap();
    assert_eq!(rep.fixed_point_count, Some(3));
    let rep = o.is_involution(&f, &SparsePoly::parse(&f, "x^5 + x").unwrap()).unwrap();
    assert!(!rep.is_permutation);
    assert_eq!(rep.witness, Some(Witness::NotInvolution { x: 1, image: 2, back: 6 }));

    let f = Field::parse("11").unwrap();
    let inv = o.compositional_inverse(&f, &SparsePoly::parse(&f, "x^3").unwrap()).unwrap();
    assert_eq!(inv, SparsePoly::monomial(&f, Elem::ONE, 7));
}
