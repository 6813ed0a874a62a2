//! Explicit involution families with their hypothesis validators, plus a
//! string-keyed front end (`FamilySpec`) used by the command line.

pub mod conj;
pub mod geometric;
pub mod palindromic;
pub mod reversal;
pub mod subfield;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::{RhsForm, SparsePoly};

pub use conj::{gen_conj_symmetric, gen_cor_qb, omega_set};
pub use geometric::gen_geometric;
pub use palindromic::{free_positions, gen_cor_m4d4, gen_cor_mdq1, gen_palindromic};
pub use reversal::{exm_case_verdict, exm_gcd_verdict, gen_cor_exm, gen_reversal, ReversalOutcome};
pub use subfield::{check_iff_subgroup, lift_example_exm, lift_example_r1, lift_involution};

/// One hypothesis and whether it holds, with the observed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for ConditionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.detail.is_empty() {
            write!(f, "{}", self.name)
        } else {
            write!(f, "{} ({})", self.name, self.detail)
        }
    }
}

pub(crate) fn check(name: &str, passed: bool, detail: String) -> ConditionCheck {
    ConditionCheck { name: name.to_string(), passed, detail }
}

/// `q` for a field of size `q^2`.
pub fn quadratic_base(field: &Field) -> Result<u64> {
    if field.n() % 2 != 0 {
        return Err(Error::WrongFieldShape(format!("F_{} is not of the form F_(q^2)", field.q())));
    }
    Ok(field.p().pow(field.n() / 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyId {
    ThmConjSymmetric,
    CorQb,
    ThmPalindromic,
    CorMdq1,
    CorM4d4,
    ThmReversal,
    CorExm,
    ThmGeometric,
    Lift,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::ThmConjSymmetric,
        FamilyId::CorQb,
        FamilyId::ThmPalindromic,
        FamilyId::CorMdq1,
        FamilyId::CorM4d4,
        FamilyId::ThmReversal,
        FamilyId::CorExm,
        FamilyId::ThmGeometric,
        FamilyId::Lift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::ThmConjSymmetric => "thm-conj-symmetric",
            FamilyId::CorQb => "cor-qb",
            FamilyId::ThmPalindromic => "thm-palindromic",
            FamilyId::CorMdq1 => "cor-mdq1",
            FamilyId::CorM4d4 => "cor-m4d4",
            FamilyId::ThmReversal => "thm-reversal",
            FamilyId::CorExm => "cor-exm",
            FamilyId::ThmGeometric => "thm-geometric",
            FamilyId::Lift => "lift",
        }
    }

    /// Parameter names and meaning, as shown by `family list`.
    pub fn schema(self) -> &'static [(&'static str, &'static str)] {
        match self {
            FamilyId::ThmConjSymmetric => &[
                ("r", "integer, r = -1 mod q-1 and 2(r^2-1)/(q-1) = 0 mod q+1"),
                ("coeffs", "i:elem;i:elem;... with every i in Omega"),
            ],
            FamilyId::CorQb => &[("i", "integer in [1, q]"), ("b", "nonzero element, square iff q = 1 mod 4")],
            FamilyId::ThmPalindromic => &[
                ("q", "base field size; the field is F_(q^m)"),
                ("m", "extension degree"),
                ("d", "divisor of gcd(q-1, m)"),
                ("r", "integer, r = -1 mod (q^m-1)/d"),
                ("free", "elem;elem;... in F_q at the free positions"),
            ],
            FamilyId::CorMdq1 => &[("q", "2^k >= 4; the field is F_(q^(q-1))"), ("a", "element of F_q"), ("b", "element of F_q")],
            FamilyId::CorM4d4 => &[
                ("q", "3^(2k); the field is F_(q^4)"),
                ("a", "element of F_q"),
                ("b", "element of F_q"),
                ("c", "element of F_q"),
            ],
            FamilyId::ThmReversal => &[
                ("r", "integer, r = -1 mod q-1"),
                ("coeffs", "a0;a1;...;aD with D = r-1 mod q+1 and a_(D-i) = a_i^q"),
            ],
            FamilyId::CorExm => &[("a", "nonzero element of F_(q^2), q odd")],
            FamilyId::ThmGeometric => &[
                ("q", "base field size; the field is F_(q^m)"),
                ("d", "divisor of q+1"),
                ("m", "even extension degree"),
                ("k", "number of terms"),
            ],
            FamilyId::Lift => &[
                ("base", "subfield descriptor such as 2^2 or 3^2"),
                ("m", "extension degree with gcd(q-1, m) = 1"),
                ("r", "integer, r^2 = 1 mod (q^m-1)/(q-1)"),
                ("h", "polynomial over the base field; or example=r1 with n1, or example=exm with a"),
            ],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family id with raw `key=value` parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub params: BTreeMap<String, String>,
}

impl FamilySpec {
    /// Parses `k=v,k=v,...`; empty text gives no parameters.
    pub fn parse(id: &str, params: &str) -> Result<Self> {
        let id = id.parse()?;
        let mut map = BTreeMap::new();
        let mut pos = 0;
        for part in params.split(',') {
            if !part.trim().is_empty() {
                let (k, v) = part
                    .split_once('=')
                    .ok_or_else(|| Error::parse(pos, format!("expected key=value, found '{part}'")))?;
                map.insert(k.trim().to_string(), v.trim().to_string());
            }
            pos += part.len() + 1;
        }
        Ok(FamilySpec { id, params: map })
    }

    fn raw(&self, key: &str) -> Result<&str> {
        self.params
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::precondition(format!("{} needs parameter '{key}'", self.id)))
    }

    fn int(&self, key: &str) -> Result<u64> {
        let v = self.raw(key)?;
        v.parse().map_err(|_| Error::parse(0, format!("parameter {key}: expected an integer, found '{v}'")))
    }

    fn small(&self, key: &str) -> Result<u32> {
        u32::try_from(self.int(key)?).map_err(|_| Error::parse(0, format!("parameter {key} is too large")))
    }

    fn elem(&self, field: &Field, key: &str) -> Result<Elem> {
        field.parse_elem(self.raw(key)?)
    }

    fn elems(&self, field: &Field, key: &str) -> Result<Vec<Elem>> {
        self.raw(key)?.split(';').map(|t| field.parse_elem(t)).collect()
    }

    fn indexed(&self, field: &Field, key: &str) -> Result<Vec<(u64, Elem)>> {
        self.raw(key)?
            .split(';')
            .map(|t| {
                let (i, c) = t
                    .split_once(':')
                    .ok_or_else(|| Error::parse(0, format!("expected i:elem, found '{t}'")))?;
                let i = i.trim().parse().map_err(|_| Error::parse(0, format!("bad index '{i}'")))?;
                Ok((i, field.parse_elem(c)?))
            })
            .collect()
    }
}

/// What a family produced. `rhs` is absent for the geometric family, whose
/// natural output is the expanded polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyOutput {
    pub poly: SparsePoly,
    pub rhs: Option<RhsForm>,
    /// Set by the reversal family when h has a root on mu_{q+1}.
    pub root: Option<Elem>,
}

impl FamilyOutput {
    fn from_rhs(field: &Field, rhs: RhsForm) -> Self {
        FamilyOutput { poly: rhs.expand(field), rhs: Some(rhs), root: None }
    }
}

fn lift_base(spec: &FamilySpec, ext: &Field) -> Result<(Field, u32)> {
    let base = Field::parse(spec.raw("base")?)?;
    if base.p() != ext.p() || ext.n() % base.n() != 0 {
        return Err(Error::WrongFieldShape(format!("F_{} is not a subfield of F_{}", base.q(), ext.q())));
    }
    let m = ext.n() / base.n();
    Ok((base, m))
}

/// Evaluates every hypothesis of the named family on `field`.
pub fn validate(field: &Field, spec: &FamilySpec) -> Result<Vec<ConditionCheck>> {
    Ok(match spec.id {
        FamilyId::ThmConjSymmetric => {
            let q = quadratic_base(field)?;
            let r = spec.int("r")?;
            let coeffs = spec.indexed(field, "coeffs")?;
            let mut out = conj::conj_conditions(q, r);
            if out.iter().all(|c| c.passed) {
                let omega = omega_set(q, r)?;
                let outside: Vec<u64> = coeffs.iter().map(|c| c.0).filter(|i| !omega.contains(i)).collect();
                out.push(check("indices in Omega", outside.is_empty(), format!("outside: {outside:?}")));
                let h = conj::conj_symmetric_h(field, q, &coeffs);
                out.push(root_check(field, &h, q + 1, "h has no root in mu_(q+1)")?);
            }
            out
        }
        FamilyId::CorQb => {
            let q = quadratic_base(field)?;
            conj::qb_conditions(field, q, spec.int("i")?, spec.elem(field, "b")?)
        }
        FamilyId::ThmPalindromic => {
            let (q, m, d, r) = (spec.int("q")?, spec.small("m")?, spec.int("d")?, spec.int("r")?);
            let free = spec.elems(field, "free")?;
            let (conds, shape) = palindromic::palindromic_conditions(field, q, m, d, r);
            match shape {
                None => conds,
                Some(shape) => match palindromic::complete_coefficients(d, shape.e, &free) {
                    Ok(h) => palindromic::validate_palindromic(field, q, m, d, r, &h),
                    Err(e) => {
                        let mut conds = conds;
                        conds.push(check("free coefficient count", false, e.to_string()));
                        conds
                    }
                },
            }
        }
        FamilyId::CorMdq1 => {
            let q = spec.int("q")?;
            let (m, d, r, h) = palindromic::mdq1_parts(field, q, spec.elem(field, "a")?, spec.elem(field, "b")?)?;
            palindromic::validate_palindromic(field, q, m, d, r, &h)
        }
        FamilyId::CorM4d4 => {
            let q = spec.int("q")?;
            let (a, b, c) = (spec.elem(field, "a")?, spec.elem(field, "b")?, spec.elem(field, "c")?);
            let (m, d, r, h) = palindromic::m4d4_parts(field, q, a, b, c)?;
            palindromic::validate_palindromic(field, q, m, d, r, &h)
        }
        FamilyId::ThmReversal => {
            let q = quadratic_base(field)?;
            let coeffs = spec.elems(field, "coeffs")?;
            let mut out = reversal::reversal_conditions(field, q, spec.int("r")?, &coeffs);
            if out.iter().all(|c| c.passed) {
                let h = SparsePoly::from_dense(field, &coeffs);
                out.push(root_check(field, &h, q + 1, "h has no root in mu_(q+1) (iff)")?);
            }
            out
        }
        FamilyId::CorExm => reversal::exm_conditions(field, spec.elem(field, "a")?)?,
        FamilyId::ThmGeometric => {
            let (q, d, m, k) = (spec.int("q")?, spec.int("d")?, spec.small("m")?, spec.int("k")?);
            geometric::geometric_conditions(field, q, d, m, k).0
        }
        FamilyId::Lift => {
            let (base, m) = lift_base(spec, field)?;
            let r = match spec.params.get("example").map(String::as_str) {
                Some(_) => 1,
                None => spec.int("r")?,
            };
            let mut out = subfield::lift_conditions(&base, m, r);
            if out.iter().all(|c| c.passed) {
                let verdict = match generate(field, spec) {
                    Ok(_) => (true, String::new()),
                    Err(Error::BaseNotInvolution(x)) => (false, format!("witness x = {x}")),
                    Err(e) => return Err(e),
                };
                out.push(check("g = x^r h(x)^m is an involution on F_q", verdict.0, verdict.1));
            }
            out
        }
    })
}

fn root_check(field: &Field, h: &SparsePoly, d: u64, name: &str) -> Result<ConditionCheck> {
    let root = conj::first_root(field, h, d)?;
    Ok(check(
        name,
        root.is_none(),
        root.map(|b| format!("h({}) = 0", field.format_elem_power(b))).unwrap_or_default(),
    ))
}

/// Runs the family's generator.
pub fn generate(field: &Field, spec: &FamilySpec) -> Result<FamilyOutput> {
    let out = match spec.id {
        FamilyId::ThmConjSymmetric => {
            FamilyOutput::from_rhs(field, gen_conj_symmetric(field, spec.int("r")?, &spec.indexed(field, "coeffs")?)?)
        }
        FamilyId::CorQb => FamilyOutput::from_rhs(field, gen_cor_qb(field, spec.int("i")?, spec.elem(field, "b")?)?),
        FamilyId::ThmPalindromic => FamilyOutput::from_rhs(
            field,
            gen_palindromic(
                field,
                spec.int("q")?,
                spec.small("m")?,
                spec.int("d")?,
                spec.int("r")?,
                &spec.elems(field, "free")?,
            )?,
        ),
        FamilyId::CorMdq1 => FamilyOutput::from_rhs(
            field,
            gen_cor_mdq1(field, spec.int("q")?, spec.elem(field, "a")?, spec.elem(field, "b")?)?,
        ),
        FamilyId::CorM4d4 => FamilyOutput::from_rhs(
            field,
            gen_cor_m4d4(
                field,
                spec.int("q")?,
                spec.elem(field, "a")?,
                spec.elem(field, "b")?,
                spec.elem(field, "c")?,
            )?,
        ),
        FamilyId::ThmReversal => {
            let outcome = gen_reversal(field, spec.int("r")?, &spec.elems(field, "coeffs")?)?;
            FamilyOutput { poly: outcome.rhs.expand(field), root: outcome.root, rhs: Some(outcome.rhs) }
        }
        FamilyId::CorExm => FamilyOutput::from_rhs(field, gen_cor_exm(field, spec.elem(field, "a")?)?),
        FamilyId::ThmGeometric => {
            let poly = gen_geometric(field, spec.int("q")?, spec.int("d")?, spec.small("m")?, spec.int("k")?)?;
            FamilyOutput { poly, rhs: None, root: None }
        }
        FamilyId::Lift => {
            let (base, m) = lift_base(spec, field)?;
            let rhs = match spec.params.get("example").map(String::as_str) {
                Some("r1") => lift_example_r1(&base, field, spec.int("n1")?)?,
                Some("exm") => lift_example_exm(&base, field, spec.elem(&base, "a")?)?,
                Some(other) => return Err(Error::precondition(format!("unknown lift example '{other}'"))),
                None => {
                    let h = SparsePoly::parse(&base, spec.raw("h")?)?;
                    lift_involution(&base, field, m, spec.int("r")?, &h)?
                }
            };
            FamilyOutput::from_rhs(field, rhs)
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_roundtrip() {
        for id in FamilyId::ALL {
            assert_eq!(id.name().parse::<FamilyId>().unwrap(), id);
            assert!(!id.schema().is_empty());
        }
        assert_eq!("thm-nope".parse::<FamilyId>(), Err(Error::UnknownFamily("thm-nope".into())));
    }

    #[test]
    fn validate_geometric_example() {
        let f = Field::parse("3^8").unwrap();
        let spec = FamilySpec::parse("thm-geometric", "q=9,d=5,m=4,k=4").unwrap();
        let checks = validate(&f, &spec).unwrap();
        assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        let out = generate(&f, &spec).unwrap();
        assert_eq!(out.poly.display(&f), "x^3937 + x^2625 + x^1313 + x");
        let spec = FamilySpec::parse("thm-geometric", "q=9,d=5,m=4,k=3").unwrap();
        let failed: Vec<_> = validate(&f, &spec).unwrap().into_iter().filter(|c| !c.passed).collect();
        assert_eq!(failed.len(), 2);
        assert!(failed.iter().any(|c| c.name == "k^2 = 1 mod p"));
    }

    #[test]
    fn validate_exm_even() {
        let f = Field::parse("2^4").unwrap();
        let spec = FamilySpec::parse("cor-exm", "a=a^0").unwrap();
        let checks = validate(&f, &spec).unwrap();
        assert!(!checks[0].passed);
        assert_eq!(generate(&f, &spec).unwrap_err(), Error::EvenQNoSolution);
    }

    #[test]
    fn spec_dispatch_examples() {
        let f25 = Field::parse("5^2").unwrap();
        let out = generate(&f25, &FamilySpec::parse("cor-exm", "a=a^0").unwrap()).unwrap();
        assert_eq!(out.poly.display(&f25), "x^11 + x^3");
        let out = generate(&f25, &FamilySpec::parse("thm-conj-symmetric", "r=19,coeffs=1:1").unwrap()).unwrap();
        assert_eq!(out.rhs.unwrap().h().display(&f25), "x^5 + x");

        let f64 = Field::parse("2^6").unwrap();
        let spec = FamilySpec::parse("cor-mdq1", "q=4,a=a^21,b=a^42").unwrap();
        assert!(validate(&f64, &spec).unwrap().iter().all(|c| c.passed));
        let spec = FamilySpec::parse("thm-palindromic", "q=4,m=3,d=3,r=20,free=a^42;a^21").unwrap();
        assert_eq!(generate(&f64, &spec).unwrap().poly.display(&f64), "a^21*x^62 + a^42*x^41 + a^42*x^20");

        let f16 = Field::parse("2^4").unwrap();
        let spec = FamilySpec::parse("lift", "base=2^2,example=r1,n1=0").unwrap();
        assert!(validate(&f16, &spec).unwrap().iter().all(|c| c.passed));
        let spec = FamilySpec::parse("lift", "base=2^2,r=1,h=1").unwrap();
        assert_eq!(generate(&f16, &spec).unwrap().poly, SparsePoly::x(&f16));

        let f49 = Field::parse("7^2").unwrap();
        let spec = FamilySpec::parse("thm-reversal", "r=5,coeffs=1;0;1;0;1").unwrap();
        let out = generate(&f49, &spec).unwrap();
        assert!(out.rhs.is_some());
    }

    #[test]
    fn missing_parameter_is_reported() {
        let f = Field::parse("5^2").unwrap();
        let spec = FamilySpec::parse("cor-qb", "i=1").unwrap();
        assert!(matches!(validate(&f, &spec), Err(Error::PreconditionViolated(v)) if v[0].contains("'b'")));
        assert!(matches!(FamilySpec::parse("cor-qb", "i"), Err(Error::Parse { .. })));
    }
}
