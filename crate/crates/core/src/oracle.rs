//! Exhaustive ground truth: evaluate a polynomial at every element and
//! inspect the value table. Nothing here depends on the criterion module.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::poly::{interpolate_function, SparsePoly, INTERPOLATION_CAP};

pub const DEFAULT_CAP: u64 = 1 << 20;
/// Value tables at least this large are evaluated on the rayon pool.
const PARALLEL_THRESHOLD: u64 = 1 << 14;

/// Why a map failed, located at the smallest failing encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `x < y` and `f(x) = f(y) = value`.
    Collision { x: u32, y: u32, value: u32 },
    /// `f(f(x)) = back != x`, with `image = f(x)`.
    NotInvolution { x: u32, image: u32, back: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermReport {
    pub is_permutation: bool,
    /// `None` when only the permutation property was checked.
    pub is_involution: Option<bool>,
    pub fixed_point_count: Option<u64>,
    pub witness: Option<Witness>,
    pub modulus: Vec<u32>,
    pub alpha: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub cap: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

fn first_collision(values: &[Elem]) -> Option<Witness> {
    let mut seen: Vec<u32> = vec![u32::MAX; values.len()];
    for (x, v) in values.iter().enumerate() {
        let slot = &mut seen[v.encoding() as usize];
        if *slot != u32::MAX {
            return Some(Witness::Collision { x: *slot, y: x as u32, value: v.encoding() });
        }
        *slot = x as u32;
    }
    None
}

impl Oracle {
    pub fn new(cap: u64) -> Self {
        Oracle { cap }
    }

    fn guard(&self, field: &Field) -> Result<()> {
        if field.q() > self.cap {
            return Err(Error::FieldTooLarge { q: field.q(), cap: self.cap });
        }
        Ok(())
    }

    /// `f(x)` for every x in ascending encoding order.
    pub fn values(&self, field: &Field, f: &SparsePoly) -> Result<Vec<Elem>> {
        self.guard(field)?;
        let q = field.q() as u32;
        Ok(if field.q() >= PARALLEL_THRESHOLD {
            (0..q).into_par_iter().map(|x| f.eval(field, Elem(x))).collect()
        } else {
            (0..q).map(|x| f.eval(field, Elem(x))).collect()
        })
    }

    pub fn is_permutation(&self, field: &Field, f: &SparsePoly) -> Result<PermReport> {
        let values = self.values(field, f)?;
        let witness = first_collision(&values);
        Ok(PermReport {
            is_permutation: witness.is_none(),
            is_involution: None,
            fixed_point_count: None,
            witness,
            modulus: field.modulus().to_vec(),
            alpha: field.alpha().encoding(),
        })
    }

    pub fn is_involution(&self, field: &Field, f: &SparsePoly) -> Result<PermReport> {
        let values = self.values(field, f)?;
        Ok(report_from_table(field, &values))
    }

    /// The polynomial of degree < q inducing the inverse map.
    pub fn compositional_inverse(&self, field: &Field, f: &SparsePoly) -> Result<SparsePoly> {
        let values = self.values(field, f)?;
        if first_collision(&values).is_some() {
            return Err(Error::NotAPermutation);
        }
        let mut inverse = vec![Elem::ZERO; values.len()];
        for (x, v) in values.iter().enumerate() {
            inverse[v.encoding() as usize] = Elem(x as u32);
        }
        interpolate_function(field, &inverse, self.cap.min(INTERPOLATION_CAP))
    }
}

/// Involution report for an arbitrary value table indexed by encoding.
pub fn report_from_table(field: &Field, values: &[Elem]) -> PermReport {
    let collision = first_collision(values);
    let mut fixed = 0u64;
    let mut violation = None;
    for (x, v) in values.iter().enumerate() {
        if v.encoding() as usize == x {
            fixed += 1;
        }
        let back = values[v.encoding() as usize];
        if violation.is_none() && back.encoding() as usize != x {
            violation = Some(Witness::NotInvolution { x: x as u32, image: v.encoding(), back: back.encoding() });
        }
    }
    PermReport {
        is_permutation: collision.is_none(),
        is_involution: Some(violation.is_none()),
        fixed_point_count: Some(fixed),
        witness: violation,
        modulus: field.modulus().to_vec(),
        alpha: field.alpha().encoding(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: &Field, t: &str) -> SparsePoly {
        SparsePoly::parse(field, t).unwrap()
    }

    #[test]
    fn permutation_examples() {
        let f7 = Field::prime(7).unwrap();
        let o = Oracle::default();
        let r = o.is_permutation(&f7, &poly(&f7, "x^3")).unwrap();
        assert!(!r.is_permutation);
        assert_eq!(r.witness, Some(Witness::Collision { x: 1, y: 2, value: 1 }));
        assert!(o.is_permutation(&f7, &poly(&f7, "x^5")).unwrap().is_permutation);
    }

    #[test]
    fn involution_examples() {
        let o = Oracle::default();
        let f5 = Field::prime(5).unwrap();
        let r = o.is_involution(&f5, &poly(&f5, "x^3")).unwrap();
        assert_eq!(r.is_involution, Some(true));
        assert_eq!(r.fixed_point_count, Some(3));
        assert_eq!(r.witness, None);

        let f4 = Field::new(2, 2, None).unwrap();
        let r = o.is_involution(&f4, &poly(&f4, "a*x")).unwrap();
        assert_eq!(r.is_involution, Some(false));
        assert!(r.is_permutation);
        // f(f(1)) = alpha^2 = alpha + 1, encoding 3
        assert_eq!(r.witness, Some(Witness::NotInvolution { x: 1, image: 2, back: 3 }));

        let f7 = Field::prime(7).unwrap();
        let f = poly(&f7, "2*x^5 + 3*x^3 + 3*x");
        let r = o.is_involution(&f7, &f).unwrap();
        assert_eq!(r.is_involution, Some(true));
        assert_eq!(r.fixed_point_count, Some(3));
        let table: Vec<u32> = o.values(&f7, &f).unwrap().iter().map(|v| v.encoding()).collect();
        assert_eq!(table, vec![0, 1, 3, 2, 5, 4, 6]);
    }

    #[test]
    fn inverse_examples() {
        let o = Oracle::default();
        let f11 = Field::prime(11).unwrap();
        assert_eq!(o.compositional_inverse(&f11, &poly(&f11, "x^3")).unwrap(), poly(&f11, "x^7"));
        assert_eq!(o.compositional_inverse(&f11, &poly(&f11, "x")).unwrap(), poly(&f11, "x"));
        assert_eq!(o.compositional_inverse(&f11, &poly(&f11, "x^2")), Err(Error::NotAPermutation));
        let f7 = Field::prime(7).unwrap();
        let inv = poly(&f7, "2*x^5 + 3*x^3 + 3*x");
        assert_eq!(o.compositional_inverse(&f7, &inv).unwrap(), inv);
    }

    #[test]
    fn cap_is_enforced() {
        let f = Field::new(2, 10, None).unwrap();
        let o = Oracle::new(512);
        assert_eq!(
            o.is_permutation(&f, &SparsePoly::x(&f)),
            Err(Error::FieldTooLarge { q: 1024, cap: 512 })
        );
    }

    #[test]
    fn parallel_and_sequential_tables_agree() {
        let f = Field::new(2, 15, None).unwrap();
        let p = poly(&f, "a^3*x^5 + x^77 + a^9*x");
        let par = Oracle::default().values(&f, &p).unwrap();
        let seq: Vec<Elem> = f.elements().map(|x| p.eval(&f, x)).collect();
        assert_eq!(par, seq);
    }
}
