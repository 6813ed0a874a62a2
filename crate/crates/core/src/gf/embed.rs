use super::{Elem, Field};
use crate::error::{Error, Result};

/// Field embedding F_{p^k} -> F_{p^n} for k | n, sending the class of x in
/// the small field to the smallest-encoding root of its modulus in the large
/// one.
#[derive(Clone, Debug)]
pub struct Embedding {
    basis_images: Vec<Elem>,
}

impl Embedding {
    pub fn new(base: &Field, ext: &Field) -> Result<Embedding> {
        if base.p() != ext.p() || ext.n() % base.n() != 0 {
            return Err(Error::WrongFieldShape(format!(
                "F_{} is not a subfield of F_{}",
                base.q(),
                ext.q()
            )));
        }
        let modulus: Vec<Elem> = base.modulus().iter().map(|&c| ext.from_int(c as i64)).collect();
        let root = ext
            .elements()
            .find(|&x| {
                let mut acc = Elem::ZERO;
                for &c in modulus.iter().rev() {
                    acc = ext.add(ext.mul(acc, x), c);
                }
                acc.is_zero()
            })
            .ok_or_else(|| Error::Internal("base modulus has no root in the extension".into()))?;
        let mut basis_images = Vec::with_capacity(base.n() as usize);
        let mut cur = Elem::ONE;
        for _ in 0..base.n() {
            basis_images.push(cur);
            cur = ext.mul(cur, root);
        }
        Ok(Embedding { basis_images })
    }

    pub fn map(&self, base: &Field, ext: &Field, x: Elem) -> Elem {
        base.coeffs(x)
            .iter()
            .zip(&self.basis_images)
            .fold(Elem::ZERO, |acc, (&c, &b)| ext.add(acc, ext.mul(ext.from_int(c as i64), b)))
    }
}
