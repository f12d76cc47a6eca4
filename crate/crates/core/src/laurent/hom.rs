use super::{Coeff, ExponentVector, LaurentPoly, Ring};
use crate::error::{Error, Result};

/// A ring homomorphism between Laurent rings, fixed by where each source
/// variable goes. Images must be units (monomials with invertible
/// coefficient) so negative exponents have somewhere to go.
#[derive(Clone, Debug, PartialEq)]
pub struct RingHom<C: Coeff> {
    source: Ring,
    target: Ring,
    images: Vec<LaurentPoly<C>>,
}

impl<C: Coeff> RingHom<C> {
    pub fn new(source: Ring, target: Ring, images: Vec<LaurentPoly<C>>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::InvalidParameter(format!(
                "{} images given for {} variables",
                images.len(),
                source.nvars()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.ring() != target {
                return Err(Error::SignatureMismatch { left: img.ring(), right: target });
            }
            let unit = img.as_monomial().is_some_and(|(_, c)| c.inverse().is_some());
            if !unit {
                return Err(Error::NonUnitImage(i));
            }
        }
        Ok(RingHom { source, target, images })
    }

    /// `Φ : L_g -> Z[t^±1]`, sending `t2` to `t` and every other variable to 1.
    pub fn phi(genus: u32) -> Result<Self> {
        let source = Ring::genus(genus)?;
        let t2 = genus as usize - 1;
        let images = (0..source.nvars())
            .map(|i| {
                if i == t2 {
                    LaurentPoly::t_pow(1)
                } else {
                    LaurentPoly::one(Ring::Univariate)
                }
            })
            .collect();
        RingHom::new(source, Ring::Univariate, images)
    }

    pub fn source(&self) -> Ring {
        self.source
    }

    pub fn target(&self) -> Ring {
        self.target
    }

    pub fn apply(&self, f: &LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(f.ring(), self.source, "homomorphism applied outside its source ring");
        let monos: Vec<(&ExponentVector, &C)> =
            self.images.iter().map(|p| p.as_monomial().expect("unit image")).collect();
        let mut out = LaurentPoly::zero(self.target);
        for (exp, c) in f.terms() {
            let mut e = ExponentVector::zero(self.target.nvars());
            let mut coeff = c.clone();
            for (&k, (ie, ic)) in exp.entries().iter().zip(&monos) {
                if k == 0 {
                    continue;
                }
                for (slot, x) in e.0.iter_mut().zip(ie.entries()) {
                    *slot += k * x;
                }
                let unit = if k > 0 { (*ic).clone() } else { ic.inverse().expect("unit image") };
                for _ in 0..k.unsigned_abs() {
                    coeff = coeff * unit.clone();
                }
            }
            out.add_term(e, coeff);
        }
        out
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &RingHom<C>) -> Result<RingHom<C>> {
        if next.source != self.target {
            return Err(Error::SignatureMismatch { left: self.target, right: next.source });
        }
        let images = self.images.iter().map(|p| next.apply(p)).collect();
        RingHom::new(self.source, next.target, images)
    }

    pub fn identity(ring: Ring) -> Self {
        let images = (0..ring.nvars())
            .map(|i| LaurentPoly::var(ring, i).expect("index in range"))
            .collect();
        RingHom { source: ring, target: ring, images }
    }
}
