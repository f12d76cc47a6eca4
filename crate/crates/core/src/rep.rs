//! The 2×2 representation of bounding-curve twists on the `(a1, b1)`
//! quotient, and the named matrices `N` and `M_k`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::cover::{twist_apply, CycleClass, EpsilonTable, Generator, LiftClass};
use crate::error::{Error, Result};
use crate::laurent::{parse, Coeff, ExponentVector, LaurentPoly, Ring, ZPoly};
use crate::matrix::Matrix2;

/// `Σ_{i,p} x_i y_p u^{p-i}` over the two coefficient families.
fn double_sum(
    ring: Ring,
    x: &std::collections::BTreeMap<ExponentVector, BigInt>,
    y: &std::collections::BTreeMap<ExponentVector, BigInt>,
) -> ZPoly {
    let mut terms = Vec::with_capacity(x.len() * y.len());
    for (i, xi) in x {
        for (p, yp) in y {
            terms.push((p - i, xi * yp));
        }
    }
    ZPoly::from_terms(ring, terms)
}

/// The twist matrix before specializing, over the genus ring:
/// `[[1 + Σ n_i m_p u^{p-i}, -Σ m_i m_p u^{p-i}], [Σ n_i n_p u^{p-i}, 1 - Σ m_i n_p u^{p-i}]]`.
pub fn rho_pre_phi(lift: &LiftClass) -> Result<Matrix2<ZPoly>> {
    lift.validate().map_err(Error::InvalidLift)?;
    let ring = lift.ring();
    let one = ZPoly::one(ring);
    let (m, n) = (lift.m(), lift.n());
    Ok(Matrix2::new(
        &one + &double_sum(ring, n, m),
        -double_sum(ring, m, m),
        double_sum(ring, n, n),
        &one - &double_sum(ring, m, n),
    ))
}

/// `ρ(t_C)`: the pre-specialized matrix pushed through `Φ` into `SL2(Z[t^±1])`.
pub fn rho(lift: &LiftClass) -> Result<Matrix2<ZPoly>> {
    let pre = rho_pre_phi(lift)?;
    let out = pre.map(|p| p.specialize_phi())?;
    debug_assert!(out.det().map(|d| d.is_one()).unwrap_or(false));
    Ok(out)
}

/// `ρ(t_C)` read off from the twist action: columns are the `Φ`-images of
/// the `(a1, b1)` coordinates of the twisted `a1` and `b1`.
pub fn rho_via_twist(lift: &LiftClass, eps: &EpsilonTable) -> Result<Matrix2<ZPoly>> {
    let g = lift.genus();
    let a1 = twist_apply(lift, &CycleClass::generator(g, Generator::A1)?, eps)?;
    let b1 = twist_apply(lift, &CycleClass::generator(g, Generator::B1)?, eps)?;
    let (a, c) = a1.phi_coords()?;
    let (b, d) = b1.phi_coords()?;
    Ok(Matrix2::new(a, b, c, d))
}

/// `N = [[1, t - 2 + t^-1], [0, 1]]`.
pub fn matrix_n() -> Matrix2<ZPoly> {
    let r = Ring::Univariate;
    Matrix2::new(ZPoly::one(r), parse("t - 2 + t^-1", r).expect("literal"), ZPoly::zero(r), ZPoly::one(r))
}

/// `M_k = [[1, 0], [k, 1]]` for `k >= 1`.
pub fn matrix_mk(k: i64) -> Result<Matrix2<ZPoly>> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("M_k needs k >= 1, got {k}")));
    }
    let r = Ring::Univariate;
    Ok(Matrix2::new(ZPoly::one(r), ZPoly::zero(r), ZPoly::from_int(r, k), ZPoly::one(r)))
}

/// `M_k N M_k^{-1}`.
pub fn conjugated_n(k: i64) -> Result<Matrix2<ZPoly>> {
    let mk = matrix_mk(k)?;
    Matrix2::product([&mk, &matrix_n(), &mk.inverse_unimodular()?])
}

/// Decomposition `[[1 + P1, Q1], [Q2, 1 - P2]]` with balance verdicts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HFormReport<C: Coeff> {
    pub p1: LaurentPoly<C>,
    pub q1: LaurentPoly<C>,
    pub q2: LaurentPoly<C>,
    pub p2: LaurentPoly<C>,
    /// Verdicts for `P1, Q1, Q2, P2` in that order.
    pub balanced: [bool; 4],
}

impl<C: Coeff> HFormReport<C> {
    pub fn all_balanced(&self) -> bool {
        self.balanced.iter().all(|b| *b)
    }

    pub fn reconstruct(&self) -> Matrix2<LaurentPoly<C>> {
        let one = LaurentPoly::one(self.p1.ring());
        Matrix2::new(&one + &self.p1, self.q1.clone(), self.q2.clone(), &one - &self.p2)
    }

    /// Names of the parts that fail to be balanced.
    pub fn unbalanced(&self) -> Vec<&'static str> {
        ["P1", "Q1", "Q2", "P2"].into_iter().zip(self.balanced).filter(|(_, b)| !b).map(|(n, _)| n).collect()
    }
}

pub fn h_form<C: Coeff>(m: &Matrix2<LaurentPoly<C>>) -> HFormReport<C> {
    let one = LaurentPoly::one(m.a.ring());
    let p1 = &m.a - &one;
    let p2 = &one - &m.d;
    let q1 = m.b.clone();
    let q2 = m.c.clone();
    let balanced = [p1.is_balanced(), q1.is_balanced(), q2.is_balanced(), p2.is_balanced()];
    HFormReport { p1, q1, q2, p2, balanced }
}

/// Exact product of a nonempty sequence of matrices.
pub fn multiply<C: Coeff>(ms: &[Matrix2<LaurentPoly<C>>]) -> Result<Matrix2<LaurentPoly<C>>> {
    Matrix2::product(ms)
}

/// `R1 - R2` for the pre-specialized matrix, where `a = 1 + R1` and
/// `d = 1 - R2`. Zero for every lift satisfying the self-intersection identity.
pub fn r1_minus_r2(lift: &LiftClass) -> ZPoly {
    let ring = lift.ring();
    let (m, n) = (lift.m(), lift.n());
    let r1 = double_sum(ring, n, m);
    let r2 = double_sum(ring, m, n);
    &r1 - &r2
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn z(s: &str) -> ZPoly {
        parse(s, Ring::Univariate).unwrap()
    }

    #[test]
    fn canonical_lift_gives_n() {
        for g in 2..=5 {
            let cs = LiftClass::canonical(g).unwrap();
            let pre = rho_pre_phi(&cs).unwrap();
            let r = Ring::Genus(g);
            assert_eq!(pre, Matrix2::new(ZPoly::one(r), parse("t2 - 2 + t2^-1", r).unwrap(), ZPoly::zero(r), ZPoly::one(r)));
            assert_eq!(rho(&cs).unwrap(), matrix_n());
        }
    }

    #[test]
    fn zero_lift_gives_identity() {
        let l = LiftClass::new(3, CycleClass::zero(3), BTreeMap::new(), BTreeMap::new()).unwrap();
        assert!(rho(&l).unwrap().is_identity());
        assert!(rho_pre_phi(&l).unwrap().is_identity());
    }

    #[test]
    fn named_matrices() {
        assert_eq!(matrix_n().b, z("t - 2 + t^-1"));
        assert_eq!(matrix_mk(1).unwrap(), Matrix2::new(z("1"), z("0"), z("1"), z("1")));
        assert!(matrix_mk(7).unwrap().det().unwrap().is_one());
        assert!(matrix_mk(0).is_err());
        assert!(matrix_mk(-3).is_err());
    }

    #[test]
    fn h_form_examples() {
        let h = h_form(&matrix_n());
        assert!(h.all_balanced());
        assert!(h.p1.is_zero() && h.p2.is_zero() && h.q2.is_zero());
        assert_eq!(h.q1, z("t - 2 + t^-1"));
        let id = Matrix2::identity_like(&z("1"));
        let hi = h_form(&id);
        assert!(hi.all_balanced() && hi.p1.is_zero());
        let bad = Matrix2::new(z("1"), z("t - 1"), z("0"), z("1"));
        let hb = h_form(&bad);
        assert_eq!(hb.unbalanced(), vec!["Q1"]);
        assert_eq!(hb.reconstruct(), bad);
    }

    #[test]
    fn products() {
        let n = matrix_n();
        let nn = multiply(&[n.clone(), n.clone()]).unwrap();
        assert_eq!(nn, Matrix2::new(z("1"), z("2t - 4 + 2t^-1"), z("0"), z("1")));
        // [[1,0],[2,1]] [[1,Q],[0,1]] [[1,0],[-2,1]] with Q = t - 2 + t^-1
        let q = "(t - 2 + t^-1)";
        let expected = Matrix2::new(
            z(&format!("1 - 2{q}")),
            z(q),
            z(&format!("-4{q}")),
            z(&format!("1 + 2{q}")),
        );
        let conj = conjugated_n(2).unwrap();
        assert_eq!(conj, expected);
        assert!(h_form(&conj).all_balanced());
        let m2 = matrix_mk(2).unwrap();
        assert!(multiply(&[m2.clone(), m2.inverse_unimodular().unwrap()]).unwrap().is_identity());
    }

    #[test]
    fn invalid_lift_rejected() {
        let bad = LiftClass::new(
            2,
            CycleClass::zero(2),
            [(ExponentVector(vec![0, 0]), BigInt::from(1))].into_iter().collect(),
            [(ExponentVector(vec![0, 1]), BigInt::from(1))].into_iter().collect(),
        )
        .unwrap();
        assert!(matches!(rho(&bad), Err(Error::InvalidLift(_))));
        assert!(!r1_minus_r2(&bad).is_zero());
    }

    #[test]
    fn twist_route_agrees_on_canonical_family() {
        let cs = LiftClass::canonical(3).unwrap();
        for k in 0..5 {
            let l = crate::cover::pushforward_b1_twist(&cs, k).unwrap();
            assert_eq!(rho_via_twist(&l, &EpsilonTable::zero()).unwrap(), rho(&l).unwrap());
        }
    }
}
