//! Random generators for lifts and matrices, used by property checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::cover::{CycleClass, Generator, LiftClass};
use crate::laurent::{ExponentVector, LaurentPoly, QPoly, Ring, ZPoly};
use crate::matrix::Matrix2;

fn small_int<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

/// Integer Laurent polynomial with up to `terms` terms and exponents in `[-spread, spread]`.
pub fn laurent_z<R: Rng + ?Sized>(rng: &mut R, ring: Ring, terms: usize, spread: i64) -> ZPoly {
    let n = ring.nvars();
    let items: Vec<(ExponentVector, BigInt)> = (0..rng.gen_range(1..=terms.max(1)))
        .map(|_| {
            let e = ExponentVector((0..n).map(|_| rng.gen_range(-spread..=spread)).collect());
            (e, BigInt::from(small_int(rng, 3)))
        })
        .collect();
    ZPoly::from_terms(ring, items)
}

/// A lift passing validation: `m = p·f` and `n = q·f·s` with `f(1) = 0`
/// and `s` fixed by the involution, so `m̄ n` is symmetric.
/// The `W`-part is an arbitrary combination of commutator generators.
pub fn valid_lift<R: Rng + ?Sized>(rng: &mut R, genus: u32) -> LiftClass {
    let ring = Ring::Genus(genus);
    let f0 = laurent_z(rng, ring, 3, 1);
    let f = &f0 - &ZPoly::constant(ring, f0.evaluate_at_one());
    let h = laurent_z(rng, ring, 2, 1);
    let s = &h + &h.involution();
    let p = ZPoly::from_int(ring, small_int(rng, 2));
    let q = ZPoly::from_int(ring, small_int(rng, 2));
    let m = &p * &f;
    let n = &(&q * &f) * &s;
    let comms = Generator::comms(genus);
    let mut w_terms = Vec::new();
    if !comms.is_empty() {
        for _ in 0..rng.gen_range(0..=2) {
            let g = comms[rng.gen_range(0..comms.len())];
            w_terms.push((g, laurent_z(rng, ring, 2, 1)));
        }
    }
    let w = CycleClass::from_terms(genus, w_terms).expect("commutators only");
    let lift = LiftClass::new(
        genus,
        w,
        m.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
        n.terms().map(|(e, c)| (e.clone(), c.clone())).collect(),
    )
    .expect("well-formed");
    debug_assert!(lift.is_valid());
    lift
}

fn q_coeff<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let den = rng.gen_range(1..=3);
    BigRational::new(BigInt::from(small_int(rng, 4)), BigInt::from(den))
}

/// Rational Laurent polynomial in `t` with exponents in `[low, high]`.
pub fn laurent_q<R: Rng + ?Sized>(rng: &mut R, low: i64, high: i64, terms: usize) -> QPoly {
    let items: Vec<(ExponentVector, BigRational)> = (0..rng.gen_range(1..=terms.max(1)))
        .map(|_| (ExponentVector(vec![rng.gen_range(low..=high)]), q_coeff(rng)))
        .collect();
    QPoly::from_terms(Ring::Univariate, items)
}

fn unipotent(upper: bool, p: QPoly) -> Matrix2<QPoly> {
    let one = QPoly::one(Ring::Univariate);
    let zero = QPoly::zero(Ring::Univariate);
    if upper {
        Matrix2::new(one.clone(), p, zero, one)
    } else {
        Matrix2::new(one.clone(), zero, p, one)
    }
}

fn unit_diag<R: Rng + ?Sized>(rng: &mut R) -> Matrix2<QPoly> {
    let mut c = q_coeff(rng);
    while num_traits::Zero::is_zero(&c) {
        c = q_coeff(rng);
    }
    let inv = num_traits::Inv::inv(c.clone());
    Matrix2::diag(QPoly::constant(Ring::Univariate, c), QPoly::constant(Ring::Univariate, inv))
}

fn product_of(mut factors: Vec<Matrix2<QPoly>>) -> Matrix2<QPoly> {
    if factors.is_empty() {
        factors.push(Matrix2::identity_like(&QPoly::one(Ring::Univariate)));
    }
    Matrix2::product(&factors).expect("same ring")
}

/// Element of `SL2(Q[t])`: a product of `len` elementary and diagonal factors
/// with entries of degree at most `deg`.
pub fn element_a<R: Rng + ?Sized>(rng: &mut R, len: usize, deg: i64) -> Matrix2<QPoly> {
    let factors = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => unipotent(true, laurent_q(rng, 0, deg, 2)),
            1 => unipotent(false, laurent_q(rng, 0, deg, 2)),
            _ => unit_diag(rng),
        })
        .collect();
    product_of(factors)
}

/// Element of `U`: lower-left entries carry a factor of `t`.
pub fn element_u<R: Rng + ?Sized>(rng: &mut R, len: usize, deg: i64) -> Matrix2<QPoly> {
    let factors = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => unipotent(true, laurent_q(rng, 0, deg, 2)),
            1 => unipotent(false, laurent_q(rng, 1, deg.max(1), 2)),
            _ => unit_diag(rng),
        })
        .collect();
    product_of(factors)
}

/// `diag(t^-1, 1) x diag(t, 1)`.
pub fn conjugate_into_b(x: &Matrix2<QPoly>) -> Matrix2<QPoly> {
    let shift = |p: &QPoly, k: i64| p.shift(&ExponentVector(vec![k]));
    Matrix2::new(x.a.clone(), shift(&x.b, -1), shift(&x.c, 1), x.d.clone())
}

pub fn element_b<R: Rng + ?Sized>(rng: &mut R, len: usize, deg: i64) -> Matrix2<QPoly> {
    conjugate_into_b(&element_a(rng, len, deg))
}

/// Element of `SL2(Q[t, t^-1])`: elementary factors with Laurent entries
/// in `[-deg, deg]`, occasionally a `diag(t^k, t^-k)`.
pub fn element_sl2<R: Rng + ?Sized>(rng: &mut R, len: usize, deg: i64) -> Matrix2<QPoly> {
    let factors = (0..len)
        .map(|_| match rng.gen_range(0..4) {
            0 => unipotent(true, laurent_q(rng, -deg, deg, 2)),
            1 => unipotent(false, laurent_q(rng, -deg, deg, 2)),
            2 => {
                let k = rng.gen_range(-2..=2);
                Matrix2::diag(LaurentPoly::t_pow(k), LaurentPoly::t_pow(-k))
            }
            _ => unit_diag(rng),
        })
        .collect();
    product_of(factors)
}

/// Alternating random word of `A`- and `B`-letters of the given length.
pub fn amalgam_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Matrix2<QPoly> {
    let start_a = rng.gen_bool(0.5);
    let factors = (0..len)
        .map(|i| if (i % 2 == 0) == start_a { element_a(rng, 2, 2) } else { element_b(rng, 2, 2) })
        .collect();
    product_of(factors)
}
