//! Exact multivariate Laurent polynomials.
//!
//! A [`LaurentPoly`] is a finite map from [`ExponentVector`]s to nonzero
//! coefficients, tagged with the [`Ring`] it lives in. Coefficients are
//! arbitrary precision integers ([`ZPoly`]) or rationals ([`QPoly`]).
//!
//! The genus-`g` ring has `2g - 2` variables ordered `s2..sg, t2..tg`, so
//! variable index `i` (0-based) is `u_{i+1}`.

mod hom;
mod parse;

pub use hom::RingHom;
pub use parse::parse;

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact coefficient domain for [`LaurentPoly`].
pub trait Coeff:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Num + Signed + Send + Sync + 'static
{
    fn from_bigint(v: BigInt) -> Self;
    /// `num / den`, or `None` when the quotient is not in the domain.
    fn from_ratio(num: BigInt, den: BigInt) -> Option<Self>;
    fn to_rational(&self) -> BigRational;
    /// Multiplicative inverse when it exists in the domain.
    fn inverse(&self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn from_bigint(v: BigInt) -> Self {
        v
    }

    fn from_ratio(num: BigInt, den: BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(&num, &den);
        r.is_zero().then_some(q)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }
}

impl Coeff for BigRational {
    fn from_bigint(v: BigInt) -> Self {
        BigRational::from_integer(v)
    }

    fn from_ratio(num: BigInt, den: BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| BigRational::new(num, den))
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

/// Ring signature: which variables a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    /// One variable `t`.
    Univariate,
    /// `2g - 2` variables `s2..sg, t2..tg`.
    Genus(u32),
    /// `n` variables `u1..un`.
    Generic(usize),
}

impl Ring {
    pub fn genus(g: u32) -> Result<Ring> {
        if g < 2 {
            return Err(Error::BadGenus(g));
        }
        Ok(Ring::Genus(g))
    }

    pub fn nvars(&self) -> usize {
        match *self {
            Ring::Univariate => 1,
            Ring::Genus(g) => 2 * g as usize - 2,
            Ring::Generic(n) => n,
        }
    }

    pub fn var_name(&self, index: usize) -> String {
        match *self {
            Ring::Univariate => "t".to_string(),
            Ring::Genus(g) => {
                let half = g as usize - 1;
                if index < half {
                    format!("s{}", index + 2)
                } else {
                    format!("t{}", index - half + 2)
                }
            }
            Ring::Generic(_) => format!("u{}", index + 1),
        }
    }

    /// Variable index for a name, accepting the `u` aliases everywhere.
    pub fn lookup(&self, name: &str) -> Option<usize> {
        let n = self.nvars();
        if *self == Ring::Univariate && name == "t" {
            return Some(0);
        }
        let (head, digits) = name.split_at(1.min(name.len()));
        let k: usize = digits.parse().ok()?;
        if digits.starts_with('0') || digits.starts_with('+') {
            return None;
        }
        match (head, *self) {
            ("u", _) if (1..=n).contains(&k) => Some(k - 1),
            ("s", Ring::Genus(g)) if (2..=g as usize).contains(&k) => Some(k - 2),
            ("t", Ring::Genus(g)) if (2..=g as usize).contains(&k) => Some(g as usize - 1 + k - 2),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Univariate => write!(f, "Z[t^±1]"),
            Ring::Genus(g) => write!(f, "L_{g}"),
            Ring::Generic(n) => write!(f, "Z[u1..u{n}^±1]"),
        }
    }
}

/// Exponents of a Laurent monomial, one per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    pub fn zero(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = vec![0; len];
        v[index] = 1;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Comma-separated form used for JSON map keys.
    pub fn to_key(&self) -> String {
        self.0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn from_key(key: &str) -> Result<Self> {
        key.split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(ExponentVector)
            .map_err(|e| Error::Malformed(format!("exponent key `{key}`: {e}")))
    }

    fn abs_degree(&self) -> i64 {
        self.0.iter().map(|e| e.abs()).sum()
    }
}

impl Add for &ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ExponentVector {
    type Output = ExponentVector;
    fn sub(self, rhs: &ExponentVector) -> ExponentVector {
        debug_assert_eq!(self.len(), rhs.len());
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ExponentVector {
    type Output = ExponentVector;
    fn neg(self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|e| -e).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_key())
    }
}

/// Exact Laurent polynomial. Zero coefficients are never stored, so derived
/// equality is equality of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly<C> {
    ring: Ring,
    terms: BTreeMap<ExponentVector, C>,
}

pub type ZPoly = LaurentPoly<BigInt>;
pub type QPoly = LaurentPoly<BigRational>;

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(ring: Ring) -> Self {
        LaurentPoly { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: Ring, c: C) -> Self {
        Self::monomial(ring, ExponentVector::zero(ring.nvars()), c)
    }

    pub fn from_int(ring: Ring, c: i64) -> Self {
        Self::constant(ring, C::from_bigint(BigInt::from(c)))
    }

    pub fn monomial(ring: Ring, exp: ExponentVector, c: C) -> Self {
        assert_eq!(exp.len(), ring.nvars(), "exponent length does not match {ring}");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { ring, terms }
    }

    /// The variable with 0-based `index`.
    pub fn var(ring: Ring, index: usize) -> Result<Self> {
        if index >= ring.nvars() {
            return Err(Error::BadVariable { index, ring });
        }
        Ok(Self::monomial(ring, ExponentVector::unit(ring.nvars(), index), C::one()))
    }

    /// Univariate `t^e`.
    pub fn t_pow(e: i64) -> Self {
        Self::monomial(Ring::Univariate, ExponentVector(vec![e]), C::one())
    }

    /// Build from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(ring: Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars(), "exponent length does not match {ring}");
            p.add_term(e, c);
        }
        p
    }

    /// Univariate polynomial from `(exponent, coefficient)` pairs.
    pub fn univariate<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(
            Ring::Univariate,
            terms.into_iter().map(|(e, c)| (ExponentVector(vec![e]), C::from_bigint(c.into()))),
        )
    }

    pub(crate) fn add_term(&mut self, exp: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in exponent-vector order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &ExponentVector) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of `t^e` in a univariate polynomial.
    pub fn coeff_at(&self, e: i64) -> C {
        self.coeff(&ExponentVector(vec![e]))
    }

    pub fn as_monomial(&self) -> Option<(&ExponentVector, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::SignatureMismatch { left: self.ring, right: other.ring });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.ring);
        }
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())).collect(),
        }
    }

    /// Multiply by the monomial `u^shift`.
    pub fn shift(&self, shift: &ExponentVector) -> Self {
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, v)| (e + shift, v.clone())).collect(),
        }
    }

    /// Exact division by a constant; fails if the quotient leaves the domain.
    pub fn div_scalar(&self, c: &C) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv_num = c.to_rational();
        let mut out = Self::zero(self.ring);
        for (e, v) in &self.terms {
            let q = v.to_rational() / inv_num.clone();
            let q = C::from_ratio(q.numer().clone(), q.denom().clone())
                .ok_or_else(|| Error::InvalidParameter(format!("{v}/{c} is not in the coefficient domain")))?;
            out.add_term(e.clone(), q);
        }
        Ok(out)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            let (exp, c) = self.as_monomial().ok_or(Error::NonInvertible)?;
            let inv = c.inverse().ok_or(Error::NonInvertible)?;
            return Self::monomial(self.ring, -exp, inv).pow(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one(self.ring);
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Every variable `u_i` goes to `u_i^{-1}`.
    pub fn involution(&self) -> Self {
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// `f(1, ..., 1)`: the sum of all coefficients.
    pub fn evaluate_at_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Coefficient sum zero and invariant under the involution.
    pub fn is_balanced(&self) -> bool {
        self.evaluate_at_one().is_zero() && self.involution() == *self
    }

    fn require_univariate(&self) -> Result<()> {
        if self.ring.nvars() != 1 {
            return Err(Error::NotUnivariate(self.ring));
        }
        Ok(())
    }

    /// Lowest exponent of a nonzero univariate polynomial.
    pub fn valuation(&self) -> Result<i64> {
        self.require_univariate()?;
        self.terms.keys().next().map(|e| e.0[0]).ok_or(Error::UndefinedValuation)
    }

    /// Highest exponent of a nonzero univariate polynomial.
    pub fn degree(&self) -> Result<i64> {
        self.require_univariate()?;
        self.terms.keys().next_back().map(|e| e.0[0]).ok_or(Error::UndefinedValuation)
    }

    /// No negative exponent in any variable.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|&x| x >= 0))
    }

    /// Constant term of a univariate polynomial (the value at `t = 0`).
    pub fn eval_at_zero(&self) -> Result<C> {
        self.require_univariate()?;
        if !self.is_polynomial() {
            return Err(Error::NotPolynomial(self.to_string()));
        }
        Ok(self.coeff_at(0))
    }

    /// Apply `Φ`: `s_i -> 1`, `t_2 -> t`, `t_i -> 1` for `i >= 3`.
    pub fn specialize_phi(&self) -> Result<Self> {
        match self.ring {
            Ring::Genus(g) => Ok(RingHom::phi(g)?.apply(self)),
            other => Err(Error::SignatureMismatch { left: other, right: Ring::Genus(0) }),
        }
    }

    /// Send every variable except `keep` to 1; the result is univariate in `t`.
    pub fn specialize_single(&self, keep: usize) -> Result<Self> {
        if keep >= self.ring.nvars() {
            return Err(Error::BadVariable { index: keep, ring: self.ring });
        }
        let mut out = Self::zero(Ring::Univariate);
        for (e, c) in &self.terms {
            out.add_term(ExponentVector(vec![e.0[keep]]), c.clone());
        }
        Ok(out)
    }

    pub fn to_rational(&self) -> QPoly {
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.to_rational())).collect(),
        }
    }

    /// Integer polynomial with the same terms, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<ZPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let r = c.to_rational();
            if !r.is_integer() {
                return None;
            }
            terms.insert(e.clone(), r.to_integer());
        }
        Some(LaurentPoly { ring: self.ring, terms })
    }

    /// Terms in printing order: by total absolute degree, then positive
    /// exponents before negative ones.
    fn print_order(&self) -> Vec<(&ExponentVector, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(e, _)| (e.abs_degree(), Reverse(*e)));
        v
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (exp, c)) in self.print_order().into_iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let factors: Vec<String> = exp
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| {
                    let name = self.ring.var_name(i);
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly<{}>({})", self.ring, self)
    }
}

impl<C: Coeff> Serialize for LaurentPoly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<C: Coeff> $tr<&LaurentPoly<C>> for &LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<C: Coeff> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(&rhs)
            }
        }
        impl<C: Coeff> $tr<&LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $method(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> ZPoly {
        parse(s, Ring::Univariate).unwrap()
    }

    fn g3(s: &str) -> ZPoly {
        parse(s, Ring::Genus(3)).unwrap()
    }

    #[test]
    fn product_expansion() {
        assert_eq!(z("(t-1)*(t^-1-1)"), z("2 - t - t^-1"));
        assert_eq!((z("t-1") * z("t^-1 - 1")).to_string(), "2 - t - t^-1");
        let f = z("3t^2 + 4");
        assert_eq!(&f + &ZPoly::zero(Ring::Univariate), f);
    }

    #[test]
    fn genus_expansion() {
        let p = g3("(t2-1)*(t2^-1-1)");
        assert_eq!(p, g3("2 - t2 - t2^-1"));
        assert_eq!(g3("(s2-1)*(t2-1)"), g3("s2*t2 - s2 - t2 + 1"));
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let a = z("t");
        let b = g3("s2");
        assert!(matches!(a.try_add(&b), Err(Error::SignatureMismatch { .. })));
        assert!(matches!(a.try_mul(&b), Err(Error::SignatureMismatch { .. })));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(z("t - 2 + t^-1").involution(), z("t - 2 + t^-1"));
        assert_eq!(z("t").involution(), z("t^-1"));
        assert_eq!(g3("s2*t3^2 - 1").involution(), g3("s2^-1*t3^-2 - 1"));
    }

    #[test]
    fn evaluation_and_balance() {
        assert_eq!(z("t - 2 + t^-1").evaluate_at_one(), BigInt::from(0));
        assert_eq!(ZPoly::zero(Ring::Univariate).evaluate_at_one(), BigInt::from(0));
        assert_eq!(z("3t^2 + 4").evaluate_at_one(), BigInt::from(7));
        assert!(z("t - 2 + t^-1").is_balanced());
        assert!(!z("t - 1").is_balanced());
        assert!(!z("t + t^-1").is_balanced());
        assert!(ZPoly::zero(Ring::Univariate).is_balanced());
    }

    #[test]
    fn univariate_queries() {
        assert_eq!(z("t^-3 + 5t").valuation().unwrap(), -3);
        assert_eq!(ZPoly::zero(Ring::Univariate).valuation(), Err(Error::UndefinedValuation));
        assert!(!z("t - 2 + t^-1").is_polynomial());
        assert_eq!(z("3t^2 + 4").eval_at_zero().unwrap(), BigInt::from(4));
        assert!(matches!(z("t^-1").eval_at_zero(), Err(Error::NotPolynomial(_))));
        assert!(matches!(g3("s2").valuation(), Err(Error::NotUnivariate(_))));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(g3("s2^3*t2^2*t3^-1").specialize_phi().unwrap(), z("t^2"));
        assert_eq!(g3("t2 - 2 + t2^-1").specialize_phi().unwrap(), z("t - 2 + t^-1"));
        assert!(g3("(s2-1)*(t3-1)").specialize_phi().unwrap().is_zero());
        assert!(z("t").specialize_phi().is_err());
    }

    #[test]
    fn single_specialization() {
        let r = Ring::Generic(3);
        let p: ZPoly = parse("(u1-1)*(u2-1)", r).unwrap();
        assert!(p.specialize_single(0).unwrap().is_zero());
        let q: ZPoly = parse("u1^2*u3", r).unwrap();
        assert_eq!(q.specialize_single(0).unwrap(), z("t^2"));
        assert!(matches!(q.specialize_single(3), Err(Error::BadVariable { .. })));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(z("2t").pow(-1), Err(Error::NonInvertible));
        assert_eq!(z("-t^2").pow(-2).unwrap(), z("t^-4"));
        let q: QPoly = parse("2t", Ring::Univariate).unwrap();
        assert_eq!(q.pow(-1).unwrap(), parse("1/2*t^-1", Ring::Univariate).unwrap());
    }

    #[test]
    fn genus_variable_names() {
        let r = Ring::Genus(3);
        let names: Vec<_> = (0..4).map(|i| r.var_name(i)).collect();
        assert_eq!(names, ["s2", "s3", "t2", "t3"]);
        assert_eq!(r.lookup("t2"), Some(2));
        assert_eq!(r.lookup("u3"), Some(2));
        assert_eq!(r.lookup("t4"), None);
        assert_eq!(r.lookup("t"), None);
        assert_eq!(Ring::Univariate.lookup("t"), Some(0));
    }
}
