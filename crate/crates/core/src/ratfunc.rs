//! Rational functions in `t` over `Q`, with the `t`-adic valuation.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, QPoly, Ring};
use crate::matrix::Entry;

/// Dense polynomial in `t` over `Q`, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DensePoly {
    coeffs: Vec<BigRational>,
}

impl DensePoly {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly { coeffs: vec![BigRational::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn monomial(k: usize, c: BigRational) -> Self {
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = c;
        DensePoly::from_coeffs(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Order of vanishing at `t = 0`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        DensePoly::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        DensePoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        DensePoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (DensePoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (DensePoly::from_coeffs(q), DensePoly::from_coeffs(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => DensePoly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// A single term `c t^k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    /// `self / t^k`, assuming `t^k` divides it.
    fn shift_down(&self, k: usize) -> Self {
        DensePoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }
}

/// Element of `Q(t)` as a reduced fraction with monic denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: DensePoly,
    den: DensePoly,
}

impl RationalFunction {
    pub fn new(num: DensePoly, den: DensePoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        if den.is_monomial() || num.is_monomial() {
            // The gcd is a power of t; no Euclid needed.
            let k = num.valuation().unwrap().min(den.valuation().unwrap());
            let (n, d) = (num.shift_down(k), den.shift_down(k));
            let lead = d.leading().unwrap().recip();
            return Ok(RationalFunction { num: n.scale(&lead), den: d.scale(&lead) });
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let lead = d.leading().unwrap().recip();
        Ok(RationalFunction { num: n.scale(&lead), den: d.scale(&lead) })
    }

    pub fn zero() -> Self {
        RationalFunction { num: DensePoly::zero(), den: DensePoly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: DensePoly::one(), den: DensePoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction { num: DensePoly::from_coeffs(vec![c]), den: DensePoly::one() }
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            RationalFunction { num: DensePoly::monomial(k as usize, BigRational::one()), den: DensePoly::one() }
        } else {
            RationalFunction { num: DensePoly::one(), den: DensePoly::monomial((-k) as usize, BigRational::one()) }
        }
    }

    pub fn numerator(&self) -> &DensePoly {
        &self.num
    }

    pub fn denominator(&self) -> &DensePoly {
        &self.den
    }

    pub fn from_laurent(p: &QPoly) -> Result<Self> {
        if p.ring().nvars() != 1 {
            return Err(Error::NotUnivariate(p.ring()));
        }
        if p.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let low = p.valuation()?.min(0);
        let high = p.degree()?;
        let coeffs = (low..=high).map(|e| p.coeff_at(e)).collect();
        RationalFunction::new(DensePoly::from_coeffs(coeffs), DensePoly::monomial((-low) as usize, BigRational::one()))
    }

    /// Back to a Laurent polynomial when the denominator is a power of `t`.
    pub fn to_laurent(&self) -> Option<QPoly> {
        let k = self.den.degree()?;
        if self.den != DensePoly::monomial(k, BigRational::one()) {
            return None;
        }
        let terms = (0..self.num.coeffs.len()).map(|i| (ExponentVector(vec![i as i64 - k as i64]), self.num.coeff(i)));
        Some(QPoly::from_terms(Ring::Univariate, terms))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `t`-adic valuation.
    pub fn valuation(&self) -> Result<i64> {
        let vn = self.num.valuation().ok_or(Error::UndefinedValuation)? as i64;
        let vd = self.den.valuation().expect("nonzero denominator") as i64;
        Ok(vn - vd)
    }

    /// Lies in the valuation ring (regular at `t = 0`).
    pub fn is_integral(&self) -> bool {
        self.is_zero() || self.valuation().map(|v| v >= 0).unwrap_or(false)
    }

    pub fn add(&self, o: &Self) -> Self {
        RationalFunction::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        RationalFunction::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero denominators")
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.recip()?))
    }

    /// Expansion of `self / other` below `t^bound`, skipping the reduction
    /// to lowest terms.
    pub fn quotient_expansion_below(&self, other: &Self, bound: i64) -> Result<QPoly> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = RationalFunction { num: self.num.mul(&other.den), den: self.den.mul(&other.num) };
        Ok(q.expansion_below(bound))
    }

    /// Terms of the `t`-adic expansion with exponent strictly below `bound`,
    /// as a Laurent polynomial.
    pub fn expansion_below(&self, bound: i64) -> QPoly {
        if self.is_zero() {
            return QPoly::zero(Ring::Univariate);
        }
        let vn = self.num.valuation().unwrap();
        let vd = self.den.valuation().unwrap();
        let n0 = self.num.shift_down(vn);
        let d0 = self.den.shift_down(vd);
        let start = vn as i64 - vd as i64;
        if bound <= start {
            return QPoly::zero(Ring::Univariate);
        }
        let count = (bound - start) as usize;
        let inv0 = d0.coeff(0).recip();
        let mut series: Vec<BigRational> = Vec::with_capacity(count);
        for k in 0..count {
            let mut acc = n0.coeff(k);
            for i in 1..=k.min(d0.coeffs.len().saturating_sub(1)) {
                acc -= d0.coeff(i) * &series[k - i];
            }
            series.push(acc * &inv0);
        }
        QPoly::from_terms(
            Ring::Univariate,
            series.into_iter().enumerate().map(|(k, c)| (ExponentVector(vec![start + k as i64]), c)),
        )
    }

    pub fn eval_at_zero(&self) -> Result<BigRational> {
        if !self.is_integral() {
            return Err(Error::NotPolynomial(self.to_string()));
        }
        Ok(self.num.coeff(0) / self.den.coeff(0))
    }
}

fn fmt_dense(p: &DensePoly) -> String {
    let lp = QPoly::from_terms(
        Ring::Univariate,
        p.coeffs.iter().enumerate().map(|(i, c)| (ExponentVector(vec![i as i64]), c.clone())),
    );
    lp.to_string()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.to_laurent() {
            return write!(f, "{l}");
        }
        write!(f, "({})/({})", fmt_dense(&self.num), fmt_dense(&self.den))
    }
}

impl Entry for RationalFunction {
    fn add_e(&self, other: &Self) -> Result<Self> {
        Ok(self.add(other))
    }
    fn sub_e(&self, other: &Self) -> Result<Self> {
        Ok(self.sub(other))
    }
    fn mul_e(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(other))
    }
    fn neg_e(&self) -> Self {
        self.neg()
    }
    fn is_zero_e(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        RationalFunction::zero()
    }
    fn one_like(&self) -> Self {
        RationalFunction::one()
    }
}
