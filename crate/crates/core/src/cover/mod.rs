//! First homology of the `Z^{2g-2}` abelian cover as a module over the
//! genus-`g` Laurent ring: generators, the intersection pairing, lifts of
//! bounding curves and the twist action.

mod epsilon;
mod generator;
mod lift;

pub use epsilon::{EpsKey, EpsilonJson, EpsilonTable};
pub use generator::Generator;
pub use lift::{LiftClass, LiftJson, LiftViolation};

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{ExponentVector, Ring, ZPoly};

/// Algebraic intersection number `x · (u^shift y)` of two generators.
///
/// Commutators with disjoint index sets meet only for shifts whose
/// coordinates lie in `{0, 1}` on the left indices and `{0, -1}` on the right
/// ones, with sign `(-1)^{Σ r}` times the table entry. Commutators sharing
/// one index `k` additionally allow `r_k = -1`. `a1 · b1 = 1` in the same
/// translate and commutators never meet `a1` or `b1`.
pub fn pair_generators(x: Generator, shift: &ExponentVector, y: Generator, eps: &EpsilonTable) -> i64 {
    use Generator::*;
    match (x, y) {
        (A1, B1) if shift.is_zero() => 1,
        (B1, A1) if shift.is_zero() => -1,
        (Comm(i, j), Comm(k, l)) => {
            let Some(key) = EpsKey::for_pair((i, j), (k, l)) else {
                return 0;
            };
            let allowed = allowed_offsets(key);
            let r = shift.entries();
            let fits = r.iter().enumerate().all(|(idx, &v)| allowed(idx + 1).contains(&v));
            if !fits {
                return 0;
            }
            let parity: i64 = r.iter().sum();
            let sign = if parity.rem_euclid(2) == 0 { 1 } else { -1 };
            sign * eps.get(&key) as i64
        }
        _ => 0,
    }
}

/// Allowed translate offsets per 1-based coordinate.
fn allowed_offsets(key: EpsKey) -> impl Fn(usize) -> Vec<i64> {
    move |k| match key {
        EpsKey::Disjoint { x, y } => {
            if k == x.0 || k == x.1 {
                vec![0, 1]
            } else if k == y.0 || k == y.1 {
                vec![-1, 0]
            } else {
                vec![0]
            }
        }
        EpsKey::Shared { shared, x_other, y_other } => {
            if k == shared {
                vec![-1, 0, 1]
            } else if k == x_other {
                vec![0, 1]
            } else if k == y_other {
                vec![-1, 0]
            } else {
                vec![0]
            }
        }
    }
}

/// Generating polynomial `Σ_r (x · u^r y) u^r` of the pairing of two
/// generators, summed over the finitely many shifts that can meet.
pub fn generator_pairing(genus: u32, x: Generator, y: Generator, eps: &EpsilonTable) -> ZPoly {
    let ring = Ring::Genus(genus);
    let n = ring.nvars();
    let candidates: Vec<ExponentVector> = match (x, y) {
        (Generator::Comm(i, j), Generator::Comm(k, l)) => match EpsKey::for_pair((i, j), (k, l)) {
            Some(key) => {
                let allowed = allowed_offsets(key);
                (1..=n).map(allowed).multi_cartesian_product().map(ExponentVector).collect()
            }
            None => Vec::new(),
        },
        (Generator::A1, Generator::B1) | (Generator::B1, Generator::A1) => vec![ExponentVector::zero(n)],
        _ => Vec::new(),
    };
    ZPoly::from_terms(
        ring,
        candidates.into_iter().map(|r| {
            let v = pair_generators(x, &r, y, eps);
            (r, BigInt::from(v))
        }),
    )
}

/// Element of the cover homology: a finite combination of generators with
/// genus-ring coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CycleClass {
    genus: u32,
    coeffs: BTreeMap<Generator, ZPoly>,
}

impl CycleClass {
    pub fn zero(genus: u32) -> Self {
        CycleClass { genus, coeffs: BTreeMap::new() }
    }

    pub fn generator(genus: u32, g: Generator) -> Result<Self> {
        Self::from_terms(genus, [(g, ZPoly::one(Ring::genus(genus)?))])
    }

    pub fn from_terms<I: IntoIterator<Item = (Generator, ZPoly)>>(genus: u32, terms: I) -> Result<Self> {
        let ring = Ring::genus(genus)?;
        let mut out = CycleClass::zero(genus);
        for (g, p) in terms {
            g.check(genus)?;
            if p.ring() != ring {
                return Err(Error::SignatureMismatch { left: p.ring(), right: ring });
            }
            out.add_term(g, &p);
        }
        Ok(out)
    }

    fn add_term(&mut self, g: Generator, p: &ZPoly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&g) {
            Some(prev) => prev + p,
            None => p.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&g);
        } else {
            self.coeffs.insert(g, sum);
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn ring(&self) -> Ring {
        Ring::Genus(self.genus)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: Generator) -> ZPoly {
        self.coeffs.get(&g).cloned().unwrap_or_else(|| ZPoly::zero(self.ring()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &ZPoly)> {
        self.coeffs.iter()
    }

    /// Lies in the submodule spanned by the commutators.
    pub fn is_in_w(&self) -> bool {
        self.coeffs.keys().all(|g| g.is_comm())
    }

    /// The commutator part, dropping `a1` and `b1`.
    pub fn w_part(&self) -> CycleClass {
        CycleClass {
            genus: self.genus,
            coeffs: self.coeffs.iter().filter(|(g, _)| g.is_comm()).map(|(g, p)| (*g, p.clone())).collect(),
        }
    }

    pub fn try_add(&self, other: &CycleClass) -> Result<CycleClass> {
        if self.genus != other.genus {
            return Err(Error::SignatureMismatch { left: self.ring(), right: other.ring() });
        }
        let mut out = self.clone();
        for (g, p) in &other.coeffs {
            out.add_term(*g, p);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CycleClass) -> Result<CycleClass> {
        self.try_add(&other.scale(&ZPoly::from_int(other.ring(), -1)))
    }

    /// Multiply every coefficient by `f`.
    pub fn scale(&self, f: &ZPoly) -> CycleClass {
        let mut out = CycleClass::zero(self.genus);
        for (g, p) in &self.coeffs {
            out.add_term(*g, &(p * f));
        }
        out
    }

    /// Coordinates on `(a1, b1)` after applying `Φ`.
    pub fn phi_coords(&self) -> Result<(ZPoly, ZPoly)> {
        Ok((self.coeff(Generator::A1).specialize_phi()?, self.coeff(Generator::B1).specialize_phi()?))
    }

    /// `Φ` applied to every coefficient; zero coefficients are dropped.
    pub fn specialize_phi(&self) -> Result<BTreeMap<Generator, ZPoly>> {
        let mut out = BTreeMap::new();
        for (g, p) in &self.coeffs {
            let q = p.specialize_phi()?;
            if !q.is_zero() {
                out.insert(*g, q);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(g, p)| format!("({p})*{g}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleClass[g={}]({self})", self.genus)
    }
}

/// Laurent-valued pairing `<x, y> = Σ_r (x · u^r y) u^r`, linear in `x` and
/// conjugate-linear (through the involution) in `y`.
pub fn pairing(x: &CycleClass, y: &CycleClass, eps: &EpsilonTable) -> Result<ZPoly> {
    if x.genus != y.genus {
        return Err(Error::SignatureMismatch { left: x.ring(), right: y.ring() });
    }
    let mut acc = ZPoly::zero(x.ring());
    for (gx, px) in &x.coeffs {
        for (gy, py) in &y.coeffs {
            let base = generator_pairing(x.genus, *gx, *gy, eps);
            if base.is_zero() {
                continue;
            }
            acc = acc + px * &py.involution() * &base;
        }
    }
    Ok(acc)
}

/// `a1 · (u^shift C)`: the `b1`-coefficient of the lift at `-shift`.
pub fn pair_with_a1(lift: &LiftClass, shift: &ExponentVector) -> BigInt {
    lift.n().get(&-shift).cloned().unwrap_or_else(BigInt::zero)
}

/// `b1 · (u^shift C)`: minus the `a1`-coefficient of the lift at `-shift`.
pub fn pair_with_b1(lift: &LiftClass, shift: &ExponentVector) -> BigInt {
    -lift.m().get(&-shift).cloned().unwrap_or_else(BigInt::zero)
}

/// Homology action of the simultaneous twist about every translate of the
/// lift: `x + Σ_s (x · u^s C) u^s C = x + <x, C> C`.
pub fn twist_apply(lift: &LiftClass, x: &CycleClass, eps: &EpsilonTable) -> Result<CycleClass> {
    twist_with_sign(lift, x, eps, 1)
}

/// Inverse twist: `x - <x, C> C`.
pub fn untwist_apply(lift: &LiftClass, x: &CycleClass, eps: &EpsilonTable) -> Result<CycleClass> {
    twist_with_sign(lift, x, eps, -1)
}

fn twist_with_sign(lift: &LiftClass, x: &CycleClass, eps: &EpsilonTable, sign: i64) -> Result<CycleClass> {
    lift.validate().map_err(Error::InvalidLift)?;
    if x.genus != lift.genus() {
        return Err(Error::SignatureMismatch { left: x.ring(), right: Ring::Genus(lift.genus()) });
    }
    let c = lift.class();
    let coeff = pairing(x, &c, eps)?;
    x.try_add(&c.scale(&coeff.scale(&BigInt::from(sign))))
}

/// `twist_apply(lift, x) - x`.
pub fn twist_correction(lift: &LiftClass, x: &CycleClass, eps: &EpsilonTable) -> Result<CycleClass> {
    twist_apply(lift, x, eps)?.try_sub(x)
}

/// Whether `Φ` kills the twist correction on every commutator generator,
/// i.e. the twist acts trivially on `W` after specializing.
pub fn w_trivial_after_phi(lift: &LiftClass, eps: &EpsilonTable) -> Result<bool> {
    for g in Generator::comms(lift.genus()) {
        let d = twist_correction(lift, &CycleClass::generator(lift.genus(), g)?, eps)?;
        if !d.specialize_phi()?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The lift pushed forward by the `k`-th power of the twist about all lifts
/// of `b1`. That twist sends `a1` to `a1 + b1` and fixes `b1` and the
/// commutators, so the `b1`-family becomes `n + k·m`.
pub fn pushforward_b1_twist(lift: &LiftClass, k: i64) -> Result<LiftClass> {
    lift.validate().map_err(Error::InvalidLift)?;
    let mut n = lift.n().clone();
    let kk = BigInt::from(k);
    for (e, c) in lift.m() {
        let v = n.remove(e).unwrap_or_else(BigInt::zero) + &kk * c;
        if !v.is_zero() {
            n.insert(e.clone(), v);
        }
    }
    LiftClass::new(lift.genus(), lift.w().clone(), lift.m().clone(), n)
}
