//! `SL2(Q[t, t^-1]) = A *_U B` with `A = SL2(Q[t])`,
//! `B = diag(t^-1, 1) A diag(t, 1)` and `U = A ∩ B`, plus the
//! infinite-generation certificate built on top of it.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cover::{pushforward_b1_twist, w_trivial_after_phi, EpsilonTable, LiftClass, LiftJson};
use crate::error::{Error, Result};
use crate::laurent::{Coeff, LaurentPoly, QPoly, Ring, ZPoly};
use crate::matrix::{Matrix2, MatrixJson};
use crate::ratfunc::RationalFunction;
use crate::rep::{conjugated_n, h_form, matrix_mk, matrix_n, rho, rho_via_twist};
use crate::tree::{diag_t, to_laurent_matrix, to_rf_matrix, RMatrix, TreeVertex};

fn check_domain<C: Coeff>(m: &Matrix2<LaurentPoly<C>>) -> Result<()> {
    for e in m.entries() {
        if e.ring() != Ring::Univariate {
            return Err(Error::NotUnivariate(e.ring()));
        }
    }
    if !m.det()?.is_one() {
        return Err(Error::NotUnimodular);
    }
    Ok(())
}

fn divisible_by_t<C: Coeff>(p: &LaurentPoly<C>) -> bool {
    p.is_polynomial() && p.coeff_at(0).is_zero()
}

/// Entries all in `Q[t]`.
pub fn in_a<C: Coeff>(m: &Matrix2<LaurentPoly<C>>) -> Result<bool> {
    check_domain(m)?;
    Ok(m.entries().iter().all(|e| e.is_polynomial()))
}

/// `a, d ∈ Q[t]`, `b ∈ t^-1 Q[t]`, `c ∈ t Q[t]`.
pub fn in_b<C: Coeff>(m: &Matrix2<LaurentPoly<C>>) -> Result<bool> {
    check_domain(m)?;
    let tb = m.b.shift(&crate::laurent::ExponentVector(vec![1]));
    Ok(m.a.is_polynomial() && m.d.is_polynomial() && tb.is_polynomial() && divisible_by_t(&m.c))
}

/// In `A` with lower-left entry divisible by `t`.
pub fn in_u<C: Coeff>(m: &Matrix2<LaurentPoly<C>>) -> Result<bool> {
    Ok(in_a(m)? && divisible_by_t(&m.c))
}

/// Outcome of running the `H ∩ A` argument on one matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum HCapAOutcome {
    /// Every step went through and the matrix is the identity.
    Identity { trace: Vec<String> },
    /// The hypotheses held but the matrix is not the identity.
    Counterexample { matrix: String, trace: Vec<String> },
}

/// For `M` in `A` and in balanced H-form: each of `P1, Q1, Q2, P2` is a
/// polynomial whose coefficients are symmetric under `t -> t^-1`, hence a
/// constant, and its value at 1 is 0, hence it vanishes.
pub fn h_cap_a_forces_identity<C: Coeff>(m: &Matrix2<LaurentPoly<C>>) -> Result<HCapAOutcome> {
    check_domain(m)?;
    if let Some(bad) = m.entries().into_iter().find(|e| !e.is_polynomial()) {
        return Err(Error::OutsideA(bad.to_string()));
    }
    let h = h_form(m);
    if !h.all_balanced() {
        return Err(Error::NotBalancedForm(h.unbalanced().join(", ")));
    }
    let mut trace = Vec::new();
    for (name, p) in [("P1", &h.p1), ("Q1", &h.q1), ("Q2", &h.q2), ("P2", &h.p2)] {
        let low = if p.is_zero() { 0 } else { p.valuation()? };
        let high = if p.is_zero() { 0 } else { p.degree()? };
        trace.push(format!(
            "{name} = {p}: exponents in [{low}, {high}], polynomial so low >= 0, symmetric so high = -low, hence constant {}; value at 1 is {} so {name} = 0",
            p.coeff_at(0),
            p.evaluate_at_one()
        ));
    }
    if m.is_identity() {
        trace.push("M = I".to_string());
        Ok(HCapAOutcome::Identity { trace })
    } else {
        Ok(HCapAOutcome::Counterexample { matrix: m.to_string(), trace })
    }
}

/// Evidence for or against `(H∩A) M_k U = (H∩A) M_l U`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DoubleCosetReport {
    pub k: i64,
    pub l: i64,
    pub distinct: bool,
    /// `M_l^-1 M_k`, the element of `U` that equality would force.
    pub u: MatrixJson,
    /// Lower-left entry of `u` at `t = 0`; membership in `U` needs it to vanish.
    pub lower_left_at_zero: BigInt,
    pub steps: Vec<String>,
}

pub fn double_cosets_distinct(k: i64, l: i64) -> Result<DoubleCosetReport> {
    let (mk, ml) = (matrix_mk(k)?, matrix_mk(l)?);
    let u = ml.inverse_unimodular()?.try_mul(&mk)?;
    let c0 = u.c.eval_at_zero()?;
    let distinct = !c0.is_zero();
    debug_assert_eq!(distinct, !in_u(&u)?);
    let steps = vec![
        format!("suppose h M_{k} = M_{l} u with h in H∩A and u in U"),
        "H∩A is trivial: the H-form parts of an element of A are balanced polynomials, hence 0".to_string(),
        format!("so u = M_{l}^-1 M_{k} = {u}"),
        format!("at t = 0 the lower-left entry of u is {c0}; elements of U have it divisible by t"),
        if distinct {
            format!("{c0} != 0, so the double cosets differ")
        } else {
            "it vanishes, so the double cosets coincide".to_string()
        },
    ];
    Ok(DoubleCosetReport { k, l, distinct, u: u.to_json(), lower_left_at_zero: c0, steps })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AmalgamLetter {
    pub side: Side,
    pub matrix: Matrix2<QPoly>,
}

impl Serialize for AmalgamLetter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AmalgamLetter", 2)?;
        st.serialize_field("side", &self.side)?;
        st.serialize_field("matrix", &self.matrix.to_json())?;
        st.end()
    }
}

fn rf(m: &Matrix2<QPoly>) -> RMatrix {
    to_rf_matrix(m).expect("univariate")
}

fn q_const(c: num_rational::BigRational) -> RationalFunction {
    RationalFunction::constant(c)
}

/// Constant matrix sending the edge's far end `adjacent` to the neighbor `x` of base.
fn a_letter_for(x: &TreeVertex) -> RMatrix {
    let (one, zero) = (RationalFunction::one(), RationalFunction::zero());
    match x.a() {
        -1 => Matrix2::new(one.clone(), zero.clone(), zero, one),
        1 => {
            let r = x.r().coeff_at(0);
            Matrix2::new(q_const(r), one.neg(), one, zero)
        }
        _ => unreachable!("not a neighbor of base: {x}"),
    }
}

/// Constant matrix sending the line of `(1; 0)` to the line of `y`.
fn line_map_for(y: &TreeVertex) -> RMatrix {
    let (one, zero) = (RationalFunction::one(), RationalFunction::zero());
    match y.a() {
        -1 => Matrix2::new(zero.clone(), one.neg(), one, zero),
        1 => {
            let r = y.r().coeff_at(0);
            Matrix2::new(one.clone(), q_const(r), zero, one)
        }
        _ => unreachable!("not a neighbor of base: {y}"),
    }
}

/// Alternating word in `A` and `B` with product `m`, read off from the
/// geodesic between base and `m·base`. Every letter after the first lies
/// outside `U`, and there are at most `d(base, m·base) + 1` letters.
pub fn amalgam_normal_form(m: &Matrix2<QPoly>) -> Result<Vec<AmalgamLetter>> {
    check_domain(m)?;
    let base = TreeVertex::base();
    let e_inv = diag_t(1, 0);
    let e = diag_t(-1, 0);
    let mut g = rf(m);
    let mut word: Vec<(Side, RMatrix)> = Vec::new();
    loop {
        let gv = base.act(&g)?;
        if gv == base {
            word.push((Side::A, g));
            break;
        }
        let before = base.distance(&gv);
        let x1 = base.geodesic(&gv)[1].clone();
        let a = a_letter_for(&x1);
        g = a.inverse_unimodular()?.try_mul(&g)?;
        let path = base.geodesic(&base.act(&g)?);
        debug_assert_eq!(path[1], TreeVertex::adjacent());
        let y = TreeVertex::canonical(&e_inv.try_mul(&path[2].matrix())?)?;
        let b = Matrix2::product([&e, &line_map_for(&y), &e_inv])?;
        g = b.inverse_unimodular()?.try_mul(&g)?;
        word.push((Side::A, a));
        word.push((Side::B, b));
        debug_assert_eq!(base.distance(&base.act(&g)?) + 2, before);
    }
    let mut letters: Vec<AmalgamLetter> = word
        .into_iter()
        .map(|(side, x)| Ok(AmalgamLetter { side, matrix: to_laurent_matrix(&x)? }))
        .collect::<Result<_>>()?;
    if letters.len() > 1 {
        let last = letters.len() - 1;
        if in_u(&letters[last].matrix)? {
            let tail = letters.pop().unwrap();
            let prev = letters.last_mut().unwrap();
            prev.matrix = prev.matrix.try_mul(&tail.matrix)?;
        }
    }
    if letters.len() > 1 && in_u(&letters[0].matrix)? {
        let head = letters.remove(0);
        letters[0].matrix = head.matrix.try_mul(&letters[0].matrix)?;
    }
    Ok(letters)
}

/// Product of the letters.
pub fn reconstruct(letters: &[AmalgamLetter]) -> Result<Matrix2<QPoly>> {
    let ms: Vec<&Matrix2<QPoly>> = letters.iter().map(|l| &l.matrix).collect();
    Matrix2::product(ms)
}

/// Letters alternate sides, sit in their side, and all but the first avoid `U`.
pub fn is_reduced_word(letters: &[AmalgamLetter]) -> Result<bool> {
    for (i, l) in letters.iter().enumerate() {
        let fits = match l.side {
            Side::A => in_a(&l.matrix)?,
            Side::B => in_b(&l.matrix)?,
        };
        if !fits || (i > 0 && in_u(&l.matrix)?) || (i > 0 && letters[i - 1].side == l.side) {
            return Ok(false);
        }
    }
    Ok(!letters.is_empty())
}

/// Membership verdicts attached to one certificate record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Memberships {
    pub mk_in_a: bool,
    pub mk_in_u: bool,
    pub n_in_b: bool,
    pub n_in_u: bool,
    pub rho_det_one: bool,
    pub rho_balanced: bool,
    pub twist_consistent: bool,
    pub w_trivial: bool,
}

impl Memberships {
    pub fn all_hold(&self) -> bool {
        self.mk_in_a
            && !self.mk_in_u
            && self.n_in_b
            && !self.n_in_u
            && self.rho_det_one
            && self.rho_balanced
            && self.twist_consistent
            && self.w_trivial
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KRecord {
    pub k: i64,
    pub lift: Option<LiftJson>,
    pub rho: Option<MatrixJson>,
    pub conjugation_ok: bool,
    pub memberships: Memberships,
}

impl KRecord {
    pub fn passed(&self) -> bool {
        self.conjugation_ok && self.memberships.all_hold()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub k: i64,
    pub l: i64,
    pub distinct: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub kmax: i64,
    pub genus: u32,
    pub records: Vec<KRecord>,
    pub pairwise: Vec<PairRecord>,
    pub verdict: bool,
}

impl Certificate {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn failing_records(&self) -> impl Iterator<Item = &KRecord> {
        self.records.iter().filter(|r| !r.passed())
    }

    /// Re-derives every record from the lift printed in it and lists the
    /// discrepancies. An empty list means the stored data checks out.
    pub fn recheck(&self, eps: &EpsilonTable) -> Vec<String> {
        let mut problems = Vec::new();
        if self.records.len() as i64 != self.kmax {
            problems.push(format!("expected {} records, found {}", self.kmax, self.records.len()));
        }
        for (i, r) in self.records.iter().enumerate() {
            if r.k != i as i64 + 1 {
                problems.push(format!("record {i} has k = {}", r.k));
            }
            let lift = match r.lift.as_ref().map(LiftClass::from_json) {
                Some(Ok(l)) => l,
                Some(Err(e)) => {
                    problems.push(format!("k = {}: stored lift unreadable: {e}", r.k));
                    continue;
                }
                None => {
                    problems.push(format!("k = {}: no lift stored", r.k));
                    continue;
                }
            };
            if lift.genus() != self.genus {
                problems.push(format!("k = {}: lift has genus {}", r.k, lift.genus()));
            }
            let fresh = check_pushed(r.k, Ok(lift), eps);
            if fresh.rho != r.rho {
                problems.push(format!("k = {}: stored rho does not match the stored lift", r.k));
            }
            if !fresh.passed() {
                problems.push(format!("k = {}: stored lift fails the checks", r.k));
            }
        }
        let expected_pairs = (self.kmax.max(0) * (self.kmax.max(1) - 1) / 2) as usize;
        if self.pairwise.len() != expected_pairs {
            problems.push(format!("expected {expected_pairs} pairwise records, found {}", self.pairwise.len()));
        }
        for p in &self.pairwise {
            match double_cosets_distinct(p.k, p.l) {
                Ok(rep) if rep.distinct && p.distinct && p.k < p.l => {}
                _ => problems.push(format!("pair ({}, {}) does not check out", p.k, p.l)),
            }
        }
        let verdict = self.records.iter().all(KRecord::passed) && self.pairwise.iter().all(|p| p.distinct);
        if verdict != self.verdict {
            problems.push("stored verdict disagrees with the records".to_string());
        }
        problems
    }
}

fn check_pushed(k: i64, pushed: Result<LiftClass>, eps: &EpsilonTable) -> KRecord {
    let mk = matrix_mk(k).expect("k >= 1");
    let n = matrix_n();
    let mk_in_a = in_a(&mk).unwrap_or(false);
    let mk_in_u = in_u(&mk).unwrap_or(true);
    let n_in_b = in_b(&n).unwrap_or(false);
    let n_in_u = in_u(&n).unwrap_or(true);
    let lift_json = pushed.as_ref().ok().and_then(|l| l.to_json().ok());
    let r: Option<Matrix2<ZPoly>> = pushed.as_ref().ok().and_then(|l| rho(l).ok());
    let conjugation_ok = match (&r, conjugated_n(k)) {
        (Some(r), Ok(target)) => *r == target,
        _ => false,
    };
    let rho_det_one = r.as_ref().and_then(|m| m.det().ok()).is_some_and(|d| d.is_one());
    let rho_balanced = r.as_ref().is_some_and(|m| h_form(m).all_balanced());
    let twist_consistent = match (&pushed, &r) {
        (Ok(l), Some(m)) => rho_via_twist(l, eps).map(|x| x == *m).unwrap_or(false),
        _ => false,
    };
    let w_trivial = pushed.as_ref().ok().and_then(|l| w_trivial_after_phi(l, eps).ok()).unwrap_or(false);
    KRecord {
        k,
        lift: lift_json,
        rho: r.map(|m| m.to_json()),
        conjugation_ok,
        memberships: Memberships { mk_in_a, mk_in_u, n_in_b, n_in_u, rho_det_one, rho_balanced, twist_consistent, w_trivial },
    }
}

/// Certificate for the canonical lift of the given genus.
pub fn build_certificate(kmax: i64, genus: u32, eps: &EpsilonTable) -> Result<Certificate> {
    build_certificate_from(kmax, &LiftClass::canonical(genus)?, eps)
}

/// Certificate starting from an arbitrary base lift. Each `k` pushes the
/// base forward by the `k`-th power of the `b1` twist and checks that its
/// `ρ` is `M_k N M_k^-1`; every pair `k < l` is checked for distinct double cosets.
pub fn build_certificate_from(kmax: i64, base: &LiftClass, eps: &EpsilonTable) -> Result<Certificate> {
    if kmax < 2 {
        return Err(Error::InvalidParameter(format!("kmax must be at least 2 to separate cosets, got {kmax}")));
    }
    let records: Vec<KRecord> =
        (1..=kmax).into_par_iter().map(|k| check_pushed(k, pushforward_b1_twist(base, k), eps)).collect();
    let pairs: Vec<(i64, i64)> = (1..=kmax).flat_map(|k| (k + 1..=kmax).map(move |l| (k, l))).collect();
    let pairwise: Vec<PairRecord> = pairs
        .into_par_iter()
        .map(|(k, l)| PairRecord { k, l, distinct: double_cosets_distinct(k, l).map(|r| r.distinct).unwrap_or(false) })
        .collect();
    let verdict = records.iter().all(KRecord::passed) && pairwise.iter().all(|p| p.distinct);
    Ok(Certificate { kmax, genus: base.genus(), records, pairwise, verdict })
}

/// `k - l` as a machine integer, when it fits.
pub fn witness_value(rep: &DoubleCosetReport) -> Option<i64> {
    rep.lower_left_at_zero.to_i64()
}
