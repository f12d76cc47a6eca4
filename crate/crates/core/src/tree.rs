//! The Bruhat–Tits tree of `SL2` over `Q(t)` with the `t`-adic valuation.
//!
//! Vertices are homothety classes of lattices over the valuation ring `O`
//! (rational functions regular at `t = 0`), stored in the normal form
//! `[[t^a, r], [0, 1]]` with `r` a Laurent polynomial truncated below `t^a`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{Coeff, ExponentVector, LaurentPoly, QPoly, Ring};
use crate::matrix::Matrix2;
use crate::ratfunc::RationalFunction;

pub type RMatrix = Matrix2<RationalFunction>;

/// Lifts a univariate Laurent matrix into `Q(t)`.
pub fn to_rf_matrix<C: Coeff>(m: &Matrix2<LaurentPoly<C>>) -> Result<RMatrix> {
    m.map(|p| RationalFunction::from_laurent(&p.to_rational()))
}

/// Brings back a matrix whose entries are Laurent polynomials.
pub fn to_laurent_matrix(m: &RMatrix) -> Result<Matrix2<QPoly>> {
    m.map(|x| x.to_laurent().ok_or_else(|| Error::NotPolynomial(x.to_string())))
}

fn inverse(m: &RMatrix) -> Result<RMatrix> {
    let det = m.det()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let s = det.recip()?;
    m.adjugate().map(|x| Ok(x.mul(&s)))
}

fn check_sl2(g: &RMatrix) -> Result<()> {
    if g.det()? != RationalFunction::one() {
        return Err(Error::NotUnimodular);
    }
    Ok(())
}

/// A vertex `(a; r)`: the class of the lattice spanned by `(t^a, 0)` and `(r, 1)`.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub struct TreeVertex {
    a: i64,
    r: Vec<(i64, BigRational)>,
}

impl TreeVertex {
    /// The standard lattice, stabilized by `SL2(Q[t])`.
    pub fn base() -> Self {
        TreeVertex { a: 0, r: Vec::new() }
    }

    /// `diag(t^-1, 1)` applied to the base; its stabilizer is the conjugate
    /// of `SL2(Q[t])` by that matrix.
    pub fn adjacent() -> Self {
        TreeVertex { a: -1, r: Vec::new() }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn r(&self) -> QPoly {
        QPoly::from_terms(Ring::Univariate, self.r.iter().map(|(e, c)| (ExponentVector(vec![*e]), c.clone())))
    }

    /// Builds `(a; r)` directly, reducing `r` below `t^a`.
    pub fn from_parts(a: i64, r: &QPoly) -> Result<Self> {
        let rf = RationalFunction::from_laurent(r)?;
        Ok(TreeVertex::reduced(a, &rf))
    }

    fn reduced(a: i64, r: &RationalFunction) -> Self {
        let trunc = r.expansion_below(a);
        TreeVertex { a, r: trunc.terms().map(|(e, c)| (e.entries()[0], c.clone())).collect() }
    }

    /// Normal form of the lattice class spanned by the columns of `m`.
    pub fn canonical(m: &RMatrix) -> Result<Self> {
        let det = m.det()?;
        if det.is_zero() {
            return Err(Error::Singular);
        }
        // Column-reduce over O to [[x, y], [0, z]]: the column whose lower
        // entry has the smaller valuation becomes the second one. Then
        // v(x) = v(det) - v(z) and the class is (v(x) - v(z); y/z mod t^a).
        let swap = !m.c.is_zero() && (m.d.is_zero() || m.c.valuation()? < m.d.valuation()?);
        let (y, z) = if swap { (&m.a, &m.c) } else { (&m.b, &m.d) };
        let a = det.valuation()? - 2 * z.valuation()?;
        let r = y.quotient_expansion_below(z, a)?;
        Ok(TreeVertex { a, r: r.terms().map(|(e, c)| (e.entries()[0], c.clone())).collect() })
    }

    /// Convenience wrapper for Laurent-polynomial matrices.
    pub fn canonical_laurent<C: Coeff>(m: &Matrix2<LaurentPoly<C>>) -> Result<Self> {
        TreeVertex::canonical(&to_rf_matrix(m)?)
    }

    /// The representative `[[t^a, r], [0, 1]]`.
    pub fn matrix(&self) -> RMatrix {
        let r = RationalFunction::from_laurent(&self.r()).expect("univariate");
        Matrix2::new(RationalFunction::t_pow(self.a), r, RationalFunction::zero(), RationalFunction::one())
    }

    pub fn act(&self, g: &RMatrix) -> Result<Self> {
        check_sl2(g)?;
        TreeVertex::canonical(&g.try_mul(&self.matrix())?)
    }

    pub fn distance(&self, other: &TreeVertex) -> u64 {
        let x = inverse(&other.matrix()).and_then(|w| w.try_mul(&self.matrix())).expect("vertex matrices are invertible");
        let (lo, hi) = elementary_valuations(&x);
        (hi - lo) as u64
    }

    /// Vertices on the geodesic from `self` to `other`, both ends included.
    pub fn geodesic(&self, other: &TreeVertex) -> Vec<TreeVertex> {
        let w = self.matrix();
        let x = inverse(&w).and_then(|wi| wi.try_mul(&other.matrix())).expect("invertible");
        let (left_inv, lo, hi) = smith_left(&x);
        let frame = w.try_mul(&left_inv).expect("ring ops");
        (0..=(hi - lo))
            .map(|i| {
                let step = Matrix2::diag(RationalFunction::one(), RationalFunction::t_pow(i));
                TreeVertex::canonical(&frame.try_mul(&step).expect("ring ops")).expect("invertible")
            })
            .collect()
    }
}

/// `(min v(entry), v(det) - min v(entry))`: valuations of the elementary divisors.
fn elementary_valuations(x: &RMatrix) -> (i64, i64) {
    let lo = x.entries().iter().filter(|e| !e.is_zero()).map(|e| e.valuation().unwrap()).min().expect("nonzero matrix");
    let vd = x.det().unwrap().valuation().expect("invertible");
    (lo, vd - lo)
}

/// Smith reduction over `O`. Returns `L^-1` where `L` is the accumulated
/// row operation, together with the two elementary-divisor valuations.
fn smith_left(x: &RMatrix) -> (RMatrix, i64, i64) {
    let (lo, hi) = elementary_valuations(x);
    let one = RationalFunction::one;
    let zero = RationalFunction::zero;
    let val = |e: &RationalFunction| if e.is_zero() { i64::MAX } else { e.valuation().unwrap() };
    let mut m = x.clone();
    let mut linv = Matrix2::new(one(), zero(), zero(), one());
    // The minimal-valuation entry sits in one of the rows; bring that row up.
    let row0_min = val(&m.a).min(val(&m.b));
    let row1_min = val(&m.c).min(val(&m.d));
    if row1_min < row0_min {
        let swap = Matrix2::new(zero(), one(), one(), zero());
        m = swap.try_mul(&m).unwrap();
        linv = linv.try_mul(&swap).unwrap();
    }
    // Pivot column: whichever entry of the top row attains the minimum.
    let pivot_first = val(&m.a) <= val(&m.b);
    let (p, q) = if pivot_first { (&m.a, &m.c) } else { (&m.b, &m.d) };
    // Precision hi - lo in the multiplier already pins the lattice, and a
    // polynomial multiplier keeps every later entry a Laurent polynomial.
    let lambda = RationalFunction::from_laurent(&q.quotient_expansion_below(p, hi - lo).expect("pivot is nonzero"))
        .expect("univariate");
    // Row op: row1 -= lambda * row0; its inverse adds it back.
    let inv_op = Matrix2::new(one(), zero(), lambda, one());
    linv = linv.try_mul(&inv_op).unwrap();
    (linv, lo, hi)
}

impl fmt::Display for TreeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.a, self.r())
    }
}

impl Serialize for TreeVertex {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn act(g: &RMatrix, v: &TreeVertex) -> Result<TreeVertex> {
    v.act(g)
}

pub fn distance(v: &TreeVertex, w: &TreeVertex) -> u64 {
    v.distance(w)
}

pub fn fixes_vertex(g: &RMatrix, v: &TreeVertex) -> Result<bool> {
    Ok(v.act(g)? == *v)
}

/// Whether `g` fixes the edge `{v, w}` pointwise. `SL2` preserves the
/// parity of `a`, so it never swaps the ends of an edge.
pub fn fixes_edge(g: &RMatrix, v: &TreeVertex, w: &TreeVertex) -> Result<bool> {
    let d = v.distance(w);
    if d != 1 {
        return Err(Error::NotAdjacent(d));
    }
    Ok(fixes_vertex(g, v)? && fixes_vertex(g, w)?)
}

/// Outcome of the displacement search around the base vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationReport {
    /// Least displacement `d(v, g·v)` over vertices within `radius` of base.
    pub length: u64,
    /// A vertex realizing `length`.
    pub witness: TreeVertex,
    pub witness_depth: u64,
    pub radius: u64,
    /// False when the minimum sits on the ball boundary and a larger ball
    /// would do strictly better; `length` then only bounds the true value
    /// from above.
    pub exact: bool,
}

/// Displacement minimum over the radius ball. The vertices nearest to the
/// minimal set of `g` lie on the geodesic from base to `g·base`, and
/// displacement is nonincreasing along it up to the midpoint, so the
/// geodesic is the only part of the ball that needs visiting.
pub fn translation_length(g: &RMatrix, radius: u64) -> Result<TranslationReport> {
    check_sl2(g)?;
    let base = TreeVertex::base();
    let path = base.geodesic(&base.act(g)?);
    let mid = (path.len() - 1) / 2;
    let depth = mid.min(radius as usize);
    let witness = path[depth].clone();
    let length = witness.distance(&witness.act(g)?);
    let best = if depth == mid { length } else { path[mid].distance(&path[mid].act(g)?) };
    Ok(TranslationReport { length, witness, witness_depth: depth as u64, radius, exact: best == length })
}

/// Graphviz rendering of the subtree spanned by base and `vertices`.
pub fn to_dot(vertices: &[TreeVertex]) -> String {
    let base = TreeVertex::base();
    let mut nodes = BTreeSet::new();
    let mut edges = BTreeSet::new();
    nodes.insert(base.clone());
    for v in vertices {
        let path = base.geodesic(v);
        for pair in path.windows(2) {
            let (x, y) = (pair[0].clone(), pair[1].clone());
            nodes.insert(y.clone());
            edges.insert(if x <= y { (x, y) } else { (y, x) });
        }
    }
    let mut out = String::from("graph tree {\n");
    for n in &nodes {
        out.push_str(&format!("  \"{n}\";\n"));
    }
    for (x, y) in &edges {
        out.push_str(&format!("  \"{x}\" -- \"{y}\";\n"));
    }
    out.push_str("}\n");
    out
}

/// `diag(t^i, t^j)`.
pub fn diag_t(i: i64, j: i64) -> RMatrix {
    Matrix2::diag(RationalFunction::t_pow(i), RationalFunction::t_pow(j))
}
