use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{CycleClass, Generator};
use crate::error::{Error, Result};
use crate::laurent::{parse, ExponentVector, Ring, ZPoly};

/// Homology class of a lift of a bounding curve:
/// `w + Σ m_p u^p a1 + Σ n_p u^p b1` with `w` in the commutator submodule.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LiftClass {
    genus: u32,
    w: CycleClass,
    m: BTreeMap<ExponentVector, BigInt>,
    n: BTreeMap<ExponentVector, BigInt>,
}

/// Why a lift cannot come from a bounding curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LiftViolation {
    /// A coefficient family does not sum to zero, so the curve is not
    /// null-homologous downstairs and its twist leaves Torelli.
    NonzeroSum { family: char, sum: BigInt },
    /// First shift at which `Σ_i m_i n_{i+p} = Σ_i n_i m_{i+p}` fails.
    Convolution { shift: ExponentVector, lhs: BigInt, rhs: BigInt },
}

impl fmt::Display for LiftViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftViolation::NonzeroSum { family, sum } => write!(f, "coefficients of {family} sum to {sum}, not 0"),
            LiftViolation::Convolution { shift, lhs, rhs } => {
                write!(f, "at shift {shift}: Σ m·n = {lhs} but Σ n·m = {rhs}")
            }
        }
    }
}

impl LiftClass {
    pub fn new(
        genus: u32,
        w: CycleClass,
        m: BTreeMap<ExponentVector, BigInt>,
        n: BTreeMap<ExponentVector, BigInt>,
    ) -> Result<Self> {
        let ring = Ring::genus(genus)?;
        if w.genus() != genus {
            return Err(Error::SignatureMismatch { left: w.ring(), right: ring });
        }
        if !w.is_in_w() {
            return Err(Error::InvalidGenerator("the W-part of a lift cannot involve a1 or b1".into()));
        }
        let clean = |map: BTreeMap<ExponentVector, BigInt>| -> Result<BTreeMap<ExponentVector, BigInt>> {
            for e in map.keys() {
                if e.len() != ring.nvars() {
                    return Err(Error::BadExponent { got: e.clone(), genus });
                }
            }
            Ok(map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
        };
        Ok(LiftClass { genus, w, m: clean(m)?, n: clean(n)? })
    }

    /// The lift whose twist is `N`: `a1`-family `-1 + t2`, nothing else.
    pub fn canonical(genus: u32) -> Result<Self> {
        let ring = Ring::genus(genus)?;
        let n = ring.nvars();
        let t2 = genus as usize - 1;
        let m = [(ExponentVector::zero(n), BigInt::from(-1)), (ExponentVector::unit(n, t2), BigInt::from(1))]
            .into_iter()
            .collect();
        LiftClass::new(genus, CycleClass::zero(genus), m, BTreeMap::new())
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn ring(&self) -> Ring {
        Ring::Genus(self.genus)
    }

    pub fn w(&self) -> &CycleClass {
        &self.w
    }

    pub fn m(&self) -> &BTreeMap<ExponentVector, BigInt> {
        &self.m
    }

    pub fn n(&self) -> &BTreeMap<ExponentVector, BigInt> {
        &self.n
    }

    pub fn m_poly(&self) -> ZPoly {
        ZPoly::from_terms(self.ring(), self.m.iter().map(|(e, c)| (e.clone(), c.clone())))
    }

    pub fn n_poly(&self) -> ZPoly {
        ZPoly::from_terms(self.ring(), self.n.iter().map(|(e, c)| (e.clone(), c.clone())))
    }

    /// The full homology class.
    pub fn class(&self) -> CycleClass {
        let extra = CycleClass::from_terms(self.genus, [(Generator::A1, self.m_poly()), (Generator::B1, self.n_poly())])
            .expect("same genus");
        self.w.try_add(&extra).expect("same genus")
    }

    /// Checks that both families sum to zero and the self-intersection
    /// identity `Σ_i m_i n_{i+p} = Σ_i n_i m_{i+p}` holds at every shift `p`
    /// where either side can be nonzero.
    pub fn validate(&self) -> std::result::Result<(), LiftViolation> {
        for (family, map) in [('m', &self.m), ('n', &self.n)] {
            let sum = map.values().fold(BigInt::zero(), |acc, c| acc + c);
            if !sum.is_zero() {
                return Err(LiftViolation::NonzeroSum { family, sum });
            }
        }
        let mut shifts = BTreeSet::new();
        for i in self.m.keys() {
            for j in self.n.keys() {
                shifts.insert(j - i);
                shifts.insert(i - j);
            }
        }
        for p in shifts {
            let lhs = convolve_at(&self.m, &self.n, &p);
            let rhs = convolve_at(&self.n, &self.m, &p);
            if lhs != rhs {
                return Err(LiftViolation::Convolution { shift: p, lhs, rhs });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn to_json(&self) -> Result<LiftJson> {
        let enc = |map: &BTreeMap<ExponentVector, BigInt>| -> Result<BTreeMap<String, i64>> {
            map.iter()
                .map(|(e, c)| {
                    let v = c.to_i64().ok_or_else(|| Error::Malformed(format!("coefficient {c} exceeds i64")))?;
                    Ok((e.to_key(), v))
                })
                .collect()
        };
        Ok(LiftJson {
            genus: self.genus,
            w: self.w.terms().map(|(g, p)| (*g, p.to_string())).collect(),
            m: enc(&self.m)?,
            n: enc(&self.n)?,
        })
    }

    pub fn from_json(json: &LiftJson) -> Result<Self> {
        let ring = Ring::genus(json.genus)?;
        let mut w_terms = Vec::new();
        for (g, text) in &json.w {
            w_terms.push((*g, parse(text, ring)?));
        }
        let w = CycleClass::from_terms(json.genus, w_terms)?;
        let dec = |map: &BTreeMap<String, i64>| -> Result<BTreeMap<ExponentVector, BigInt>> {
            let mut out = BTreeMap::new();
            for (k, v) in map {
                let e = ExponentVector::from_key(k)?;
                if out.insert(e, BigInt::from(*v)).is_some() {
                    return Err(Error::Malformed(format!("duplicate exponent key `{k}`")));
                }
            }
            Ok(out)
        };
        LiftClass::new(json.genus, w, dec(&json.m)?, dec(&json.n)?)
    }

    pub fn to_json_string(&self) -> Result<String> {
        serde_json::to_string_pretty(&self.to_json()?).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: LiftJson = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        LiftClass::from_json(&json)
    }
}

fn convolve_at(
    a: &BTreeMap<ExponentVector, BigInt>,
    b: &BTreeMap<ExponentVector, BigInt>,
    p: &ExponentVector,
) -> BigInt {
    a.iter()
        .filter_map(|(i, ai)| b.get(&(i + p)).map(|bj| ai * bj))
        .fold(BigInt::zero(), |acc, x| acc + x)
}

/// File form of a [`LiftClass`]: exponent vectors are comma-separated keys,
/// `w` is a list of `[generator, polynomial]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiftJson {
    pub genus: u32,
    #[serde(default)]
    pub w: Vec<(Generator, String)>,
    #[serde(default)]
    pub m: BTreeMap<String, i64>,
    #[serde(default)]
    pub n: BTreeMap<String, i64>,
}
