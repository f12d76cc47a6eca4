//! Undetermined intersection signs between commutator generators.

use std::collections::BTreeMap;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::Generator;
use crate::error::{Error, Result};

/// Index data naming one sign.
///
/// `Disjoint` covers `[c_i,c_j] · [c_k,c_l]` with `{i,j} ∩ {k,l} = ∅`.
/// `Shared` covers two commutators meeting in exactly one index: `shared`
/// is the common index and `x_other`, `y_other` the remaining index of the
/// left and right commutator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EpsKey {
    Disjoint { x: (usize, usize), y: (usize, usize) },
    Shared { shared: usize, x_other: usize, y_other: usize },
}

impl EpsKey {
    /// Key for an ordered pair of commutator index sets, if they are disjoint
    /// or overlap in exactly one index.
    pub fn for_pair(x: (usize, usize), y: (usize, usize)) -> Option<EpsKey> {
        let common: Vec<usize> = [x.0, x.1].into_iter().filter(|i| *i == y.0 || *i == y.1).collect();
        match common.as_slice() {
            [] => Some(EpsKey::Disjoint { x, y }),
            [k] => {
                let other = |p: (usize, usize)| if p.0 == *k { p.1 } else { p.0 };
                Some(EpsKey::Shared { shared: *k, x_other: other(x), y_other: other(y) })
            }
            _ => None,
        }
    }

    /// The key of the same pair taken in the opposite order.
    pub fn swapped(&self) -> EpsKey {
        match *self {
            EpsKey::Disjoint { x, y } => EpsKey::Disjoint { x: y, y: x },
            EpsKey::Shared { shared, x_other, y_other } => {
                EpsKey::Shared { shared, x_other: y_other, y_other: x_other }
            }
        }
    }

    fn check(&self) -> Result<()> {
        let ok = match *self {
            EpsKey::Disjoint { x, y } => {
                x.0 < x.1 && y.0 < y.1 && x.0 != y.0 && x.0 != y.1 && x.1 != y.0 && x.1 != y.1
            }
            EpsKey::Shared { shared, x_other, y_other } => {
                shared != x_other && shared != y_other && x_other != y_other
            }
        };
        if ok && self.indices().iter().all(|&i| i >= 1) {
            Ok(())
        } else {
            Err(Error::InvalidEpsilon(format!("malformed key {self:?}")))
        }
    }

    fn indices(&self) -> Vec<usize> {
        match *self {
            EpsKey::Disjoint { x, y } => vec![x.0, x.1, y.0, y.1],
            EpsKey::Shared { shared, x_other, y_other } => vec![shared, x_other, y_other],
        }
    }
}

/// Skew-consistent table of signs in `{-1, 0, 1}`; absent keys read as 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EpsilonTable {
    entries: BTreeMap<EpsKey, i8>,
}

impl EpsilonTable {
    pub fn zero() -> Self {
        EpsilonTable::default()
    }

    /// Builds a table, filling in the skew partner of every entry. Fails on
    /// values outside `{-1, 0, 1}` or on entries contradicting skew-symmetry.
    pub fn from_entries<I: IntoIterator<Item = (EpsKey, i8)>>(entries: I) -> Result<Self> {
        let mut map: BTreeMap<EpsKey, i8> = BTreeMap::new();
        for (key, v) in entries {
            key.check()?;
            if !(-1..=1).contains(&v) {
                return Err(Error::InvalidEpsilon(format!("{key:?} = {v} is not in {{-1, 0, 1}}")));
            }
            for (k, val) in [(key, v), (key.swapped(), -v)] {
                if let Some(prev) = map.insert(k, val) {
                    if prev != val {
                        return Err(Error::InvalidEpsilon(format!(
                            "{k:?} given as both {prev} and {val}"
                        )));
                    }
                }
            }
        }
        map.retain(|_, v| *v != 0);
        Ok(EpsilonTable { entries: map })
    }

    pub fn get(&self, key: &EpsKey) -> i8 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Uniformly random skew table over every eligible generator pair.
    pub fn random_skew<R: Rng + ?Sized>(genus: u32, rng: &mut R) -> Self {
        let comms = Generator::comms(genus);
        let mut entries = Vec::new();
        for (a, x) in comms.iter().enumerate() {
            for y in &comms[a + 1..] {
                if let Some(key) = EpsKey::for_pair(x.indices().unwrap(), y.indices().unwrap()) {
                    entries.push((key, rng.gen_range(-1..=1)));
                }
            }
        }
        EpsilonTable::from_entries(entries).expect("generated keys are well formed")
    }

    pub fn to_json(&self) -> EpsilonJson {
        let mut out = EpsilonJson::default();
        for (k, &v) in &self.entries {
            match *k {
                EpsKey::Disjoint { x, y } => out.disjoint.push([x.0 as i64, x.1 as i64, y.0 as i64, y.1 as i64, v as i64]),
                EpsKey::Shared { shared, x_other, y_other } => {
                    out.shared.push([shared as i64, x_other as i64, y_other as i64, v as i64])
                }
            }
        }
        out
    }

    pub fn from_json(json: &EpsilonJson) -> Result<Self> {
        let idx = |v: i64| -> Result<usize> {
            usize::try_from(v).map_err(|_| Error::InvalidEpsilon(format!("negative index {v}")))
        };
        let sign = |v: i64| -> Result<i8> {
            i8::try_from(v).map_err(|_| Error::InvalidEpsilon(format!("value {v} out of range")))
        };
        let mut entries = Vec::new();
        for [i, j, k, l, v] in &json.disjoint {
            entries.push((EpsKey::Disjoint { x: (idx(*i)?, idx(*j)?), y: (idx(*k)?, idx(*l)?) }, sign(*v)?));
        }
        for [k, a, b, v] in &json.shared {
            entries.push((EpsKey::Shared { shared: idx(*k)?, x_other: idx(*a)?, y_other: idx(*b)? }, sign(*v)?));
        }
        EpsilonTable::from_entries(entries)
    }
}

/// File form of an [`EpsilonTable`]:
/// `{"disjoint": [[i, j, k, l, v], ...], "shared": [[k, a, b, v], ...]}`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct EpsilonJson {
    #[serde(default)]
    pub disjoint: Vec<[i64; 5]>,
    #[serde(default)]
    pub shared: Vec<[i64; 4]>,
}
