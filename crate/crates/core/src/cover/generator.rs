use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A module generator of the cover homology.
///
/// `Comm(i, j)` is the commutator class `[c_i, c_j]` with 1-based indices
/// `1 <= i < j <= 2g - 2`, where `c_1..c_{g-1}` are `a_2..a_g` and
/// `c_g..c_{2g-2}` are `b_2..b_g`. The pair for `[a_g, b_g]`, that is
/// `(g - 1, 2g - 2)`, is not a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A1,
    B1,
    Comm(usize, usize),
}

impl Generator {
    pub fn comm(genus: u32, i: usize, j: usize) -> Result<Generator> {
        let g = Generator::Comm(i, j);
        g.check(genus)?;
        Ok(g)
    }

    /// Checks index bounds and the `[a_g, b_g]` exclusion.
    pub fn check(&self, genus: u32) -> Result<()> {
        if genus < 2 {
            return Err(Error::BadGenus(genus));
        }
        if let Generator::Comm(i, j) = *self {
            let n = 2 * genus as usize - 2;
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::InvalidGenerator(format!(
                    "[c{i}, c{j}] needs 1 <= i < j <= {n}"
                )));
            }
            if (i, j) == excluded_pair(genus) {
                return Err(Error::InvalidGenerator(format!(
                    "[c{i}, c{j}] is [a_{genus}, b_{genus}], which is not a generator"
                )));
            }
        }
        Ok(())
    }

    pub fn is_comm(&self) -> bool {
        matches!(self, Generator::Comm(..))
    }

    pub fn indices(&self) -> Option<(usize, usize)> {
        match *self {
            Generator::Comm(i, j) => Some((i, j)),
            _ => None,
        }
    }

    /// Every commutator generator for the genus, in order.
    pub fn comms(genus: u32) -> Vec<Generator> {
        let n = 2 * genus as usize - 2;
        let skip = excluded_pair(genus);
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if (i, j) != skip {
                    out.push(Generator::Comm(i, j));
                }
            }
        }
        out
    }

    /// `a1`, `b1`, then the commutators: `C(2g-2, 2) + 1` generators.
    pub fn all(genus: u32) -> Vec<Generator> {
        let mut v = vec![Generator::A1, Generator::B1];
        v.extend(Generator::comms(genus));
        v
    }

    pub fn label(&self) -> String {
        match self {
            Generator::A1 => "a1".into(),
            Generator::B1 => "b1".into(),
            Generator::Comm(i, j) => format!("c:{i}:{j}"),
        }
    }

    pub fn from_label(s: &str) -> Result<Generator> {
        match s {
            "a1" => Ok(Generator::A1),
            "b1" => Ok(Generator::B1),
            _ => {
                let parts: Vec<&str> = s.split(':').collect();
                match parts.as_slice() {
                    ["c", i, j] => {
                        let i = i.parse().map_err(|_| Error::InvalidGenerator(s.into()))?;
                        let j = j.parse().map_err(|_| Error::InvalidGenerator(s.into()))?;
                        Ok(Generator::Comm(i, j))
                    }
                    _ => Err(Error::InvalidGenerator(s.into())),
                }
            }
        }
    }
}

fn excluded_pair(genus: u32) -> (usize, usize) {
    (genus as usize - 1, 2 * genus as usize - 2)
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.label())
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Generator::from_label(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_counts() {
        // C(2g-2, 2) + 1 module generators
        assert_eq!(Generator::all(2).len(), 2);
        assert_eq!(Generator::all(3).len(), 7);
        assert_eq!(Generator::all(4).len(), 16);
    }

    #[test]
    fn excluded_commutator() {
        assert!(Generator::comm(3, 2, 4).is_err());
        assert!(Generator::comm(3, 1, 4).is_ok());
        assert!(Generator::comm(2, 1, 2).is_err());
        assert!(Generator::comm(3, 2, 2).is_err());
        assert!(Generator::comm(3, 3, 5).is_err());
        assert!(Generator::comm(1, 1, 2).is_err());
    }

    #[test]
    fn labels_round_trip() {
        for g in Generator::all(4) {
            assert_eq!(Generator::from_label(&g.label()).unwrap(), g);
        }
        assert!(Generator::from_label("c:1").is_err());
        assert!(Generator::from_label("a2").is_err());
    }
}
