//! Built-in Coxeter diagrams with their standard vertex numbering.
//!
//! Finite families use labels `1..n` (stored at indices `0..n-1`); affine
//! families use labels `0..n` stored at the same indices. `E_n` and `F_4`,
//! `H_n` follow Bourbaki; their affine extensions attach vertex `0` to the
//! Bourbaki vertex 2 (`Ẽ6`), 1 (`Ẽ7`), 8 (`Ẽ8`) and 1 (`F̃4`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterGraph, INF};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
    #[serde(rename = "tA")]
    TA,
    #[serde(rename = "tB")]
    TB,
    #[serde(rename = "tC")]
    TC,
    #[serde(rename = "tD")]
    TD,
    #[serde(rename = "tE")]
    TE,
    #[serde(rename = "tF")]
    TF,
    #[serde(rename = "tG")]
    TG,
    #[serde(rename = "tI")]
    TI,
}

impl Family {
    pub fn is_affine(self) -> bool {
        matches!(
            self,
            Family::TA | Family::TB | Family::TC | Family::TD | Family::TE | Family::TF | Family::TG | Family::TI
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::H => "H",
            Family::I2 => "I2",
            Family::TA => "tA",
            Family::TB => "tB",
            Family::TC => "tC",
            Family::TD => "tD",
            Family::TE => "tE",
            Family::TF => "tF",
            Family::TG => "tG",
            Family::TI => "tI",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "A" => Family::A,
            "B" => Family::B,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "H" => Family::H,
            "I2" => Family::I2,
            "tA" => Family::TA,
            "tB" => Family::TB,
            "tC" => Family::TC,
            "tD" => Family::TD,
            "tE" => Family::TE,
            "tF" => Family::TF,
            "tG" => Family::TG,
            "tI" => Family::TI,
            _ => return Err(Error::UnknownType(s.to_string())),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named diagram: family plus rank parameter (`m` for `I2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeName {
    pub family: Family,
    pub rank: u32,
}

impl TypeName {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::H => (3..=4).contains(&rank),
            Family::I2 => rank >= 3,
            Family::TA => rank >= 1,
            Family::TB => rank >= 3,
            Family::TC => rank >= 2,
            Family::TD => rank >= 4,
            Family::TE => (6..=8).contains(&rank),
            Family::TF => rank == 4,
            Family::TG => rank == 2,
            Family::TI => rank == 1,
        };
        if !ok {
            return Err(Error::UnknownType(format!("{family} {rank}")));
        }
        Ok(TypeName { family, rank })
    }

    pub fn parse(family: &str, rank: u32) -> Result<Self> {
        Self::new(family.parse()?, rank)
    }

    /// Number of generators.
    pub fn vertex_count(self) -> usize {
        let r = self.rank as usize;
        match self.family {
            Family::I2 => 2,
            f if f.is_affine() => r + 1,
            _ => r,
        }
    }

    pub fn graph(self) -> CoxeterGraph {
        let r = self.rank as usize;
        let n = self.vertex_count();
        let finite_labels = || Some((1..=n).map(|i| i.to_string()).collect::<Vec<_>>());
        let affine_labels = || Some((0..n).map(|i| i.to_string()).collect::<Vec<_>>());
        let path = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1, 3)).collect::<Vec<_>>();
        let result = match self.family {
            Family::A => CoxeterGraph::from_edges(n, &path(n), finite_labels()),
            Family::B => {
                let mut e = path(n);
                e[0].2 = 4;
                CoxeterGraph::from_edges(n, &e, finite_labels())
            }
            Family::D => {
                let mut e = vec![(0, 2, 3), (1, 2, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1, 3)));
                CoxeterGraph::from_edges(n, &e, finite_labels())
            }
            Family::E => CoxeterGraph::from_edges(n, &bourbaki_e(r, 0), finite_labels()),
            Family::F => CoxeterGraph::from_edges(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)], finite_labels()),
            Family::H => {
                let mut e = path(n);
                e[0].2 = 5;
                CoxeterGraph::from_edges(n, &e, finite_labels())
            }
            Family::I2 => CoxeterGraph::from_edges(2, &[(0, 1, self.rank)], finite_labels()),
            Family::TA => {
                if r == 1 {
                    CoxeterGraph::from_edges(2, &[(0, 1, INF)], affine_labels())
                } else {
                    let mut e = path(n);
                    e.push((n - 1, 0, 3));
                    CoxeterGraph::from_edges(n, &e, affine_labels())
                }
            }
            Family::TB => {
                let mut e = vec![(0, 2, 3), (1, 2, 3)];
                e.extend((2..r).map(|i| (i, i + 1, 3)));
                e.last_mut().unwrap().2 = 4;
                CoxeterGraph::from_edges(n, &e, affine_labels())
            }
            Family::TC => {
                let mut e = path(n);
                e[0].2 = 4;
                e.last_mut().unwrap().2 = 4;
                CoxeterGraph::from_edges(n, &e, affine_labels())
            }
            Family::TD => {
                let mut e = vec![(0, 2, 3), (1, 2, 3)];
                e.extend((2..r - 2).map(|i| (i, i + 1, 3)));
                e.push((r - 2, r - 1, 3));
                e.push((r - 2, r, 3));
                CoxeterGraph::from_edges(n, &e, affine_labels())
            }
            Family::TE => {
                // Bourbaki labels 1..r sit at indices 1..r; index 0 is the
                // affine vertex.
                let mut e = bourbaki_e(r, 1);
                let attach = match r {
                    6 => 2,
                    7 => 1,
                    _ => 8,
                };
                e.push((0, attach, 3));
                CoxeterGraph::from_edges(n, &e, affine_labels())
            }
            Family::TF => {
                CoxeterGraph::from_edges(5, &[(0, 1, 3), (1, 2, 3), (2, 3, 4), (3, 4, 3)], affine_labels())
            }
            Family::TG => CoxeterGraph::from_edges(3, &[(0, 1, 3), (1, 2, 6)], affine_labels()),
            Family::TI => CoxeterGraph::from_edges(2, &[(0, 1, INF)], affine_labels()),
        };
        result.expect("built-in diagrams are valid")
    }
}

/// Bourbaki `E_r` edges on labels `1..r`, stored at `label - 1 + offset`.
fn bourbaki_e(r: usize, offset: usize) -> Vec<(usize, usize, u32)> {
    let idx = |label: usize| label - 1 + offset;
    let mut e = vec![(idx(1), idx(3), 3), (idx(2), idx(4), 3)];
    e.extend((3..r).map(|l| (idx(l), idx(l + 1), 3)));
    e
}

impl fmt::Display for TypeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.rank),
            fam => write!(f, "{}{}", fam, self.rank),
        }
    }
}

/// Reads the `Display` form: `E6`, `tD4`, `I2(5)`.
impl FromStr for TypeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownType(s.to_string());
        if let Some(m) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            return Self::new(Family::I2, m.parse().map_err(|_| bad())?);
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let (fam, rank) = s.split_at(split);
        Self::parse(fam, rank.parse().map_err(|_| bad())?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{classify_component, FiniteType};

    fn label(family: Family, rank: u32) -> Option<FiniteType> {
        let g = TypeName::new(family, rank).unwrap().graph();
        classify_component(&g, g.vertex_set())
    }

    #[test]
    fn finite_builtins_classify_as_themselves() {
        assert_eq!(label(Family::A, 5), Some(FiniteType::A(5)));
        assert_eq!(label(Family::B, 4), Some(FiniteType::B(4)));
        assert_eq!(label(Family::D, 6), Some(FiniteType::D(6)));
        for r in 6..=8 {
            assert_eq!(label(Family::E, r), Some(FiniteType::E(r as usize)));
        }
        assert_eq!(label(Family::F, 4), Some(FiniteType::F4));
        assert_eq!(label(Family::H, 3), Some(FiniteType::H(3)));
        assert_eq!(label(Family::H, 4), Some(FiniteType::H(4)));
        assert_eq!(label(Family::I2, 7), Some(FiniteType::I2(7)));
    }

    #[test]
    fn affine_builtins_are_not_finite_but_proper_subsets_are() {
        let names = [
            (Family::TA, 1),
            (Family::TA, 4),
            (Family::TB, 5),
            (Family::TC, 2),
            (Family::TC, 4),
            (Family::TD, 4),
            (Family::TD, 7),
            (Family::TE, 6),
            (Family::TE, 7),
            (Family::TE, 8),
            (Family::TF, 4),
            (Family::TG, 2),
            (Family::TI, 1),
        ];
        for (fam, r) in names {
            let g = TypeName::new(fam, r).unwrap().graph();
            let all = g.vertex_set();
            assert!(!g.is_finite_type(all), "{fam}{r}");
            for v in all.vertices() {
                assert!(g.is_finite_type(all.without(v)), "{fam}{r} minus {v}");
            }
        }
    }

    #[test]
    fn invalid_ranks_are_rejected() {
        assert!(TypeName::parse("E", 9).is_err());
        assert!(TypeName::parse("D", 3).is_err());
        assert!(TypeName::parse("X", 3).is_err());
    }

    #[test]
    fn names_round_trip() {
        for name in ["E6", "tD4", "I2(5)", "tI1", "A12"] {
            assert_eq!(name.parse::<TypeName>().unwrap().to_string(), name);
        }
        assert!("I2".parse::<TypeName>().is_err());
        assert!("tX3".parse::<TypeName>().is_err());
    }
}
