//! Reference tables embedded as fixtures, compared cell by cell.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::builtin::TypeName;
use crate::error::{Error, Result};
use crate::homology::{homology, DegreeHomology, HomologyResult, MatchingOptions};
use crate::sweep::{self, check};

const TD: &str = include_str!("../data/table_tD.json");
const FINITE: &str = include_str!("../data/table_exceptional_finite.json");
const AFFINE: &str = include_str!("../data/table_exceptional_affine.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Suite {
    #[serde(rename = "tD")]
    AffineD,
    #[serde(rename = "exceptional-finite")]
    ExceptionalFinite,
    #[serde(rename = "exceptional-affine")]
    ExceptionalAffine,
    /// Critical-simplex descriptors over the family grid.
    #[serde(rename = "critical")]
    Critical,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::AffineD, Suite::ExceptionalFinite, Suite::ExceptionalAffine, Suite::Critical];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::AffineD => "tD",
            Suite::ExceptionalFinite => "exceptional-finite",
            Suite::ExceptionalAffine => "exceptional-affine",
            Suite::Critical => "critical",
        }
    }

    /// The expected homology columns; empty for [`Suite::Critical`].
    pub fn fixture(self) -> Vec<HomologyResult> {
        let text = match self {
            Suite::AffineD => TD,
            Suite::ExceptionalFinite => FINITE,
            Suite::ExceptionalAffine => AFFINE,
            Suite::Critical => return Vec::new(),
        };
        serde_json::from_str(text).expect("embedded fixtures parse")
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::UnknownType(format!("suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub column: String,
    pub row: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {}: {}", self.column, self.row, self.got)?;
        if !self.pass {
            write!(f, " (expected {})", self.expected)?;
        }
        Ok(())
    }
}

/// Runs a suite, one task per column (or per grid case), in table order.
pub fn run(suite: Suite, opts: MatchingOptions) -> Result<Vec<Cell>> {
    if suite == Suite::Critical {
        return Ok(critical_cells());
    }
    let columns = suite.fixture();
    let computed = columns
        .par_iter()
        .map(|col| {
            let t: TypeName = col.type_name.parse()?;
            homology(&col.type_name, &t.graph(), opts)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(columns.iter().zip(&computed).flat_map(|(e, g)| compare(e, g)).collect())
}

/// Structural comparison of two results, one cell per degree.
pub fn compare(expected: &HomologyResult, got: &HomologyResult) -> Vec<Cell> {
    let degrees = expected.homology.len().max(got.homology.len());
    let show = |h: Option<&DegreeHomology>| h.map_or_else(|| "-".to_string(), ToString::to_string);
    (0..degrees)
        .map(|m| {
            let (e, g) = (expected.degree(m), got.degree(m));
            Cell {
                column: expected.type_name.clone(),
                row: format!("H{m}"),
                expected: show(e),
                got: show(g),
                pass: e.is_some() && e == g,
            }
        })
        .collect()
}

/// One cell per family case with a tabulated descriptor.
fn critical_cells() -> Vec<Cell> {
    let cases: Vec<_> = sweep::grid(12, 9, 0)
        .into_iter()
        .filter(|c| c.expected_descriptor().is_some())
        .collect();
    cases
        .par_iter()
        .map(|&case| {
            let r = check(case);
            let expected = r.expected.as_ref().map(ToString::to_string).unwrap_or_default();
            Cell {
                column: case.to_string(),
                row: "critical".into(),
                expected,
                got: format!("{:?}", r.observed),
                pass: r.verified() && r.descriptor_ok(),
            }
        })
        .collect()
}
