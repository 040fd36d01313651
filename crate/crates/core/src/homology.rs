//! `H_*(X_W; R)` from precise matchings (torsion) and `K_W` (free part).
//!
//! Degree `m` carries `{d}^k` with `k = rk δ^M` from critical cardinality
//! `m + 1` to `m`, and free rank `dim H_m(C⁰)` with chains graded by
//! cardinality.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{build_kw, ComplexK, WeightedLevel};
use crate::coxeter::CoxeterGraph;
use crate::error::{Error, Result};
use crate::families::{component_matching, product::product};
use crate::linalg;
use crate::morse::{verify, Matching};
use crate::search::{search_precise, SearchOutcome};
use crate::simplex::Simplex;

/// Where the matching for one `d` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Hand-built family rules on every component.
    Paper,
    /// At least one component was matched by search.
    Search,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub d: u32,
    pub mult: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub degree: usize,
    pub free_rank: usize,
    /// Sorted by `d`, multiplicities at least one.
    pub torsion: Vec<Summand>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingRecord {
    pub d: u32,
    pub source: Source,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub homology: Vec<DegreeHomology>,
    pub matchings: Vec<MatchingRecord>,
}

impl HomologyResult {
    /// Builds the canonical form from per-degree data, dropping zero
    /// multiplicities. Degrees run over `0..rank`.
    pub fn from_parts(
        type_name: impl Into<String>,
        rank: usize,
        free: &BTreeMap<usize, usize>,
        torsion: &BTreeMap<usize, BTreeMap<u32, usize>>,
        matchings: Vec<MatchingRecord>,
    ) -> Self {
        let homology = (0..rank)
            .map(|degree| DegreeHomology {
                degree,
                free_rank: free.get(&degree).copied().unwrap_or(0),
                torsion: torsion
                    .get(&degree)
                    .into_iter()
                    .flatten()
                    .filter(|(_, &mult)| mult > 0)
                    .map(|(&d, &mult)| Summand { d, mult })
                    .collect(),
            })
            .collect();
        HomologyResult { type_name: type_name.into(), rank, homology, matchings }
    }

    /// Equality of the homology groups, ignoring names and provenance.
    pub fn same_groups(&self, other: &HomologyResult) -> bool {
        self.homology == other.homology
    }

    pub fn degree(&self, m: usize) -> Option<&DegreeHomology> {
        self.homology.get(m)
    }
}

impl fmt::Display for DegreeHomology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .torsion
            .iter()
            .map(|s| match s.mult {
                1 => format!("{{{}}}", s.d),
                k => format!("{{{}}}^{k}", s.d),
            })
            .collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("R".into()),
            k => parts.push(format!("R^{k}")),
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for h in &self.homology {
            writeln!(f, "H{} = {h}", h.degree)?;
        }
        Ok(())
    }
}

/// `{d}` multiplicities by degree from a matching that must verify as
/// `φ_d`-precise.
pub fn torsion_from_matching(m: &Matching, k: &ComplexK, level: &WeightedLevel) -> Result<BTreeMap<usize, usize>> {
    let data = verify(m, k, level)?;
    Ok((1..data.delta.len())
        .map(|c| (c - 1, data.rank(c)))
        .filter(|&(_, r)| r > 0)
        .collect())
}

/// `dim_ℚ H_m(C⁰)` for each degree with nonzero homology.
pub fn free_part(k: &ComplexK) -> BTreeMap<usize, usize> {
    let ranks: Vec<usize> = (0..=k.top() + 1)
        .map(|c| if c == 0 { 0 } else { linalg::rank(&k.boundary_c0(c)) })
        .collect();
    (0..=k.top())
        .map(|c| (c, k.level(c).len() - ranks[c] - ranks[c + 1]))
        .filter(|&(_, h)| h > 0)
        .collect()
}

/// A verified precise matching for one `d`.
#[derive(Clone, Debug)]
pub struct PreciseMatching {
    pub d: u32,
    pub matching: Matching,
    pub record: MatchingRecord,
}

/// Sums torsion over the supplied matchings and adds the free part. Every
/// relevant `d` must be present.
pub fn assemble(type_name: &str, k: &ComplexK, matchings: &[PreciseMatching]) -> Result<HomologyResult> {
    let by_d: BTreeMap<u32, &PreciseMatching> = matchings.iter().map(|m| (m.d, m)).collect();
    let mut torsion: BTreeMap<usize, BTreeMap<u32, usize>> = BTreeMap::new();
    let mut records = Vec::new();
    for d in k.relevant_ds() {
        let pm = by_d.get(&d).ok_or(Error::MissingMatching(d))?;
        for (deg, mult) in torsion_from_matching(&pm.matching, k, &k.weighted_level(d))? {
            *torsion.entry(deg).or_default().entry(d).or_default() += mult;
        }
        records.push(pm.record);
    }
    Ok(HomologyResult::from_parts(type_name, k.graph().rank(), &free_part(k), &torsion, records))
}

/// How matchings are obtained for [`homology`].
#[derive(Clone, Copy, Debug)]
pub struct MatchingOptions {
    pub seed: u64,
    pub budget: u64,
    /// Search every component, ignoring the family rules.
    pub search_only: bool,
}

impl Default for MatchingOptions {
    fn default() -> Self {
        MatchingOptions { seed: 0, budget: 5000, search_only: false }
    }
}

/// A `φ_d`-precise matching on `K_W`: family rules or search on each
/// connected component, combined by the product construction.
pub fn precise_matching(k: &ComplexK, d: u32, opts: MatchingOptions) -> Result<PreciseMatching> {
    let graph = k.graph();
    let mut source = Source::Paper;
    let mut acc: Option<(ComplexK, Matching)> = None;
    for comp in graph.components(graph.vertex_set()) {
        let kc = subcomplex(k, comp)?;
        let family = if opts.search_only { None } else { component_matching(graph, comp, d)? };
        let mc = match family {
            Some(m) => m,
            None => {
                source = Source::Search;
                match search_precise(&kc, &kc.weighted_level(d), opts.budget, opts.seed) {
                    SearchOutcome::Found { matching, .. } => matching,
                    SearchOutcome::NotFound { explored } => return Err(Error::SearchFailed { d, explored }),
                }
            }
        };
        acc = Some(match acc {
            None => (kc, mc),
            Some((ka, ma)) => {
                let m = product(&ka, &ma, &kc, &mc)?;
                (subcomplex(k, ka.simplices().fold(comp, Simplex::union))?, m)
            }
        });
    }
    let matching = acc.map_or_else(Matching::empty, |(_, m)| m);
    verify(&matching, k, &k.weighted_level(d))?;
    let seed = (source == Source::Search).then_some(opts.seed);
    Ok(PreciseMatching { d, matching, record: MatchingRecord { d, source, seed } })
}

/// The simplices of `k` inside `vertices`.
fn subcomplex(k: &ComplexK, vertices: Simplex) -> Result<ComplexK> {
    ComplexK::from_simplices(k.graph(), k.simplices().filter(|s| s.is_subset(vertices)))
}

/// The full pipeline for one graph, one `d` per rayon task.
pub fn homology(type_name: &str, graph: &CoxeterGraph, opts: MatchingOptions) -> Result<HomologyResult> {
    let k = build_kw(graph);
    let ds: Vec<u32> = k.relevant_ds().into_iter().collect();
    let matchings = ds
        .par_iter()
        .map(|&d| precise_matching(&k, d, opts))
        .collect::<Result<Vec<_>>>()?;
    assemble(type_name, &k, &matchings)
}
