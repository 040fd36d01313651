//! Generic search for precise matchings, and exhaustive certification that
//! none exists on small complexes.
//!
//! Candidates are iterated element matchings: for a vertex order
//! `v₁, v₂, …`, every still-free simplex `σ` is paired with `σ △ vᵢ` when
//! both lie in the complex, are free and have equal weight. The order comes
//! from a seeded RNG; when a candidate is imprecise, the vertices of the
//! failing pair are moved to the front of the next order.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::complex::{ComplexK, WeightedLevel};
use crate::error::{Error, Result};
use crate::morse::{is_acyclic, is_precise, verify, Matching, Precision};
use crate::simplex::Simplex;

/// Result of [`search_precise`].
#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// A matching that passed the full verification pipeline.
    Found { matching: Matching, seed: u64, explored: u64 },
    /// The budget ran out. Says nothing about existence.
    NotFound { explored: u64 },
}

impl SearchOutcome {
    pub fn matching(&self) -> Option<&Matching> {
        match self {
            SearchOutcome::Found { matching, .. } => Some(matching),
            SearchOutcome::NotFound { .. } => None,
        }
    }

    pub fn explored(&self) -> u64 {
        match self {
            SearchOutcome::Found { explored, .. } | SearchOutcome::NotFound { explored } => *explored,
        }
    }
}

/// Searches for a `φ_d`-precise matching, trying at most `budget` candidates.
pub fn search_precise(k: &ComplexK, level: &WeightedLevel, budget: u64, seed: u64) -> SearchOutcome {
    let n = k.graph().rank();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    let mut explored = 0;
    // Vertex orders already tried, so witness moves do not loop.
    let mut seen = HashSet::new();
    while explored < budget {
        if !seen.insert(order.clone()) {
            order.shuffle(&mut rng);
            if !seen.insert(order.clone()) {
                explored += 1;
                continue;
            }
        }
        explored += 1;
        let m = element_matching(k, level, &order);
        match is_precise(&m, k, level) {
            Ok(Precision::Precise(_)) => {
                // The checker runs again from scratch on every result.
                if verify(&m, k, level).is_ok() {
                    return SearchOutcome::Found { matching: m, seed, explored };
                }
                order.shuffle(&mut rng);
            }
            Ok(Precision::Imprecise { upper, lower, .. }) => {
                let mut front: Vec<usize> = upper.vertices().filter(|v| !lower.contains(*v)).collect();
                front.extend(lower.vertices());
                front.shuffle(&mut rng);
                let rest: Vec<usize> = order.iter().copied().filter(|v| !front.contains(v)).collect();
                order = front.into_iter().chain(rest).collect();
            }
            Err(_) => order.shuffle(&mut rng),
        }
    }
    SearchOutcome::NotFound { explored }
}

/// The iterated element matching for a vertex order, restricted to pairs of
/// equal weight. Always acyclic.
pub fn element_matching(k: &ComplexK, level: &WeightedLevel, order: &[usize]) -> Matching {
    let mut m = Matching::empty();
    for &v in order {
        for sigma in k.simplices() {
            if sigma.contains(v) || !m.is_critical(sigma) {
                continue;
            }
            let up = sigma.with(v);
            if k.contains(up) && m.is_critical(up) && level.weight(up) == level.weight(sigma) {
                m.insert(up, sigma).expect("free covering pair");
            }
        }
    }
    m
}

/// Outcome of [`prove_no_precise`].
#[derive(Clone, Debug)]
pub enum Absence {
    /// Every weighted matching was enumerated; `acyclic` of the `candidates`
    /// were acyclic and none of those was precise.
    Certificate(Certificate),
    Exists(Matching),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub d: u32,
    /// Covering pairs of equal weight.
    pub pairs: usize,
    /// Weighted matchings enumerated (the empty one included).
    pub candidates: u64,
    pub acyclic: u64,
}

/// Enumerates every weighted matching and reports one that is precise, or a
/// certificate that none is. Refuses when there are more than `cap`
/// equal-weight covering pairs.
pub fn prove_no_precise(k: &ComplexK, level: &WeightedLevel, cap: usize) -> Result<Absence> {
    let pairs: Vec<(Simplex, Simplex)> = k
        .simplices()
        .flat_map(|s| k.faces(s).map(move |f| (s, f)).collect::<Vec<_>>())
        .filter(|&(u, l)| level.weight(u) == level.weight(l))
        .collect();
    if pairs.len() > cap {
        return Err(Error::GuardRefused(format!(
            "{} weight-compatible pairs exceed the enumeration cap {cap}",
            pairs.len()
        )));
    }
    let mut cert = Certificate { d: level.d, pairs: pairs.len(), candidates: 0, acyclic: 0 };
    let mut m = Matching::empty();
    match enumerate(k, level, &pairs, 0, &mut m, &mut cert) {
        Some(found) => Ok(Absence::Exists(found)),
        None => Ok(Absence::Certificate(cert)),
    }
}

fn enumerate(
    k: &ComplexK,
    level: &WeightedLevel,
    pairs: &[(Simplex, Simplex)],
    i: usize,
    m: &mut Matching,
    cert: &mut Certificate,
) -> Option<Matching> {
    if i == pairs.len() {
        cert.candidates += 1;
        if !is_acyclic(m, k) {
            return None;
        }
        cert.acyclic += 1;
        return verify(m, k, level).is_ok().then(|| m.clone());
    }
    if let Some(found) = enumerate(k, level, pairs, i + 1, m, cert) {
        return Some(found);
    }
    let (u, l) = pairs[i];
    if m.is_critical(u) && m.is_critical(l) {
        m.insert(u, l).expect("free pair");
        let found = enumerate(k, level, pairs, i + 1, m, cert);
        m.remove(u);
        return found;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::TypeName;
    use crate::complex::build_kw;

    fn kw(name: &str) -> ComplexK {
        build_kw(&name.parse::<TypeName>().unwrap().graph())
    }

    #[test]
    fn element_matchings_are_acyclic() {
        let k = kw("F4");
        let level = k.weighted_level(2);
        for order in [[0, 1, 2, 3], [3, 1, 0, 2], [2, 3, 0, 1]] {
            let m = element_matching(&k, &level, &order);
            assert!(is_acyclic(&m, &k));
        }
    }

    #[test]
    fn trivial_weights_leave_a_single_critical() {
        let k = kw("E6");
        let level = k.weighted_level(7);
        assert!(level.is_trivial());
        let found = search_precise(&k, &level, 10, 0);
        let m = found.matching().unwrap();
        assert_eq!(m.criticals(&k).iter().map(Vec::len).sum::<usize>(), 0);
    }

    #[test]
    fn a2_has_a_precise_matching() {
        let k = kw("A2");
        match prove_no_precise(&k, &k.weighted_level(3), 40).unwrap() {
            Absence::Exists(m) => assert!(verify(&m, &k, &k.weighted_level(3)).is_ok()),
            Absence::Certificate(c) => panic!("unexpected certificate {c:?}"),
        }
    }

    #[test]
    fn a1_at_two_keeps_the_empty_matching() {
        let k = kw("A1");
        let Absence::Exists(m) = prove_no_precise(&k, &k.weighted_level(2), 40).unwrap() else {
            panic!("A1 admits the empty matching");
        };
        assert!(m.is_empty());
    }

    #[test]
    fn search_is_reproducible() {
        let k = kw("E6");
        let level = k.weighted_level(8);
        let a = search_precise(&k, &level, 500, 7);
        let b = search_precise(&k, &level, 500, 7);
        assert_eq!(a.matching().map(Matching::sorted_pairs), b.matching().map(Matching::sorted_pairs));
        assert!(a.matching().is_some());
    }

    #[test]
    fn cap_is_enforced() {
        let k = kw("E6");
        let err = prove_no_precise(&k, &k.weighted_level(2), 40).unwrap_err();
        assert!(matches!(err, Error::GuardRefused(_)));
    }
}
