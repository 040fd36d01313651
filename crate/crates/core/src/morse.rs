//! Matchings on the face poset and the Morse complex they induce.

use std::collections::HashMap;

use crate::complex::{incidence_sign, ComplexK, WeightedLevel};
use crate::error::{Error, Result};
use crate::linalg;
use crate::simplex::Simplex;

/// A set of covering pairs `(upper, lower)`, each simplex in at most one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(Simplex, Simplex)>,
    partner: HashMap<Simplex, Simplex>,
}

/// Role of a simplex with respect to a matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Critical,
    /// Matched with a face; the partner is one vertex smaller.
    Upper(Simplex),
    /// Matched with a coface.
    Lower(Simplex),
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    /// Builds a matching from `(upper, lower)` pairs, rejecting non-covering
    /// pairs and simplices that occur twice.
    pub fn new<I: IntoIterator<Item = (Simplex, Simplex)>>(pairs: I) -> Result<Self> {
        let mut m = Matching::empty();
        for (upper, lower) in pairs {
            m.insert(upper, lower)?;
        }
        Ok(m)
    }

    pub fn insert(&mut self, upper: Simplex, lower: Simplex) -> Result<()> {
        if !upper.covers(lower) {
            return Err(Error::NotAFace { upper, lower });
        }
        for s in [upper, lower] {
            if self.partner.contains_key(&s) {
                return Err(Error::InvalidMatching(format!("{s:?} is matched twice")));
            }
        }
        self.partner.insert(upper, lower);
        self.partner.insert(lower, upper);
        self.pairs.push((upper, lower));
        Ok(())
    }

    /// Removes the pair containing `s`, if any.
    pub fn remove(&mut self, s: Simplex) {
        if let Some(p) = self.partner.remove(&s) {
            self.partner.remove(&p);
            self.pairs.retain(|&(u, l)| u != s && l != s);
        }
    }

    pub fn pairs(&self) -> &[(Simplex, Simplex)] {
        &self.pairs
    }

    /// Pairs in canonical order (by lower simplex).
    pub fn sorted_pairs(&self) -> Vec<(Simplex, Simplex)> {
        let mut p = self.pairs.clone();
        p.sort_by_key(|&(u, l)| (l, u));
        p
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn partner(&self, s: Simplex) -> Option<Simplex> {
        self.partner.get(&s).copied()
    }

    pub fn role(&self, s: Simplex) -> Role {
        match self.partner.get(&s) {
            None => Role::Critical,
            Some(&p) if p.len() < s.len() => Role::Upper(p),
            Some(&p) => Role::Lower(p),
        }
    }

    pub fn is_critical(&self, s: Simplex) -> bool {
        !self.partner.contains_key(&s)
    }

    /// Critical simplices of `k`, grouped by cardinality in ordinal order.
    pub fn criticals(&self, k: &ComplexK) -> Vec<Vec<Simplex>> {
        (0..=k.top())
            .map(|c| k.level(c).iter().copied().filter(|s| self.is_critical(*s)).collect())
            .collect()
    }

    /// Applies a vertex map to every pair.
    pub fn map_vertices(&self, f: impl Fn(Simplex) -> Simplex) -> Matching {
        Matching::new(self.pairs.iter().map(|&(u, l)| (f(u), f(l)))).expect("vertex maps are injective")
    }
}

/// Checks that every pair lies in `k` (covering and uniqueness hold by
/// construction).
pub fn validate(m: &Matching, k: &ComplexK) -> Result<()> {
    for &(u, l) in m.pairs() {
        for s in [u, l] {
            if !k.contains(s) {
                return Err(Error::InvalidMatching(format!("{s:?} is not a simplex of the complex")));
            }
        }
    }
    Ok(())
}

/// Validates raw pairs, reporting the first simplex that is matched twice or
/// the first non-covering pair.
pub fn validate_pairs(pairs: &[(Simplex, Simplex)], k: &ComplexK) -> Result<Matching> {
    let m = Matching::new(pairs.iter().copied())?;
    validate(&m, k)?;
    Ok(m)
}

/// Lower simplices of upward pairs reachable in one alternating step from
/// `tau` through its partner `sigma`.
fn successors<'a>(m: &'a Matching, k: &'a ComplexK, tau: Simplex, sigma: Simplex) -> impl Iterator<Item = Simplex> + 'a {
    k.faces(sigma)
        .filter(move |&t| t != tau && matches!(m.role(t), Role::Lower(_)))
}

/// True iff the modified Hasse diagram has no directed cycle. Cycles live
/// between two adjacent levels, so it is enough to search the graph on lower
/// simplices `τ → τ'` where `τ'` is a face of `τ`'s partner.
pub fn is_acyclic(m: &Matching, k: &ComplexK) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark: HashMap<Simplex, Mark> = m
        .pairs()
        .iter()
        .map(|&(_, l)| (l, Mark::New))
        .collect();
    let starts: Vec<Simplex> = m.sorted_pairs().into_iter().map(|(_, l)| l).collect();
    for start in starts {
        if mark[&start] != Mark::New {
            continue;
        }
        let mut stack: Vec<(Simplex, Vec<Simplex>)> = Vec::new();
        let next = |t: Simplex| successors(m, k, t, m.partner(t).unwrap()).collect::<Vec<_>>();
        mark.insert(start, Mark::Open);
        stack.push((start, next(start)));
        while let Some((node, todo)) = stack.last_mut() {
            if let Some(t) = todo.pop() {
                match mark[&t] {
                    Mark::Open => return false,
                    Mark::Done => {}
                    Mark::New => {
                        mark.insert(t, Mark::Open);
                        let succ = next(t);
                        stack.push((t, succ));
                    }
                }
            } else {
                let n = *node;
                mark.insert(n, Mark::Done);
                stack.pop();
            }
        }
    }
    true
}

pub fn is_weighted(m: &Matching, level: &WeightedLevel) -> bool {
    first_unweighted(m, level).is_none()
}

fn first_unweighted(m: &Matching, level: &WeightedLevel) -> Option<(Simplex, Simplex)> {
    m.sorted_pairs()
        .into_iter()
        .find(|&(u, l)| level.weight(u) != level.weight(l))
}

/// Critical simplices and Morse boundary matrices.
///
/// `delta[c]` maps critical simplices of cardinality `c` (columns) to those of
/// cardinality `c - 1` (rows); `delta[0]` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseData {
    pub critical: Vec<Vec<Simplex>>,
    pub delta: Vec<Vec<Vec<i64>>>,
}

impl MorseData {
    /// `rk_ℚ δ_c`.
    pub fn rank(&self, c: usize) -> usize {
        self.delta.get(c).map_or(0, |m| linalg::rank(m))
    }

    /// Nonzero entries as `(upper, lower, coefficient)`.
    pub fn entries(&self) -> Vec<(Simplex, Simplex, i64)> {
        let mut out = Vec::new();
        for c in 1..self.delta.len() {
            for (i, row) in self.delta[c].iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    if x != 0 {
                        out.push((self.critical[c][j], self.critical[c - 1][i], x));
                    }
                }
            }
        }
        out
    }
}

/// Morse incidences by dynamic programming.
///
/// For each cardinality `c - 1` simplex `τ` the flow vector `F(τ)` over the
/// critical simplices of that cardinality is `e_τ` when `τ` is critical, `0`
/// when `τ` is matched downward, and
/// `−[σ₁:τ] Σ_{τ' ⋖ σ₁, τ' ≠ τ} [σ₁:τ'] F(τ')` when `τ` is matched with `σ₁`.
/// Then `δ(σ) = Σ_{τ ⋖ σ} [σ:τ] F(τ)`.
pub fn morse_incidence(m: &Matching, k: &ComplexK) -> Result<MorseData> {
    if !is_acyclic(m, k) {
        return Err(Error::NotAcyclic);
    }
    let critical = m.criticals(k);
    let mut delta = vec![Vec::new()];
    for c in 1..=k.top() {
        let lower_crit = &critical[c - 1];
        let crit_index: HashMap<Simplex, usize> = lower_crit.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let width = lower_crit.len();
        let mut flow: HashMap<Simplex, Vec<i64>> = HashMap::new();
        for &tau in k.level(c - 1) {
            compute_flow(m, k, tau, &crit_index, width, &mut flow);
        }
        let upper_crit = &critical[c];
        let mut mat = vec![vec![0i64; upper_crit.len()]; width];
        for (j, &sigma) in upper_crit.iter().enumerate() {
            for tau in k.faces(sigma) {
                let sign = incidence_sign(sigma, tau)? as i64;
                for (i, &x) in flow[&tau].iter().enumerate() {
                    mat[i][j] += sign * x;
                }
            }
        }
        delta.push(mat);
    }
    Ok(MorseData { critical, delta })
}

fn compute_flow(
    m: &Matching,
    k: &ComplexK,
    root: Simplex,
    crit_index: &HashMap<Simplex, usize>,
    width: usize,
    flow: &mut HashMap<Simplex, Vec<i64>>,
) {
    if flow.contains_key(&root) {
        return;
    }
    // Post-order over the (acyclic) successor graph with an explicit stack.
    let mut stack = vec![(root, false)];
    while let Some((tau, expanded)) = stack.pop() {
        if flow.contains_key(&tau) {
            continue;
        }
        match m.role(tau) {
            Role::Critical => {
                let mut v = vec![0; width];
                v[crit_index[&tau]] = 1;
                flow.insert(tau, v);
            }
            Role::Upper(_) => {
                flow.insert(tau, vec![0; width]);
            }
            Role::Lower(sigma) => {
                let faces: Vec<Simplex> = k.faces(sigma).filter(|&t| t != tau).collect();
                if !expanded {
                    stack.push((tau, true));
                    for t in faces {
                        if !flow.contains_key(&t) {
                            stack.push((t, false));
                        }
                    }
                    continue;
                }
                let s0 = incidence_sign(sigma, tau).unwrap() as i64;
                let mut v = vec![0i64; width];
                for t in faces {
                    let s1 = incidence_sign(sigma, t).unwrap() as i64;
                    for (a, b) in v.iter_mut().zip(&flow[&t]) {
                        *a -= s0 * s1 * b;
                    }
                }
                flow.insert(tau, v);
            }
        }
    }
}

/// Morse incidence `[σ:τ]^M` by exhaustive enumeration of alternating paths.
/// Exponential; kept as an independent check of [`morse_incidence`].
pub fn brute_force_incidence(m: &Matching, k: &ComplexK, sigma: Simplex, tau: Simplex) -> i64 {
    fn walk(m: &Matching, k: &ComplexK, upper: Simplex, from: Option<Simplex>, sign: i64, target: Simplex) -> i64 {
        let mut total = 0;
        for face in k.faces(upper) {
            if Some(face) == from {
                continue;
            }
            let s = sign * incidence_sign(upper, face).unwrap() as i64;
            if face == target {
                total += s;
            }
            if let Role::Lower(next) = m.role(face) {
                if Some(face) != from && next != upper {
                    total += walk(m, k, next, Some(face), -s * incidence_sign(next, face).unwrap() as i64, target);
                }
            }
        }
        total
    }
    walk(m, k, sigma, None, 1, tau)
}

/// Outcome of the preciseness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Precision {
    Precise(MorseData),
    /// A nonzero Morse incidence between criticals whose weights do not
    /// differ by exactly one.
    Imprecise { upper: Simplex, lower: Simplex, data: MorseData },
}

impl Precision {
    pub fn is_precise(&self) -> bool {
        matches!(self, Precision::Precise(_))
    }

    pub fn data(&self) -> &MorseData {
        match self {
            Precision::Precise(d) | Precision::Imprecise { data: d, .. } => d,
        }
    }

    pub fn witness(&self) -> Option<(Simplex, Simplex)> {
        match self {
            Precision::Precise(_) => None,
            Precision::Imprecise { upper, lower, .. } => Some((*upper, *lower)),
        }
    }
}

/// Checks acyclicity and weightedness, then that every nonzero Morse
/// incidence has weight gap exactly one.
pub fn is_precise(m: &Matching, k: &ComplexK, level: &WeightedLevel) -> Result<Precision> {
    if let Some((upper, lower)) = first_unweighted(m, level) {
        return Err(Error::NotWeighted { d: level.d, upper, lower });
    }
    let data = morse_incidence(m, k)?;
    let witness = data
        .entries()
        .into_iter()
        .find(|&(u, l, _)| level.weight(u) != level.weight(l) + 1);
    Ok(match witness {
        None => Precision::Precise(data),
        Some((upper, lower, _)) => Precision::Imprecise { upper, lower, data },
    })
}

/// Full pipeline: validate, acyclic, weighted, precise.
pub fn verify(m: &Matching, k: &ComplexK, level: &WeightedLevel) -> Result<MorseData> {
    validate(m, k)?;
    match is_precise(m, k, level)? {
        Precision::Precise(data) => Ok(data),
        Precision::Imprecise { upper, lower, .. } => Err(Error::NotPrecise { d: level.d, upper, lower }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{Family, TypeName};
    use crate::complex::build_kw;
    use crate::linalg::matmul;

    fn s(v: &[usize]) -> Simplex {
        Simplex::from_vertices(v.iter().copied())
    }

    fn kw(f: Family, r: u32) -> ComplexK {
        build_kw(&TypeName::new(f, r).unwrap().graph())
    }

    #[test]
    fn double_matching_is_rejected() {
        let err = Matching::new([(s(&[0, 1]), s(&[0])), (s(&[0]), Simplex::EMPTY)]).unwrap_err();
        assert_eq!(err, Error::InvalidMatching("{0} is matched twice".into()));
        assert!(Matching::new([(s(&[0, 1]), Simplex::EMPTY)]).is_err());
    }

    #[test]
    fn empty_matching_reproduces_plain_boundary() {
        let k = kw(Family::A, 3);
        let data = morse_incidence(&Matching::empty(), &k).unwrap();
        for c in 1..=k.top() {
            assert_eq!(data.delta[c], k.boundary_c0(c));
        }
    }

    #[test]
    fn detects_alternating_cycle() {
        // Square poset: on the boundary of a triangle, match each vertex with
        // the next edge around the cycle.
        let k = kw(Family::TA, 2);
        let cyc = Matching::new([
            (s(&[0, 1]), s(&[0])),
            (s(&[1, 2]), s(&[1])),
            (s(&[0, 2]), s(&[2])),
        ])
        .unwrap();
        assert!(!is_acyclic(&cyc, &k));
        assert_eq!(morse_incidence(&cyc, &k).unwrap_err(), Error::NotAcyclic);
        let ok = Matching::new([(s(&[0, 1]), s(&[0])), (s(&[1, 2]), s(&[1]))]).unwrap();
        assert!(is_acyclic(&ok, &k));
    }

    #[test]
    fn weightedness_for_dihedral() {
        let k = kw(Family::I2, 6);
        let w = k.weighted_level(3);
        assert!(is_weighted(&Matching::new([(s(&[1]), Simplex::EMPTY)]).unwrap(), &w));
        assert!(!is_weighted(&Matching::new([(s(&[0, 1]), s(&[0]))]).unwrap(), &w));
    }

    #[test]
    fn dp_agrees_with_enumeration_and_squares_to_zero() {
        let k = kw(Family::A, 3);
        let m = Matching::new([
            (s(&[0]), Simplex::EMPTY),
            (s(&[1, 2]), s(&[1])),
            (s(&[0, 1, 2]), s(&[0, 2])),
        ])
        .unwrap();
        let data = morse_incidence(&m, &k).unwrap();
        for c in 1..data.delta.len() {
            for (j, &u) in data.critical[c].iter().enumerate() {
                for (i, &l) in data.critical[c - 1].iter().enumerate() {
                    assert_eq!(data.delta[c][i][j], brute_force_incidence(&m, &k, u, l));
                }
            }
            if c + 1 < data.delta.len() && !data.critical[c + 1].is_empty() && !data.critical[c - 1].is_empty() {
                let sq = matmul(&data.delta[c], &data.delta[c + 1]);
                assert!(sq.iter().flatten().all(|&x| x == 0));
            }
        }
    }

    #[test]
    fn a1_empty_matching_is_precise() {
        let k = kw(Family::A, 1);
        assert!(is_precise(&Matching::empty(), &k, &k.weighted_level(2)).unwrap().is_precise());
    }
}
