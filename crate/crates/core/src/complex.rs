//! The simplicial complex `K_W` and its algebraic complexes.
//!
//! `C⁰_*` has the plain incidence signs as boundary; `C_*` scales each entry
//! by `W_σ(q)/W_τ(q)`. Chain degree equals cardinality, so `∅` sits in degree 0.

use std::collections::{BTreeSet, HashMap};

use crate::coxeter::{CoxeterGraph, CyclotomicVector};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::simplex::Simplex;

/// A finite set of simplices graded by cardinality, with lexicographic
/// ordinals inside each level. Built either as the full `K_W` or as a
/// restricted family such as `K^A_{n,f,g}` (not downward closed).
#[derive(Clone, Debug)]
pub struct ComplexK {
    graph: CoxeterGraph,
    levels: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
    factors: HashMap<Simplex, CyclotomicVector>,
}

/// `v_{φ_d}` for every simplex of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedLevel {
    pub d: u32,
    weights: HashMap<Simplex, u32>,
}

impl WeightedLevel {
    pub fn weight(&self, sigma: Simplex) -> u32 {
        self.weights[&sigma]
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.values().all(|&w| w == 0)
    }
}

/// `K_W` for a Coxeter graph.
pub fn build_kw(graph: &CoxeterGraph) -> ComplexK {
    let mut all = vec![Simplex::EMPTY];
    let mut frontier: BTreeSet<Simplex> = [Simplex::EMPTY].into();
    while !frontier.is_empty() {
        let mut next = BTreeSet::new();
        for sigma in &frontier {
            for v in graph.vertex_set().difference(*sigma).vertices() {
                let up = sigma.with(v);
                // Every facet of a finite-type simplex is finite type, so the
                // candidate only needs its facets present in the frontier.
                if up.facets().all(|f| frontier.contains(&f)) && graph.is_finite_type(up) {
                    next.insert(up);
                }
            }
        }
        all.extend(next.iter().copied());
        frontier = next;
    }
    ComplexK::from_simplices(graph, all).expect("K_W consists of finite-type simplices")
}

impl ComplexK {
    /// A complex on an explicit family of finite-type simplices. Boundaries
    /// only see faces inside the family.
    pub fn from_simplices<I: IntoIterator<Item = Simplex>>(graph: &CoxeterGraph, simplices: I) -> Result<Self> {
        let set: BTreeSet<Simplex> = simplices.into_iter().collect();
        let top = set.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut levels = vec![Vec::new(); top + 1];
        let mut factors = HashMap::with_capacity(set.len());
        for s in set {
            if !s.is_subset(graph.vertex_set()) {
                return Err(Error::InvalidMatching(format!("{s:?} is not a subset of the vertex set")));
            }
            factors.insert(s, graph.factorization(s)?);
            levels[s.len()].push(s);
        }
        let index = levels
            .iter()
            .flat_map(|l| l.iter().enumerate().map(|(i, s)| (*s, i)))
            .collect();
        Ok(ComplexK { graph: graph.clone(), levels, index, factors })
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    /// Largest cardinality present.
    pub fn top(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// Simplices of cardinality `k`, in ordinal order.
    pub fn level(&self, k: usize) -> &[Simplex] {
        self.levels.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn simplices(&self) -> impl Iterator<Item = Simplex> + '_ {
        self.levels.iter().flatten().copied()
    }

    pub fn contains(&self, sigma: Simplex) -> bool {
        self.index.contains_key(&sigma)
    }

    /// Ordinal of `sigma` within its cardinality level.
    pub fn ordinal(&self, sigma: Simplex) -> Option<usize> {
        self.index.get(&sigma).copied()
    }

    pub fn factorization(&self, sigma: Simplex) -> &CyclotomicVector {
        &self.factors[&sigma]
    }

    /// Facets of `sigma` that belong to the complex.
    pub fn faces(&self, sigma: Simplex) -> impl Iterator<Item = Simplex> + '_ {
        sigma.facets().filter(move |f| self.contains(*f))
    }

    /// Cofaces of `sigma` (one vertex more) that belong to the complex.
    pub fn cofaces(&self, sigma: Simplex) -> impl Iterator<Item = Simplex> + '_ {
        self.graph
            .vertex_set()
            .difference(sigma)
            .vertices()
            .map(move |v| sigma.with(v))
            .filter(move |s| self.contains(*s))
    }

    pub fn is_downward_closed(&self) -> bool {
        self.simplices().all(|s| s.facets().all(|f| self.contains(f)))
    }

    pub fn weighted_level(&self, d: u32) -> WeightedLevel {
        assert!(d >= 2, "weights are defined for d >= 2");
        let weights = self.factors.iter().map(|(s, f)| (*s, f.multiplicity(d))).collect();
        WeightedLevel { d, weights }
    }

    /// Every `d` dividing some degree of some parabolic in the complex.
    pub fn relevant_ds(&self) -> BTreeSet<u32> {
        self.factors
            .values()
            .flat_map(|f| f.iter().map(|(d, _)| d).collect::<Vec<_>>())
            .collect()
    }

    /// `∂⁰_k`: rows are cardinality `k-1`, columns cardinality `k`.
    pub fn boundary_c0(&self, k: usize) -> Vec<Vec<i64>> {
        let (rows, cols) = (self.level(k.wrapping_sub(1)), self.level(k));
        let mut m = vec![vec![0i64; cols.len()]; rows.len()];
        if k == 0 {
            return m;
        }
        for (j, &sigma) in cols.iter().enumerate() {
            for tau in self.faces(sigma) {
                m[self.index[&tau]][j] = incidence_sign(sigma, tau).expect("facet") as i64;
            }
        }
        m
    }

    /// `∂_k` with entries `[σ:τ]·W_σ(q)/W_τ(q)`.
    pub fn boundary_c(&self, k: usize) -> Vec<Vec<IntPoly>> {
        let (rows, cols) = (self.level(k.wrapping_sub(1)), self.level(k));
        let mut m = vec![vec![IntPoly::zero(); cols.len()]; rows.len()];
        if k == 0 {
            return m;
        }
        for (j, &sigma) in cols.iter().enumerate() {
            for tau in self.faces(sigma) {
                let q = self.factors[&sigma]
                    .quotient(&self.factors[&tau])
                    .expect("W_τ divides W_σ")
                    .to_poly();
                let entry = if incidence_sign(sigma, tau).expect("facet") < 0 { -&q } else { q };
                m[self.index[&tau]][j] = entry;
            }
        }
        m
    }
}

/// `(−1)^i` where the removed vertex is the `i`-th smallest vertex of `sigma`.
pub fn incidence_sign(sigma: Simplex, tau: Simplex) -> Result<i32> {
    let v = sigma.removed_vertex(tau).ok_or(Error::NotAFace { upper: sigma, lower: tau })?;
    Ok(if sigma.position(v).unwrap() % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{Family, TypeName};
    use crate::linalg::matmul;

    fn kw(f: Family, r: u32) -> ComplexK {
        build_kw(&TypeName::new(f, r).unwrap().graph())
    }

    fn s(v: &[usize]) -> Simplex {
        Simplex::from_vertices(v.iter().copied())
    }

    #[test]
    fn sizes() {
        assert_eq!(kw(Family::A, 2).len(), 4);
        assert_eq!(kw(Family::TD, 4).len(), 31);
        assert_eq!(kw(Family::E, 8).len(), 256);
        assert!(kw(Family::TE, 8).is_downward_closed());
    }

    #[test]
    fn signs_follow_position() {
        assert_eq!(incidence_sign(s(&[0, 1, 2]), s(&[1, 2])), Ok(1));
        assert_eq!(incidence_sign(s(&[0, 1, 2]), s(&[0, 2])), Ok(-1));
        assert_eq!(incidence_sign(s(&[0, 1, 2]), s(&[0, 1])), Ok(1));
        assert!(incidence_sign(s(&[0, 1, 2]), s(&[0])).is_err());
    }

    #[test]
    fn small_boundaries() {
        let a1 = kw(Family::A, 1);
        assert_eq!(a1.boundary_c0(1), vec![vec![1]]);
        assert_eq!(a1.boundary_c(1)[0][0].coeffs(), &[1, 1]);
        let i5 = kw(Family::I2, 5);
        assert_eq!(i5.boundary_c0(2), vec![vec![-1], vec![1]]);
        let c = i5.boundary_c(2);
        assert_eq!(c[0][0], -&IntPoly::q_integer(5));
        assert_eq!(c[1][0], IntPoly::q_integer(5));
    }

    #[test]
    fn boundary_squares_to_zero() {
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::TD, 5), (Family::F, 4)] {
            let k = kw(f, r);
            for d in 1..k.top() {
                let prod = matmul(&k.boundary_c0(d), &k.boundary_c0(d + 1));
                assert!(prod.iter().flatten().all(|&x| x == 0));
                let (a, b) = (k.boundary_c(d), k.boundary_c(d + 1));
                for i in 0..a.len() {
                    for j in 0..b[0].len() {
                        let mut acc = IntPoly::zero();
                        for (l, bl) in b.iter().enumerate() {
                            acc = &acc + &(&a[i][l] * &bl[j]);
                        }
                        assert!(acc.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn weights_are_monotone_and_match_closed_forms() {
        let k = kw(Family::A, 4);
        assert_eq!(k.weighted_level(5).weight(s(&[0, 1, 2, 3])), 1);
        let t = kw(Family::TD, 4);
        let w = t.weighted_level(7);
        assert!(w.is_trivial());
        assert!(!t.relevant_ds().contains(&7));
        let w2 = t.weighted_level(2);
        for sigma in t.simplices() {
            for tau in t.faces(sigma) {
                assert!(w2.weight(tau) <= w2.weight(sigma));
            }
        }
    }
}
