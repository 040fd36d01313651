//! Coxeter graphs, recognition of irreducible finite types, and the
//! cyclotomic factorization of Poincaré polynomials of parabolic subgroups.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplex::{Simplex, MAX_VERTICES};

/// Bond label standing for `m = ∞`.
pub const INF: u32 = u32::MAX;

/// A Coxeter graph: symmetric matrix of bond labels `m_ij` with `m_ii = 1`.
///
/// Vertices are indexed `0..n`; display labels are kept separately so the
/// built-in diagrams can carry their conventional numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    n: usize,
    bonds: Vec<u32>,
    labels: Vec<String>,
}

impl CoxeterGraph {
    pub fn from_matrix(rows: Vec<Vec<u32>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidMatrix(format!("rank {n} exceeds {MAX_VERTICES}")));
        }
        let mut bonds = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            bonds.extend_from_slice(row);
        }
        for i in 0..n {
            if bonds[i * n + i] != 1 {
                return Err(Error::InvalidMatrix(format!("diagonal entry {} is not 1", i + 1)));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = bonds[i * n + j];
                if m != bonds[j * n + i] {
                    return Err(Error::InvalidMatrix(format!(
                        "not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
                if m < 2 {
                    return Err(Error::InvalidMatrix(format!(
                        "off-diagonal entry at ({}, {}) must be >= 2 or inf",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::InvalidMatrix(format!(
                    "{} labels for {n} vertices",
                    l.len()
                )))
            }
            None => (1..=n).map(|i| i.to_string()).collect(),
        };
        Ok(CoxeterGraph { n, bonds, labels })
    }

    /// Graph with all bonds 2 except the listed edges `(i, j, m)`.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u32)], labels: Option<Vec<String>>) -> Result<Self> {
        let mut rows = vec![vec![2u32; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, m) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidMatrix(format!("bad edge ({i}, {j})")));
            }
            rows[i][j] = m;
            rows[j][i] = m;
        }
        Self::from_matrix(rows, labels)
    }

    /// Parses the matrix file format: first line `n`, then `n` rows of `n`
    /// whitespace-separated entries, `inf` for ∞.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::InvalidMatrix("missing rank line".into()))?
            .parse()
            .map_err(|e| Error::InvalidMatrix(format!("bad rank: {e}")))?;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::InvalidMatrix(format!("missing row {}", i + 1)))?;
            let row = line
                .split_whitespace()
                .map(|tok| {
                    if tok.eq_ignore_ascii_case("inf") {
                        Ok(INF)
                    } else {
                        tok.parse::<u32>()
                            .map_err(|e| Error::InvalidMatrix(format!("bad entry `{tok}`: {e}")))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::InvalidMatrix("trailing rows".into()));
        }
        Self::from_matrix(rows, None)
    }

    pub fn to_matrix_string(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n)
                .map(|j| match self.bond(i, j) {
                    INF => "inf".to_string(),
                    m => m.to_string(),
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn bond(&self, i: usize, j: usize) -> u32 {
        self.bonds[i * self.n + j]
    }

    /// Vertices are joined by an edge of the Coxeter graph (`m_ij ≠ 2`).
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.bond(i, j) != 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_set(&self) -> Simplex {
        Simplex::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adjacent(v, u))
    }

    /// Connected components of the subgraph induced by `sigma`, ordered by
    /// their smallest vertex.
    pub fn components(&self, sigma: Simplex) -> Vec<Simplex> {
        let mut remaining = sigma;
        let mut out = Vec::new();
        while let Some(start) = remaining.vertices().next() {
            let comp = self.component_of(sigma, start);
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Component of `v` in the subgraph induced by `sigma` (empty if `v ∉ σ`).
    pub fn component_of(&self, sigma: Simplex, v: usize) -> Simplex {
        if !sigma.contains(v) {
            return Simplex::EMPTY;
        }
        let mut comp = Simplex::EMPTY.with(v);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for y in sigma.difference(comp).vertices() {
                if self.adjacent(x, y) {
                    comp = comp.with(y);
                    stack.push(y);
                }
            }
        }
        comp
    }

    /// Induced subgraph on `vertices` (in the given order), keeping labels.
    pub fn induced(&self, vertices: &[usize]) -> CoxeterGraph {
        let k = vertices.len();
        let mut bonds = Vec::with_capacity(k * k);
        for &i in vertices {
            for &j in vertices {
                bonds.push(self.bond(i, j));
            }
        }
        CoxeterGraph {
            n: k,
            bonds,
            labels: vertices.iter().map(|&v| self.labels[v].clone()).collect(),
        }
    }

    pub fn disjoint_union(&self, other: &CoxeterGraph) -> Result<CoxeterGraph> {
        let n = self.n + other.n;
        let mut rows = vec![vec![2u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = match (i < self.n, j < self.n) {
                    (true, true) => self.bond(i, j),
                    (false, false) => other.bond(i - self.n, j - self.n),
                    _ => 2,
                };
            }
        }
        let labels = self.labels.iter().chain(other.labels.iter()).cloned().collect();
        Self::from_matrix(rows, Some(labels))
    }

    /// Cyclotomic factorization of `W_σ(q)`.
    pub fn factorization(&self, sigma: Simplex) -> Result<CyclotomicVector> {
        let mut acc = CyclotomicVector::one();
        for comp in self.components(sigma) {
            let label = classify_component(self, comp).ok_or(Error::NotFiniteType(sigma))?;
            acc = acc.product(&label.poincare_factorization());
        }
        Ok(acc)
    }

    /// `v_φ(σ)` for `φ = φ_d`, summed over the components of `Γ(σ)`.
    pub fn weight(&self, sigma: Simplex, d: u32) -> Result<u32> {
        Ok(self.factorization(sigma)?.multiplicity(d))
    }

    pub fn is_finite_type(&self, sigma: Simplex) -> bool {
        self.components(sigma)
            .into_iter()
            .all(|c| classify_component(self, c).is_some())
    }
}

/// Irreducible finite Coxeter types. `G2` is stored as `I2(6)`; `I2(3)` and
/// `I2(4)` do not occur (they are `A2` and `B2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl FiniteType {
    /// Dihedral type with normalization of the small cases.
    pub fn dihedral(m: u32) -> FiniteType {
        match m {
            3 => FiniteType::A(2),
            4 => FiniteType::B(2),
            m => FiniteType::I2(m),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) | FiniteType::E(n) | FiniteType::H(n) => n,
            FiniteType::F4 => 4,
            FiniteType::I2(_) => 2,
        }
    }

    /// Degrees of the basic invariants (exponents plus one), sorted.
    pub fn degrees(self) -> Vec<u32> {
        let mut out: Vec<u32> = match self {
            FiniteType::A(n) => (2..=n as u32 + 1).collect(),
            FiniteType::B(n) => (1..=n as u32).map(|i| 2 * i).collect(),
            FiniteType::D(n) => {
                let n = n as u32;
                (1..n).map(|i| 2 * i).chain(std::iter::once(n)).collect()
            }
            FiniteType::E(6) => vec![2, 5, 6, 8, 9, 12],
            FiniteType::E(7) => vec![2, 6, 8, 10, 12, 14, 18],
            FiniteType::E(8) => vec![2, 8, 12, 14, 18, 20, 24, 30],
            FiniteType::E(n) => panic!("no finite type E{n}"),
            FiniteType::F4 => vec![2, 6, 8, 12],
            FiniteType::H(3) => vec![2, 6, 10],
            FiniteType::H(4) => vec![2, 12, 20, 30],
            FiniteType::H(n) => panic!("no finite type H{n}"),
            FiniteType::I2(m) => vec![2, m],
        };
        out.sort_unstable();
        out
    }

    /// `W(q) = ∏ [e]_q` over the degrees, as a product of cyclotomics.
    pub fn poincare_factorization(self) -> CyclotomicVector {
        CyclotomicVector::from_degrees(&self.degrees())
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Product `∏ φ_d^{k_d}` stored as the map `d ↦ k_d` (zero entries dropped).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicVector(BTreeMap<u32, u32>);

impl CyclotomicVector {
    pub fn one() -> Self {
        CyclotomicVector(BTreeMap::new())
    }

    /// Factorization of `∏ [e]_q`, using `[m]_q = ∏_{d | m, d ≥ 2} φ_d`.
    pub fn from_degrees(degrees: &[u32]) -> Self {
        let mut map = BTreeMap::new();
        for &e in degrees {
            for d in 2..=e {
                if e % d == 0 {
                    *map.entry(d).or_insert(0) += 1;
                }
            }
        }
        CyclotomicVector(map)
    }

    pub fn from_map(map: BTreeMap<u32, u32>) -> Self {
        CyclotomicVector(map.into_iter().filter(|&(_, k)| k > 0).collect())
    }

    pub fn multiplicity(&self, d: u32) -> u32 {
        self.0.get(&d).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&d, &k)| (d, k))
    }

    pub fn product(&self, other: &CyclotomicVector) -> CyclotomicVector {
        let mut map = self.0.clone();
        for (d, k) in other.iter() {
            *map.entry(d).or_insert(0) += k;
        }
        CyclotomicVector(map)
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn quotient(&self, other: &CyclotomicVector) -> Option<CyclotomicVector> {
        let mut map = self.0.clone();
        for (d, k) in other.iter() {
            let e = map.get_mut(&d)?;
            if *e < k {
                return None;
            }
            *e -= k;
            if *e == 0 {
                map.remove(&d);
            }
        }
        Some(CyclotomicVector(map))
    }
}

impl fmt::Display for CyclotomicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, (d, k)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if k == 1 {
                write!(f, "phi{d}")?;
            } else {
                write!(f, "phi{d}^{k}")?;
            }
        }
        Ok(())
    }
}

/// Outcome of recognizing a connected component: its type and its vertices
/// listed in the conventional numbering of that type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognized {
    pub label: FiniteType,
    pub order: Vec<usize>,
}

/// Finite-type label of a connected component, or `None`.
pub fn classify_component(graph: &CoxeterGraph, component: Simplex) -> Option<FiniteType> {
    recognize(graph, component).map(|r| r.label)
}

struct Tree {
    vertices: Vec<usize>,
    adj: BTreeMap<usize, Vec<(usize, u32)>>,
}

impl Tree {
    /// Adjacency of the induced subgraph, if it is a tree without ∞ bonds.
    fn of(graph: &CoxeterGraph, component: Simplex) -> Option<Tree> {
        let vertices: Vec<usize> = component.vertices().collect();
        let mut adj: BTreeMap<usize, Vec<(usize, u32)>> =
            vertices.iter().map(|&v| (v, Vec::new())).collect();
        let mut edges = 0;
        for (a, &u) in vertices.iter().enumerate() {
            for &v in &vertices[a + 1..] {
                if graph.adjacent(u, v) {
                    let m = graph.bond(u, v);
                    if m == INF {
                        return None;
                    }
                    adj.get_mut(&u).unwrap().push((v, m));
                    adj.get_mut(&v).unwrap().push((u, m));
                    edges += 1;
                }
            }
        }
        if edges + 1 != vertices.len() {
            return None;
        }
        Some(Tree { vertices, adj })
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[&v].len()
    }

    /// Walks from `start` away from `from` until a leaf or branch vertex.
    fn arm(&self, from: usize, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let (mut prev, mut cur) = (from, start);
        loop {
            let next: Vec<usize> = self.adj[&cur]
                .iter()
                .map(|&(v, _)| v)
                .filter(|&v| v != prev)
                .collect();
            if next.len() != 1 {
                return out;
            }
            prev = cur;
            cur = next[0];
            out.push(cur);
        }
    }

    /// Vertices of a path graph from the given end.
    fn path_from(&self, end: usize) -> Vec<usize> {
        let mut out = vec![end];
        if let Some(&(next, _)) = self.adj[&end].first() {
            out.extend(self.arm(end, next));
        }
        out
    }

    fn bond(&self, u: usize, v: usize) -> u32 {
        self.adj[&u].iter().find(|&&(w, _)| w == v).map(|&(_, m)| m).unwrap_or(2)
    }
}

/// Recognizes a connected component as an irreducible finite type and
/// returns the conventional vertex order:
///
/// * `A_n`: along the path; `B_n`: starting at the end of the 4-bond;
/// * `D_n`: the two short leaves, the branch vertex, then the long arm;
/// * `E_n`: Bourbaki numbering (1-3-4-5-…, with 2 attached to 4);
/// * `F_4`, `H_n`: along the path, `H_n` starting at the 5-bond end.
pub fn recognize(graph: &CoxeterGraph, component: Simplex) -> Option<Recognized> {
    let k = component.len();
    if k == 0 {
        return None;
    }
    let tree = Tree::of(graph, component)?;
    if k == 1 {
        return Some(Recognized { label: FiniteType::A(1), order: tree.vertices.clone() });
    }
    if k == 2 {
        let (u, v) = (tree.vertices[0], tree.vertices[1]);
        return Some(Recognized { label: FiniteType::dihedral(graph.bond(u, v)), order: vec![u, v] });
    }
    let max_degree = tree.vertices.iter().map(|&v| tree.degree(v)).max().unwrap_or(0);
    if max_degree > 3 {
        return None;
    }
    let branches: Vec<usize> = tree.vertices.iter().copied().filter(|&v| tree.degree(v) == 3).collect();
    if branches.len() > 1 {
        return None;
    }
    let heavy: Vec<(usize, usize, u32)> = tree
        .vertices
        .iter()
        .flat_map(|&u| tree.adj[&u].iter().map(move |&(v, m)| (u, v, m)))
        .filter(|&(u, v, m)| u < v && m > 3)
        .collect();
    if heavy.len() > 1 {
        return None;
    }
    if let Some(&(u, v, m)) = heavy.first() {
        if !branches.is_empty() {
            return None;
        }
        let leaf = |x: usize| tree.degree(x) == 1;
        let end = if leaf(u) {
            Some(u)
        } else if leaf(v) {
            Some(v)
        } else {
            None
        };
        return match (m, end) {
            (4, Some(e)) => Some(Recognized { label: FiniteType::B(k), order: tree.path_from(e) }),
            (4, None) if k == 4 => {
                let first = tree.vertices.iter().copied().find(|&x| leaf(x)).unwrap();
                let order = tree.path_from(first);
                (tree.bond(order[1], order[2]) == 4).then_some(Recognized { label: FiniteType::F4, order })
            }
            (5, Some(e)) if k == 3 || k == 4 => Some(Recognized { label: FiniteType::H(k), order: tree.path_from(e) }),
            _ => None,
        };
    }
    if branches.is_empty() {
        let first = tree.vertices.iter().copied().find(|&x| tree.degree(x) == 1).unwrap();
        return Some(Recognized { label: FiniteType::A(k), order: tree.path_from(first) });
    }
    let c = branches[0];
    let mut arms: Vec<Vec<usize>> = tree.adj[&c].iter().map(|&(s, _)| tree.arm(c, s)).collect();
    arms.sort_by_key(|a| a.len());
    let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
    match lens.as_slice() {
        [1, 1, _] => {
            let mut order = vec![arms[0][0], arms[1][0], c];
            order.extend(&arms[2]);
            Some(Recognized { label: FiniteType::D(k), order })
        }
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => {
            let mut order = vec![arms[1][1], arms[0][0], arms[1][0], c];
            order.extend(&arms[2]);
            Some(Recognized { label: FiniteType::E(k), order })
        }
        _ => None,
    }
}

/// Affine families that have hand-built matchings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineFamily {
    /// `B̃_n`, `n + 1` vertices.
    B(usize),
    /// `D̃_n`, `n + 1` vertices.
    D(usize),
}

/// Recognizes `B̃_n` (n ≥ 3) and `D̃_n` (n ≥ 4), returning the vertices in
/// the order `0, 1, …, n` of their standard numbering (the two leaves next to
/// vertex 2 first; for `B̃_n` vertex `n` closes the 4-bond).
pub fn recognize_affine_bd(graph: &CoxeterGraph, component: Simplex) -> Option<(AffineFamily, Vec<usize>)> {
    let k = component.len();
    if k < 4 {
        return None;
    }
    let tree = Tree::of(graph, component)?;
    let heavy: Vec<(usize, usize, u32)> = tree
        .vertices
        .iter()
        .flat_map(|&u| tree.adj[&u].iter().map(move |&(v, m)| (u, v, m)))
        .filter(|&(u, v, m)| u < v && m > 3)
        .collect();
    let degrees: BTreeMap<usize, usize> = tree.vertices.iter().map(|&v| (v, tree.degree(v))).collect();
    let leaf_neighbors = |c: usize| -> Vec<usize> {
        tree.adj[&c].iter().map(|&(v, _)| v).filter(|&v| degrees[&v] == 1).collect()
    };
    match heavy.as_slice() {
        [] => {
            let big: Vec<usize> = tree.vertices.iter().copied().filter(|&v| degrees[&v] >= 3).collect();
            if k == 5 && big.len() == 1 && degrees[&big[0]] == 4 {
                let c = big[0];
                let leaves = leaf_neighbors(c);
                return Some((AffineFamily::D(4), vec![leaves[0], leaves[1], c, leaves[2], leaves[3]]));
            }
            if big.len() != 2 || big.iter().any(|&v| degrees[&v] != 3) {
                return None;
            }
            let (b1, b2) = (big[0], big[1]);
            let (l1, l2) = (leaf_neighbors(b1), leaf_neighbors(b2));
            if l1.len() < 2 || l2.len() < 2 {
                return None;
            }
            // spine from b1 to b2
            let start = tree.adj[&b1].iter().map(|&(v, _)| v).find(|v| !l1[..2].contains(v))?;
            let spine = tree.arm(b1, start);
            if spine.last() != Some(&b2) {
                return None;
            }
            let mut order = vec![l1[0], l1[1], b1];
            order.extend(&spine[..spine.len() - 1]);
            order.extend([b2, l2[0], l2[1]]);
            (order.len() == k).then_some((AffineFamily::D(k - 1), order))
        }
        [(u, v, 4)] => {
            let (end, other) = if degrees[u] == 1 {
                (*u, *v)
            } else if degrees[v] == 1 {
                (*v, *u)
            } else {
                return None;
            };
            let big: Vec<usize> = tree.vertices.iter().copied().filter(|&x| degrees[&x] >= 3).collect();
            if big.len() != 1 || degrees[&big[0]] != 3 {
                return None;
            }
            let c = big[0];
            let leaves: Vec<usize> = leaf_neighbors(c).into_iter().filter(|&x| x != end).collect();
            if leaves.len() < 2 {
                return None;
            }
            let mut path = tree.arm(end, other);
            path.reverse();
            // path runs from the branch vertex to the neighbor of `end`
            if path.first() != Some(&c) {
                return None;
            }
            let mut order = vec![leaves[0], leaves[1]];
            order.extend(path);
            order.push(end);
            (order.len() == k).then_some((AffineFamily::B(k - 1), order))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(bonds: &[u32]) -> CoxeterGraph {
        let edges: Vec<_> = bonds.iter().enumerate().map(|(i, &m)| (i, i + 1, m)).collect();
        CoxeterGraph::from_edges(bonds.len() + 1, &edges, None).unwrap()
    }

    fn classify_all(g: &CoxeterGraph) -> Option<FiniteType> {
        classify_component(g, g.vertex_set())
    }

    #[test]
    fn path_of_three_is_a3() {
        assert_eq!(classify_all(&path(&[3, 3])), Some(FiniteType::A(3)));
    }

    #[test]
    fn single_four_bond_is_b2() {
        assert_eq!(classify_all(&path(&[4])), Some(FiniteType::B(2)));
    }

    #[test]
    fn dihedral_normalization() {
        assert_eq!(classify_all(&path(&[3])), Some(FiniteType::A(2)));
        assert_eq!(classify_all(&path(&[6])), Some(FiniteType::I2(6)));
        assert_eq!(classify_all(&path(&[INF])), None);
    }

    #[test]
    fn exceptional_paths() {
        assert_eq!(classify_all(&path(&[3, 4, 3])), Some(FiniteType::F4));
        assert_eq!(classify_all(&path(&[5, 3])), Some(FiniteType::H(3)));
        assert_eq!(classify_all(&path(&[3, 5])), Some(FiniteType::H(3)));
        assert_eq!(classify_all(&path(&[5, 3, 3])), Some(FiniteType::H(4)));
        assert_eq!(classify_all(&path(&[3, 5, 3])), None);
        assert_eq!(classify_all(&path(&[4, 3, 4])), None);
        assert_eq!(classify_all(&path(&[3, 3, 4, 3])), None);
        assert_eq!(classify_all(&path(&[5, 3, 3, 3])), None);
        assert_eq!(classify_all(&path(&[3, 6])), None);
    }

    #[test]
    fn branched_trees() {
        let d4_tilde = CoxeterGraph::from_edges(5, &[(0, 2, 3), (1, 2, 3), (3, 2, 3), (4, 2, 3)], None).unwrap();
        assert_eq!(classify_all(&d4_tilde), None);
        let d5 = CoxeterGraph::from_edges(5, &[(0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3)], None).unwrap();
        let r = recognize(&d5, d5.vertex_set()).unwrap();
        assert_eq!(r.label, FiniteType::D(5));
        assert_eq!(&r.order[2..], &[2, 3, 4]);
        let e6 = CoxeterGraph::from_edges(6, &[(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)], None).unwrap();
        let r = recognize(&e6, e6.vertex_set()).unwrap();
        assert_eq!(r.label, FiniteType::E(6));
        assert_eq!(r.order[3], 3);
        assert_eq!(r.order[1], 1);
    }

    #[test]
    fn cycle_is_not_finite() {
        let a2_tilde = CoxeterGraph::from_edges(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)], None).unwrap();
        assert_eq!(classify_all(&a2_tilde), None);
    }

    #[test]
    fn degree_tables() {
        assert_eq!(FiniteType::A(3).degrees(), vec![2, 3, 4]);
        assert_eq!(FiniteType::B(4).degrees(), vec![2, 4, 6, 8]);
        assert_eq!(FiniteType::D(4).degrees(), vec![2, 4, 4, 6]);
        assert_eq!(FiniteType::E(8).degrees(), vec![2, 8, 12, 14, 18, 20, 24, 30]);
    }

    #[test]
    fn poincare_factorizations() {
        let a2 = FiniteType::A(2).poincare_factorization();
        assert_eq!(a2.iter().collect::<Vec<_>>(), vec![(2, 1), (3, 1)]);
        let d4 = FiniteType::D(4).poincare_factorization();
        assert_eq!(d4.iter().collect::<Vec<_>>(), vec![(2, 4), (3, 1), (4, 2), (6, 1)]);
        let i2 = FiniteType::I2(10).poincare_factorization();
        assert_eq!(i2.iter().collect::<Vec<_>>(), vec![(2, 2), (5, 1), (10, 1)]);
    }

    #[test]
    fn empty_simplex_has_weight_zero() {
        assert_eq!(path(&[3, 3]).weight(Simplex::EMPTY, 2).unwrap(), 0);
    }

    #[test]
    fn weight_rejects_infinite_parabolic() {
        let g = CoxeterGraph::from_edges(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)], None).unwrap();
        assert!(matches!(g.weight(g.vertex_set(), 2), Err(Error::NotFiniteType(_))));
    }

    #[test]
    fn parse_roundtrip() {
        let text = "3\n1 3 inf\n3 1 4\ninf 4 1\n";
        let g = CoxeterGraph::parse(text).unwrap();
        assert_eq!(g.bond(0, 2), INF);
        assert_eq!(g.to_matrix_string(), text);
        assert!(CoxeterGraph::parse("2\n1 3\n2 1\n").is_err());
        assert!(CoxeterGraph::parse("2\n1 1\n1 1\n").is_err());
    }

    #[test]
    fn affine_bd_recognition() {
        // B̃4: 0-2, 1-2, 2-3, 3=4
        let tb = CoxeterGraph::from_edges(5, &[(0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 4)], None).unwrap();
        let (fam, order) = recognize_affine_bd(&tb, tb.vertex_set()).unwrap();
        assert_eq!(fam, AffineFamily::B(4));
        assert_eq!(&order[2..], &[2, 3, 4]);
        // D̃5: 0-2, 1-2, 2-3, 3-4, 3-5
        let td = CoxeterGraph::from_edges(6, &[(0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3), (3, 5, 3)], None).unwrap();
        let (fam, order) = recognize_affine_bd(&td, td.vertex_set()).unwrap();
        assert_eq!(fam, AffineFamily::D(5));
        assert_eq!(&order[2..4], &[2, 3]);
        let td6 = CoxeterGraph::from_edges(
            7,
            &[(0, 2, 3), (1, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (4, 6, 3)],
            None,
        )
        .unwrap();
        let (fam, order) = recognize_affine_bd(&td6, td6.vertex_set()).unwrap();
        assert_eq!(fam, AffineFamily::D(6));
        assert_eq!(&order[2..5], &[2, 3, 4]);
    }
}
