//! Homology of `C_*` computed directly: Smith normal form over `ℚ[q]`, then
//! cyclotomic factorization of the invariant factors. Independent of the
//! matching pipeline and meant for small ranks only.

use std::collections::BTreeMap;

use crate::complex::build_kw;
use crate::coxeter::CoxeterGraph;
use crate::error::{Error, Result};
use crate::homology::HomologyResult;
use crate::poly::{cyclotomic, QPoly};

/// Largest vertex count [`homology_direct`] accepts.
pub const MAX_VERTICES: usize = 5;

/// Nonzero invariant factors, monic and free of `q` factors, in divisibility
/// order. Powers of `q` are units in `ℚ[q^{±1}]`, so they are dropped.
pub fn smith_normal_form(matrix: &[Vec<QPoly>]) -> Vec<QPoly> {
    let mut a: Vec<Vec<QPoly>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_degree_entry(&a, t) else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            if let Some(i) = clear_column(&mut a, t) {
                a.swap(t, i);
                continue;
            }
            if let Some(j) = clear_row(&mut a, t) {
                for row in a.iter_mut() {
                    row.swap(t, j);
                }
                continue;
            }
            // The pivot must divide the rest; otherwise fold a bad row in.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[t][t].divides(&a[i][j])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] = &a[t][j] + &a[i][j];
                    }
                }
                None => break,
            }
        }
        out.push(a[t][t].strip_q().monic());
    }
    out
}

fn min_degree_entry(a: &[Vec<QPoly>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if let Some(deg) = x.degree() {
                if best.map_or(true, |b| deg < b.2) {
                    best = Some((i, j, deg));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Reduces column `t` below the pivot; returns a row with a nonzero remainder
/// of smaller degree than the pivot, if any.
fn clear_column(a: &mut [Vec<QPoly>], t: usize) -> Option<usize> {
    let mut smaller = None;
    for i in t + 1..a.len() {
        if a[i][t].is_zero() {
            continue;
        }
        let (quot, _) = a[i][t].div_rem(&a[t][t]);
        for j in t..a[i].len() {
            let sub = &quot * &a[t][j];
            a[i][j] = &a[i][j] - &sub;
        }
        if !a[i][t].is_zero() && smaller.is_none() {
            smaller = Some(i);
        }
    }
    smaller
}

fn clear_row(a: &mut [Vec<QPoly>], t: usize) -> Option<usize> {
    let mut smaller = None;
    for j in t + 1..a[t].len() {
        if a[t][j].is_zero() {
            continue;
        }
        let (quot, _) = a[t][j].div_rem(&a[t][t]);
        for row in a.iter_mut().skip(t) {
            let sub = &quot * &row[t];
            row[j] = &row[j] - &sub;
        }
        if !a[t][j].is_zero() && smaller.is_none() {
            smaller = Some(j);
        }
    }
    smaller
}

/// Splits a monic polynomial into cyclotomic factors `d ↦ multiplicity`.
pub fn cyclotomic_factors(f: &QPoly) -> Result<BTreeMap<u32, usize>> {
    let mut rest = f.monic();
    let deg = rest.degree().ok_or_else(|| Error::NonCyclotomic("0".into()))?;
    let mut out = BTreeMap::new();
    // φ_d has degree ≥ √(d/2), so larger d cannot divide.
    let bound = (2 * deg * deg).max(2) as u32;
    for d in 1..=bound {
        if rest.degree() == Some(0) {
            break;
        }
        let phi = cyclotomic(d).to_rational();
        while phi.divides(&rest) {
            rest = rest.div_rem(&phi).0;
            *out.entry(d).or_insert(0) += 1;
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::NonCyclotomic(f.to_string()));
    }
    Ok(out)
}

/// `H_*(C_*)` by Smith normal form, in the same shape as the matching
/// pipeline's output. Refuses graphs with more than [`MAX_VERTICES`]
/// vertices and fails on any `φ^k`, `k ≥ 2`, or non-cyclotomic factor.
pub fn homology_direct(type_name: &str, graph: &CoxeterGraph) -> Result<HomologyResult> {
    let n = graph.rank();
    if n > MAX_VERTICES {
        return Err(Error::GuardRefused(format!("{n} vertices exceed the SNF limit of {MAX_VERTICES}")));
    }
    let k = build_kw(graph);
    let boundary: Vec<Vec<Vec<QPoly>>> = (0..=k.top() + 1)
        .map(|c| {
            k.boundary_c(c)
                .iter()
                .map(|row| row.iter().map(|x| x.to_rational()).collect())
                .collect()
        })
        .collect();
    let factors: Vec<Vec<QPoly>> = boundary.iter().map(|m| smith_normal_form(m)).collect();
    let mut free = BTreeMap::new();
    let mut torsion: BTreeMap<usize, BTreeMap<u32, usize>> = BTreeMap::new();
    for c in 0..=k.top() {
        let rank_out = if c == 0 { 0 } else { factors[c].len() };
        let rank_in = factors[c + 1].len();
        free.insert(c, k.level(c).len() - rank_out - rank_in);
        for f in &factors[c + 1] {
            for (d, mult) in cyclotomic_factors(f)? {
                if mult > 1 {
                    return Err(Error::NotSquarefree(f.to_string()));
                }
                *torsion.entry(c).or_default().entry(d).or_default() += 1;
            }
        }
    }
    Ok(HomologyResult::from_parts(type_name, n, &free, &torsion, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::TypeName;
    use crate::homology::{homology, MatchingOptions};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn direct(name: &str) -> HomologyResult {
        homology_direct(name, &name.parse::<TypeName>().unwrap().graph()).unwrap()
    }

    #[test]
    fn identity_and_scalars() {
        let id: Vec<Vec<QPoly>> =
            (0..3).map(|i| (0..3).map(|j| if i == j { p(&[1]) } else { p(&[]) }).collect()).collect();
        assert_eq!(smith_normal_form(&id), vec![p(&[1]); 3]);
        assert_eq!(smith_normal_form(&[vec![p(&[-2, 0, 2])]]), vec![p(&[-1, 0, 1])]);
    }

    #[test]
    fn factors_of_q_are_units() {
        assert_eq!(smith_normal_form(&[vec![p(&[0, 0, 3])]]), vec![p(&[1])]);
    }

    #[test]
    fn cyclotomic_split() {
        let f = p(&[-1, 0, 0, 0, 0, 0, 1]); // q⁶ − 1
        let got = cyclotomic_factors(&f).unwrap();
        assert_eq!(got, BTreeMap::from([(1, 1), (2, 1), (3, 1), (6, 1)]));
        assert!(matches!(cyclotomic_factors(&p(&[2, 0, 1])), Err(Error::NonCyclotomic(_))));
    }

    #[test]
    fn small_types() {
        let r = direct("I2(5)");
        let text: Vec<String> = r.homology.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["{2}", "{5}"]);
        let h3: Vec<String> = direct("H3").homology.iter().map(ToString::to_string).collect();
        assert_eq!(h3, ["{2}", "0", "{2} ⊕ {6} ⊕ {10}"]);
    }

    #[test]
    fn agrees_with_matchings_on_a2() {
        let t: TypeName = "A2".parse().unwrap();
        let via_matchings = homology("A2", &t.graph(), MatchingOptions::default()).unwrap();
        assert!(direct("A2").same_groups(&via_matchings));
    }

    #[test]
    fn guard_refuses_large_graphs() {
        let g = "E6".parse::<TypeName>().unwrap().graph();
        assert!(matches!(homology_direct("E6", &g), Err(Error::GuardRefused(_))));
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-2i64..=2, 0..3).prop_map(|c| QPoly::from_ints(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        /// Scrambling `diag(q+1, (q+1)(q²+q+1))` by unimodular row and
        /// column operations leaves the invariant factors alone.
        #[test]
        fn invariant_under_unimodular_scrambling(
            ops in prop::collection::vec((0usize..2, 0usize..2, small_poly(), any::<bool>()), 1..6)
        ) {
            let d1 = p(&[1, 1]);
            let d2 = &d1 * &p(&[1, 1, 1]);
            let mut a = vec![vec![d1.clone(), QPoly::zero()], vec![QPoly::zero(), d2.clone()]];
            for (i, j, f, on_rows) in ops {
                if i == j {
                    continue;
                }
                if on_rows {
                    for c in 0..2 {
                        let add = &f * &a[j][c];
                        a[i][c] = &a[i][c] + &add;
                    }
                } else {
                    for row in a.iter_mut() {
                        let add = &f * &row[j];
                        row[i] = &row[i] + &add;
                    }
                }
            }
            prop_assert_eq!(smith_normal_form(&a), vec![d1, d2]);
        }
    }
}
