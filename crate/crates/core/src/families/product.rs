//! Matchings on `K_{W₁ × W₂}` built from matchings on the factors.

use crate::complex::ComplexK;
use crate::error::Result;
use crate::morse::Matching;

/// Pairs `σ₁⊔σ₂ → σ₁⊔τ₂` for every `σ₁` and every `(σ₂ → τ₂) ∈ M₂`, together
/// with `σ₁⊔σ₂ → τ₁⊔σ₂` for `(σ₁ → τ₁) ∈ M₁` and `σ₂` critical in `M₂`.
///
/// Both complexes must live on disjoint vertex sets of the same ambient graph.
pub fn product(k1: &ComplexK, m1: &Matching, k2: &ComplexK, m2: &Matching) -> Result<Matching> {
    let mut out = Matching::empty();
    for s1 in k1.simplices() {
        for &(s2, t2) in m2.pairs() {
            out.insert(s1.union(s2), s1.union(t2))?;
        }
    }
    for &(s1, t1) in m1.pairs() {
        for s2 in k2.simplices().filter(|s| m2.is_critical(*s)) {
            out.insert(s1.union(s2), t1.union(s2))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{Family, TypeName};
    use crate::complex::build_kw;
    use crate::morse::is_precise;
    use crate::Simplex;

    #[test]
    fn a1_times_a1_keeps_all_four_criticals() {
        let g = TypeName::new(Family::A, 1).unwrap().graph();
        let gg = g.disjoint_union(&g).unwrap();
        let k = build_kw(&gg);
        let k1 = ComplexK::from_simplices(&gg, [Simplex::EMPTY, Simplex::from_vertices([0])]).unwrap();
        let k2 = ComplexK::from_simplices(&gg, [Simplex::EMPTY, Simplex::from_vertices([1])]).unwrap();
        let m = product(&k1, &Matching::empty(), &k2, &Matching::empty()).unwrap();
        assert!(m.is_empty());
        assert!(is_precise(&m, &k, &k.weighted_level(2)).unwrap().is_precise());
    }
}
