//! Hand-built precise matchings for the families `A`, `D`, `B̃`, `D̃`, `I₂(m)`
//! and the product construction.
//!
//! Every matching is a pure rule `partner(σ)` on label bitmasks (bit `l` is
//! the vertex labelled `l` in the family's standard numbering), `None` meaning
//! critical. Recursive cases restrict to a relabelled block of vertices and
//! leave every other bit untouched.

pub mod affine_b;
pub mod affine_d;
pub mod descriptors;
pub mod dihedral;
pub mod product;
pub mod type_a;
pub mod type_d;

use crate::coxeter::{recognize, recognize_affine_bd, AffineFamily, CoxeterGraph, FiniteType};
use crate::error::{Error, Result};
use crate::morse::Matching;
use crate::simplex::Simplex;

/// Label bitmask.
pub type Mask = u64;

pub(crate) fn bit(l: i64) -> Mask {
    if (0..64).contains(&l) {
        1 << l
    } else {
        0
    }
}

/// Labels `a..=b`, clamped to `0..64`.
pub(crate) fn span(a: i64, b: i64) -> Mask {
    (a.max(0)..=b.min(63)).fold(0, |m, l| m | 1 << l)
}

pub(crate) fn has(s: Mask, l: i64) -> bool {
    s & bit(l) != 0
}

pub(crate) fn covers_all(s: Mask, m: Mask) -> bool {
    s & m == m
}

pub(crate) fn toggle(s: Mask, l: i64) -> Mask {
    s ^ bit(l)
}

/// Applies `rule` to the block `map` (sub-label `i` is parent label
/// `map[i - 1]`) and writes the result back, keeping other bits.
pub(crate) fn within(s: Mask, map: &[i64], rule: impl FnOnce(Mask) -> Option<Mask>) -> Option<Mask> {
    let mut local = 0;
    let mut block = 0;
    for (i, &l) in map.iter().enumerate() {
        block |= bit(l);
        if has(s, l) {
            local |= 1 << (i + 1);
        }
    }
    let p = rule(local)?;
    let mut out = s & !block;
    for (i, &l) in map.iter().enumerate() {
        if p & (1 << (i + 1)) != 0 {
            out |= bit(l);
        }
    }
    Some(out)
}

/// Collects the pairs of a rule over a family of label masks, checking that
/// the rule is an involution on the family and pairs covering simplices.
pub(crate) fn collect_pairs(
    family: &[Mask],
    rule: impl Fn(Mask) -> Option<Mask>,
) -> Result<Vec<(Mask, Mask)>> {
    let members: std::collections::HashSet<Mask> = family.iter().copied().collect();
    let mut pairs = Vec::new();
    for &s in family {
        let Some(p) = rule(s) else { continue };
        let show = |m: Mask| format!("{:?}", Simplex::from_bits(m));
        if !members.contains(&p) {
            return Err(Error::InvalidMatching(format!("partner {} of {} lies outside the family", show(p), show(s))));
        }
        if rule(p) != Some(s) {
            return Err(Error::InvalidMatching(format!("rule is not symmetric at {} -> {}", show(s), show(p))));
        }
        if (s ^ p).count_ones() != 1 {
            return Err(Error::InvalidMatching(format!("{} and {} do not differ by one vertex", show(s), show(p))));
        }
        if p & s == p {
            pairs.push((s, p));
        }
    }
    Ok(pairs)
}

/// All label masks over `labels` containing `required`.
pub(crate) fn masks_containing(labels: Mask, required: Mask) -> Vec<Mask> {
    let free = labels & !required;
    let mut out = Vec::with_capacity(1 << free.count_ones());
    let mut sub = 0u64;
    loop {
        out.push(sub | required);
        if sub == free {
            break;
        }
        sub = (sub.wrapping_sub(free)) & free;
    }
    out
}

/// A matching on label masks turned into one on vertex indices, vertex
/// `order[i]` carrying label `i + base`.
pub fn to_vertices(pairs: &[(Mask, Mask)], order: &[usize], base: i64) -> Result<Matching> {
    let conv = |m: Mask| {
        Simplex::from_vertices(
            (0..order.len()).filter(|&i| has(m, i as i64 + base)).map(|i| order[i]),
        )
    };
    Matching::new(pairs.iter().map(|&(u, l)| (conv(u), conv(l))))
}

/// The hand-built matching of an irreducible component, if the component
/// belongs to a family with one. Returns `None` for other components.
pub fn component_matching(graph: &CoxeterGraph, component: Simplex, d: u32) -> Result<Option<Matching>> {
    let d = d as i64;
    if let Some(rec) = recognize(graph, component) {
        let n = rec.order.len() as i64;
        let pairs = match rec.label {
            FiniteType::A(_) => type_a::pairs(n, 0, 0, d)?,
            FiniteType::D(_) => type_d::pairs(n, 0, d)?,
            FiniteType::I2(m) => dihedral::pairs(m as i64, d)?,
            _ => return Ok(None),
        };
        return to_vertices(&pairs, &rec.order, 1).map(Some);
    }
    if let Some((fam, order)) = recognize_affine_bd(graph, component) {
        let pairs = match fam {
            AffineFamily::B(n) => affine_b::pairs(n as i64, d)?,
            AffineFamily::D(n) => affine_d::pairs(n as i64, d)?,
        };
        return to_vertices(&pairs, &order, 0).map(Some);
    }
    Ok(None)
}
