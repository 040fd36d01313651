//! Matching on `K^D_{n,g}`: simplices of `D_n` containing the last `g`
//! vertices. Labels `1` and `2` are the short leaves attached to `3`, and
//! `3..n` is the long arm.
//!
//! The affine recursions also reach `n < 4`; there the same rules run on the
//! truncated diagram (vertices above `n` do not exist).

use super::{collect_pairs, covers_all, has, masks_containing, span, toggle, type_a, within, Mask};
use crate::builtin::{Family, TypeName};
use crate::complex::ComplexK;
use crate::coxeter::CoxeterGraph;
use crate::error::Result;
use crate::Simplex;

/// Partner of `s` in the matching on `K^D_{n,g}` for `φ_d`. For odd `d`
/// the parameter `g` must be zero.
pub fn partner(n: i64, g: i64, d: i64, s: Mask) -> Option<Mask> {
    if d % 2 == 1 {
        odd(n, d, s)
    } else {
        even(n, g, d, s)
    }
}

fn odd(n: i64, d: i64, s: Mask) -> Option<Mask> {
    if has(s, 1) {
        return Some(toggle(s, 2));
    }
    let map: Vec<i64> = (2..=n).collect();
    within(s, &map, |t| type_a::partner(n - 1, 0, 0, d, t))
}

/// Toggles `v` when it exists and is not one of the frozen last `g` vertices.
fn flip(n: i64, g: i64, s: Mask, v: i64) -> Option<Mask> {
    (v >= 1 && v <= n - g).then(|| toggle(s, v))
}

fn even(n: i64, g: i64, d: i64, s: Mask) -> Option<Mask> {
    let h = d / 2;
    if !has(s, 2) {
        let map: Vec<i64> = std::iter::once(1).chain(3..=n).collect();
        return within(s, &map, |t| type_a::partner(n - 1, 0, g, d, t));
    }
    if d == 2 && !covers_all(s, span(1, 4)) {
        return if covers_all(s, span(1, 2) | 1 << 4) {
            flip(n, g, s, 5)
        } else {
            flip(n, g, s, 3)
        };
    }
    if d >= 4 && !has(s, 3) {
        return flip(n, g, s, 1);
    }
    if d == 4 && !has(s, 4) {
        let map: Vec<i64> = (5..=n).collect();
        return within(s, &map, |t| type_a::partner(n - 4, 0, g, d, t));
    }
    if d >= 6 && !has(s, 4) {
        return flip(n, g, s, 1);
    }
    if d >= 4 && !has(s, 1) {
        if covers_all(s, span(2, h + 1)) {
            let map: Vec<i64> = (2..=n).collect();
            return within(s, &map, |t| type_a::partner(n - 1, h.max(3), g, d, t));
        }
        return flip(n, g, s, 1);
    }
    // Here {1,2,3,4} ⊆ σ and the component of 1 is {1,…,k}.
    let k = (4..=n + 1).find(|&l| !has(s, l)).unwrap_or(n + 1) - 1;
    let (q, _r) = split(k, h);
    let v = if q % 2 == 0 { q * h + 1 } else { q * h + 2 };
    if has(s, v) {
        return flip(n, g, s, v);
    }
    if v > n {
        return None;
    }
    if q % 2 == 0 && covers_all(s, span(q * h + 2, (q + 1) * h + 1)) {
        let map: Vec<i64> = (q * h + 2..=n).collect();
        return within(s, &map, |t| type_a::partner(n - q * h - 1, h, g, d, t));
    }
    if q % 2 == 1 && covers_all(s, span(q * h + 3, (q + 1) * h)) {
        let map: Vec<i64> = (q * h + 3..=n).collect();
        return within(s, &map, |t| type_a::partner(n - q * h - 2, h - 2, g, d, t));
    }
    Some(toggle(s, v))
}

/// `k = q·h + r` with `0 < r < h` when `h ∤ k`, and otherwise `r ∈ {0, h}`
/// chosen so that `q` is even.
pub(crate) fn split(k: i64, h: i64) -> (i64, i64) {
    if k % h != 0 {
        (k / h, k % h)
    } else if (k / h) % 2 == 0 {
        (k / h, 0)
    } else {
        (k / h - 1, h)
    }
}

/// `D_n` on labels `1..n`, truncated for `n < 4`.
pub fn graph(n: i64) -> Result<CoxeterGraph> {
    if n >= 4 {
        return Ok(TypeName::new(Family::D, n as u32)?.graph());
    }
    let n = n.max(0) as usize;
    let edges: Vec<(usize, usize, u32)> = [(0, 2, 3), (1, 2, 3)].into_iter().filter(|e| e.1 < n).collect();
    CoxeterGraph::from_edges(n, &edges, Some((1..=n).map(|i| i.to_string()).collect()))
}

pub fn family(n: i64, g: i64) -> Vec<Mask> {
    if g > n {
        return Vec::new();
    }
    masks_containing(span(1, n), span(n - g + 1, n))
}

pub fn pairs(n: i64, g: i64, d: i64) -> Result<Vec<(Mask, Mask)>> {
    collect_pairs(&family(n, g), |s| partner(n, g, d, s))
}

pub fn complex(n: i64, g: i64) -> Result<ComplexK> {
    ComplexK::from_simplices(&graph(n)?, family(n, g).into_iter().map(|m| Simplex::from_bits(m >> 1)))
}
