//! Matching on `K^A_{n,f,g}`: simplices of `A_n` (labels `1..n` along the
//! path) containing the first `f` and the last `g` vertices.

use super::{collect_pairs, covers_all, has, masks_containing, span, toggle, within, Mask};
use crate::builtin::{Family, TypeName};
use crate::complex::ComplexK;
use crate::error::Result;

/// Partner of `s` in the matching on `K^A_{n,f,g}` for `φ_d`.
pub fn partner(n: i64, f: i64, g: i64, d: i64, s: Mask) -> Option<Mask> {
    if f + g >= n {
        return None;
    }
    if f >= d {
        let map: Vec<i64> = (d + 1..=n).collect();
        return within(s, &map, |t| partner(n - d, f - d, g, d, t));
    }
    if n >= d + g {
        if covers_all(s, span(1, d - 1)) {
            return Some(toggle(s, d));
        }
        if has(s, f + 1) {
            return Some(toggle(s, f + 1));
        }
        if !covers_all(s, span(f + 2, d - 1)) {
            return Some(toggle(s, f + 1));
        }
        let map: Vec<i64> = (f + 2..=n).collect();
        return within(s, &map, |t| partner(n - f - 1, d - 2 - f, g, d, t));
    }
    let full = span(1, n);
    if (n + 1).rem_euclid(d) <= f && (s == full || s == toggle(full, f + 1)) {
        return None;
    }
    Some(toggle(s, f + 1))
}

/// Label masks of `K^A_{n,f,g}` (empty when `f > n` or `g > n`).
pub fn family(n: i64, f: i64, g: i64) -> Vec<Mask> {
    if f > n || g > n {
        return Vec::new();
    }
    masks_containing(span(1, n), span(1, f) | span(n - g + 1, n))
}

/// Matched pairs `(upper, lower)` as label masks.
pub fn pairs(n: i64, f: i64, g: i64, d: i64) -> Result<Vec<(Mask, Mask)>> {
    collect_pairs(&family(n, f, g), |s| partner(n, f, g, d, s))
}

/// `K^A_{n,f,g}` on the built-in `A_n` graph (`n ≥ 1`).
pub fn complex(n: i64, f: i64, g: i64) -> Result<ComplexK> {
    let graph = TypeName::new(Family::A, n as u32)?.graph();
    ComplexK::from_simplices(&graph, family(n, f, g).into_iter().map(|m| crate::Simplex::from_bits(m >> 1)))
}
