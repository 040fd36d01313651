//! Matching on `K(B̃_n)`: labels `0..n`, with `0` and `1` attached to `2`,
//! the path `2..n`, and the 4-bond between `n-1` and `n`.
//!
//! For odd `d` the pairs differ in vertex `n`; the only critical simplex is
//! `{0,…,n-1}`.

use super::{collect_pairs, covers_all, has, span, toggle, type_d, within, Mask};
use crate::builtin::{Family, TypeName};
use crate::complex::{build_kw, ComplexK};
use crate::error::Result;

fn neighbors(n: i64, l: i64) -> Vec<i64> {
    match l {
        0 | 1 => vec![2],
        2 => [0, 1, 3].into_iter().filter(|&x| x <= n).collect(),
        _ => [l - 1, l + 1].into_iter().filter(|&x| x <= n).collect(),
    }
}

/// Connected component of `start` in the subgraph induced by `s`.
pub(crate) fn component(s: Mask, start: i64, adj: impl Fn(i64) -> Vec<i64>) -> Mask {
    if !has(s, start) {
        return 0;
    }
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in adj(v) {
            if has(s, w) && !has(seen, w) {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen
}

pub fn partner(n: i64, d: i64, s: Mask) -> Option<Mask> {
    if d % 2 == 1 {
        // Toggling `n` turns an `A_{k-1}` tail into `B_k`, which has the
        // same weight for odd `d`.
        return (s != span(0, n - 1)).then(|| toggle(s, n));
    }
    let h = d / 2;
    let k = component(s, n, |l| neighbors(n, l)).count_ones() as i64;
    let (q, r) = (k / h, k % h);
    let pivot = n - q * h;
    let rest = 1 | span(2, n); // {0,2,…,n}
    if r >= 1 {
        if s == rest && r == 1 {
            return None;
        }
        return Some(toggle(s, pivot));
    }
    if covers_all(s, span(n - (q + 1) * h + 1, pivot - 1)) {
        let map: Vec<i64> = (0..pivot).collect();
        return within(s, &map, |t| type_d::partner(pivot, h - 1, d, t));
    }
    if s.count_ones() as i64 == n {
        return None;
    }
    if n == (q + 1) * h && s == 1 | span(2, pivot - 1) | span(pivot + 1, n) {
        return None;
    }
    Some(toggle(s, pivot))
}

pub fn family(n: i64) -> Vec<Mask> {
    let full = span(0, n);
    (0..full).collect()
}

pub fn pairs(n: i64, d: i64) -> Result<Vec<(Mask, Mask)>> {
    collect_pairs(&family(n), |s| partner(n, d, s))
}

pub fn complex(n: i64) -> Result<ComplexK> {
    Ok(build_kw(&TypeName::new(Family::TB, n as u32)?.graph()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_has_single_critical() {
        let crit: Vec<Mask> = family(3).into_iter().filter(|&s| partner(3, 3, s).is_none()).collect();
        assert_eq!(crit, vec![span(0, 2)]);
    }

    #[test]
    fn even_case_c1_criticals() {
        for n in 3..=8 {
            assert_eq!(partner(n, 2, 1 | span(2, n)), None, "n={n}");
            assert_eq!(partner(n, 2, span(1, n)), None, "n={n}");
        }
    }
}
