//! Matching on `K(D̃_n)`: labels `0..n`, with `0` and `1` attached to `2`,
//! the path `2..n-2`, and `n-1`, `n` attached to `n-2`.

use super::affine_b::component;
use super::type_d::{self, split};
use super::{collect_pairs, covers_all, has, span, toggle, within, Mask};
use crate::builtin::{Family, TypeName};
use crate::complex::{build_kw, ComplexK};
use crate::error::Result;

fn neighbors(n: i64, l: i64) -> Vec<i64> {
    if l <= 1 {
        return vec![2];
    }
    if l >= n - 1 {
        return vec![n - 2];
    }
    let mut v = if l == 2 { vec![0, 1] } else { vec![l - 1] };
    if l < n - 2 {
        v.push(l + 1);
    } else {
        v.extend([n - 1, n]);
    }
    v
}

/// Labels `n, n-1, …, lo` read as `D` labels `1, 2, …`.
fn reversed(n: i64, lo: i64) -> Vec<i64> {
    (lo..=n).rev().collect()
}

/// The rule, restricted to pairs it produces from both ends. Adding `v = n - 2`
/// can land on a simplex the (g2) exception keeps critical; `σ` then stays
/// critical too.
pub fn partner(n: i64, d: i64, s: Mask) -> Option<Mask> {
    let p = raw(n, d, s).filter(|&p| p != span(0, n))?;
    (raw(n, d, p) == Some(s)).then_some(p)
}

fn raw(n: i64, d: i64, s: Mask) -> Option<Mask> {
    let size = s.count_ones() as i64;
    if d % 2 == 1 {
        if s == span(1, n) {
            return None;
        }
        if !has(s, 1) {
            let mut map = reversed(n, 2);
            map.push(0);
            return within(s, &map, |t| type_d::partner(n, 0, d, t));
        }
        return Some(toggle(s, 0));
    }
    if n == 4 && d <= 6 {
        let keep = match d {
            2 => (size == 1 && !has(s, 2)) || size == 2 || (size == 3 && has(s, 2)),
            4 => !has(s, 2) || s & 0b11010 == 0,
            _ => !((has(s, 2) && !has(s, 0) && size >= 3) || (covers_all(s, 0b101) && size == 4)),
        };
        let v = if d == 2 { 2 } else { 0 };
        return keep.then(|| toggle(s, v));
    }
    let h = d / 2;
    if !has(s, 1) {
        let mut map = reversed(n, 2);
        map.push(0);
        return within(s, &map, |t| type_d::partner(n, 0, d, t));
    }
    if d == 2 && !covers_all(s, span(0, 3)) {
        if covers_all(s, 0b1011) {
            return (!covers_all(s, span(5, n))).then(|| toggle(s, 4));
        }
        return (!covers_all(s, 0b10 | span(3, n))).then(|| toggle(s, 2));
    }
    if d >= 4 && !has(s, 0) {
        if covers_all(s, span(1, h)) {
            return within(s, &reversed(n, 1), |t| type_d::partner(n, h, d, t));
        }
        if (n == h + 1 && s == span(1, n - 2) | 1 << n) || s == span(1, n) {
            return None;
        }
        return Some(toggle(s, 0));
    }
    if d >= 4 && !has(s, 2) {
        return Some(toggle(s, 0));
    }
    if d == 4 && !has(s, 3) {
        return within(s, &reversed(n, 4), |t| type_d::partner(n - 3, 0, d, t));
    }
    if d >= 6 && !has(s, 3) {
        return Some(toggle(s, 0));
    }
    let k = component(s, 0, |l| neighbors(n, l)).count_ones() as i64;
    let (q, r) = split(k, h);
    let v = if q % 2 == 0 { q * h } else { q * h + 1 };
    if d == 4 && q % 2 == 1 && r == 1 {
        if k <= n - 2 {
            return within(s, &reversed(n, k + 1), |t| type_d::partner(n - k, 0, d, t));
        }
        return None;
    }
    if s == span(0, n - 2) | 1 << n && v >= n - 1 {
        return None;
    }
    // The mirror image: adding `n` would give the full vertex set.
    if s == span(0, n - 1) && v == n {
        return None;
    }
    if has(s, v) {
        return Some(toggle(s, v));
    }
    if v > n {
        return None;
    }
    let ell = if q % 2 == 0 { h } else { h - 2 };
    match tail_case(n, v, ell, s) {
        Tail::Critical => None,
        Tail::Add => Some(toggle(s, v)),
        Tail::Recurse => within(s, &reversed(n, v + 1), |t| type_d::partner(n - v, ell, d, t)),
    }
}

#[derive(PartialEq, Eq)]
enum Tail {
    Critical,
    Add,
    Recurse,
}

/// Subcases (g5.2)–(g5.4), driven by the component `C` of `v + 1` in `σ`.
fn tail_case(n: i64, v: i64, ell: i64, s: Mask) -> Tail {
    let c_set = component(s, v + 1, |l| neighbors(n, l));
    let c = c_set.count_ones() as i64;
    // No separate case for `{n-1, n} ⊆ C`: the recursion on the tail already
    // pairs those simplices at equal weight.
    if c < ell {
        Tail::Add
    } else if c == ell && !has(c_set, n - 1) && has(c_set, n) {
        Tail::Critical
    } else {
        Tail::Recurse
    }
}

pub fn family(n: i64) -> Vec<Mask> {
    (0..span(0, n)).collect()
}

pub fn pairs(n: i64, d: i64) -> Result<Vec<(Mask, Mask)>> {
    collect_pairs(&family(n), |s| partner(n, d, s))
}

pub fn complex(n: i64) -> Result<ComplexK> {
    Ok(build_kw(&TypeName::new(Family::TD, n as u32)?.graph()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbors_follow_the_diagram() {
        assert_eq!(neighbors(4, 2), vec![0, 1, 3, 4]);
        assert_eq!(neighbors(6, 2), vec![0, 1, 3]);
        assert_eq!(neighbors(6, 4), vec![3, 5, 6]);
        assert_eq!(neighbors(6, 6), vec![4]);
    }

    #[test]
    fn n4_d4_special_case() {
        // {1,2} is critical, {3} pairs with {0,3}.
        assert_eq!(partner(4, 4, 0b110), None);
        assert_eq!(partner(4, 4, 0b1000), Some(0b1001));
        assert_eq!(partner(4, 4, 0b100), Some(0b101));
    }
}
