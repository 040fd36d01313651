//! Closed-form descriptions of the critical simplices: the multiset of
//! `|σ| − v_φ(σ)` over critical `σ`.

use crate::complex::WeightedLevel;
use crate::morse::Matching;
use crate::ComplexK;

/// True when `n` is congruent mod `d` to some integer in `[a, b]`.
pub fn congruent_in(n: i64, a: i64, b: i64, d: i64) -> bool {
    (a..=b).any(|x| (n - x).rem_euclid(d) == 0)
}

/// Expected descriptor for `K^A_{n,f,g}`, sorted.
pub fn type_a(n: i64, f: i64, g: i64, d: i64) -> Vec<i64> {
    if f > n || g > n {
        return vec![];
    }
    if f + g >= n {
        return vec![n - (n + 1) / d];
    }
    let (f0, g0) = (f % d, g % d);
    let base = n - (n - f) / d - (n - g) / d;
    if congruent_in(n, (d - 1).max(f0 + g0 + 1), (f0 + d - 1).min(g0 + d - 1), d) {
        return vec![base - 1; 2];
    }
    if congruent_in(n, f0.max(g0), (f0 + g0).min(d - 2), d) {
        return vec![base; 2];
    }
    vec![]
}

/// The same two interval conditions in their rewritten form, used to
/// cross-check [`type_a`]. Returns `(first, second)`.
pub fn type_a_rewritten(n: i64, f: i64, g: i64, d: i64) -> (bool, bool) {
    let f0 = f % d;
    let first = congruent_in(n, -1, f0 - 1, d) && congruent_in(n - g, f0 + 1, d - 1, d);
    let second = congruent_in(n, f0, d - 2, d) && congruent_in(n - g, 0, f0, d);
    (first, second)
}

/// `D_n`, `d` odd.
pub fn type_d_odd(n: i64, d: i64) -> Vec<i64> {
    match n % d {
        0 => vec![n - 2 * n / d; 2],
        1 => vec![n - 2 * (n - 1) / d - 1; 2],
        _ => vec![],
    }
}

/// `D_n`, `d` even, `g = 0`: the common value of `|σ| − v` over the critical
/// simplices, or `None` when there are none. Counts are not tabulated.
pub fn type_d_even(n: i64, d: i64) -> Option<i64> {
    let h = d / 2;
    match n % d {
        0 => Some(n - n / h),
        1 => Some(n - (n - 1) / h - 1),
        r if d >= 4 && r == h + 1 => Some(n - (n - 1) / h),
        _ => None,
    }
}

/// `D̃_n`, `d` odd, sorted.
pub fn affine_d_odd(n: i64, d: i64) -> Vec<i64> {
    let mut v = match n % d {
        0 => vec![n - n / d, n - 2 * n / d, n - 2 * n / d],
        1 => vec![n - (n - 1) / d, n - 2 * (n - 1) / d - 1, n - 2 * (n - 1) / d - 1],
        _ => vec![n - n / d],
    };
    v.sort_unstable();
    v
}

/// `B̃_n`: the common value of `|σ| − v`; for odd `d` there is exactly one
/// critical simplex.
pub fn affine_b(n: i64, d: i64) -> i64 {
    if d % 2 == 1 {
        n - n / d
    } else {
        n - n / (d / 2)
    }
}

/// Observed descriptor of a matching, sorted.
pub fn observed(k: &ComplexK, m: &Matching, level: &WeightedLevel) -> Vec<i64> {
    let mut v: Vec<i64> = k
        .simplices()
        .filter(|s| m.is_critical(*s))
        .map(|s| s.len() as i64 - level.weight(s) as i64)
        .collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rewritten_intervals_agree_with_table_form() {
        for d in 2..=20 {
            for f0 in 0..d {
                for g in 0..2 * d {
                    let g0 = g % d;
                    let f = f0 + d * (g % 2);
                    for n in f + g + 1..f + g + 1 + 2 * d {
                        let first = congruent_in(n, (d - 1).max(f0 + g0 + 1), (f0 + d - 1).min(g0 + d - 1), d);
                        let second = congruent_in(n, f0.max(g0), (f0 + g0).min(d - 2), d);
                        assert_eq!(type_a_rewritten(n, f, g, d), (first, second), "d={d} f0={f0} g0={g0} n={n}");
                        assert!(!(first && second));
                    }
                }
            }
        }
    }

    #[test]
    fn g_zero_intervals_are_single_points() {
        assert_eq!(type_a(5, 0, 0, 3), vec![2, 2]);
        assert_eq!(type_a(6, 0, 0, 3), vec![2, 2]);
        assert!(type_a(7, 0, 0, 3).is_empty());
    }
}
