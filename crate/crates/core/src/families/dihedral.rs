//! Matching on `K(I₂(m))`, labels `1` and `2`.

use super::{collect_pairs, span, Mask};
use crate::error::Result;

const E: Mask = 0;
const ONE: Mask = 0b010;
const TWO: Mask = 0b100;
const BOTH: Mask = 0b110;

pub fn pairs(m: i64, d: i64) -> Result<Vec<(Mask, Mask)>> {
    let chosen: Vec<(Mask, Mask)> = match (d, m % d == 0) {
        (2, true) => vec![],
        (2, false) => vec![(BOTH, ONE)],
        (_, true) => vec![(TWO, E)],
        _ => vec![(BOTH, ONE), (TWO, E)],
    };
    let partner = |s: Mask| {
        chosen.iter().find_map(|&(u, l)| if s == u { Some(l) } else if s == l { Some(u) } else { None })
    };
    collect_pairs(&family(), partner)
}

pub fn family() -> Vec<Mask> {
    (0..=span(1, 2)).filter(|s| s & 1 == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cases() {
        assert!(pairs(6, 2).unwrap().is_empty());
        assert_eq!(pairs(5, 2).unwrap(), vec![(BOTH, ONE)]);
        assert_eq!(pairs(6, 3).unwrap(), vec![(TWO, E)]);
        assert_eq!(pairs(5, 3).unwrap().len(), 2);
    }
}
