use serde::Serialize;

use super::orth::has_orthogonality;
use crate::error::Result;
use crate::matrix::UnitMatrix;

/// Multiset budget for the orthogonality existence check.
const ORTH_BUDGET: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroPatternReport {
    pub n: usize,
    pub w: usize,
    pub order: u32,
    /// Zeros per row, `n - w`.
    pub z: usize,
    /// `m = n - 2z` when `n > z² - z + 1`: some row pair then overlaps in exactly
    /// `m` nonzero positions, so the alphabet needs m-orthogonality.
    pub required_orthogonality: Option<usize>,
    pub verdict: Verdict,
}

/// Necessary condition from the zero pattern: if `n > z² - z + 1` then two rows
/// share exactly `n - 2z` nonzero columns, so the `L`-th roots must admit a
/// vanishing sum of that many terms. `Fail` proves that no `UW(n, w)` exists
/// over `{0} ∪ {ζ_L^k}`; with `L = 2` it is the real-matrix criterion.
pub fn zero_pattern_necessary(n: usize, w: usize, order: u32) -> Result<ZeroPatternReport> {
    let z = n.saturating_sub(w);
    let required = (n > z * z + 1 - z).then(|| n - 2 * z);
    let verdict = match required {
        Some(m) if !has_orthogonality(m, order, ORTH_BUDGET)? => Verdict::Fail,
        _ => Verdict::Pass,
    };
    Ok(ZeroPatternReport {
        n,
        w,
        order,
        z,
        required_orthogonality: required,
        verdict,
    })
}

/// Bitmask of zero columns.
pub fn zero_mask(row: &[crate::arith::UnitEntry]) -> u64 {
    row.iter()
        .enumerate()
        .filter(|(_, e)| e.is_zero())
        .fold(0, |m, (j, _)| m | 1 << j)
}

/// Three rows whose zero sets are pairwise disjoint, searched the way the
/// forcing argument for order 7 and weight 5 proceeds: first a disjoint pair,
/// then a row avoiding every zero column of that pair.
pub fn disjoint_zero_triple_in(masks: &[u64]) -> Option<[usize; 3]> {
    let k = masks.len();
    for a in 0..k {
        for b in a + 1..k {
            if masks[a] & masks[b] != 0 {
                continue;
            }
            let covered = masks[a] | masks[b];
            if let Some(c) = (0..k).find(|&c| c != a && c != b && masks[c] & covered == 0) {
                let mut t = [a, b, c];
                t.sort_unstable();
                return Some(t);
            }
        }
    }
    None
}

/// [`disjoint_zero_triple_in`] over the rows of `w`.
pub fn disjoint_zero_triple(w: &UnitMatrix) -> Option<[usize; 3]> {
    let masks: Vec<u64> = w.rows().map(zero_mask).collect();
    disjoint_zero_triple_in(&masks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_refutations() {
        assert_eq!(
            zero_pattern_necessary(3, 2, 12).unwrap().verdict,
            Verdict::Fail
        );
        assert_eq!(
            zero_pattern_necessary(3, 2, 60).unwrap().verdict,
            Verdict::Fail
        );
        assert_eq!(
            zero_pattern_necessary(5, 3, 12).unwrap().verdict,
            Verdict::Fail
        );
        let r = zero_pattern_necessary(7, 5, 2).unwrap();
        assert_eq!(r.required_orthogonality, Some(3));
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(
            zero_pattern_necessary(7, 5, 12).unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn threshold_not_reached() {
        // z = 3: 3² - 3 + 1 = 7 ≥ 7
        let r = zero_pattern_necessary(7, 4, 2).unwrap();
        assert_eq!(r.required_orthogonality, None);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(
            zero_pattern_necessary(1, 1, 1).unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn third_row_avoids_four_zero_columns() {
        // zeros of two disjoint rows in columns 0..4, two more zeros per column left
        let masks = [
            0b0000011, 0b0001100, 0b0110000, 0b1000001, 0b0000110, 0b1011000, 0b0100001,
        ];
        let t = disjoint_zero_triple_in(&masks).unwrap();
        assert!(
            masks[t[0]] & masks[t[1]] == 0
                && masks[t[0]] & masks[t[2]] == 0
                && masks[t[1]] & masks[t[2]] == 0
        );
    }

    #[test]
    fn template_prefix() {
        // zero columns of the forced rows: {6,7}, {4,5}, {2,3} (1-based)
        let masks = [0b1100000, 0b0011000, 0b0000110];
        assert_eq!(disjoint_zero_triple_in(&masks), Some([0, 1, 2]));
        assert_eq!(disjoint_zero_triple_in(&masks[..2]), None);
    }
}
