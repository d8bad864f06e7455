#![allow(dead_code)]

use std::collections::BTreeSet;

use uwm_core::blocks::XValue;
use uwm_core::compose::{compose_with_values, enumerate_part_multisets, PartMultiset};
use uwm_core::format::serialize_matrix;
use uwm_core::matrix::canonical_form;

/// Number of weight-4 decompositions of order n, n = 1..=100.
pub const COUNT_TABLE: [u64; 100] = [
    0, 0, 0, 1, 1, 2, 1, 3, 1, 4, 3, 8, 5, 10, 7, 16, 11, 23, 17, 34, 25, 46, 36, 68, 52, //
    91, 73, 128, 103, 173, 142, 236, 194, 313, 265, 424, 357, 555, 476, 737, 634, 961, 837, 1256,
    1098, 1621, 1433, 2102, 1860, 2687, //
    2401, 3445, 3089, 4379, 3952, 5563, 5034, 7015, 6391, 8852, 8082, 11087, 10177, 13884, 12778,
    17296, 15987, 21517, 19937, 26647, 24789, 32967, 30731, 40607, 37987, //
    49960, 46836, 61251, 57587, 74976, 70630, 91488, 86422, 111485, 105496, 135445, 128477, 164323,
    156137, 198849, 189343, 240258, 229138, 289613, 276750, 348615, 333611, 418702, 401394, 502179,
];

/// Weight-4 decompositions of orders 4..=14, starred labels are the sporadic blocks.
pub const COMPOSITIONS: [(usize, &[&str]); 11] = [
    (4, &["4"]),
    (5, &["5*"]),
    (6, &["6*", "6"]),
    (7, &["7*"]),
    (8, &["8*", "4 4", "8"]),
    (9, &["5* 4"]),
    (10, &["5* 5*", "6* 4", "4 6", "10"]),
    (11, &["5* 6*", "5* 6", "7* 4"]),
    (
        12,
        &[
            "5* 7*", "6* 6", "6* 6*", "8* 4", "4 8", "4 4 4", "6 6", "12",
        ],
    ),
    (13, &["5* 8*", "5* 4 4", "5* 8", "6* 7*", "7* 6"]),
    (
        14,
        &[
            "5* 5* 4", "6* 8*", "6* 4 4", "6* 8", "7* 7*", "8* 6", "4 10", "4 4 6", "6 8", "14",
        ],
    ),
];

pub fn listed_compositions(n: usize) -> BTreeSet<String> {
    let (_, list) = COMPOSITIONS
        .iter()
        .find(|(m, _)| *m == n)
        .expect("listed order");
    list.iter()
        .map(|s| PartMultiset::parse(4, s, false).unwrap().to_string())
        .collect()
}

pub fn enumerated_compositions(n: usize) -> BTreeSet<String> {
    enumerate_part_multisets(n, 4, false, 100)
        .unwrap()
        .iter()
        .map(|p| p.to_string())
        .collect()
}

/// Counts weight-4 decompositions by listing nondecreasing sequences of labelled
/// part sizes, independently of the library's generating function.
pub fn brute_count(n: usize) -> u64 {
    // (size, label) with starred blocks and E_2m for 2m >= 4
    let mut parts: Vec<(usize, bool)> = (5..=8).map(|s| (s, true)).collect();
    parts.extend((4..=n).step_by(2).map(|s| (s, false)));
    fn go(parts: &[(usize, bool)], start: usize, left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        (start..parts.len())
            .filter(|&i| parts[i].0 <= left)
            .map(|i| go(parts, i, left - parts[i].0))
            .sum()
    }
    go(&parts, 0, n)
}

/// Canonical forms of every direct sum of weight-4 blocks of order `n` with each
/// `E_2m` parameter ranging over the twelfth roots of unity.
pub fn composed_classes(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for p in enumerate_part_multisets(n, 4, false, 100).unwrap() {
        let k = p.even_part_count();
        let total = 12usize.pow(k as u32);
        for idx in 0..total {
            let xs: Vec<XValue> = (0..k)
                .map(|t| XValue::base(((idx / 12usize.pow(t as u32)) % 12) as u32))
                .collect();
            let m = compose_with_values(&p, &xs).unwrap().lift(12).unwrap();
            out.insert(serialize_matrix(&canonical_form(&m).unwrap()));
        }
    }
    out
}
