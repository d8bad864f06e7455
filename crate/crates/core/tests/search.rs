mod common;

use std::collections::BTreeSet;

use uwm_core::blocks::{block_b2, block_uw33, block_uw43, block_w5};
use uwm_core::compose::direct_sum;
use uwm_core::format::serialize_matrix;
use uwm_core::matrix::canonical_form;
use uwm_core::search::{
    dfs_classify, disjoint_zero_triple, disjoint_zero_triple_in, has_orthogonality,
    m_orth_solutions, orth_brute, uw75_refute, zero_pattern_necessary, SearchConfig, Verdict,
};
use uwm_core::Error;

fn classify(n: usize, w: usize) -> Vec<uwm_core::UnitMatrix> {
    let out = dfs_classify(&SearchConfig::new(n, w, 12)).unwrap();
    assert!(out.exact_classes);
    out.matrices
}

fn canon_key(m: &uwm_core::UnitMatrix) -> String {
    serialize_matrix(&canonical_form(&m.lift(12).unwrap()).unwrap())
}

#[test]
fn nonexistence_over_twelfth_roots() {
    for (n, w) in [(3, 2), (5, 3), (7, 5)] {
        assert!(classify(n, w).is_empty(), "UW({n},{w})");
    }
}

#[test]
fn unique_small_classes() {
    for (n, w, block) in [
        (5, 4, block_w5()),
        (3, 3, block_uw33()),
        (4, 3, block_uw43()),
        (
            6,
            2,
            direct_sum(&[block_b2(), block_b2(), block_b2()]).unwrap(),
        ),
    ] {
        let found = classify(n, w);
        assert_eq!(found.len(), 1, "UW({n},{w})");
        assert_eq!(serialize_matrix(&found[0]), canon_key(&block));
    }
}

#[test]
fn results_are_standard_weighing_matrices() {
    for (n, w) in [(4, 4), (6, 4), (6, 3), (8, 3)] {
        for m in classify(n, w) {
            assert!(m.gram_check());
            assert!(m.is_standard_form().unwrap());
            assert_eq!(serialize_matrix(&m), canon_key(&m));
        }
    }
}

#[test]
fn weight_four_classes_are_block_sums() {
    for n in 4..=8 {
        let found: BTreeSet<String> = classify(n, 4).iter().map(serialize_matrix).collect();
        assert_eq!(found, common::composed_classes(n), "order {n}");
    }
}

#[test]
fn parallel_matches_sequential() {
    for (n, w) in [(6, 4), (7, 5), (8, 3)] {
        let seq = dfs_classify(&SearchConfig::new(n, w, 12)).unwrap();
        let par = dfs_classify(&SearchConfig::new(n, w, 12).with_parallel(true)).unwrap();
        assert_eq!(seq.matrices, par.matrices);
        assert_eq!(seq.standard_forms, par.standard_forms);
        assert_eq!(seq.nodes, par.nodes);
    }
}

#[test]
fn budget_exhaustion_is_an_error() {
    let cfg = SearchConfig::new(7, 5, 12).with_budget(1000);
    assert_eq!(dfs_classify(&cfg).unwrap_err(), Error::BudgetExceeded(1000));
    let cfg = cfg.with_parallel(true);
    assert_eq!(dfs_classify(&cfg).unwrap_err(), Error::BudgetExceeded(1000));
}

#[test]
fn row_limit_counts_prefixes() {
    let out = dfs_classify(&SearchConfig::new(5, 4, 12).with_row_limit(2)).unwrap();
    assert!(out.is_truncated());
    assert!(out.matrices.is_empty());
    assert!(out.prefixes.unwrap() > 0);
    let one = dfs_classify(&SearchConfig::new(5, 4, 12).with_row_limit(1)).unwrap();
    assert_eq!(one.prefixes, Some(1));
}

#[test]
fn one_by_one_and_invalid_configs() {
    let one = dfs_classify(&SearchConfig::new(1, 1, 12)).unwrap();
    assert_eq!(one.matrices.len(), 1);
    assert_eq!(classify(4, 1).len(), 1);
    assert!(dfs_classify(&SearchConfig::new(3, 4, 12)).is_err());
    assert_eq!(
        dfs_classify(&SearchConfig::new(3, 2, 0)).unwrap_err(),
        Error::ZeroOrder
    );
}

#[test]
fn real_alphabet() {
    // real Hadamard of order 4 is unique; no real UW(5,4)
    assert_eq!(
        dfs_classify(&SearchConfig::new(4, 4, 2))
            .unwrap()
            .matrices
            .len(),
        1
    );
    assert!(dfs_classify(&SearchConfig::new(5, 4, 2))
        .unwrap()
        .matrices
        .is_empty());
    assert!(dfs_classify(&SearchConfig::new(7, 5, 2))
        .unwrap()
        .matrices
        .is_empty());
}

#[test]
fn closed_forms_match_brute_force() {
    for l in [2, 3, 4, 6, 12] {
        for m in 0..=4 {
            assert_eq!(
                m_orth_solutions(m, l).unwrap(),
                orth_brute(m, l, 1 << 20).unwrap(),
                "m={m} L={l}"
            );
        }
    }
}

#[test]
fn orthogonality_existence_matches_brute_force() {
    for l in [1, 2, 3, 4, 5, 6, 10, 12] {
        for m in 0..=5 {
            let brute = !orth_brute(m, l, 1 << 22).unwrap().is_empty();
            assert_eq!(
                has_orthogonality(m, l, 1 << 22).unwrap(),
                brute,
                "m={m} L={l}"
            );
        }
    }
}

#[test]
fn zero_pattern_verdicts() {
    assert_eq!(
        zero_pattern_necessary(3, 2, 12).unwrap().verdict,
        Verdict::Fail
    );
    assert_eq!(
        zero_pattern_necessary(5, 3, 12).unwrap().verdict,
        Verdict::Fail
    );
    assert_eq!(
        zero_pattern_necessary(7, 5, 2).unwrap().verdict,
        Verdict::Fail
    );
    assert_eq!(
        zero_pattern_necessary(7, 5, 12).unwrap().verdict,
        Verdict::Pass
    );
    // real matrices: (n - w)^2 - (n - w) + 1 >= n is necessary for odd n
    for n in (3..30).step_by(2) {
        for w in 1..n {
            let z = n - w;
            let report = zero_pattern_necessary(n, w, 2).unwrap();
            if z * z + 1 - z < n {
                assert_eq!(report.verdict, Verdict::Fail, "({n},{w})");
            }
        }
    }
}

/// Every 7×7 zero pattern with two zeros per row and column contains three rows
/// whose zero sets are pairwise disjoint.
#[test]
fn seven_by_seven_zero_patterns_have_disjoint_triples() {
    let pairs: Vec<u64> = (0..7)
        .flat_map(|a| (a + 1..7).map(move |b| (1u64 << a) | (1 << b)))
        .collect();
    let mut checked = 0u64;
    fn go(pairs: &[u64], start: usize, rows: &mut Vec<u64>, cols: &mut [u8; 7], checked: &mut u64) {
        if rows.len() == 7 {
            assert!(cols.iter().all(|&c| c == 2));
            assert!(disjoint_zero_triple_in(rows).is_some(), "{rows:?}");
            *checked += 1;
            return;
        }
        for (i, &p) in pairs.iter().enumerate().skip(start) {
            if (0..7).any(|j| p >> j & 1 == 1 && cols[j] == 2) {
                continue;
            }
            (0..7)
                .filter(|j| p >> j & 1 == 1)
                .for_each(|j| cols[j] += 1);
            rows.push(p);
            go(pairs, i, rows, cols, checked);
            rows.pop();
            (0..7)
                .filter(|j| p >> j & 1 == 1)
                .for_each(|j| cols[j] -= 1);
        }
    }
    go(&pairs, 0, &mut Vec::new(), &mut [0; 7], &mut checked);
    assert!(checked > 0);
}

#[test]
fn weight_five_matrices_have_disjoint_triples() {
    // the only order-6 weight-5 sample at hand; its zeros sit on a permutation
    let m = uwm_core::blocks::block_uw65(uwm_core::XValue::base(1));
    assert!(disjoint_zero_triple(&m).is_some());
}

#[test]
fn refutation_certificate() {
    let cert = uw75_refute();
    assert!(cert.verify());
    assert_eq!(cert.assignments.len(), 32);
    let rows: Vec<String> = cert.template.iter().map(|r| r.join(" ")).collect();
    assert_eq!(
        rows,
        [
            "1 1 1 1 1 0 0",
            "1 a b 0 0 1 1",
            "1 0 0 c d f g",
            "0 0 1 h k m n"
        ]
    );
    assert!(cert.to_string().ends_with("verdict: UNSAT"));
}
