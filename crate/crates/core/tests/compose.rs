mod common;

use num_bigint::BigUint;
use uwm_core::blocks::{
    block_b2, block_e2m, block_f5, block_uw33, block_uw43, block_uw65, block_w5, block_w6,
    block_w7, block_w8, e2m_sign_swap_equivalence, BlockId, XValue,
};
use uwm_core::compose::{
    compose_from_parts, count_decompositions, direct_sum, enumerate_part_multisets, exists_uw,
    exists_w_real, Existence, PartMultiset,
};
use uwm_core::Error;

#[test]
fn count_table() {
    for (i, &expected) in common::COUNT_TABLE.iter().enumerate() {
        let n = i + 1;
        assert_eq!(
            count_decompositions(n, 4, false).unwrap(),
            BigUint::from(expected),
            "n={n}"
        );
    }
}

#[test]
fn counts_match_listing() {
    for n in 1..=40 {
        let listed = enumerate_part_multisets(n, 4, false, 60).unwrap().len() as u64;
        assert_eq!(
            count_decompositions(n, 4, false).unwrap(),
            BigUint::from(listed)
        );
        assert_eq!(listed, common::brute_count(n));
    }
}

#[test]
fn composition_lists() {
    for n in 4..=14 {
        assert_eq!(
            common::enumerated_compositions(n),
            common::listed_compositions(n),
            "n={n}"
        );
    }
    assert_eq!(enumerate_part_multisets(12, 4, false, 60).unwrap().len(), 8);
    assert_eq!(
        enumerate_part_multisets(14, 4, false, 60).unwrap().len(),
        10
    );
}

#[test]
fn enumeration_bound() {
    assert_eq!(
        enumerate_part_multisets(61, 4, false, 60).unwrap_err(),
        Error::BoundExceeded { n: 61, bound: 60 }
    );
}

#[test]
fn large_counts_do_not_overflow() {
    let c = count_decompositions(2000, 4, false).unwrap();
    assert!(c > BigUint::from(u64::MAX));
}

#[test]
fn every_block_is_weighing() {
    let mut blocks = vec![
        block_b2(),
        block_uw33(),
        block_uw43(),
        block_w5(),
        block_w6(),
        block_w7(),
        block_w8(),
        block_f5(),
        block_uw65(XValue::Formal),
        block_uw65(XValue::base(5)),
    ];
    for m in [2, 3, 4, 7, 25, 100] {
        blocks.push(block_e2m(m, XValue::Formal).unwrap());
        blocks.push(block_e2m(m, XValue::base(7)).unwrap());
    }
    for b in blocks {
        assert!(b.gram_check(), "{b}");
    }
    assert!(block_e2m(1, XValue::ONE).is_err());
}

#[test]
fn sign_swap_witness() {
    for m in 2..=6 {
        assert!(e2m_sign_swap_equivalence(m).unwrap().verified);
    }
}

#[test]
fn composed_matrices_verify() {
    for n in 4..=14 {
        for p in enumerate_part_multisets(n, 4, false, 60).unwrap() {
            let m = compose_from_parts(&p, Some(XValue::base(1))).unwrap();
            assert_eq!(m.n(), n);
            assert!(m.gram_check(), "{p}");
        }
    }
    let p = PartMultiset::parse(4, "6*,6", false).unwrap();
    assert!(compose_from_parts(&p, Some(XValue::Formal))
        .unwrap()
        .gram_check());
}

#[test]
fn direct_sum_errors() {
    assert_eq!(
        direct_sum(&[block_b2(), block_w5()]).unwrap_err(),
        Error::MixedWeights(2, 4)
    );
    let e = block_e2m(2, XValue::Formal).unwrap();
    assert_eq!(
        direct_sum(&[e.clone(), e]).unwrap_err(),
        Error::MultipleSymbolic
    );
}

#[test]
fn block_ids() {
    assert!(BlockId::new("E2m", None, None).is_err());
    let id = BlockId::new("E2m", Some(3), Some(XValue::Formal)).unwrap();
    assert_eq!(id.weight(), 4);
    assert_eq!(id.build().n(), 6);
}

#[test]
fn existence_answers() {
    assert_eq!(exists_uw(3, 2), Existence::NotExists);
    assert_eq!(exists_uw(6, 2), Existence::Exists);
    assert_eq!(exists_uw(5, 3), Existence::NotExists);
    assert_eq!(exists_uw(7, 3), Existence::Exists);
    assert_eq!(exists_uw(7, 5), Existence::NotExists);
    assert_eq!(exists_uw(5, 5), Existence::Exists);
    assert_eq!(exists_uw(9, 4), Existence::Exists);
    assert_eq!(exists_uw(12, 6), Existence::Unknown);
    assert_eq!(exists_w_real(5, 4), Existence::NotExists);
    assert_eq!(exists_w_real(9, 4), Existence::NotExists);
    assert_eq!(exists_w_real(13, 4), Existence::Exists);
    assert_eq!(exists_w_real(6, 3), Existence::NotExists);
}
