use kgen_core::amalgam::{
    amalgam_normal_form, build_certificate, double_cosets_distinct, in_a, in_b, in_u, is_reduced_word, reconstruct, Side,
};
use kgen_core::cover::EpsilonTable;
use kgen_core::rep::{matrix_mk, matrix_n};
use kgen_core::sample::{amalgam_word, conjugate_into_b, element_sl2};
use kgen_core::tree::to_rf_matrix;
use kgen_core::{Matrix2, QPoly, TreeVertex};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn base_distance(g: &Matrix2<QPoly>) -> u64 {
    let base = TreeVertex::base();
    base.distance(&base.act(&to_rf_matrix(g).unwrap()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_reconstructs_and_alternates(seed in any::<u64>(), len in 1usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = amalgam_word(&mut rng, len);
        let word = amalgam_normal_form(&g).unwrap();
        prop_assert_eq!(reconstruct(&word).unwrap(), g.clone());
        prop_assert!(is_reduced_word(&word).unwrap());
        prop_assert!(word.len() as u64 <= base_distance(&g) + 1);
        prop_assert!(word.len() <= len.max(1));
    }

    #[test]
    fn normal_form_handles_general_elements(seed in any::<u64>(), len in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = element_sl2(&mut rng, len, 2);
        let word = amalgam_normal_form(&g).unwrap();
        prop_assert_eq!(reconstruct(&word).unwrap(), g.clone());
        prop_assert!(is_reduced_word(&word).unwrap());
        // Each B-letter moves base two steps further out; the merged end
        // letters account for the slack of one on either side.
        let d = base_distance(&g);
        let n = word.len() as u64;
        prop_assert!(n <= d + 1 && n + 1 >= d, "len {} vs distance {}", n, d);
        prop_assert_eq!(d == 0, n == 1 && word[0].side == Side::A);
    }

    #[test]
    fn membership_identities(seed in any::<u64>(), len in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = element_sl2(&mut rng, len, 2);
        prop_assert_eq!(in_u(&g).unwrap(), in_a(&g).unwrap() && in_b(&g).unwrap());
        // in_B(M) iff diag(t, 1) M diag(t^-1, 1) lies in A.
        let back = Matrix2::new(g.a.clone(), g.b.shift(&kgen_core::ExponentVector(vec![1])), g.c.shift(&kgen_core::ExponentVector(vec![-1])), g.d.clone());
        prop_assert_eq!(in_b(&g).unwrap(), in_a(&back).unwrap());
        prop_assert_eq!(conjugate_into_b(&back), g);
    }
}

#[test]
fn named_normal_forms() {
    let n = matrix_n().to_rational();
    assert_eq!(amalgam_normal_form(&n).unwrap().len(), 1);
    for k in 1..=20 {
        let w = amalgam_normal_form(&matrix_mk(k).unwrap().to_rational()).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].side, Side::A);
    }
}

#[test]
fn double_coset_table() {
    for k in 1..=20 {
        assert!(!double_cosets_distinct(k, k).unwrap().distinct);
        for l in k + 1..=20 {
            let r = double_cosets_distinct(k, l).unwrap();
            assert!(r.distinct);
            assert_eq!(r.lower_left_at_zero, num_bigint::BigInt::from(k - l));
        }
    }
}

#[test]
fn certificates_ignore_the_epsilon_table() {
    let reference = build_certificate(6, 3, &EpsilonTable::zero()).unwrap().to_json_string();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..4 {
        let eps = EpsilonTable::random_skew(3, &mut rng);
        assert_eq!(build_certificate(6, 3, &eps).unwrap().to_json_string(), reference);
    }
    assert_eq!(build_certificate(6, 3, &EpsilonTable::zero()).unwrap().to_json_string(), reference);
}
