use kgen_core::sample::laurent_z;
use kgen_core::{parse, ExponentVector, Ring, RingHom, ZPoly};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn polys(seed: u64, ring: Ring, count: usize) -> Vec<ZPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| laurent_z(&mut rng, ring, 5, 3)).collect()
}

fn rings() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::Univariate), (2u32..=4).prop_map(Ring::Genus), (1usize..=3).prop_map(Ring::Generic)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(seed in any::<u64>(), ring in rings()) {
        let v = polys(seed, ring, 3);
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert!((a - a).is_zero());
        prop_assert_eq!(a * &ZPoly::one(ring), a.clone());
    }

    #[test]
    fn involution_is_an_involutive_ring_map(seed in any::<u64>(), ring in rings()) {
        let v = polys(seed, ring, 2);
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!(a.involution().involution(), a.clone());
        prop_assert_eq!((a * b).involution(), &a.involution() * &b.involution());
        prop_assert_eq!((a + b).involution(), &a.involution() + &b.involution());
        prop_assert_eq!(a.involution().evaluate_at_one(), a.evaluate_at_one());
    }

    #[test]
    fn balanced_polynomials_form_a_ring_without_one(seed in any::<u64>(), ring in rings()) {
        let v = polys(seed, ring, 2);
        let one = ZPoly::one(ring);
        // (x - 1)(x̄ - 1) style symmetrization gives balanced elements.
        let bal = |p: &ZPoly| { let q = p - &ZPoly::constant(ring, p.evaluate_at_one()); &q + &q.involution() };
        let (x, y) = (bal(&v[0]), bal(&v[1]));
        prop_assert!(x.is_balanced() && y.is_balanced());
        prop_assert!((&x + &y).is_balanced());
        prop_assert!((&x * &y).is_balanced());
        prop_assert!(!one.is_balanced());
    }

    #[test]
    fn phi_is_a_homomorphism(seed in any::<u64>(), g in 2u32..=5) {
        let v = polys(seed, Ring::Genus(g), 2);
        let (a, b) = (&v[0], &v[1]);
        let phi = |p: &ZPoly| p.specialize_phi().unwrap();
        prop_assert_eq!(phi(&(a * b)), &phi(a) * &phi(b));
        prop_assert_eq!(phi(&(a + b)), &phi(a) + &phi(b));
        prop_assert_eq!(phi(&a.involution()), phi(a).involution());
        prop_assert_eq!(phi(a), RingHom::phi(g).unwrap().apply(a));
    }

    #[test]
    fn specialize_single_is_multiplicative(seed in any::<u64>(), g in 2u32..=4, keep in 0usize..6) {
        let ring = Ring::Genus(g);
        let keep = keep % ring.nvars();
        let v = polys(seed, ring, 2);
        let s = |p: &ZPoly| p.specialize_single(keep).unwrap();
        prop_assert_eq!(s(&(&v[0] * &v[1])), &s(&v[0]) * &s(&v[1]));
        prop_assert_eq!(s(&v[0]).evaluate_at_one(), v[0].evaluate_at_one());
    }

    #[test]
    fn printing_round_trips(seed in any::<u64>(), ring in rings()) {
        for p in polys(seed, ring, 4) {
            let text = p.to_string();
            prop_assert_eq!(parse::<num_bigint::BigInt>(&text, ring).unwrap(), p.clone());
            let q = p.to_rational();
            prop_assert_eq!(parse::<num_rational::BigRational>(&q.to_string(), ring).unwrap(), q);
        }
    }

    #[test]
    fn shifts_are_monomial_multiplication(seed in any::<u64>(), e in -3i64..=3) {
        let p = &polys(seed, Ring::Univariate, 1)[0];
        let shifted = p.shift(&ExponentVector(vec![e]));
        prop_assert_eq!(shifted.clone(), p * &ZPoly::t_pow(e));
        prop_assert_eq!(shifted.shift(&ExponentVector(vec![-e])), p.clone());
    }
}

#[test]
fn worked_examples() {
    let r = Ring::Univariate;
    let p: ZPoly = parse("(t-1)*(t^-1-1)", r).unwrap();
    assert_eq!(p.to_string(), "2 - t - t^-1");
    assert!(p.is_balanced());
    assert!(parse::<num_bigint::BigInt>("t - 1", r).unwrap().involution() != parse("t - 1", r).unwrap());
}
