use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tanreg_core::algebra::Fraction;
use tanreg_core::differentials::AbsoluteForm;
use tanreg_core::k2::{
    decompose_symbol, dual_mul, projected_tan, recompose_symbol, tan_symbol, tan_symbol_rel,
    DualSymbol, DualUnit,
};
use tanreg_core::random;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn antisymmetric(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let s = random::dual_symbol(&mut rng, &k, 2);
        prop_assert_eq!(tan_symbol(&s.swap()), -&tan_symbol(&s));
    }

    #[test]
    fn bimultiplicative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let a = random::dual_unit(&mut rng, &k, 2);
        let b = random::dual_unit(&mut rng, &k, 2);
        let c = random::dual_unit(&mut rng, &k, 2);
        let left = tan_symbol(&DualSymbol::new(dual_mul(&a, &b), c.clone()));
        let split = &tan_symbol(&DualSymbol::new(a.clone(), c.clone()))
            + &tan_symbol(&DualSymbol::new(b.clone(), c.clone()));
        prop_assert_eq!(left, split);
        let right = tan_symbol(&DualSymbol::new(c.clone(), dual_mul(&a, &b)));
        let split = &tan_symbol(&DualSymbol::new(c.clone(), a)) + &tan_symbol(&DualSymbol::new(c, b));
        prop_assert_eq!(right, split);
    }

    #[test]
    fn steinberg_relation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let z = random::dual_unit(&mut rng, &k, 2);
        let one = Fraction::one(&k);
        let w0 = &one - z.z0();
        prop_assume!(!w0.is_zero());
        let w = DualUnit::new(w0, -z.z1()).unwrap();
        prop_assert!(tan_symbol(&DualSymbol::new(z, w)).is_zero());
    }

    #[test]
    fn decomposition_sums_and_recomposes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let s = random::dual_symbol(&mut rng, &k, 2);
        let parts = decompose_symbol(&s);
        prop_assert_eq!(recompose_symbol(&parts), Some(s.clone()));
        let sum = parts.iter().fold(AbsoluteForm::zero(&k), |acc, p| &acc + &tan_symbol(p));
        prop_assert_eq!(sum, tan_symbol(&s));
        prop_assert!(tan_symbol(&parts[0]).is_zero());
    }

    #[test]
    fn relative_tangent_is_projection(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let s = random::dual_symbol(&mut rng, &k, 2);
        prop_assert_eq!(projected_tan(&s), tan_symbol_rel(&s));
    }
}
