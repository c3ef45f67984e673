use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tanreg_core::algebra::reduce::is_squarefree;
use tanreg_core::algebra::{
    hermite_reduce, partial_fractions, squarefree_decompose, Fraction, Poly, TowerSpec,
};
use tanreg_core::random;

fn towers() -> Vec<Arc<TowerSpec>> {
    vec![
        random::tower_q(),
        random::tower_qt(),
        random::tower_sqrt_t(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn field_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in towers() {
            let a = random::fraction(&mut rng, &k, 2, 2);
            let b = random::fraction(&mut rng, &k, 2, 2);
            let c = random::fraction(&mut rng, &k, 2, 2);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn scalar_inverses(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_sqrt_t();
        let c = random::nonzero_scalar(&mut rng, &k);
        prop_assert!((&c * &c.inv().unwrap()).is_one());
    }

    #[test]
    fn squarefree_reconstructs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let a = random::monic(&mut rng, &k, 2);
        let b = random::monic(&mut rng, &k, 1);
        let p = &(&a * &b.pow(2)) * &a;
        let sq = squarefree_decompose(&p).unwrap();
        prop_assert_eq!(sq.reconstruct(), p);
        for (i, (d, _)) in sq.factors.iter().enumerate() {
            prop_assert!(is_squarefree(d));
            for (e, _) in &sq.factors[..i] {
                prop_assert!(e.gcd(d).is_one());
            }
        }
    }

    #[test]
    fn hermite_reconstructs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for k in towers() {
            let base = random::fraction(&mut rng, &k, 3, 2);
            let f = &base * &base;
            let h = hermite_reduce(&f);
            let back = &(&h.rational.derivative() + &h.simple_part()) + &Fraction::from(h.polynomial.clone());
            prop_assert_eq!(back, f);
            prop_assert!(is_squarefree(&h.denominator));
            prop_assert!(h.numerator.degree() < h.denominator.degree());
        }
    }

    #[test]
    fn derivatives_match_quotient_rule(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let a = random::fraction(&mut rng, &k, 3, 2);
        let b = random::fraction(&mut rng, &k, 2, 2);
        let f = &a * &b;
        let f = &f * &a;
        let (n, d) = (f.num(), f.den());
        let naive = |dn: Poly, dd: Poly| {
            Fraction::new(&(&dn * d) - &(n * &dd), d * d).unwrap()
        };
        prop_assert_eq!(f.derivative(), naive(n.derivative(), d.derivative()));
        prop_assert_eq!(f.derivation(0), naive(n.derivation(0), d.derivation(0)));
    }

    #[test]
    fn partial_fractions_recombine(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let f = random::fraction(&mut rng, &k, 4, 3);
        let f = &f * &f;
        let sq = squarefree_decompose(f.den()).unwrap();
        let pf = partial_fractions(&f, &sq).unwrap();
        prop_assert_eq!(pf.recombine(), f);
    }
}
