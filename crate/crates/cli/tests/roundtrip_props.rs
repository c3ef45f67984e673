use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tanreg::config::parse_tower;
use tanreg::eval::{eval_str, Value};
use tanreg::roundtrip::{check, random_value, TOWERS};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_then_parse_is_identity(seed in any::<u64>(), tower in 0..TOWERS.len()) {
        let k = parse_tower(TOWERS[tower]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = random_value(&mut rng, &k);
        prop_assert_eq!(check(&v, &k), Ok(()));
    }

    #[test]
    fn integer_literals_evaluate_exactly(n in any::<i64>(), m in 1i64..1000) {
        let k = parse_tower("").unwrap();
        let v = eval_str(&format!("({n})/{m}"), &k).unwrap();
        let Value::Element(d) = v else { panic!("not an element") };
        let s = tanreg_core::algebra::Scalar::ratio(&k, n, m);
        prop_assert_eq!(d.re, s.into());
    }
}
