use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tanreg_core::cousin::{
    global_sections_basis, kernel_membership, kernel_rprime_basis, realize_principal_parts,
    verify_square_res,
};
use tanreg_core::differentials::{
    principal_parts, principal_parts_on, project_rprime, AbsoluteForm,
};
use tanreg_core::random;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn balanced_families_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let family = random::family(&mut rng, &k, 3, 3, true);
        let report = realize_principal_parts(&family);
        prop_assert!(report.realizable);
        prop_assert!(report.total_residue.is_zero());
        let w = report.witness.unwrap();
        prop_assert_eq!(&principal_parts_on(&w, &family.places()), &family);
        prop_assert!(principal_parts(&w).equivalent(&family));
    }

    #[test]
    fn unbalanced_families_report_residue(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let family = random::family(&mut rng, &k, 3, 2, false);
        let report = realize_principal_parts(&family);
        prop_assert_eq!(report.realizable, report.total_residue.is_zero());
        prop_assert_eq!(report.witness.is_some(), report.realizable);
    }

    #[test]
    fn residue_square(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = random::tower_qt();
        let beta = random::beta(&mut rng, &k, 2, 2);
        let report = verify_square_res(&beta);
        prop_assert!(report.verdict);
        prop_assert!(report.residue_sum.is_zero());
    }
}

#[test]
fn kernel_is_spanned_by_constant_differentials() {
    for k in [
        random::tower_q(),
        random::tower_qt(),
        random::tower_sqrt_t(),
    ] {
        let m = k.num_transcendentals();
        let basis = kernel_rprime_basis(&k);
        assert_eq!(basis.dimension(), m);
        for w in &basis.forms {
            assert!(project_rprime(w).is_zero());
            assert!(kernel_membership(w));
        }
        assert_eq!(global_sections_basis(&k).dimension(), m);
    }
    let k = random::tower_qt();
    assert!(!kernel_membership(
        &AbsoluteForm::dt_basis(&k, 0).scale(&tanreg_core::algebra::Fraction::x(&k))
    ));
}
