//! Seeded property suites behind the `selftest` command.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tanreg_core::algebra::{Fraction, Scalar};
use tanreg_core::cousin::{realize_principal_parts, verify_square_res};
use tanreg_core::differentials::{
    d_rel, is_exact, principal_parts, principal_parts_on, residue_at, support, Place, RelativeForm,
};
use tanreg_core::k2::{decompose_symbol, recompose_symbol, tan_symbol, DualSymbol, DualUnit};
use tanreg_core::random;

use crate::config::parse_tower;
use crate::report::{SelftestReport, Suite};
use crate::roundtrip;

type Case = fn(&mut ChaCha8Rng) -> Result<(), String>;

fn steinberg(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let k = random::tower_qt();
    let f = random::nonzero_fraction(rng, &k, 3, 3);
    let g = &Fraction::one(&k) - &f;
    if g.is_zero() {
        return Ok(());
    }
    let f1 = random::fraction(rng, &k, 3, 3);
    let s = DualSymbol::new(
        DualUnit::new(f.clone(), f1.clone()).expect("nonzero"),
        DualUnit::new(g, -&f1).expect("nonzero"),
    );
    let tan = tan_symbol(&s);
    tan.is_zero()
        .then_some(())
        .ok_or_else(|| format!("tan {} = {}", s.render(), tan.render()))
}

fn residue_theorem(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let k = random::tower_qt();
    let w = RelativeForm::new(random::fraction(rng, &k, 4, 4));
    let mut places = support(&w.to_absolute());
    places.push(Place::Infinity);
    let total = places
        .iter()
        .fold(Scalar::zero(&k), |acc, p| &acc + &residue_at(&w, p));
    total
        .is_zero()
        .then_some(())
        .ok_or_else(|| format!("residues of {} sum to {}", w.render(), total.render()))
}

fn residue_square(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let k = random::tower_qt();
    let beta = random::beta(rng, &k, 2, 2);
    let r = verify_square_res(&beta);
    r.verdict
        .then_some(())
        .ok_or_else(|| format!("square fails for {}", beta.render()))
}

fn decomposition(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let k = random::tower_qt();
    let s = random::dual_symbol(rng, &k, 2);
    let parts = decompose_symbol(&s);
    let sum = parts.iter().fold(
        tanreg_core::differentials::AbsoluteForm::zero(&k),
        |acc, p| &acc + &tan_symbol(p),
    );
    let ok = sum == tan_symbol(&s) && recompose_symbol(&parts).as_ref() == Some(&s);
    ok.then_some(())
        .ok_or_else(|| format!("decomposition of {}", s.render()))
}

fn exactness(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let k = random::tower_qt();
    let h = random::fraction(rng, &k, 3, 3);
    let eta = d_rel(&h);
    let e = is_exact(&eta);
    match e.witness {
        Some(w) if d_rel(&w) == eta => Ok(()),
        _ => Err(format!("d({}) not recognized as exact", h.render())),
    }
}

fn realizability(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let k = random::tower_qt();
    let balanced = rand::Rng::gen_bool(rng, 0.5);
    let family = random::family(rng, &k, 2, 2, balanced);
    let r = realize_principal_parts(&family);
    if r.realizable != r.total_residue.is_zero() {
        return Err("realizability disagrees with the total residue".into());
    }
    if let Some(w) = r.witness {
        let back = principal_parts_on(&w, &family.places());
        if back != family || !principal_parts(&w).equivalent(&family) {
            return Err(format!("witness {} misses the family", w.render()));
        }
    }
    Ok(())
}

fn round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let i = rand::Rng::gen_range(rng, 0..roundtrip::TOWERS.len());
    let k = parse_tower(roundtrip::TOWERS[i]).expect("built-in tower");
    let v = roundtrip::random_value(rng, &k);
    roundtrip::check(&v, &k)
}

const SUITES: [(&str, Case); 7] = [
    ("steinberg", steinberg),
    ("residue-theorem", residue_theorem),
    ("residue-square", residue_square),
    ("decomposition", decomposition),
    ("exactness", exactness),
    ("realizability", realizability),
    ("round-trip", round_trip),
];

/// Runs every suite for `count` cases. Suite `i` draws from its own
/// generator seeded with `seed + i`, so suites are independent.
pub fn run(seed: u64, count: u64) -> SelftestReport {
    let suites: Vec<Suite> = SUITES
        .iter()
        .enumerate()
        .map(|(i, (name, case))| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            let mut passed = 0;
            let mut first_failure = None;
            for n in 0..count {
                match case(&mut rng) {
                    Ok(()) => passed += 1,
                    Err(why) => {
                        first_failure.get_or_insert_with(|| format!("case {n}: {why}"));
                    }
                }
            }
            Suite {
                name: name.to_string(),
                cases: count,
                passed,
                first_failure,
            }
        })
        .collect();
    let verdict = suites.iter().all(|s| s.passed == s.cases);
    SelftestReport {
        seed,
        count,
        suites,
        verdict,
    }
}
