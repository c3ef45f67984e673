//! Seeded generators of small random objects for property suites.
//!
//! Every generator takes the RNG by reference, so a fixed seed determines
//! the whole sequence of generated cases.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::reduce::is_squarefree;
use crate::algebra::{BaseFrac, Fraction, PolarTerm, Poly, Scalar, TowerSpec};
use crate::differentials::{d_abs, res_h1x, AbsoluteForm, Place, PrincipalPartAt, PrincipalParts};
use crate::k2::{DualSymbol, DualUnit};

fn small<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

/// A constant of `k`: small integer combination of `1`, the `t_i`, and the
/// algebraic generator when present.
pub fn scalar<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>) -> Scalar {
    let mut c = Scalar::from_i64(tower, small(rng, 3));
    for i in 0..tower.num_transcendentals() {
        if rng.gen_bool(0.5) {
            let t = Scalar::transcendental(tower, i);
            c = &c + &(&t * &Scalar::from_i64(tower, small(rng, 2)));
        }
    }
    if let Some(a) = Scalar::alpha(tower) {
        if rng.gen_bool(0.3) {
            c = &c + &(&a * &Scalar::from_i64(tower, small(rng, 2)));
        }
    }
    if rng.gen_bool(0.2) {
        c = c
            .div(&Scalar::from_i64(tower, rng.gen_range(2..=5)))
            .expect("nonzero");
    }
    c
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>) -> Scalar {
    loop {
        let c = scalar(rng, tower);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Polynomial of degree at most `deg`; constants from [`scalar`] at a few
/// positions and small integers elsewhere, to keep coefficient growth modest.
pub fn poly<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>, deg: usize) -> Poly {
    let coeffs = (0..=deg)
        .map(|_| {
            if rng.gen_bool(0.25) {
                scalar(rng, tower)
            } else {
                Scalar::from_i64(tower, small(rng, 4))
            }
        })
        .collect();
    Poly::from_coeffs(tower, coeffs)
}

/// Monic polynomial of exact degree `deg`.
pub fn monic<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>, deg: usize) -> Poly {
    let lower = poly(rng, tower, deg.saturating_sub(1));
    let lower = if deg == 0 { Poly::zero(tower) } else { lower };
    &Poly::monomial(Scalar::one(tower), deg) + &lower
}

/// Monic squarefree polynomial of exact degree `deg >= 1`.
pub fn squarefree<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>, deg: usize) -> Poly {
    loop {
        let g = monic(rng, tower, deg);
        if is_squarefree(&g) {
            return g;
        }
    }
}

/// Element of `K` with numerator degree `<= num_deg` and denominator degree
/// `<= den_deg`.
pub fn fraction<R: Rng>(
    rng: &mut R,
    tower: &Arc<TowerSpec>,
    num_deg: usize,
    den_deg: usize,
) -> Fraction {
    let nd = rng.gen_range(0..=num_deg);
    let num = poly(rng, tower, nd);
    let d = rng.gen_range(0..=den_deg);
    let den = monic(rng, tower, d);
    Fraction::new(num, den).expect("monic denominator")
}

pub fn nonzero_fraction<R: Rng>(
    rng: &mut R,
    tower: &Arc<TowerSpec>,
    num_deg: usize,
    den_deg: usize,
) -> Fraction {
    loop {
        let f = fraction(rng, tower, num_deg, den_deg);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn form<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>, deg: usize) -> AbsoluteForm {
    let dx = fraction(rng, tower, deg, deg);
    let dt = (0..tower.num_transcendentals())
        .map(|_| fraction(rng, tower, deg, deg))
        .collect();
    AbsoluteForm::new(dx, dt)
}

pub fn dual_unit<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>, deg: usize) -> DualUnit {
    let z0 = nonzero_fraction(rng, tower, deg, deg);
    let z1 = if rng.gen_bool(0.2) {
        Fraction::zero(tower)
    } else {
        fraction(rng, tower, deg, deg)
    };
    DualUnit::new(z0, z1).expect("nonzero")
}

pub fn dual_symbol<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>, deg: usize) -> DualSymbol {
    DualSymbol::new(dual_unit(rng, tower, deg), dual_unit(rng, tower, deg))
}

/// `h dg / (f_1^l_1 .. f_k^l_k)` with `k <= max_factors` monic factors and
/// exponents `l_i <= max_exponent`.
pub fn beta<R: Rng>(
    rng: &mut R,
    tower: &Arc<TowerSpec>,
    max_factors: usize,
    max_exponent: u32,
) -> AbsoluteForm {
    let h = nonzero_fraction(rng, tower, 2, 1);
    let g = nonzero_fraction(rng, tower, 2, 1);
    let mut den = Poly::one(tower);
    for _ in 0..rng.gen_range(1..=max_factors) {
        let fd = rng.gen_range(1..=2);
        let f = monic(rng, tower, fd);
        den = &den * &f.pow(rng.gen_range(1..=max_exponent));
    }
    let coeff = h.div(&Fraction::from(den)).expect("nonzero");
    d_abs(&g).scale(&coeff)
}

/// Up to `max_places` pairwise coprime finite places plus infinity, with
/// random polar data of order `<= max_order`. With `balanced`, the residue at
/// infinity is chosen so the total residue vanishes.
pub fn family<R: Rng>(
    rng: &mut R,
    tower: &Arc<TowerSpec>,
    max_places: usize,
    max_order: u32,
    balanced: bool,
) -> PrincipalParts {
    let m = tower.num_transcendentals();
    let mut places: Vec<Poly> = Vec::new();
    for _ in 0..rng.gen_range(0..=max_places) {
        let gd = rng.gen_range(1..=2);
        let g = squarefree(rng, tower, gd);
        if places.iter().all(|h| h.gcd(&g).is_one()) {
            places.push(g);
        }
    }
    let polar = |rng: &mut R, g: &Poly| -> Vec<PolarTerm> {
        let dg = g.degree().expect("nonconstant");
        (1..=rng.gen_range(0..=max_order))
            .map(|order| PolarTerm {
                order,
                numerator: poly(rng, tower, dg - 1).rem(g),
            })
            .collect()
    };
    let at_infinity = |rng: &mut R| -> Vec<PolarTerm> {
        (1..=rng.gen_range(0..=max_order))
            .map(|order| PolarTerm {
                order,
                numerator: Poly::constant(scalar(rng, tower)),
            })
            .collect()
    };
    let mut raw: Vec<PrincipalPartAt> = places
        .iter()
        .map(|g| PrincipalPartAt {
            tower: tower.clone(),
            place: Place::Finite(g.clone()),
            dx_polar: polar(rng, g),
            dt_polar: (0..m).map(|_| polar(rng, g)).collect(),
        })
        .collect();
    let mut inf = PrincipalPartAt {
        tower: tower.clone(),
        place: Place::Infinity,
        dx_polar: at_infinity(rng),
        dt_polar: (0..m).map(|_| at_infinity(rng)).collect(),
    };
    if balanced {
        let finite = raw
            .iter()
            .fold(Scalar::zero(tower), |acc, p| &acc + &res_h1x(p));
        inf.dx_polar.retain(|t| t.order != 1);
        inf.dx_polar.push(PolarTerm {
            order: 1,
            numerator: Poly::constant(-&finite),
        });
    }
    raw.push(inf);
    PrincipalParts::new(tower, raw).expect("generated family is valid")
}

/// Towers used by the property suites.
pub fn tower_q() -> Arc<TowerSpec> {
    TowerSpec::rational()
}

pub fn tower_qt() -> Arc<TowerSpec> {
    TowerSpec::transcendental(&["t"]).expect("valid")
}

/// `Q(t)(a)` with `a^2 = t`.
pub fn tower_sqrt_t() -> Arc<TowerSpec> {
    let mu = vec![-&BaseFrac::var(0), BaseFrac::zero(), BaseFrac::one()];
    TowerSpec::new(vec!["t".into()], Some(("a".into(), mu)), "x").expect("valid")
}
