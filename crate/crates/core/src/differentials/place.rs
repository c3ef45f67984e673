//! Places of the projective line and principal parts of forms at them.

use std::fmt;
use std::sync::Arc;

use super::forms::AbsoluteForm;
use crate::algebra::reduce::{adic_expand, is_squarefree, polar_part, recombine_polar};
use crate::algebra::{coprime_base, squarefree_decompose, Fraction, PolarTerm, Poly, TowerSpec};
use crate::error::{Error, Result};

/// A closed point of `P^1`: the roots of a monic squarefree polynomial, or
/// the point at infinity (uniformizer `u = 1/x`).
#[derive(Clone, PartialEq, Eq)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    pub fn finite(g: Poly) -> Result<Self> {
        if g.is_constant() {
            return Err(Error::InvalidPlace(format!("constant polynomial {g}")));
        }
        if !g.is_monic() {
            return Err(Error::InvalidPlace(format!("{g} is not monic")));
        }
        if !is_squarefree(&g) {
            return Err(Error::InvalidPlace(format!("{g} is not squarefree")));
        }
        Ok(Place::Finite(g))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }

    pub fn polynomial(&self) -> Option<&Poly> {
        match self {
            Place::Finite(g) => Some(g),
            Place::Infinity => None,
        }
    }

    /// Canonical order: finite places by degree then rendering, infinity last.
    pub fn sort_key(&self) -> (bool, usize, String) {
        match self {
            Place::Finite(g) => (false, g.degree().unwrap_or(0), g.render()),
            Place::Infinity => (true, 0, String::new()),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Place::Finite(g) => format!("({})", g.render()),
            Place::Infinity => "infinity".to_string(),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Place{}", self.render())
    }
}

/// Polar data of a form at one place.
///
/// At a finite place `g` each term is `r / g^n` with `deg r < deg g`. At
/// infinity each term is a constant coefficient of `u^-n` in the chart
/// `u = 1/x`, the `dx` component already multiplied by `dx = -u^-2 du`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrincipalPartAt {
    pub tower: Arc<TowerSpec>,
    pub place: Place,
    pub dx_polar: Vec<PolarTerm>,
    pub dt_polar: Vec<Vec<PolarTerm>>,
}

impl PrincipalPartAt {
    pub fn is_zero(&self) -> bool {
        self.dx_polar.is_empty() && self.dt_polar.iter().all(Vec::is_empty)
    }

    pub fn components(&self) -> impl Iterator<Item = &Vec<PolarTerm>> {
        std::iter::once(&self.dx_polar).chain(self.dt_polar.iter())
    }
}

/// Polar data at infinity of `a dx`: `a = P + e_1/x + ..` contributes
/// `-P_{n-2}` at order `n >= 2` and `-e_1` at order 1.
fn infinity_dx(a: &Fraction) -> Vec<PolarTerm> {
    let (p, r) = a.num().div_rem(a.den());
    let mut out = Vec::new();
    let deg_d = a.den().degree().unwrap_or(0);
    if deg_d >= 1 && r.degree() == Some(deg_d - 1) {
        out.push(PolarTerm {
            order: 1,
            numerator: Poly::constant(-&r.lc()),
        });
    }
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out.push(PolarTerm {
                order: i as u32 + 2,
                numerator: Poly::constant(-c),
            });
        }
    }
    out
}

/// Polar data at infinity of `b dt_i`: the polynomial part's `x^n`, `n >= 1`.
fn infinity_dt(b: &Fraction) -> Vec<PolarTerm> {
    let p = b.num().div_rem(b.den()).0;
    p.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| PolarTerm {
            order: i as u32,
            numerator: Poly::constant(c.clone()),
        })
        .collect()
}

fn part_at(w: &AbsoluteForm, place: &Place) -> PrincipalPartAt {
    let (dx_polar, dt_polar) = match place {
        Place::Finite(g) => (
            polar_part(w.dx_coeff(), g),
            w.dt_coeffs().iter().map(|b| polar_part(b, g)).collect(),
        ),
        Place::Infinity => (
            infinity_dx(w.dx_coeff()),
            w.dt_coeffs().iter().map(infinity_dt).collect(),
        ),
    };
    PrincipalPartAt {
        tower: w.tower().clone(),
        place: place.clone(),
        dx_polar,
        dt_polar,
    }
}

/// A finitely supported family of local classes at pairwise coprime places,
/// sorted canonically, with zero classes pruned.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrincipalParts {
    tower: Arc<TowerSpec>,
    parts: Vec<PrincipalPartAt>,
}

impl PrincipalParts {
    pub fn empty(tower: &Arc<TowerSpec>) -> Self {
        Self {
            tower: tower.clone(),
            parts: Vec::new(),
        }
    }

    /// Validates and normalizes raw local data: numerators are re-expanded
    /// in the canonical `g`-adic form, repeated orders are added together,
    /// and zero classes are dropped.
    pub fn new(tower: &Arc<TowerSpec>, raw: Vec<PrincipalPartAt>) -> Result<Self> {
        let m = tower.num_transcendentals();
        let mut parts: Vec<PrincipalPartAt> = Vec::new();
        for p in raw {
            if *p.tower != **tower {
                return Err(Error::TowerMismatch);
            }
            if p.dt_polar.len() != m {
                return Err(Error::InvalidPolarData(format!(
                    "expected {m} dt components at {}",
                    p.place
                )));
            }
            if parts.iter().any(|q| q.place == p.place) {
                return Err(Error::InvalidPolarData(format!(
                    "place {} repeated",
                    p.place
                )));
            }
            let normalized = normalize_part(p)?;
            if let Place::Finite(g) = &normalized.place {
                for q in &parts {
                    if let Place::Finite(h) = &q.place {
                        if !g.gcd(h).is_one() {
                            return Err(Error::OverlappingPlaces(g.render(), h.render()));
                        }
                    }
                }
            }
            parts.push(normalized);
        }
        parts.retain(|p| !p.is_zero());
        parts.sort_by_cached_key(|p| p.place.sort_key());
        Ok(Self {
            tower: tower.clone(),
            parts,
        })
    }

    pub fn tower(&self) -> &Arc<TowerSpec> {
        &self.tower
    }

    pub fn parts(&self) -> &[PrincipalPartAt] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn at(&self, place: &Place) -> Option<&PrincipalPartAt> {
        self.parts.iter().find(|p| &p.place == place)
    }

    pub fn places(&self) -> Vec<Place> {
        self.parts.iter().map(|p| p.place.clone()).collect()
    }

    /// Sum over finite places of the polar fractions of one component
    /// (`0` is `dx`, `i + 1` is `dt_i`).
    pub fn finite_sum(&self, component: usize) -> Fraction {
        self.parts
            .iter()
            .filter_map(|p| {
                let g = p.place.polynomial()?;
                let terms = p.components().nth(component).expect("component");
                Some(recombine_polar(terms, g))
            })
            .fold(Fraction::zero(&self.tower), |acc, f| &acc + &f)
    }

    fn infinity_terms(&self, component: usize) -> &[PolarTerm] {
        self.at(&Place::Infinity)
            .map(|p| p.components().nth(component).expect("component").as_slice())
            .unwrap_or(&[])
    }

    /// Equality of the classes in the direct sum, independent of how the
    /// finite support is grouped into places.
    pub fn equivalent(&self, other: &Self) -> bool {
        let n = self.tower.num_transcendentals() + 1;
        (0..n).all(|c| {
            self.finite_sum(c) == other.finite_sum(c)
                && self.infinity_terms(c) == other.infinity_terms(c)
        })
    }
}

fn normalize_part(p: PrincipalPartAt) -> Result<PrincipalPartAt> {
    let normalize = |terms: Vec<PolarTerm>| -> Result<Vec<PolarTerm>> {
        if terms.iter().any(|t| t.order == 0) {
            return Err(Error::InvalidPolarData(
                "pole order must be positive".into(),
            ));
        }
        match &p.place {
            Place::Finite(g) => {
                let n = terms.iter().map(|t| t.order).max().unwrap_or(0);
                let dg = g.degree().expect("nonconstant");
                let mut numerator = Poly::zero(g.tower());
                for t in &terms {
                    if t.numerator
                        .degree()
                        .is_some_and(|d| d >= t.order as usize * dg)
                    {
                        return Err(Error::InvalidPolarData(format!(
                            "numerator {} is not reduced modulo {}^{}",
                            t.numerator, g, t.order
                        )));
                    }
                    numerator = &numerator + &(&t.numerator * &g.pow(n - t.order));
                }
                Ok(adic_expand(&numerator, g, n))
            }
            Place::Infinity => {
                let mut out: Vec<PolarTerm> = Vec::new();
                for t in terms {
                    if !t.numerator.is_constant() {
                        return Err(Error::InvalidPolarData(format!(
                            "coefficient {} at infinity must be constant",
                            t.numerator
                        )));
                    }
                    match out.iter_mut().find(|s| s.order == t.order) {
                        Some(s) => s.numerator = &s.numerator + &t.numerator,
                        None => out.push(t),
                    }
                }
                out.retain(|t| !t.numerator.is_zero());
                out.sort_by_key(|t| t.order);
                Ok(out)
            }
        }
    };
    if let Place::Finite(g) = &p.place {
        Place::finite(g.clone())?;
    }
    Ok(PrincipalPartAt {
        tower: p.tower.clone(),
        dx_polar: normalize(p.dx_polar.clone())?,
        dt_polar: p
            .dt_polar
            .iter()
            .map(|c| normalize(c.clone()))
            .collect::<Result<_>>()?,
        place: p.place,
    })
}

/// Canonical finite support of a form: the coprime refinement of the
/// squarefree factors of every component denominator.
pub fn support(w: &AbsoluteForm) -> Vec<Place> {
    let mut factors = Vec::new();
    for c in w.components() {
        if !c.den().is_constant() {
            let sqf = squarefree_decompose(c.den()).expect("nonzero");
            factors.extend(sqf.factors.into_iter().map(|(d, _)| d));
        }
    }
    coprime_base(&factors)
        .into_iter()
        .map(Place::Finite)
        .collect()
}

/// The map `rho`: polar data of every component at every place, with
/// regular places omitted.
pub fn principal_parts(w: &AbsoluteForm) -> PrincipalParts {
    let mut places = support(w);
    places.push(Place::Infinity);
    principal_parts_on(w, &places)
}

/// Polar data at the given places only (assumed pairwise coprime).
pub fn principal_parts_on(w: &AbsoluteForm, places: &[Place]) -> PrincipalParts {
    let mut parts: Vec<PrincipalPartAt> = places
        .iter()
        .map(|p| part_at(w, p))
        .filter(|p| !p.is_zero())
        .collect();
    parts.sort_by_cached_key(|p| p.place.sort_key());
    PrincipalParts {
        tower: w.tower().clone(),
        parts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;
    use crate::differentials::forms::d_abs;

    fn poly(k: &Arc<TowerSpec>, c: &[i64]) -> Poly {
        Poly::from_ints(k, c)
    }

    fn term(order: u32, c: Scalar) -> PolarTerm {
        PolarTerm {
            order,
            numerator: Poly::constant(c),
        }
    }

    #[test]
    fn one_over_x() {
        let k = TowerSpec::rational();
        let w = AbsoluteForm::from_dx(Fraction::x(&k).inv().unwrap());
        let rho = principal_parts(&w);
        assert_eq!(
            rho.places(),
            vec![Place::Finite(Poly::x(&k)), Place::Infinity]
        );
        assert_eq!(rho.parts()[0].dx_polar, vec![term(1, Scalar::one(&k))]);
        assert_eq!(
            rho.parts()[1].dx_polar,
            vec![term(1, Scalar::from_i64(&k, -1))]
        );
    }

    #[test]
    fn x_dt_has_simple_pole_at_infinity() {
        let k = TowerSpec::transcendental(&["t"]).unwrap();
        let w = AbsoluteForm::dt_basis(&k, 0).scale(&Fraction::x(&k));
        let rho = principal_parts(&w);
        assert_eq!(rho.places(), vec![Place::Infinity]);
        assert_eq!(rho.parts()[0].dt_polar[0], vec![term(1, Scalar::one(&k))]);
        assert!(rho.parts()[0].dx_polar.is_empty());
    }

    #[test]
    fn polynomial_differential_is_regular_at_finite_places() {
        let k = TowerSpec::rational();
        let x = Fraction::x(&k);
        let rho = principal_parts(&d_abs(&(&x * &x)));
        // 2x dx = -2 u^-3 du
        assert_eq!(rho.places(), vec![Place::Infinity]);
        assert_eq!(
            rho.parts()[0].dx_polar,
            vec![term(3, Scalar::from_i64(&k, -2))]
        );
    }

    #[test]
    fn global_sections_have_no_poles() {
        let k = TowerSpec::transcendental(&["t", "s"]).unwrap();
        let w = &AbsoluteForm::dt_basis(&k, 0) + &AbsoluteForm::dt_basis(&k, 1);
        assert!(principal_parts(&w).is_empty());
        // 1/x^2 dx = -du: regular at infinity, but not at 0
        let v = AbsoluteForm::from_dx(Fraction::x(&k).pow(-2).unwrap());
        assert_eq!(
            principal_parts(&v).places(),
            vec![Place::Finite(Poly::x(&k))]
        );
    }

    #[test]
    fn support_refines_shared_factors() {
        let k = TowerSpec::transcendental(&["t"]).unwrap();
        // dx/(x^2 - x) + dt/x^2 has support {x, x - 1}
        let a = Fraction::new(Poly::one(&k), poly(&k, &[0, -1, 1])).unwrap();
        let b = Fraction::x(&k).pow(-2).unwrap();
        let w = AbsoluteForm::new(a, vec![b]);
        let places = support(&w);
        assert_eq!(
            places,
            vec![
                Place::Finite(poly(&k, &[0, 1])),
                Place::Finite(poly(&k, &[-1, 1]))
            ]
        );
    }

    #[test]
    fn family_normalization_and_equivalence() {
        let k = TowerSpec::rational();
        let g = poly(&k, &[0, -1, 1]);
        // x/(x^2 - x)^1 written as one place vs 1/(x - 1) at its own place
        let coarse = PrincipalParts::new(
            &k,
            vec![PrincipalPartAt {
                tower: k.clone(),
                place: Place::Finite(g.clone()),
                dx_polar: vec![PolarTerm {
                    order: 1,
                    numerator: poly(&k, &[0, 1]),
                }],
                dt_polar: vec![],
            }],
        )
        .unwrap();
        let fine = PrincipalParts::new(
            &k,
            vec![PrincipalPartAt {
                tower: k.clone(),
                place: Place::Finite(poly(&k, &[-1, 1])),
                dx_polar: vec![term(1, Scalar::one(&k))],
                dt_polar: vec![],
            }],
        )
        .unwrap();
        assert!(coarse.equivalent(&fine));
        assert_ne!(coarse, fine);
        let bad = PrincipalParts::new(
            &k,
            vec![PrincipalPartAt {
                tower: k.clone(),
                place: Place::Finite(g),
                dx_polar: vec![PolarTerm {
                    order: 1,
                    numerator: poly(&k, &[0, 0, 1]),
                }],
                dt_polar: vec![],
            }],
        );
        assert!(matches!(bad, Err(Error::InvalidPolarData(_))));
    }

    #[test]
    fn overlapping_places_rejected() {
        let k = TowerSpec::rational();
        let mk = |g: Poly| PrincipalPartAt {
            tower: k.clone(),
            place: Place::Finite(g),
            dx_polar: vec![term(1, Scalar::one(&k))],
            dt_polar: vec![],
        };
        let r = PrincipalParts::new(&k, vec![mk(poly(&k, &[0, 1])), mk(poly(&k, &[0, -1, 1]))]);
        assert!(matches!(r, Err(Error::OverlappingPlaces(_, _))));
        assert!(Place::finite(poly(&k, &[0, 0, 1])).is_err());
        assert!(Place::finite(poly(&k, &[0, 2])).is_err());
    }

    #[test]
    fn rendering() {
        let k = TowerSpec::rational();
        assert_eq!(Place::Finite(poly(&k, &[-2, 0, 1])).render(), "(x^2 - 2)");
        assert_eq!(Place::Infinity.render(), "infinity");
    }
}
