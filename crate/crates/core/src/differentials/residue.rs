//! Residues and exactness of relative forms.

use super::forms::{AbsoluteForm, RelativeForm};
use super::place::{Place, PrincipalPartAt};
use crate::algebra::reduce::{polar_part, polar_residue};
use crate::algebra::{hermite_reduce, Fraction, Scalar};

/// Anything with a `dx` coefficient. Residues only see that coefficient:
/// for absolute forms the `dt` parts are projected away first.
pub trait DxPart {
    fn dx_part(&self) -> &Fraction;
}

impl DxPart for AbsoluteForm {
    fn dx_part(&self) -> &Fraction {
        self.dx_coeff()
    }
}

impl DxPart for RelativeForm {
    fn dx_part(&self) -> &Fraction {
        self.dx_coeff()
    }
}

/// Residue of `a dx` at a place.
///
/// At a finite place `g` the polar part at `g` is Hermite-reduced to a
/// simple pole `c/g`; the residue is the trace over `k[x]/(g)` of `c/g'`,
/// i.e. the sum of the pointwise residues over the roots of `g`.
pub fn residue_of(a: &Fraction, place: &Place) -> Scalar {
    match place {
        Place::Infinity => {
            let (_, r) = a.num().div_rem(a.den());
            match a.den().degree() {
                Some(d) if d >= 1 && r.degree() == Some(d - 1) => -&r.lc(),
                _ => Scalar::zero(a.tower()),
            }
        }
        Place::Finite(g) => {
            // only the polar part at g contributes
            polar_residue(&polar_part(a, g), g)
        }
    }
}

pub fn residue_at<W: DxPart>(w: &W, place: &Place) -> Scalar {
    residue_of(w.dx_part(), place)
}

/// Residue of a local class: its `dx` polar data only.
pub fn res_h1x(c: &PrincipalPartAt) -> Scalar {
    match &c.place {
        Place::Infinity => c
            .dx_polar
            .iter()
            .find(|t| t.order == 1)
            .map(|t| t.numerator.coeff(0))
            .unwrap_or_else(|| Scalar::zero(&c.tower)),
        Place::Finite(g) => polar_residue(&c.dx_polar, g),
    }
}

/// Outcome of the exactness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exactness {
    pub exact: bool,
    /// `h` with `d_rel(h) = eta`, present iff exact.
    pub witness: Option<Fraction>,
}

/// Decides whether `eta = dh` for some `h` in `K`. In characteristic zero
/// this happens iff Hermite reduction leaves no simple-pole part.
pub fn is_exact(eta: &RelativeForm) -> Exactness {
    let red = hermite_reduce(eta.dx_coeff());
    if !red.numerator.is_zero() {
        return Exactness {
            exact: false,
            witness: None,
        };
    }
    let witness = &red.rational + &Fraction::from(red.polynomial.integral());
    Exactness {
        exact: true,
        witness: Some(witness),
    }
}

/// Equality of classes modulo exact forms.
pub fn h1_class_equal(a: &RelativeForm, b: &RelativeForm) -> bool {
    is_exact(&(a - b)).exact
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BaseFrac, Poly, TowerSpec};
    use crate::differentials::forms::d_rel;
    use crate::differentials::place::principal_parts;
    use std::sync::Arc;

    fn frac(k: &Arc<TowerSpec>, num: &[i64], den: &[i64]) -> Fraction {
        Fraction::new(Poly::from_ints(k, num), Poly::from_ints(k, den)).unwrap()
    }

    fn rel(f: Fraction) -> RelativeForm {
        RelativeForm::new(f)
    }

    #[test]
    fn residue_examples() {
        let k = TowerSpec::rational();
        let x = Place::Finite(Poly::x(&k));
        let g = Place::Finite(Poly::from_ints(&k, &[-2, 0, 1]));
        let one = Scalar::one(&k);
        assert_eq!(residue_at(&rel(frac(&k, &[1], &[0, 1])), &x), one);
        assert_eq!(residue_at(&rel(frac(&k, &[0, 1], &[-2, 0, 1])), &g), one);
        assert_eq!(
            residue_at(&rel(frac(&k, &[1], &[0, 1])), &Place::Infinity),
            -&one
        );
        assert!(residue_at(&rel(frac(&k, &[1], &[-2, 0, 1])), &g).is_zero());
    }

    #[test]
    fn split_place_oracle() {
        // adjoin a = sqrt(2): residues of x/(x^2-2) at x -+ a are 1/2 each
        let mu = vec![BaseFrac::from_i64(-2), BaseFrac::zero(), BaseFrac::one()];
        let k = TowerSpec::new(vec![], Some(("a".into(), mu)), "x").unwrap();
        let a = Scalar::alpha(&k).unwrap();
        let w = rel(frac(&k, &[0, 1], &[-2, 0, 1]));
        let half = Scalar::ratio(&k, 1, 2);
        for s in [a.clone(), -&a] {
            let p = Place::Finite(Poly::from_coeffs(&k, vec![-&s, Scalar::one(&k)]));
            assert_eq!(residue_at(&w, &p), half);
        }
    }

    #[test]
    fn residue_with_higher_order_pole() {
        // (x + 1)/x^2 dx has residue 1 at 0 and -1 at infinity
        let k = TowerSpec::rational();
        let w = rel(frac(&k, &[1, 1], &[0, 0, 1]));
        assert!(residue_at(&w, &Place::Finite(Poly::x(&k))).is_one());
        assert_eq!(residue_at(&w, &Place::Infinity), Scalar::from_i64(&k, -1));
    }

    #[test]
    fn residue_at_coarser_place_sums_components() {
        let k = TowerSpec::rational();
        // 1/x + 2/(x - 1) at the place x^2 - x
        let w = rel(&frac(&k, &[1], &[0, 1]) + &frac(&k, &[2], &[-1, 1]));
        let p = Place::Finite(Poly::from_ints(&k, &[0, -1, 1]));
        assert_eq!(residue_at(&w, &p), Scalar::from_i64(&k, 3));
    }

    #[test]
    fn local_class_residues() {
        let k = TowerSpec::transcendental(&["t"]).unwrap();
        let x = Place::Finite(Poly::x(&k));
        let inv_x = frac(&k, &[1], &[0, 1]);
        let rho = principal_parts(&AbsoluteForm::from_dx(inv_x.clone()));
        assert!(res_h1x(rho.at(&x).unwrap()).is_one());
        let dt_only = principal_parts(&AbsoluteForm::new(Fraction::zero(&k), vec![inv_x]));
        assert!(res_h1x(dt_only.at(&x).unwrap()).is_zero());
        let sq = principal_parts(&AbsoluteForm::from_dx(frac(&k, &[1], &[0, 0, 1])));
        assert!(res_h1x(sq.at(&x).unwrap()).is_zero());
    }

    #[test]
    fn exactness_examples() {
        let k = TowerSpec::rational();
        let e = is_exact(&rel(frac(&k, &[1], &[0, 0, 1])));
        assert!(e.exact);
        assert_eq!(e.witness.unwrap(), frac(&k, &[-1], &[0, 1]));
        assert!(!is_exact(&rel(frac(&k, &[1], &[0, 1]))).exact);
        let e = is_exact(&rel(frac(&k, &[0, 0, 3], &[1])));
        assert_eq!(e.witness.unwrap(), frac(&k, &[0, 0, 0, 1], &[1]));
    }

    #[test]
    fn class_equality() {
        let k = TowerSpec::rational();
        let a = rel(frac(&k, &[1], &[0, 1]));
        let b = &a + &d_rel(&frac(&k, &[0, 0, 1], &[1]));
        assert!(h1_class_equal(&a, &b));
        assert!(!h1_class_equal(&a, &a.scale(&Fraction::from_i64(&k, 2))));
        assert!(h1_class_equal(
            &RelativeForm::zero(&k),
            &RelativeForm::zero(&k)
        ));
    }
}
