//! Steinberg symbols over the dual numbers `K[eps]` and their tangents.

use std::fmt;

use crate::algebra::render::{join_terms, Term};
use crate::algebra::Fraction;
use crate::differentials::{d_abs, project_rprime, AbsoluteForm, RelativeForm};
use crate::error::{Error, Result};

/// A unit `z0 + eps*z1` of `K[eps]`, `eps^2 = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct DualUnit {
    z0: Fraction,
    z1: Fraction,
}

impl DualUnit {
    pub fn new(z0: Fraction, z1: Fraction) -> Result<Self> {
        if z0.is_zero() {
            return Err(Error::NonUnit);
        }
        Ok(Self { z0, z1 })
    }

    /// `z0 + 0 eps`.
    pub fn constant(z0: Fraction) -> Result<Self> {
        let z1 = Fraction::zero(z0.tower());
        Self::new(z0, z1)
    }

    /// `1 + eps*a`.
    pub fn one_plus(a: Fraction) -> Self {
        Self {
            z0: Fraction::one(a.tower()),
            z1: a,
        }
    }

    pub fn z0(&self) -> &Fraction {
        &self.z0
    }

    pub fn z1(&self) -> &Fraction {
        &self.z1
    }

    pub fn render(&self) -> String {
        let mut terms = self.z0.render_terms();
        if !self.z1.is_zero() {
            terms.push(Term::new(false, format!("eps*({})", self.z1.render())));
        }
        join_terms(&terms)
    }
}

/// The tangent map `z0 + z1 eps -> z1/z0`.
pub fn tan_unit(z: &DualUnit) -> Fraction {
    z.z1.div(&z.z0).expect("unit")
}

/// Product in `K[eps]^*`.
pub fn dual_mul(z: &DualUnit, w: &DualUnit) -> DualUnit {
    DualUnit {
        z0: &z.z0 * &w.z0,
        z1: &(&z.z0 * &w.z1) + &(&z.z1 * &w.z0),
    }
}

/// The symbol `{left, right}`.
#[derive(Clone, PartialEq, Eq)]
pub struct DualSymbol {
    pub left: DualUnit,
    pub right: DualUnit,
}

impl DualSymbol {
    pub fn new(left: DualUnit, right: DualUnit) -> Self {
        Self { left, right }
    }

    pub fn swap(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone())
    }

    pub fn render(&self) -> String {
        format!("{{{}, {}}}", self.left.render(), self.right.render())
    }
}

impl fmt::Display for DualUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for DualUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualUnit({})", self.render())
    }
}

impl fmt::Display for DualSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for DualSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualSymbol{}", self.render())
    }
}

/// `(f1/f0) dg0/g0 - (g1/g0) df0/f0`.
pub fn tan_symbol(s: &DualSymbol) -> AbsoluteForm {
    let a = tan_unit(&s.left);
    let b = tan_unit(&s.right);
    let dlog = |z: &Fraction| d_abs(z).scale(&z.inv().expect("unit"));
    let mut out = AbsoluteForm::zero(a.tower());
    if !a.is_zero() {
        out = &out + &dlog(&s.right.z0).scale(&a);
    }
    if !b.is_zero() {
        out = &out - &dlog(&s.left.z0).scale(&b);
    }
    out
}

/// The same formula with the relative differential.
pub fn tan_symbol_rel(s: &DualSymbol) -> RelativeForm {
    let a = tan_unit(&s.left);
    let b = tan_unit(&s.right);
    let dlog = |z: &Fraction| z.derivative().div(z).expect("unit");
    let coeff = &(&a * &dlog(&s.right.z0)) - &(&b * &dlog(&s.left.z0));
    RelativeForm::new(coeff)
}

/// Bimultiplicative expansion of `{f0 (1 + eps f1/f0), g0 (1 + eps g1/g0)}`:
/// `[{f0, g0}, {f0, 1 + eps g1/g0}, {1 + eps f1/f0, g0}, {1 + eps f1/f0, 1 + eps g1/g0}]`.
pub fn decompose_symbol(s: &DualSymbol) -> [DualSymbol; 4] {
    let f0 = DualUnit::constant(s.left.z0.clone()).expect("unit");
    let g0 = DualUnit::constant(s.right.z0.clone()).expect("unit");
    let a = DualUnit::one_plus(tan_unit(&s.left));
    let b = DualUnit::one_plus(tan_unit(&s.right));
    [
        DualSymbol::new(f0.clone(), g0.clone()),
        DualSymbol::new(f0, b.clone()),
        DualSymbol::new(a.clone(), g0),
        DualSymbol::new(a, b),
    ]
}

/// Rebuilds a symbol from its four factors `{a,c}, {a,d}, {b,c}, {b,d}` as
/// `{a*b, c*d}`. Returns `None` when the factors do not have that shape.
pub fn recompose_symbol(factors: &[DualSymbol; 4]) -> Option<DualSymbol> {
    let [ac, ad, bc, bd] = factors;
    let shaped =
        ac.left == ad.left && bc.left == bd.left && ac.right == bc.right && ad.right == bd.right;
    shaped.then(|| DualSymbol::new(dual_mul(&ac.left, &bc.left), dual_mul(&ac.right, &ad.right)))
}

/// `R' o tan`, for comparison against [`tan_symbol_rel`].
pub fn projected_tan(s: &DualSymbol) -> RelativeForm {
    project_rprime(&tan_symbol(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Scalar, TowerSpec};
    use std::sync::Arc;

    fn qt() -> Arc<TowerSpec> {
        TowerSpec::transcendental(&["t"]).unwrap()
    }

    fn unit(z0: Fraction, z1: Fraction) -> DualUnit {
        DualUnit::new(z0, z1).unwrap()
    }

    #[test]
    fn tangent_of_units() {
        let k = qt();
        let n = |v| Fraction::from_i64(&k, v);
        assert_eq!(
            tan_unit(&unit(n(3), n(5))),
            Fraction::from(Scalar::ratio(&k, 5, 3))
        );
        assert!(tan_unit(&unit(n(1), n(0))).is_zero());
        let x = Fraction::x(&k);
        assert_eq!(tan_unit(&unit(x.clone(), n(1))), x.inv().unwrap());
        assert_eq!(DualUnit::new(n(0), n(1)).unwrap_err(), Error::NonUnit);
    }

    #[test]
    fn dual_products() {
        let k = qt();
        let n = |v| Fraction::from_i64(&k, v);
        assert_eq!(
            dual_mul(&unit(n(2), n(1)), &unit(n(3), n(1))),
            unit(n(6), n(5))
        );
        let x = Fraction::x(&k);
        let p = dual_mul(&unit(x.clone(), n(1)), &unit(x.clone(), n(-1)));
        assert_eq!(p, unit(&x * &x, n(0)));
    }

    #[test]
    fn symbol_examples() {
        let k = qt();
        let x = Fraction::x(&k);
        let t: Fraction = Scalar::transcendental(&k, 0).into();
        let one = Fraction::one(&k);
        let zero = Fraction::zero(&k);
        // {x + eps, x} -> (1/x)(dx/x)
        let s = DualSymbol::new(unit(x.clone(), one.clone()), unit(x.clone(), zero.clone()));
        assert_eq!(tan_symbol(&s), AbsoluteForm::from_dx(x.pow(-2).unwrap()));
        // {1 + eps t, x} -> (t/x) dx on both sides
        let s = DualSymbol::new(DualUnit::one_plus(t.clone()), unit(x.clone(), zero.clone()));
        let expected = RelativeForm::new(t.div(&x).unwrap());
        assert_eq!(tan_symbol_rel(&s), expected);
        assert_eq!(projected_tan(&s), expected);
        // {1 + eps x, t}: relative image vanishes, absolute does not
        let s = DualSymbol::new(DualUnit::one_plus(x.clone()), unit(t.clone(), zero));
        assert!(tan_symbol_rel(&s).is_zero());
        let abs = tan_symbol(&s);
        assert_eq!(abs.dt_coeffs()[0], x.div(&t).unwrap());
        assert!(abs.dx_coeff().is_zero());
    }

    #[test]
    fn decomposition_of_x_plus_eps() {
        let k = qt();
        let x = Fraction::x(&k);
        let one = Fraction::one(&k);
        let zero = Fraction::zero(&k);
        let s = DualSymbol::new(unit(x.clone(), one.clone()), unit(x.clone(), zero.clone()));
        let parts = decompose_symbol(&s);
        let cx = unit(x.clone(), zero.clone());
        let a = DualUnit::one_plus(x.inv().unwrap());
        let b = DualUnit::one_plus(zero);
        assert_eq!(parts[0], DualSymbol::new(cx.clone(), cx.clone()));
        assert_eq!(parts[1], DualSymbol::new(cx.clone(), b.clone()));
        assert_eq!(parts[2], DualSymbol::new(a.clone(), cx));
        assert_eq!(parts[3], DualSymbol::new(a, b));
        assert_eq!(recompose_symbol(&parts).unwrap(), s);
        let sum = parts
            .iter()
            .fold(AbsoluteForm::zero(&k), |acc, p| &acc + &tan_symbol(p));
        assert_eq!(sum, tan_symbol(&s));
    }

    #[test]
    fn pure_eps_pair_has_zero_tangent() {
        let k = qt();
        let t: Fraction = Scalar::transcendental(&k, 0).into();
        let s = DualSymbol::new(DualUnit::one_plus(t), DualUnit::one_plus(Fraction::x(&k)));
        for p in decompose_symbol(&s) {
            assert!(tan_symbol(&p).is_zero());
        }
        assert_eq!(decompose_symbol(&s)[3], s);
    }

    #[test]
    fn rendering() {
        let k = qt();
        let x = Fraction::x(&k);
        let t: Fraction = Scalar::transcendental(&k, 0).into();
        let s = DualSymbol::new(
            unit(&x + &Fraction::one(&k), t.clone()),
            unit(t, Fraction::zero(&k)),
        );
        assert_eq!(s.render(), "{x + 1 + eps*(t), t}");
    }
}
