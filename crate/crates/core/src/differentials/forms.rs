//! Absolute and relative Kähler differentials of `K = k(x)`.
//!
//! The absolute module is free on `dx, dt_1, .., dt_m`: the algebraic
//! generator's differential is always rewritten through its minimal
//! polynomial, so it never appears.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::algebra::render::{join_terms, times, Term};
use crate::algebra::{Fraction, Scalar, TowerSpec};

/// `a dx + sum_i b_i dt_i`.
#[derive(Clone, PartialEq, Eq)]
pub struct AbsoluteForm {
    dx: Fraction,
    dt: Vec<Fraction>,
}

/// `a dx`, an element of the relative module over `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct RelativeForm {
    dx: Fraction,
}

/// `sum_i c_i dt_i` with constant coefficients: the differentials of `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct ConstantForm {
    coeffs: Vec<Scalar>,
}

fn render_form(tower: &TowerSpec, dx: &Fraction, dt: &[Fraction]) -> String {
    let mut terms: Vec<Term> = Vec::new();
    let mut push = |c: &Fraction, name: &str| {
        if !c.is_zero() {
            terms.push(times(&c.render_terms(), name));
        }
    };
    push(dx, &format!("d{}", tower.variable()));
    for (i, c) in dt.iter().enumerate() {
        push(c, &tower.differential_name(i));
    }
    join_terms(&terms)
}

impl AbsoluteForm {
    pub fn zero(tower: &Arc<TowerSpec>) -> Self {
        Self {
            dx: Fraction::zero(tower),
            dt: vec![Fraction::zero(tower); tower.num_transcendentals()],
        }
    }

    /// Panics if the number of `dt` coefficients does not match the tower.
    pub fn new(dx: Fraction, dt: Vec<Fraction>) -> Self {
        assert_eq!(
            dt.len(),
            dx.tower().num_transcendentals(),
            "one dt coefficient per transcendental"
        );
        Self { dx, dt }
    }

    pub fn from_dx(dx: Fraction) -> Self {
        let tower = dx.tower().clone();
        Self {
            dx,
            dt: vec![Fraction::zero(&tower); tower.num_transcendentals()],
        }
    }

    /// The basis form `dt_i`.
    pub fn dt_basis(tower: &Arc<TowerSpec>, i: usize) -> Self {
        let mut w = Self::zero(tower);
        w.dt[i] = Fraction::one(tower);
        w
    }

    pub fn tower(&self) -> &Arc<TowerSpec> {
        self.dx.tower()
    }

    pub fn dx_coeff(&self) -> &Fraction {
        &self.dx
    }

    pub fn dt_coeffs(&self) -> &[Fraction] {
        &self.dt
    }

    /// All components, `dx` first.
    pub fn components(&self) -> impl Iterator<Item = &Fraction> {
        std::iter::once(&self.dx).chain(self.dt.iter())
    }

    pub fn is_zero(&self) -> bool {
        self.components().all(Fraction::is_zero)
    }

    pub fn scale(&self, f: &Fraction) -> Self {
        Self {
            dx: &self.dx * f,
            dt: self.dt.iter().map(|c| c * f).collect(),
        }
    }

    pub fn render(&self) -> String {
        render_form(self.tower(), &self.dx, &self.dt)
    }
}

impl RelativeForm {
    pub fn new(dx: Fraction) -> Self {
        Self { dx }
    }

    pub fn zero(tower: &Arc<TowerSpec>) -> Self {
        Self::new(Fraction::zero(tower))
    }

    pub fn tower(&self) -> &Arc<TowerSpec> {
        self.dx.tower()
    }

    pub fn dx_coeff(&self) -> &Fraction {
        &self.dx
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero()
    }

    pub fn scale(&self, f: &Fraction) -> Self {
        Self::new(&self.dx * f)
    }

    /// The same form viewed in the absolute module (zero `dt` parts).
    pub fn to_absolute(&self) -> AbsoluteForm {
        AbsoluteForm::from_dx(self.dx.clone())
    }

    pub fn render(&self) -> String {
        render_form(self.tower(), &self.dx, &[])
    }
}

impl ConstantForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn to_absolute(&self, tower: &Arc<TowerSpec>) -> AbsoluteForm {
        AbsoluteForm::new(
            Fraction::zero(tower),
            self.coeffs.iter().cloned().map(Fraction::from).collect(),
        )
    }
}

macro_rules! impl_display {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.render())
            }
        }
        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($t), self.render())
            }
        }
    )*};
}

impl_display!(AbsoluteForm, RelativeForm);

impl fmt::Debug for ConstantForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl Add<&AbsoluteForm> for &AbsoluteForm {
    type Output = AbsoluteForm;
    fn add(self, rhs: &AbsoluteForm) -> AbsoluteForm {
        AbsoluteForm {
            dx: &self.dx + &rhs.dx,
            dt: self.dt.iter().zip(&rhs.dt).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&AbsoluteForm> for &AbsoluteForm {
    type Output = AbsoluteForm;
    fn sub(self, rhs: &AbsoluteForm) -> AbsoluteForm {
        self + &(-rhs)
    }
}

impl Neg for &AbsoluteForm {
    type Output = AbsoluteForm;
    fn neg(self) -> AbsoluteForm {
        AbsoluteForm {
            dx: -&self.dx,
            dt: self.dt.iter().map(|c| -c).collect(),
        }
    }
}

impl Add<&RelativeForm> for &RelativeForm {
    type Output = RelativeForm;
    fn add(self, rhs: &RelativeForm) -> RelativeForm {
        RelativeForm::new(&self.dx + &rhs.dx)
    }
}

impl Sub<&RelativeForm> for &RelativeForm {
    type Output = RelativeForm;
    fn sub(self, rhs: &RelativeForm) -> RelativeForm {
        RelativeForm::new(&self.dx - &rhs.dx)
    }
}

impl Neg for &RelativeForm {
    type Output = RelativeForm;
    fn neg(self) -> RelativeForm {
        RelativeForm::new(-&self.dx)
    }
}

/// The universal derivation over `Q`.
pub fn d_abs(f: &Fraction) -> AbsoluteForm {
    let m = f.tower().num_transcendentals();
    AbsoluteForm {
        dx: f.derivative(),
        dt: (0..m).map(|i| f.derivation(i)).collect(),
    }
}

/// The derivation over `k`: only `x` is differentiated.
pub fn d_rel(f: &Fraction) -> RelativeForm {
    RelativeForm::new(f.derivative())
}

/// The map `R'`: forget the `dt` components.
pub fn project_rprime(w: &AbsoluteForm) -> RelativeForm {
    RelativeForm::new(w.dx.clone())
}

/// Splits a form into its constant-field part and its relative part, when
/// the `dt` coefficients are constants of `k`.
pub fn split_global_form(w: &AbsoluteForm) -> Option<(ConstantForm, RelativeForm)> {
    let coeffs =
        w.dt.iter()
            .map(Fraction::as_scalar)
            .collect::<Option<Vec<_>>>()?;
    Some((ConstantForm::new(coeffs), project_rprime(w)))
}
