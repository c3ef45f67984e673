//! Elements of the constant field `k`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use super::base::BaseFrac;
use super::render::{join_terms, power, times, Term};
use super::tower::{apoly, TowerSpec};
use crate::error::{Error, Result};

/// An element of `k`, stored as a polynomial in the algebraic generator of
/// degree below `[k : Q(t)]` with reduced `Q(t)` coefficients.
#[derive(Clone)]
pub struct Scalar {
    tower: Arc<TowerSpec>,
    coeffs: Vec<BaseFrac>,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        debug_assert!(same_tower(&self.tower, &other.tower));
        self.coeffs == other.coeffs
    }
}

impl Eq for Scalar {}

pub(crate) fn same_tower(a: &Arc<TowerSpec>, b: &Arc<TowerSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.render())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Scalar {
    pub fn zero(tower: &Arc<TowerSpec>) -> Self {
        Self {
            tower: tower.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(tower: &Arc<TowerSpec>) -> Self {
        Self::from_base(tower, BaseFrac::one())
    }

    pub fn from_i64(tower: &Arc<TowerSpec>, n: i64) -> Self {
        Self::from_base(tower, BaseFrac::from_i64(n))
    }

    pub fn from_int(tower: &Arc<TowerSpec>, n: BigInt) -> Self {
        Self::from_base(tower, BaseFrac::from_int(n))
    }

    pub fn ratio(tower: &Arc<TowerSpec>, a: i64, b: i64) -> Self {
        Self::from_base(tower, BaseFrac::ratio(a, b))
    }

    pub fn from_base(tower: &Arc<TowerSpec>, c: BaseFrac) -> Self {
        let coeffs = if c.is_zero() { Vec::new() } else { vec![c] };
        Self {
            tower: tower.clone(),
            coeffs,
        }
    }

    /// The transcendental `t_i`.
    pub fn transcendental(tower: &Arc<TowerSpec>, i: usize) -> Self {
        assert!(i < tower.num_transcendentals(), "no transcendental {i}");
        Self::from_base(tower, BaseFrac::var(i))
    }

    /// The algebraic generator, when the tower has one.
    pub fn alpha(tower: &Arc<TowerSpec>) -> Option<Self> {
        tower.minimal_polynomial()?;
        Some(Self {
            tower: tower.clone(),
            coeffs: vec![BaseFrac::zero(), BaseFrac::one()],
        })
    }

    /// Builds from alpha-coefficients, reducing modulo the minimal polynomial.
    pub fn from_coeffs(tower: &Arc<TowerSpec>, mut coeffs: Vec<BaseFrac>) -> Self {
        apoly::trim(&mut coeffs);
        if let Some(mu) = tower.minimal_polynomial() {
            coeffs = apoly::rem(&coeffs, mu);
        } else {
            assert!(
                coeffs.len() <= 1,
                "alpha-coefficients without an algebraic generator"
            );
        }
        Self {
            tower: tower.clone(),
            coeffs,
        }
    }

    pub fn tower(&self) -> &Arc<TowerSpec> {
        &self.tower
    }

    pub fn coeffs(&self) -> &[BaseFrac] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value as an element of `Q(t)` when it does not involve alpha.
    pub fn as_base(&self) -> Option<BaseFrac> {
        match self.coeffs.len() {
            0 => Some(BaseFrac::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let coeffs = match self.tower.minimal_polynomial() {
            None => vec![self.coeffs[0].inv().ok_or(Error::DivisionByZero)?],
            Some(mu) => apoly::inverse_mod(&self.coeffs, mu).ok_or(Error::DivisionByZero)?,
        };
        Ok(Self {
            tower: self.tower.clone(),
            coeffs,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.tower);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The derivation `d/dt_i` of `k`, with alpha differentiated implicitly
    /// through its minimal polynomial.
    pub fn derivation(&self, i: usize) -> Self {
        let direct: Vec<BaseFrac> = self.coeffs.iter().map(|c| c.derivative(i)).collect();
        let mut out = direct;
        if let Some(dalpha) = self.tower.alpha_partial(i) {
            let chain = apoly::mul(&apoly::derivative(&self.coeffs), dalpha);
            out = apoly::add(&out, &chain);
        }
        Self::from_coeffs(&self.tower, out)
    }

    pub(crate) fn render_terms(&self) -> Vec<Term> {
        let names = self.tower.transcendentals();
        let alpha = self.tower.algebraic_name();
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let ct = c.render_terms(names);
            if j == 0 {
                terms.extend(ct);
            } else {
                terms.push(times(&ct, &power(alpha.expect("alpha present"), j)));
            }
        }
        terms
    }

    /// Canonical text form.
    pub fn render(&self) -> String {
        join_terms(&self.render_terms())
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            tower: self.tower.clone(),
            coeffs: apoly::add(&self.coeffs, &rhs.coeffs),
        }
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            tower: self.tower.clone(),
            coeffs: apoly::neg(&self.coeffs),
        }
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero(&self.tower);
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        Scalar::from_coeffs(&self.tower, apoly::mul(&self.coeffs, &rhs.coeffs))
    }
}
