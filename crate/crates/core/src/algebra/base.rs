//! The purely transcendental base field `Q(t_1, .., t_m)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::intpoly::{gcd, IntPoly};
use super::render::{over, Term};

/// Reduced fraction of integer polynomials.
///
/// Normal form: `gcd(num, den) = 1` in `Z[t]` (integer content included) and
/// the lex-leading coefficient of `den` is positive. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BaseFrac {
    num: IntPoly,
    den: IntPoly,
}

impl fmt::Debug for BaseFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

impl BaseFrac {
    pub fn zero() -> Self {
        Self {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_poly(IntPoly::from_i64(n))
    }

    pub fn from_int(n: BigInt) -> Self {
        Self::from_poly(IntPoly::constant(n))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn ratio(a: i64, b: i64) -> Self {
        Self::new(IntPoly::from_i64(a), IntPoly::from_i64(b))
    }

    pub fn var(i: usize) -> Self {
        Self::from_poly(IntPoly::var(i))
    }

    /// Builds and normalizes `num/den`. Panics on a zero denominator.
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        if den.leading_is_negative() {
            num = -num;
            den = -den;
        }
        Self { num, den }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Highest transcendental index occurring in numerator or denominator.
    pub fn max_var(&self) -> Option<usize> {
        self.num.max_var().max(self.den.max_var())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading_is_negative() {
            num = -num;
            den = -den;
        }
        Some(Self { num, den })
    }

    /// Partial derivative with respect to `t_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let dn = self.num.derivative(i);
        if self.den.is_one() {
            return Self::from_poly(dn);
        }
        let dd = self.den.derivative(i);
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::new(num, &self.den * &self.den)
    }

    pub(crate) fn render_terms(&self, names: &[String]) -> Vec<Term> {
        let num = self.num.render_terms(names);
        if self.den.is_one() {
            num
        } else {
            vec![over(&num, &self.den.render(names))]
        }
    }
}

impl Add<&BaseFrac> for &BaseFrac {
    type Output = BaseFrac;
    fn add(self, rhs: &BaseFrac) -> BaseFrac {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return BaseFrac::from_poly(num);
            }
            return BaseFrac::new(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        BaseFrac::new(num, &self.den * &rhs.den)
    }
}

impl Sub<&BaseFrac> for &BaseFrac {
    type Output = BaseFrac;
    fn sub(self, rhs: &BaseFrac) -> BaseFrac {
        self + &(-rhs)
    }
}

impl Neg for &BaseFrac {
    type Output = BaseFrac;
    fn neg(self) -> BaseFrac {
        BaseFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul<&BaseFrac> for &BaseFrac {
    type Output = BaseFrac;
    fn mul(self, rhs: &BaseFrac) -> BaseFrac {
        if self.is_zero() || rhs.is_zero() {
            return BaseFrac::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return BaseFrac::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel; inputs are already reduced
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = &n1 * &n2;
        let mut den = &d1 * &d2;
        if den.leading_is_negative() {
            num = -num;
            den = -den;
        }
        BaseFrac { num, den }
    }
}
