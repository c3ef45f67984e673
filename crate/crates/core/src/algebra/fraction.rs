//! The rational function field `K = k(x)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::poly::Poly;
use super::render::{join_terms, over, Term};
use super::scalar::Scalar;
use super::tower::TowerSpec;
use crate::error::{Error, Result};

/// Reduced quotient of polynomials: coprime, monic denominator, zero is `0/1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Fraction {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction({})", self.render())
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<Poly> for Fraction {
    fn from(p: Poly) -> Self {
        let tower = p.tower().clone();
        Fraction {
            num: p,
            den: Poly::one(&tower),
        }
    }
}

impl From<Scalar> for Fraction {
    fn from(c: Scalar) -> Self {
        Poly::constant(c).into()
    }
}

impl Fraction {
    pub fn zero(tower: &Arc<TowerSpec>) -> Self {
        Poly::zero(tower).into()
    }

    pub fn one(tower: &Arc<TowerSpec>) -> Self {
        Poly::one(tower).into()
    }

    pub fn from_i64(tower: &Arc<TowerSpec>, n: i64) -> Self {
        Poly::from_i64(tower, n).into()
    }

    pub fn x(tower: &Arc<TowerSpec>) -> Self {
        Poly::x(tower).into()
    }

    /// `num/den` in normal form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero(num.tower()));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Assumes `gcd(num, den) = 1`; only normalizes the leading coefficient.
    fn from_coprime(num: Poly, den: Poly) -> Self {
        if den.is_monic() {
            return Self { num, den };
        }
        let c = den.lc().inv().expect("nonzero denominator");
        Self {
            num: num.scale(&c),
            den: den.scale(&c),
        }
    }

    pub fn tower(&self) -> &Arc<TowerSpec> {
        self.num.tower()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
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

    /// The value as a constant of `k`, if it is one.
    pub fn as_scalar(&self) -> Option<Scalar> {
        (self.den.is_one() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.tower());
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        Ok(Self {
            num: base.num.pow(n),
            den: base.den.pow(n),
        })
    }

    /// `d/dx`. With `h` the radical of the denominator `d` and `g = d/h`,
    /// `(n/d)' = (n' h - n d'/g) / (d h)`, already in lowest terms: every
    /// pole order goes up by exactly one.
    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return self.num.derivative().into();
        }
        let dd = self.den.derivative();
        let g = self.den.gcd(&dd);
        let h = self.den.div_exact(&g);
        let num = &(&self.num.derivative() * &h) - &(&self.num * &dd.div_exact(&g));
        Self::from_coprime(num, &self.den * &h)
    }

    /// `d/dt_i`, acting on coefficients. Same shape as [`Self::derivative`]
    /// (`g` divides the coefficient derivative of `d` too), except that
    /// poles whose location does not move with `t_i` may cancel. Those are
    /// the roots of `z = gcd(h, dh/dt_i)`, and only small gcds against `z`
    /// are taken to remove them.
    pub fn derivation(&self, i: usize) -> Self {
        if self.den.is_one() {
            return self.num.derivation(i).into();
        }
        let g = self.den.gcd(&self.den.derivative());
        let h = self.den.div_exact(&g);
        let dd = self.den.derivation(i);
        let mut num = &(&self.num.derivation(i) * &h) - &(&self.num * &dd.div_exact(&g));
        let mut den = &self.den * &h;
        if num.is_zero() {
            return Self::zero(self.tower());
        }
        let z = h.gcd(&h.derivation(i));
        if !z.is_one() {
            // such a pole can even become a zero, so stay within den
            loop {
                let live = den.rem(&z).gcd(&z);
                let c = num.rem(&live).gcd(&live);
                if c.is_one() {
                    break;
                }
                num = num.div_exact(&c);
                den = den.div_exact(&c);
            }
        }
        Self::from_coprime(num, den)
    }

    pub(crate) fn render_terms(&self) -> Vec<Term> {
        let num = self.num.render_terms();
        if self.den.is_one() {
            num
        } else {
            vec![over(&num, &self.den.render())]
        }
    }

    pub fn render(&self) -> String {
        join_terms(&self.render_terms())
    }
}

impl Add<&Fraction> for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Fraction::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        // Henrici: only the common part of the denominators can cancel
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return Fraction::from_coprime(num, &self.den * &rhs.den);
        }
        let b1 = self.den.div_exact(&g);
        let d1 = rhs.den.div_exact(&g);
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return Fraction::zero(self.tower());
        }
        let h = num.gcd(&g);
        let den = &(&b1 * &d1) * &g.div_exact(&h);
        Fraction::from_coprime(num.div_exact(&h), den)
    }
}

impl Sub<&Fraction> for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self + &(-rhs)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul<&Fraction> for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        if self.is_zero() || rhs.is_zero() {
            return Fraction::zero(self.tower());
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        Fraction::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<TowerSpec> {
        TowerSpec::rational()
    }

    fn frac(num: &[i64], den: &[i64]) -> Fraction {
        let k = q();
        Fraction::new(Poly::from_ints(&k, num), Poly::from_ints(&k, den)).unwrap()
    }

    #[test]
    fn product_cancels_to_one() {
        let a = frac(&[0, 1], &[-1, 1]);
        let b = frac(&[-1, 1], &[0, 1]);
        assert!((&a * &b).is_one());
    }

    #[test]
    fn sum_of_reciprocals() {
        let s = &frac(&[1], &[0, 1]) + &frac(&[1], &[1, 1]);
        assert_eq!(s, frac(&[1, 2], &[0, 1, 1]));
        assert_eq!(s.render(), "(2*x + 1)/(x^2 + x)");
    }

    #[test]
    fn inverse() {
        let f = frac(&[-2, 0, 1], &[0, 1]);
        assert_eq!(f.inv().unwrap(), frac(&[0, 1], &[-2, 0, 1]));
        assert_eq!(
            Fraction::zero(&q()).inv().unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn denominator_made_monic() {
        let f = frac(&[1], &[0, 2]);
        assert!(f.den().is_monic());
        assert_eq!(f.render(), "1/(2)/(x)");
    }

    #[test]
    fn henrici_addition_cancels_shared_factor() {
        // 1/(x(x-1)) - 1/(x(x+1)) = 2/(x(x-1)(x+1)) has a shared x
        let a = frac(&[1], &[0, -1, 1]);
        let b = frac(&[1], &[0, 1, 1]);
        let d = &a - &b;
        assert_eq!(d, frac(&[2], &[0, -1, 0, 1]));
        // (1/x + 1) - 1/x
        let c = &frac(&[1, 1], &[0, 1]) - &frac(&[1], &[0, 1]);
        assert!(c.is_one());
    }

    #[test]
    fn derivation_where_a_fixed_pole_becomes_a_zero() {
        let k = TowerSpec::transcendental(&["t"]).unwrap();
        let t = Scalar::transcendental(&k, 0);
        let one = Scalar::one(&k);
        let zero = Scalar::zero(&k);
        // (1 + t x^2)/x  ->  x
        let num = Poly::from_coeffs(&k, vec![one, zero, t]);
        let f = Fraction::new(num, Poly::x(&k)).unwrap();
        assert_eq!(f.derivation(0), Fraction::x(&k));
        // (x + 1)/(x^2 (x - t))
        let den = &(&Poly::x(&k) * &Poly::x(&k))
            * &Poly::from_coeffs(&k, vec![-&Scalar::transcendental(&k, 0), Scalar::one(&k)]);
        let f = Fraction::new(Poly::from_ints(&k, &[1, 1]), den.clone()).unwrap();
        let naive = Fraction::new(
            &(&f.num.derivation(0) * &den) - &(&f.num * &den.derivation(0)),
            &den * &den,
        )
        .unwrap();
        assert_eq!(f.derivation(0), naive);
    }
}
