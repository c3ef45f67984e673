//! Univariate polynomials `k[x]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::base::BaseFrac;
use super::intpoly::{self, IntPoly};
use super::modular;
use super::render::{join_terms, power, times, Term};
use super::scalar::Scalar;
use super::tower::TowerSpec;

/// Dense polynomial in the function-field variable, ascending coefficients,
/// no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    tower: Arc<TowerSpec>,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Poly {
    pub fn zero(tower: &Arc<TowerSpec>) -> Self {
        Self {
            tower: tower.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(tower: &Arc<TowerSpec>) -> Self {
        Self::constant(Scalar::one(tower))
    }

    pub fn constant(c: Scalar) -> Self {
        let tower = c.tower().clone();
        Self::from_coeffs(&tower, vec![c])
    }

    pub fn from_i64(tower: &Arc<TowerSpec>, n: i64) -> Self {
        Self::constant(Scalar::from_i64(tower, n))
    }

    /// The variable `x`.
    pub fn x(tower: &Arc<TowerSpec>) -> Self {
        Self::monomial(Scalar::one(tower), 1)
    }

    /// `c * x^n`.
    pub fn monomial(c: Scalar, n: usize) -> Self {
        let tower = c.tower().clone();
        let mut coeffs = vec![Scalar::zero(&tower); n];
        coeffs.push(c);
        Self::from_coeffs(&tower, coeffs)
    }

    pub fn from_coeffs(tower: &Arc<TowerSpec>, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Self {
            tower: tower.clone(),
            coeffs,
        }
    }

    /// Polynomial with small integer coefficients, ascending.
    pub fn from_ints(tower: &Arc<TowerSpec>, coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            tower,
            coeffs.iter().map(|&c| Scalar::from_i64(tower, c)).collect(),
        )
    }

    pub fn tower(&self) -> &Arc<TowerSpec> {
        &self.tower
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.tower))
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.tower))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Self::from_coeffs(&self.tower, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(&self.lc().inv().expect("nonzero leading coefficient"))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            &self.tower,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::from_i64(&self.tower, i as i64))
                .collect(),
        )
    }

    /// Coefficient-wise derivation `d/dt_i`.
    pub fn derivation(&self, i: usize) -> Self {
        Self::from_coeffs(
            &self.tower,
            self.coeffs.iter().map(|c| c.derivation(i)).collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![Scalar::zero(&self.tower)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(
                c.div(&Scalar::from_i64(&self.tower, i as i64 + 1))
                    .expect("char 0"),
            );
        }
        Self::from_coeffs(&self.tower, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.tower);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(&self.tower), self.clone());
        }
        let inv = d.lc().inv().expect("nonzero");
        let monic = inv.is_one();
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        let mut q = vec![Scalar::zero(&self.tower); r.len() - dl + 1];
        while r.len() >= dl {
            let shift = r.len() - dl;
            let lead = r.last().unwrap();
            let f = if monic { lead.clone() } else { lead * &inv };
            if !f.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate().take(dl - 1) {
                    r[i + shift] = &r[i + shift] - &(&f * dc);
                }
            }
            q[shift] = f;
            r.pop();
            while r.last().is_some_and(Scalar::is_zero) {
                r.pop();
            }
        }
        (
            Poly::from_coeffs(&self.tower, q),
            Poly::from_coeffs(&self.tower, r),
        )
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Division known to be exact.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division {self:?} / {d:?}");
        q
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Poly::one(&self.tower);
        }
        if !self.tower.has_algebraic() {
            let g = intpoly::gcd(&self.to_integral(), &other.to_integral());
            return Poly::from_integral(&self.tower, &g).monic();
        }
        if modular::coprime(self, other) {
            return Poly::one(&self.tower);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.tower);
        }
        (&self.div_exact(&self.gcd(other)) * other).monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let tower = &self.tower;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(tower), Poly::zero(tower));
        let (mut t0, mut t1) = (Poly::zero(tower), Poly::one(tower));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            // keep remainders monic to limit coefficient growth
            let c = if r.is_zero() {
                Scalar::one(tower)
            } else {
                r.lc().inv().expect("nonzero")
            };
            r0 = std::mem::replace(&mut r1, r.scale(&c));
            s0 = std::mem::replace(&mut s1, s.scale(&c));
            t0 = std::mem::replace(&mut t1, t.scale(&c));
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = r0.lc().inv().expect("nonzero");
        (r0.scale(&c), s0.scale(&c), t0.scale(&c))
    }

    /// Inverse of `self` modulo `m`, if they are coprime.
    pub fn inverse_mod(&self, m: &Poly) -> Option<Poly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        if !g.is_one() {
            return None;
        }
        Some(s.rem(m))
    }

    /// Integral representative in `Z[t_1, .., t_m, x]` (x is variable `m`),
    /// equal to `self` up to a factor in `Q(t)`. Only for towers without
    /// an algebraic generator.
    fn to_integral(&self) -> IntPoly {
        let m = self.tower.num_transcendentals();
        let bases: Vec<BaseFrac> = self
            .coeffs
            .iter()
            .map(|c| c.as_base().expect("no algebraic generator"))
            .collect();
        let mut l = IntPoly::one();
        for b in &bases {
            if !b.den().is_one() {
                l = intpoly::lcm(&l, b.den());
            }
        }
        let mut out = IntPoly::zero();
        for (i, b) in bases.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let factor = l.div_exact(b.den()).expect("lcm");
            let c = &(b.num() * &factor) * &IntPoly::monomial(m, i as u32);
            out += &c;
        }
        out
    }

    fn from_integral(tower: &Arc<TowerSpec>, p: &IntPoly) -> Poly {
        let m = tower.num_transcendentals();
        Poly::from_coeffs(
            tower,
            p.coeffs_in(m)
                .into_iter()
                .map(|c| Scalar::from_base(tower, BaseFrac::from_poly(c)))
                .collect(),
        )
    }

    pub(crate) fn render_terms(&self) -> Vec<Term> {
        let x = self.tower.variable();
        let mut terms = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let ct = c.render_terms();
            if n == 0 {
                terms.extend(ct);
            } else {
                terms.push(times(&ct, &power(x, n)));
            }
        }
        terms
    }

    pub fn render(&self) -> String {
        join_terms(&self.render_terms())
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::from_coeffs(&self.tower, coeffs)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            tower: self.tower.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.tower);
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut out = vec![Scalar::zero(&self.tower); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(&self.tower, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_over_q() {
        let q = TowerSpec::rational();
        let a = Poly::from_ints(&q, &[0, 0, 1, 1]); // x^3 + x^2
        let b = Poly::from_ints(&q, &[0, 2, 2]); // 2x^2 + 2x
        assert_eq!(a.gcd(&b), Poly::from_ints(&q, &[0, 1, 1]));
    }

    #[test]
    fn gcd_over_q_t_strips_content() {
        let k = TowerSpec::transcendental(&["t"]).unwrap();
        let t = Scalar::transcendental(&k, 0);
        let x = Poly::x(&k);
        let xt = &x - &Poly::constant(t.clone());
        let a = &xt.scale(&t) * &Poly::from_ints(&k, &[1, 1]);
        let b = &xt * &Poly::from_ints(&k, &[-1, 1]);
        assert_eq!(a.gcd(&b), xt);
    }

    #[test]
    fn ext_gcd_bezout() {
        let q = TowerSpec::rational();
        let a = Poly::from_ints(&q, &[-2, 0, 1]);
        let b = Poly::from_ints(&q, &[1, 3]);
        let (g, s, t) = a.ext_gcd(&b);
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn render_poly() {
        let q = TowerSpec::rational();
        let p = Poly::from_ints(&q, &[-2, 0, 1]);
        assert_eq!(p.render(), "x^2 - 2");
        let r = p.scale(&Scalar::ratio(&q, -1, 2));
        assert_eq!(r.render(), "-1/(2)*x^2 + 1");
    }
}
