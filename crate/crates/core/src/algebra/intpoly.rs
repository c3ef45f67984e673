//! Sparse multivariate polynomials with integer coefficients.
//!
//! Variables are addressed by index; index `i` is the `i`-th transcendental
//! of the tower, and callers may use one extra index for the function-field
//! variable when they need integral arithmetic in `Z[t_1, .., t_m, x]`.
//! Monomials are exponent vectors with trailing zeros trimmed, ordered
//! lexicographically with variable 0 most significant.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::render::{join_terms, Term};

/// Exponent vector, trailing zeros trimmed.
pub type Monomial = Vec<u32>;

fn trim(m: &mut Monomial) {
    while m.last() == Some(&0) {
        m.pop();
    }
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    let mut out: Monomial = (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    trim(&mut out);
    out
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = Vec::with_capacity(a.len());
    for (i, &ai) in a.iter().enumerate() {
        let bi = b.get(i).copied().unwrap_or(0);
        if bi > ai {
            return None;
        }
        out.push(ai - bi);
    }
    trim(&mut out);
    Some(out)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.max_var().unwrap_or(0))
            .map(|i| format!("v{i}"))
            .collect();
        write!(f, "IntPoly({})", self.render(&names))
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// The polynomial `v_i`.
    pub fn var(i: usize) -> Self {
        Self::monomial(i, 1)
    }

    /// The polynomial `v_i^e`.
    pub fn monomial(i: usize, e: u32) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = e;
        trim(&mut m);
        let mut p = Self::zero();
        p.add_term(m, BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    /// The constant value if the polynomial has no variables.
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Vec::new()).cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Lex-largest term.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Highest variable index that occurs.
    pub fn max_var(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter(|m| !m.is_empty())
            .map(|m| m.len() - 1)
            .max()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.get(v).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Coefficients with respect to `v`, indexed by degree; `v` is removed.
    pub fn coeffs_in(&self, v: usize) -> Vec<IntPoly> {
        let mut out = vec![IntPoly::zero(); self.degree_in(v) as usize + 1];
        if self.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            let e = m.get(v).copied().unwrap_or(0);
            let mut rest = m.clone();
            if v < rest.len() {
                rest[v] = 0;
                trim(&mut rest);
            }
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Inverse of [`IntPoly::coeffs_in`]; the coefficients must not involve `v`.
    pub fn from_coeffs_in(v: usize, coeffs: &[IntPoly]) -> IntPoly {
        let mut out = IntPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut m = m.clone();
                if e > 0 {
                    if m.len() <= v {
                        m.resize(v + 1, 0);
                    }
                    m[v] += e as u32;
                }
                out.add_term(m, a.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    fn mul_term(&self, m: &[u32], c: &BigInt) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (mono_mul(n, m), a * c))
                .collect(),
        }
    }

    /// Gcd of the integer coefficients, nonnegative.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = int_gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn derivative(&self, v: usize) -> IntPoly {
        let mut out = IntPoly::zero();
        for (m, c) in &self.terms {
            let e = m.get(v).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            let mut n = m.clone();
            n[v] -= 1;
            trim(&mut n);
            out.add_term(n, c * BigInt::from(e));
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
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

    /// Exact division; `None` when `d` does not divide `self` in `Z[v]`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if let Some(c) = d.constant_value() {
            let mut out = IntPoly::zero();
            for (m, a) in &self.terms {
                let (q, r) = a.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                out.terms.insert(m.clone(), q);
            }
            return Some(out);
        }
        let (lm, lc) = d.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut r = self.clone();
        let mut q = IntPoly::zero();
        while let Some((rm, rc)) = r.leading() {
            let m = mono_div(rm, &lm)?;
            let (c, rem) = rc.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            r -= &d.mul_term(&m, &c);
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Normalizes the sign so that the lex-leading coefficient is positive.
    pub fn positive(self) -> IntPoly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self,
        }
    }

    pub fn leading_is_negative(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_negative())
    }

    pub fn eval_mod(&self, point: &[u64]) -> u64 {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = big_mod(c);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = mulm(t, powm(point[i], e as u64));
                }
            }
            acc = addm(acc, t);
        }
        acc
    }

    pub(crate) fn render_terms(&self, names: &[String]) -> Vec<Term> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mono: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            names[i].clone()
                        } else {
                            format!("{}^{}", names[i], e)
                        }
                    })
                    .collect();
                let abs = c.abs();
                let body = if mono.is_empty() {
                    abs.to_string()
                } else if abs.is_one() {
                    mono.join("*")
                } else {
                    format!("{}*{}", abs, mono.join("*"))
                };
                Term::new(c.is_negative(), body)
            })
            .collect()
    }

    /// Canonical rendering with the given variable names.
    pub fn render(&self, names: &[String]) -> String {
        join_terms(&self.render_terms(names))
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = IntPoly::zero();
        for (m, c) in &small.terms {
            for (n, d) in &large.terms {
                out.add_term(mono_mul(m, n), c * d);
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// gcd

/// Nonnegative integer gcd. Remainder steps shrink large operands much
/// faster than the binary algorithm, which walks bit by bit.
pub fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        if let (Some(x), Some(y)) = (a.to_u64(), b.to_u64()) {
            return BigInt::from(x.gcd(&y));
        }
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    a
}

/// Greatest common divisor in `Z[v_0, v_1, ..]`, with positive lex-leading
/// coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.clone().positive();
    }
    if b.is_zero() {
        return a.clone().positive();
    }
    if a.is_constant() || b.is_constant() {
        return IntPoly::constant(int_gcd(&a.int_content(), &b.int_content()));
    }
    if a == b {
        return a.clone().positive();
    }
    let v = a.max_var().max(b.max_var()).expect("nonconstant");
    if a.degree_in(v) == 0 {
        return gcd_with_all(a.clone(), &b.coeffs_in(v));
    }
    if b.degree_in(v) == 0 {
        return gcd_with_all(b.clone(), &a.coeffs_in(v));
    }
    let ca = a.coeffs_in(v);
    let cb = b.coeffs_in(v);
    let cont_a = content(&ca);
    let cont_b = content(&cb);
    let cont = gcd(&cont_a, &cont_b);
    let pa = divide_all(&ca, &cont_a);
    let pb = divide_all(&cb, &cont_b);
    if coprime_mod_p(&pa, &pb) {
        return cont;
    }
    let g = primitive_prs(pa, pb);
    (&cont * &IntPoly::from_coeffs_in(v, &g)).positive()
}

pub fn lcm(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let g = gcd(a, b);
    (&a.div_exact(&g).expect("gcd divides") * b).positive()
}

fn gcd_with_all(start: IntPoly, others: &[IntPoly]) -> IntPoly {
    let mut g = start;
    for c in others {
        if is_unit(&g) {
            break;
        }
        g = gcd(&g, c);
    }
    g.positive()
}

fn is_unit(p: &IntPoly) -> bool {
    p.constant_value().is_some_and(|c| c.abs().is_one())
}

/// Gcd of a list of polynomials (positive).
pub fn content(coeffs: &[IntPoly]) -> IntPoly {
    gcd_with_all(IntPoly::zero(), coeffs)
}

fn divide_all(coeffs: &[IntPoly], d: &IntPoly) -> Vec<IntPoly> {
    if d.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| c.div_exact(d).expect("content divides every coefficient"))
        .collect()
}

fn trim_dense(p: &mut Vec<IntPoly>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Pseudo-remainder of dense polynomials over `Z[other vars]`.
fn prem(a: &[IntPoly], b: &[IntPoly]) -> Vec<IntPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim_dense(&mut r);
    if r.len() < b.len() {
        return r;
    }
    let mut e = (r.len() - b.len() + 1) as u32;
    while r.len() >= b.len() && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &(&lr * bc);
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        if r.is_empty() {
            r.push(IntPoly::zero());
        }
        trim_dense(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn primitive_part(mut p: Vec<IntPoly>) -> Vec<IntPoly> {
    let c = content(&p);
    if !c.is_one() && !c.is_zero() {
        p = divide_all(&p, &c);
    }
    p
}

fn primitive_prs(mut p: Vec<IntPoly>, mut q: Vec<IntPoly>) -> Vec<IntPoly> {
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = prem(&p, &q);
        if r.iter().all(|c| c.is_zero()) {
            return primitive_part(q);
        }
        if r.len() == 1 {
            return vec![IntPoly::one()];
        }
        p = q;
        q = primitive_part(r);
    }
}

// ---------------------------------------------------------------------------
// arithmetic modulo the Mersenne prime 2^61 - 1, used for coprimality proofs

pub(crate) const P: u64 = (1u64 << 61) - 1;

fn big_mod(c: &BigInt) -> u64 {
    c.mod_floor(&BigInt::from(P))
        .to_u64()
        .expect("reduced below p")
}

pub(crate) fn addm(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub(crate) fn subm(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

pub(crate) fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powm(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, b);
        }
        b = mulm(b, b);
        e >>= 1;
    }
    acc
}

pub(crate) fn invm(a: u64) -> u64 {
    powm(a, P - 2)
}

fn degree_of_gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a <- a mod b
        let inv = invm(*b.last().unwrap());
        while a.len() >= b.len() {
            let f = mulm(*a.last().unwrap(), inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] = subm(a[i + shift], mulm(f, bc));
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Proves coprimality of two primitive polynomials over `Z[others][v]` by
/// specializing the other variables modulo p. Specializations that keep both
/// leading coefficients nonzero can only raise the gcd degree, so a constant
/// modular gcd is conclusive. `false` means "not proven", not "not coprime".
fn coprime_mod_p(a: &[IntPoly], b: &[IntPoly]) -> bool {
    let nvars = a
        .iter()
        .chain(b.iter())
        .filter_map(|c| c.max_var())
        .max()
        .map_or(0, |m| m + 1);
    for attempt in 0..3u64 {
        let point: Vec<u64> = (0..nvars as u64)
            .map(|i| {
                (0x9E37_79B9_7F4A_7C15u64
                    .wrapping_mul(i + 1)
                    .wrapping_add(0x2545_F491_4F6C_DD1D_u64.wrapping_mul(attempt + 1)))
                    % P
            })
            .collect();
        let ea: Vec<u64> = a.iter().map(|c| c.eval_mod(&point)).collect();
        let eb: Vec<u64> = b.iter().map(|c| c.eval_mod(&point)).collect();
        if *ea.last().unwrap() == 0 || *eb.last().unwrap() == 0 {
            continue;
        }
        return degree_of_gcd_mod_p(ea, eb) == 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> IntPoly {
        IntPoly::var(0)
    }
    fn s() -> IntPoly {
        IntPoly::var(1)
    }
    fn c(n: i64) -> IntPoly {
        IntPoly::from_i64(n)
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = &(&t() + &c(1)) * &(&s() - &t());
        let b = &t() + &c(1);
        assert_eq!(a.div_exact(&b).unwrap(), &s() - &t());
        assert!(a.div_exact(&(&t() + &c(2))).is_none());
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let common = &(&t() * &s()) + &c(3);
        let a = &common * &(&t() + &c(1));
        let b = &common * &(&(&s() * &s()) - &c(2));
        assert_eq!(gcd(&a, &b), common);
        let a6 = a.scale(&BigInt::from(6));
        let b4 = b.scale(&BigInt::from(-4));
        assert_eq!(gcd(&a6, &b4), common.scale(&BigInt::from(2)));
    }

    #[test]
    fn gcd_of_coprime_is_unit() {
        let a = &(&t() * &t()) - &c(2);
        let b = &(&t() * &s()) + &c(1);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_with_constant_uses_content() {
        let a = (&t() + &c(1)).scale(&BigInt::from(6));
        assert_eq!(gcd(&a, &c(4)), c(2));
    }

    #[test]
    fn rendering_is_descending_lex() {
        let names = vec!["t1".to_string(), "t2".to_string()];
        let p = &(&(&t() * &t()).scale(&BigInt::from(3)) - &s()) + &c(5);
        assert_eq!(p.render(&names), "3*t1^2 - t2 + 5");
        assert_eq!((-&t()).render(&names), "-t1");
        assert_eq!(IntPoly::zero().render(&names), "0");
    }
}
