//! Reduction algorithms over `k[x]`: squarefree decomposition, Hermite
//! reduction, partial fractions, local polar parts and traces.
//!
//! Nothing here factors polynomials. Clusters of conjugate points are
//! handled as monic squarefree polynomials throughout.

use super::fraction::Fraction;
use super::poly::Poly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `p = unit * prod d_i^{m_i}` with pairwise coprime monic squarefree `d_i`,
/// listed by increasing multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Scalar,
    pub factors: Vec<(Poly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (d, m)| {
                &acc * &d.pow(*m)
            })
    }

    /// Product of the distinct factors.
    pub fn radical(&self) -> Poly {
        let tower = self.unit.tower();
        self.factors
            .iter()
            .fold(Poly::one(tower), |acc, (d, _)| &acc * d)
    }
}

/// Yun's algorithm (characteristic zero).
pub fn squarefree_decompose(p: &Poly) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = p.lc();
    let a = p.monic();
    let mut factors = Vec::new();
    if a.is_constant() {
        return Ok(SquarefreeDecomposition { unit, factors });
    }
    let da = a.derivative();
    let c = a.gcd(&da);
    let mut w = a.div_exact(&c);
    let y = da.div_exact(&c);
    let mut z = &y - &w.derivative();
    let mut i = 1;
    while !w.is_constant() {
        let g = w.gcd(&z);
        if !g.is_constant() {
            factors.push((g.clone(), i));
        }
        w = w.div_exact(&g);
        let y = z.div_exact(&g);
        z = &y - &w.derivative();
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}

pub fn is_squarefree(p: &Poly) -> bool {
    !p.is_zero() && p.gcd(&p.derivative()).is_constant()
}

/// `f = d/dx(rational) + numerator/denominator + polynomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteReduction {
    pub rational: Fraction,
    /// Simple-pole numerator, `deg < deg denominator`.
    pub numerator: Poly,
    /// Monic squarefree; `1` when there is no simple-pole part.
    pub denominator: Poly,
    pub polynomial: Poly,
}

impl HermiteReduction {
    pub fn simple_part(&self) -> Fraction {
        Fraction::new(self.numerator.clone(), self.denominator.clone()).expect("nonzero")
    }
}

/// Solves `s*a + t*b = c` with `deg s < deg b`, for coprime `a`, `b`.
fn solve_bezout(a: &Poly, b: &Poly, c: &Poly) -> (Poly, Poly) {
    let (g, s0, _) = a.ext_gcd(b);
    debug_assert!(g.is_one(), "solve_bezout needs coprime inputs");
    let s = (&s0 * c).rem(b);
    let t = (c - &(&s * a)).div_exact(b);
    (s, t)
}

/// Hermite reduction (quadratic variant over the squarefree decomposition).
pub fn hermite_reduce(f: &Fraction) -> HermiteReduction {
    let tower = f.tower().clone();
    let (polynomial, mut a) = f.num().div_rem(f.den());
    let mut rational = Fraction::zero(&tower);
    if a.is_zero() {
        return HermiteReduction {
            rational,
            numerator: a,
            denominator: Poly::one(&tower),
            polynomial,
        };
    }
    let sqf = squarefree_decompose(f.den()).expect("nonzero denominator");
    let mut d = f.den().clone();
    for (v, i) in &sqf.factors {
        if *i < 2 {
            continue;
        }
        let dv = v.derivative();
        let u = d.div_exact(&v.pow(*i));
        let uv = &u * &dv;
        for j in (1..*i).rev() {
            let jj = Scalar::from_i64(&tower, j as i64);
            let target = a.scale(&(-&jj).inv().expect("nonzero"));
            let (b, c) = solve_bezout(&uv, v, &target);
            rational = &rational + &Fraction::new(b.clone(), v.pow(j)).expect("nonzero");
            a = &c.scale(&(-&jj)) - &(&u * &b.derivative());
        }
        d = &u * v;
    }
    let rest = Fraction::new(a, d).expect("nonzero");
    let (extra, numerator) = rest.num().div_rem(rest.den());
    let denominator = if numerator.is_zero() {
        Poly::one(&tower)
    } else {
        rest.den().clone()
    };
    HermiteReduction {
        rational,
        numerator,
        denominator,
        polynomial: &polynomial + &extra,
    }
}

/// One term `numerator / place^order` of a partial fraction expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarTerm {
    pub order: u32,
    pub numerator: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractionTerm {
    pub place: Poly,
    pub order: u32,
    pub numerator: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial: Poly,
    pub terms: Vec<PartialFractionTerm>,
}

impl PartialFractions {
    pub fn recombine(&self) -> Fraction {
        self.terms
            .iter()
            .fold(Fraction::from(self.polynomial.clone()), |acc, t| {
                &acc + &Fraction::new(t.numerator.clone(), t.place.pow(t.order)).expect("nonzero")
            })
    }
}

/// Expands `a / g^n` (with `deg a < n deg g`) in powers of `g`.
pub fn adic_expand(a: &Poly, g: &Poly, n: u32) -> Vec<PolarTerm> {
    let mut out = Vec::new();
    let mut cur = a.clone();
    for k in 0..n {
        let (q, r) = cur.div_rem(g);
        if !r.is_zero() {
            out.push(PolarTerm {
                order: n - k,
                numerator: r,
            });
        }
        cur = q;
    }
    debug_assert!(cur.is_zero(), "numerator degree too large for expansion");
    out.reverse();
    out
}

/// Partial fractions of `f` along a squarefree decomposition of its denominator.
pub fn partial_fractions(
    f: &Fraction,
    decomposition: &SquarefreeDecomposition,
) -> Result<PartialFractions> {
    let factors = &decomposition.factors;
    for (i, (d, _)) in factors.iter().enumerate() {
        if d.is_constant() || !d.is_monic() || !is_squarefree(d) {
            return Err(Error::MismatchedDecomposition);
        }
        if factors[..i].iter().any(|(e, _)| !e.gcd(d).is_one()) {
            return Err(Error::MismatchedDecomposition);
        }
    }
    let mut product = Poly::one(f.tower());
    for (d, m) in factors {
        product = &product * &d.pow(*m);
    }
    if product != *f.den() {
        return Err(Error::MismatchedDecomposition);
    }
    let (polynomial, mut numerator) = f.num().div_rem(f.den());
    let mut rest = f.den().clone();
    let mut terms = Vec::new();
    for (d, m) in factors {
        let block = d.pow(*m);
        let other = rest.div_exact(&block);
        // numerator/(block*other) = a/block + b/other
        let a = if other.is_one() {
            numerator.clone()
        } else {
            (&numerator * &other.inverse_mod(&block).expect("coprime")).rem(&block)
        };
        let b = (&numerator - &(&a * &other)).div_exact(&block);
        terms.extend(
            adic_expand(&a, d, *m)
                .into_iter()
                .map(|t| PartialFractionTerm {
                    place: d.clone(),
                    order: t.order,
                    numerator: t.numerator,
                }),
        );
        numerator = b;
        rest = other;
    }
    Ok(PartialFractions { polynomial, terms })
}

/// Inverse of `b` modulo `g^n` for `b` coprime to `g`: an inverse modulo
/// `g` lifted by Newton iteration. Only remainders by monic powers of `g`
/// are taken, which avoids the coefficient growth of a Euclidean
/// remainder sequence against `g^n`.
pub fn inverse_mod_power(b: &Poly, g: &Poly, n: u32) -> Option<Poly> {
    let mut s = b.rem(g).inverse_mod(g)?;
    let two = Poly::from_i64(g.tower(), 2);
    let mut e = 1;
    while e < n {
        e = (2 * e).min(n);
        let m = g.pow(e);
        let bs = (&b.rem(&m) * &s).rem(&m);
        s = (&s * &(&two - &bs)).rem(&m);
    }
    Some(s)
}

/// Polar part of `f` at the points of the monic squarefree `g`, as terms
/// `r / g^n` with `deg r < deg g`, by increasing order.
pub fn polar_part(f: &Fraction, g: &Poly) -> Vec<PolarTerm> {
    let mut rest = f.den().clone();
    let mut n = 0u32;
    loop {
        let h = rest.gcd(g);
        if h.is_constant() {
            break;
        }
        rest = rest.div_exact(&h);
        n += 1;
    }
    if n == 0 {
        return Vec::new();
    }
    // f = a / (primary * rest) with primary | g^n, so
    // f = (a * rest^-1 * g^n / primary mod g^n) / g^n + regular at g
    let gn = g.pow(n);
    let primary = f.den().div_exact(&rest);
    let cofactor = gn.div_exact(&primary);
    let inv = inverse_mod_power(&rest, g, n).expect("coprime");
    let lifted = (&(&f.num().rem(&gn) * &cofactor).rem(&gn) * &inv).rem(&gn);
    adic_expand(&lifted, g, n)
}

/// Residue (summed over the roots of `g`) of `sum r_j / g^j dx`, given in
/// `g`-adic form. Hermite reduction is run on the expansion itself: a term
/// `r / g^j`, `j >= 2`, equals `d(s / g^(j-1))` plus a term of order `j - 1`
/// once `s = -r / ((j - 1) g')` mod `g`, so every step works modulo `g`.
pub fn polar_residue(terms: &[PolarTerm], g: &Poly) -> Scalar {
    let tower = g.tower();
    let n = terms.iter().map(|t| t.order).max().unwrap_or(0) as usize;
    if n == 0 {
        return Scalar::zero(tower);
    }
    let mut r = vec![Poly::zero(tower); n + 1];
    for t in terms {
        r[t.order as usize] = &r[t.order as usize] + &t.numerator;
    }
    let dg = g.derivative();
    let dg_inv = dg.inverse_mod(g).expect("squarefree place");
    for j in (2..=n).rev() {
        let rj = r[j].rem(g);
        if rj.is_zero() {
            continue;
        }
        let jm1 = Scalar::from_i64(tower, j as i64 - 1);
        let s = (&rj * &dg_inv)
            .rem(g)
            .scale(&(-&jm1).inv().expect("nonzero"));
        let lowered = (&rj + &(&s * &dg).scale(&jm1)).div_exact(g);
        r[j - 1] = &r[j - 1] + &(&lowered - &s.derivative());
    }
    trace_mod(g, &(&r[1] * &dg_inv).rem(g))
}

/// `sum r / g^n`.
pub fn recombine_polar(terms: &[PolarTerm], g: &Poly) -> Fraction {
    terms.iter().fold(Fraction::zero(g.tower()), |acc, t| {
        &acc + &Fraction::new(t.numerator.clone(), g.pow(t.order)).expect("nonzero")
    })
}

/// Trace of multiplication by `r` on `k[x]/(g)`, i.e. the sum of `r` over
/// the roots of `g` in a splitting field.
pub fn trace_mod(g: &Poly, r: &Poly) -> Scalar {
    let n = g.degree().expect("nonzero modulus");
    let x = Poly::x(g.tower());
    let mut cur = r.rem(g);
    let mut acc = Scalar::zero(g.tower());
    for i in 0..n {
        acc = &acc + &cur.coeff(i);
        if i + 1 < n {
            cur = (&cur * &x).rem(g);
        }
    }
    acc
}

/// Pairwise coprime refinement of monic squarefree polynomials: the
/// nonconstant parts of every intersection pattern of their root sets,
/// sorted canonically by degree then rendering.
pub fn coprime_base(polys: &[Poly]) -> Vec<Poly> {
    let mut base: Vec<Poly> = Vec::new();
    for p in polys {
        let mut rest = p.monic();
        let mut next = Vec::with_capacity(base.len() + 1);
        for q in base {
            if rest.is_constant() {
                next.push(q);
                continue;
            }
            let g = rest.gcd(&q);
            if g.is_constant() {
                next.push(q);
                continue;
            }
            let q1 = q.div_exact(&g);
            if !q1.is_constant() {
                next.push(q1);
            }
            rest = rest.div_exact(&g);
            next.push(g);
        }
        if !rest.is_constant() {
            next.push(rest);
        }
        base = next;
    }
    base.sort_by_cached_key(|p| (p.degree(), p.render()));
    base
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tower::TowerSpec;
    use std::sync::Arc;

    fn q() -> Arc<TowerSpec> {
        TowerSpec::rational()
    }

    #[test]
    fn squarefree_examples() {
        let k = q();
        let p = Poly::from_ints(&k, &[0, 0, 1, 1]);
        let s = squarefree_decompose(&p).unwrap();
        assert_eq!(
            s.factors,
            vec![
                (Poly::from_ints(&k, &[1, 1]), 1),
                (Poly::from_ints(&k, &[0, 1]), 2)
            ]
        );
        let p = Poly::from_ints(&k, &[-2, 0, 1]);
        assert_eq!(
            squarefree_decompose(&p).unwrap().factors,
            vec![(p.clone(), 1)]
        );
        assert_eq!(
            squarefree_decompose(&Poly::zero(&k)).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn squarefree_over_q_t() {
        let k = TowerSpec::transcendental(&["t"]).unwrap();
        let t = Scalar::transcendental(&k, 0);
        let x = Poly::x(&k);
        let g = &(&x * &x) - &Poly::constant(t);
        let p = &g.pow(2) * &x;
        let s = squarefree_decompose(&p).unwrap();
        assert_eq!(s.factors, vec![(x, 1), (g, 2)]);
        assert_eq!(s.reconstruct(), p);
    }

    #[test]
    fn hermite_examples() {
        let k = q();
        let f = Fraction::new(Poly::one(&k), Poly::from_ints(&k, &[0, 0, 1])).unwrap();
        let h = hermite_reduce(&f);
        assert_eq!(
            h.rational,
            Fraction::new(Poly::from_i64(&k, -1), Poly::x(&k)).unwrap()
        );
        assert!(h.numerator.is_zero() && h.denominator.is_one() && h.polynomial.is_zero());

        let f = Fraction::new(Poly::one(&k), Poly::x(&k)).unwrap();
        let h = hermite_reduce(&f);
        assert!(h.rational.is_zero());
        assert_eq!(h.numerator, Poly::one(&k));
        assert_eq!(h.denominator, Poly::x(&k));

        // (x^3+1)/x^2 = x + 1/x^2
        let f = Fraction::new(
            Poly::from_ints(&k, &[1, 0, 0, 1]),
            Poly::from_ints(&k, &[0, 0, 1]),
        )
        .unwrap();
        let h = hermite_reduce(&f);
        assert_eq!(
            h.rational,
            Fraction::new(Poly::from_i64(&k, -1), Poly::x(&k)).unwrap()
        );
        assert!(h.numerator.is_zero());
        assert_eq!(h.polynomial, Poly::x(&k));
    }

    #[test]
    fn partial_fraction_examples() {
        let k = q();
        // 1/(x^2 (x+1)) = -1/x + 1/x^2 + 1/(x+1)
        let f = Fraction::new(Poly::one(&k), Poly::from_ints(&k, &[0, 0, 1, 1])).unwrap();
        let sqf = squarefree_decompose(f.den()).unwrap();
        let pf = partial_fractions(&f, &sqf).unwrap();
        let x = Poly::x(&k);
        let xp1 = Poly::from_ints(&k, &[1, 1]);
        assert_eq!(
            pf.terms,
            vec![
                PartialFractionTerm {
                    place: xp1,
                    order: 1,
                    numerator: Poly::one(&k)
                },
                PartialFractionTerm {
                    place: x.clone(),
                    order: 1,
                    numerator: Poly::from_i64(&k, -1)
                },
                PartialFractionTerm {
                    place: x,
                    order: 2,
                    numerator: Poly::one(&k)
                },
            ]
        );
        assert_eq!(pf.recombine(), f);

        // x^3/(x^2-2) = x + 2x/(x^2-2)
        let g = Poly::from_ints(&k, &[-2, 0, 1]);
        let f = Fraction::new(Poly::from_ints(&k, &[0, 0, 0, 1]), g.clone()).unwrap();
        let pf = partial_fractions(&f, &squarefree_decompose(&g).unwrap()).unwrap();
        assert_eq!(pf.polynomial, Poly::x(&k));
        assert_eq!(pf.terms.len(), 1);
        assert_eq!(pf.terms[0].numerator, Poly::from_ints(&k, &[0, 2]));
    }

    #[test]
    fn mismatched_decomposition() {
        let k = q();
        let f = Fraction::new(Poly::one(&k), Poly::from_ints(&k, &[0, 0, 1])).unwrap();
        let wrong = squarefree_decompose(&Poly::x(&k)).unwrap();
        assert_eq!(
            partial_fractions(&f, &wrong).unwrap_err(),
            Error::MismatchedDecomposition
        );
    }

    #[test]
    fn trace_examples() {
        let k = q();
        let g = Poly::from_ints(&k, &[-2, 0, 1]);
        assert!(trace_mod(&g, &Poly::x(&k)).is_zero());
        assert_eq!(
            trace_mod(&g, &Poly::from_i64(&k, 2)),
            Scalar::from_i64(&k, 4)
        );
        // Newton: p2 = e1^2 - 2 e2 = 0 - 2(-1) = 2 for x^3 - x - 1
        let g = Poly::from_ints(&k, &[-1, -1, 0, 1]);
        assert_eq!(
            trace_mod(&g, &Poly::from_ints(&k, &[0, 0, 1])),
            Scalar::from_i64(&k, 2)
        );
    }

    #[test]
    fn coprime_base_splits_overlaps() {
        let k = q();
        let a = Poly::from_ints(&k, &[0, -1, 1]); // x(x-1)
        let b = Poly::from_ints(&k, &[0, 1, 1]); // x(x+1)
        let base = coprime_base(&[a, b]);
        assert_eq!(
            base,
            vec![
                Poly::x(&k),
                Poly::from_ints(&k, &[1, 1]),
                Poly::from_ints(&k, &[-1, 1])
            ]
        );
    }

    #[test]
    fn polar_part_at_subplace() {
        let k = q();
        // 1/(x^2 (x-1)) at x: 1/x^2 ... = -1/x^2 - 1/x
        let f = Fraction::new(Poly::one(&k), Poly::from_ints(&k, &[0, 0, -1, 1])).unwrap();
        let at_x = polar_part(&f, &Poly::x(&k));
        assert_eq!(
            at_x,
            vec![
                PolarTerm {
                    order: 1,
                    numerator: Poly::from_i64(&k, -1)
                },
                PolarTerm {
                    order: 2,
                    numerator: Poly::from_i64(&k, -1)
                },
            ]
        );
        let g = Poly::from_ints(&k, &[-1, 1]);
        assert_eq!(
            polar_part(&f, &g),
            vec![PolarTerm {
                order: 1,
                numerator: Poly::one(&k)
            }]
        );
        assert!(polar_part(&f, &Poly::from_ints(&k, &[1, 1])).is_empty());
    }
}
