//! Coprimality proofs over an algebraic tower by reduction to
//! `F_p[alpha]/(mu)`, with the transcendentals specialized to residues.
//!
//! If the images of `a` and `b` keep unit leading coefficients and their
//! Euclidean sequence ends in a unit constant, the image of the resultant is
//! a unit, so the resultant itself is nonzero.

use super::base::BaseFrac;
use super::intpoly::{addm, invm, mulm, subm, P};
use super::poly::Poly;

type Elt = Vec<u64>;

fn trim(v: &mut Elt) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn base_mod(c: &BaseFrac, point: &[u64]) -> Option<u64> {
    let d = c.den().eval_mod(point);
    (d != 0).then(|| mulm(c.num().eval_mod(point), invm(d)))
}

/// Arithmetic in `F_p[alpha]/(mu)` for a monic `mu`.
struct Ring {
    mu: Elt,
}

impl Ring {
    fn reduce(&self, mut a: Elt) -> Elt {
        let d = self.mu.len() - 1;
        while a.len() > d {
            let f = a.pop().unwrap();
            let shift = a.len() - d;
            for (i, &m) in self.mu[..d].iter().enumerate() {
                a[i + shift] = subm(a[i + shift], mulm(f, m));
            }
        }
        trim(&mut a);
        a
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Elt {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = addm(out[i + j], mulm(x, y));
            }
        }
        self.reduce(out)
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> Elt {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = subm(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
            );
        }
        trim(&mut out);
        out
    }

    /// Inverse via the extended Euclidean algorithm over `F_p`.
    fn inv(&self, a: &[u64]) -> Option<Elt> {
        let (mut r0, mut r1) = (self.mu.clone(), a.to_vec());
        let (mut s0, mut s1): (Elt, Elt) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let inv_lc = invm(*r1.last().unwrap());
            let mut q = vec![0; r0.len().saturating_sub(r1.len()) + 1];
            while r0.len() >= r1.len() && !r0.is_empty() {
                let shift = r0.len() - r1.len();
                let f = mulm(*r0.last().unwrap(), inv_lc);
                q[shift] = f;
                for (i, &c) in r1.iter().enumerate() {
                    r0[i + shift] = subm(r0[i + shift], mulm(f, c));
                }
                trim(&mut r0);
            }
            trim(&mut q);
            let qs = poly_mul(&q, &s1);
            let s = self.sub(&s0, &qs);
            s0 = std::mem::replace(&mut s1, s);
            std::mem::swap(&mut r0, &mut r1);
        }
        // r0 is the gcd with mu; a unit iff it is a nonzero constant
        if r0.len() != 1 {
            return None;
        }
        let c = invm(r0[0]);
        Some(self.reduce(s0.iter().map(|&v| mulm(v, c)).collect()))
    }
}

fn poly_mul(a: &[u64], b: &[u64]) -> Elt {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y));
        }
    }
    out
}

fn image(p: &Poly, point: &[u64]) -> Option<Vec<Elt>> {
    p.coeffs()
        .iter()
        .map(|c| {
            let mut e = c
                .coeffs()
                .iter()
                .map(|b| base_mod(b, point))
                .collect::<Option<Elt>>()?;
            trim(&mut e);
            Some(e)
        })
        .collect()
}

fn coprime_at(ring: &Ring, mut a: Vec<Elt>, mut b: Vec<Elt>) -> bool {
    while b.last().is_some_and(|c| c.is_empty()) {
        b.pop();
    }
    loop {
        if b.is_empty() {
            return false;
        }
        let Some(inv) = ring.inv(b.last().unwrap()) else {
            return false;
        };
        if b.len() == 1 {
            return true;
        }
        while a.len() >= b.len() {
            let f = ring.mul(a.last().unwrap(), &inv);
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[i + shift] = ring.sub(&a[i + shift], &ring.mul(&f, c));
            }
            a.pop();
            while a.last().is_some_and(|c| c.is_empty()) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// `true` proves `gcd(a, b) = 1`; `false` is inconclusive.
pub(crate) fn coprime(a: &Poly, b: &Poly) -> bool {
    let tower = a.tower();
    let Some(mu) = tower.minimal_polynomial() else {
        return false;
    };
    let m = tower.num_transcendentals() as u64;
    for attempt in 0..3u64 {
        let point: Vec<u64> = (0..m)
            .map(|i| {
                (0x9E37_79B9_7F4A_7C15u64
                    .wrapping_mul(i + 3)
                    .wrapping_add(0x2545_F491_4F6C_DD1D_u64.wrapping_mul(attempt + 1)))
                    % P
            })
            .collect();
        let Some(mu) = mu
            .iter()
            .map(|c| base_mod(c, &point))
            .collect::<Option<Elt>>()
        else {
            continue;
        };
        let ring = Ring { mu };
        let (Some(ia), Some(ib)) = (image(a, &point), image(b, &point)) else {
            continue;
        };
        // degrees must survive the reduction
        if ia.last().is_none_or(|c| c.is_empty()) || ib.last().is_none_or(|c| c.is_empty()) {
            continue;
        }
        let (ia, ib) = if ia.len() >= ib.len() {
            (ia, ib)
        } else {
            (ib, ia)
        };
        if ring.inv(ia.last().unwrap()).is_none() {
            continue;
        }
        if coprime_at(&ring, ia, ib) {
            return true;
        }
    }
    false
}
