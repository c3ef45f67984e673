//! The constant field `k = Q(t_1, .., t_m)(alpha)`.

use std::sync::Arc;

use super::base::BaseFrac;
use crate::error::{Error, Result};

const RESERVED: &[&str] = &["eps", "d", "infinity"];

/// Validated description of a constant field tower and the function-field
/// variable. Shared by every value built over it.
#[derive(Debug, PartialEq, Eq)]
pub struct TowerSpec {
    transcendentals: Vec<String>,
    algebraic: Option<Algebraic>,
    variable: String,
}

#[derive(Debug, PartialEq, Eq)]
struct Algebraic {
    name: String,
    /// Ascending coefficients, monic, degree >= 2.
    minpoly: Vec<BaseFrac>,
    /// `d alpha / d t_i` as reduced alpha-polynomials.
    partials: Vec<Vec<BaseFrac>>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED.contains(&s)
}

impl TowerSpec {
    /// Validates a tower. `algebraic` carries the generator name and the
    /// ascending coefficients of its minimal polynomial over `Q(t)`.
    pub fn new(
        transcendentals: Vec<String>,
        algebraic: Option<(String, Vec<BaseFrac>)>,
        variable: impl Into<String>,
    ) -> Result<Arc<Self>> {
        let variable = variable.into();
        let mut names: Vec<&str> = transcendentals.iter().map(String::as_str).collect();
        if let Some((a, _)) = &algebraic {
            names.push(a);
        }
        names.push(&variable);
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidSymbol(n.to_string()));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateSymbol(n.to_string()));
            }
        }
        // `d<name>` is differential shorthand in the expression grammar
        for n in &names {
            if let Some(rest) = n.strip_prefix('d') {
                if names.contains(&rest) {
                    return Err(Error::InvalidSymbol(n.to_string()));
                }
            }
        }
        let m = transcendentals.len();
        let algebraic = match algebraic {
            None => None,
            Some((name, mut minpoly)) => {
                apoly::trim(&mut minpoly);
                if minpoly.len() < 3 {
                    return Err(Error::MinimalPolynomialDegree(
                        minpoly.len().saturating_sub(1),
                    ));
                }
                if !minpoly.last().unwrap().is_one() {
                    return Err(Error::NonMonicMinimalPolynomial);
                }
                if minpoly.iter().any(|c| c.max_var().is_some_and(|v| v >= m)) {
                    return Err(Error::ForeignMinimalPolynomialCoefficient);
                }
                let dmu = apoly::derivative(&minpoly);
                let g = apoly::gcd(&minpoly, &dmu);
                if g.len() > 1 {
                    return Err(Error::InseparableMinimalPolynomial);
                }
                // d alpha/d t_i = -(d mu/d t_i)(alpha) / mu'(alpha)
                let inv_dmu = apoly::inverse_mod(&dmu, &minpoly)
                    .ok_or(Error::InseparableMinimalPolynomial)?;
                let partials = (0..m)
                    .map(|i| {
                        let mut dti: Vec<BaseFrac> =
                            minpoly.iter().map(|c| -&c.derivative(i)).collect();
                        apoly::trim(&mut dti);
                        apoly::rem(&apoly::mul(&dti, &inv_dmu), &minpoly)
                    })
                    .collect();
                Some(Algebraic {
                    name,
                    minpoly,
                    partials,
                })
            }
        };
        Ok(Arc::new(Self {
            transcendentals,
            algebraic,
            variable,
        }))
    }

    /// `Q` itself, with function-field variable `x`.
    pub fn rational() -> Arc<Self> {
        Self::new(Vec::new(), None, "x").expect("valid")
    }

    /// `Q(t_1, .., t_m)` with the given transcendental names and variable `x`.
    pub fn transcendental(names: &[&str]) -> Result<Arc<Self>> {
        Self::new(names.iter().map(|s| s.to_string()).collect(), None, "x")
    }

    pub fn num_transcendentals(&self) -> usize {
        self.transcendentals.len()
    }

    pub fn transcendentals(&self) -> &[String] {
        &self.transcendentals
    }

    pub fn algebraic_name(&self) -> Option<&str> {
        self.algebraic.as_ref().map(|a| a.name.as_str())
    }

    pub fn has_algebraic(&self) -> bool {
        self.algebraic.is_some()
    }

    /// Ascending coefficients of the minimal polynomial, if any.
    pub fn minimal_polynomial(&self) -> Option<&[BaseFrac]> {
        self.algebraic.as_ref().map(|a| a.minpoly.as_slice())
    }

    /// Degree of `k` over `Q(t)`.
    pub fn degree(&self) -> usize {
        self.algebraic.as_ref().map_or(1, |a| a.minpoly.len() - 1)
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub(crate) fn alpha_partial(&self, i: usize) -> Option<&[BaseFrac]> {
        self.algebraic.as_ref().map(|a| a.partials[i].as_slice())
    }

    /// Name of the `dt_i` differential.
    pub fn differential_name(&self, i: usize) -> String {
        format!("d{}", self.transcendentals[i])
    }
}

/// Dense polynomials over `Q(t)` in the algebraic generator, ascending.
pub(crate) mod apoly {
    use super::BaseFrac;

    pub fn trim(p: &mut Vec<BaseFrac>) {
        while p.last().is_some_and(BaseFrac::is_zero) {
            p.pop();
        }
    }

    pub fn add(a: &[BaseFrac], b: &[BaseFrac]) -> Vec<BaseFrac> {
        let n = a.len().max(b.len());
        let zero = BaseFrac::zero();
        let mut out: Vec<BaseFrac> = (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero))
            .collect();
        trim(&mut out);
        out
    }

    pub fn neg(a: &[BaseFrac]) -> Vec<BaseFrac> {
        a.iter().map(|c| -c).collect()
    }

    pub fn mul(a: &[BaseFrac], b: &[BaseFrac]) -> Vec<BaseFrac> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BaseFrac::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(x * y);
            }
        }
        trim(&mut out);
        out
    }

    pub fn scale(a: &[BaseFrac], c: &BaseFrac) -> Vec<BaseFrac> {
        let mut out: Vec<BaseFrac> = a.iter().map(|x| x * c).collect();
        trim(&mut out);
        out
    }

    pub fn derivative(a: &[BaseFrac]) -> Vec<BaseFrac> {
        let mut out: Vec<BaseFrac> = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &BaseFrac::from_i64(i as i64))
            .collect();
        trim(&mut out);
        out
    }

    pub fn div_rem(a: &[BaseFrac], b: &[BaseFrac]) -> (Vec<BaseFrac>, Vec<BaseFrac>) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead = b.last().unwrap();
        let inv = if lead.is_one() {
            BaseFrac::one()
        } else {
            lead.inv().expect("nonzero")
        };
        let mut q = vec![BaseFrac::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let f = r.last().unwrap() * &inv;
            for (i, bc) in b.iter().enumerate() {
                r[i + shift] = &r[i + shift] - &(&f * bc);
            }
            q[shift] = f;
            r.pop();
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    pub fn rem(a: &[BaseFrac], b: &[BaseFrac]) -> Vec<BaseFrac> {
        if a.len() < b.len() {
            let mut r = a.to_vec();
            trim(&mut r);
            return r;
        }
        div_rem(a, b).1
    }

    fn monic(a: &[BaseFrac]) -> Vec<BaseFrac> {
        match a.last() {
            None => Vec::new(),
            Some(l) if l.is_one() => a.to_vec(),
            Some(l) => scale(a, &l.inv().expect("nonzero")),
        }
    }

    /// Monic gcd.
    pub fn gcd(a: &[BaseFrac], b: &[BaseFrac]) -> Vec<BaseFrac> {
        let (mut a, mut b) = (monic(a), monic(b));
        while !b.is_empty() {
            let r = rem(&a, &b);
            a = b;
            b = monic(&r);
        }
        a
    }

    /// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
    pub fn inverse_mod(a: &[BaseFrac], m: &[BaseFrac]) -> Option<Vec<BaseFrac>> {
        // invariant: s_i * a = r_i (mod m)
        let (mut r0, mut r1) = (m.to_vec(), rem(a, m));
        let (mut s0, mut s1): (Vec<BaseFrac>, Vec<BaseFrac>) = (Vec::new(), vec![BaseFrac::one()]);
        while !r1.is_empty() {
            let (q, r) = div_rem(&r0, &r1);
            let s = add(&s0, &neg(&mul(&q, &s1)));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].inv()?;
        Some(rem(&scale(&s0, &c), m))
    }
}
