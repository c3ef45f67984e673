//! Evaluation of parsed expressions to elements, forms and symbols.

use std::sync::Arc;

use tanreg_core::algebra::{Fraction, Scalar, TowerSpec};
use tanreg_core::differentials::{d_abs, AbsoluteForm, Place};
use tanreg_core::k2::{DualSymbol, DualUnit};

use crate::error::{CliError, Result};
use crate::parse::{parse_expression, Atom, BinOp, Expr};

/// `re + eps*im`. Arithmetic never truncates: a product or power that would
/// create `eps^2` is an error rather than silently dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dual {
    pub re: Fraction,
    pub eps: Fraction,
}

impl Dual {
    fn plain(re: Fraction) -> Self {
        let eps = Fraction::zero(re.tower());
        Self { re, eps }
    }

    pub fn has_eps(&self) -> bool {
        !self.eps.is_zero()
    }

    pub fn render(&self) -> String {
        match (self.re.is_zero(), self.has_eps()) {
            (_, false) => self.re.render(),
            (true, true) => format!("eps*({})", self.eps.render()),
            (false, true) => format!("{} + eps*({})", self.re.render(), self.eps.render()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Element(Dual),
    Form(AbsoluteForm),
    Symbol(DualSymbol),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Element(d) => d.render(),
            Value::Form(w) => w.render(),
            Value::Symbol(s) => s.render(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Value::Element(d) if d.has_eps() => "a dual number",
            Value::Element(_) => "a function-field element",
            Value::Form(_) => "a differential form",
            Value::Symbol(_) => "a symbol",
        }
    }
}

fn mismatch(what: &str, a: &Value, b: &Value) -> CliError {
    CliError::TypeMismatch(format!("cannot {what} {} and {}", a.kind(), b.kind()))
}

fn plain_factor(v: &Dual) -> Result<&Fraction> {
    if v.has_eps() {
        return Err(CliError::TypeMismatch(
            "forms cannot carry an eps part".into(),
        ));
    }
    Ok(&v.re)
}

fn add(a: Value, b: Value, negate: bool) -> Result<Value> {
    match (a, b) {
        (Value::Element(x), Value::Element(y)) => {
            let (re, eps) = if negate {
                (&x.re - &y.re, &x.eps - &y.eps)
            } else {
                (&x.re + &y.re, &x.eps + &y.eps)
            };
            Ok(Value::Element(Dual { re, eps }))
        }
        (Value::Form(x), Value::Form(y)) => Ok(Value::Form(if negate { &x - &y } else { &x + &y })),
        (a, b) => Err(mismatch(if negate { "subtract" } else { "add" }, &a, &b)),
    }
}

fn mul(a: Value, b: Value) -> Result<Value> {
    match (a, b) {
        (Value::Element(x), Value::Element(y)) => {
            if x.has_eps() && y.has_eps() {
                return Err(CliError::EpsSquared);
            }
            Ok(Value::Element(Dual {
                re: &x.re * &y.re,
                eps: &(&x.re * &y.eps) + &(&x.eps * &y.re),
            }))
        }
        (Value::Element(x), Value::Form(w)) | (Value::Form(w), Value::Element(x)) => {
            Ok(Value::Form(w.scale(plain_factor(&x)?)))
        }
        (a, b) => Err(mismatch("multiply", &a, &b)),
    }
}

fn div(a: Value, b: Value) -> Result<Value> {
    match (a, b) {
        (Value::Element(x), Value::Element(y)) => {
            if y.has_eps() {
                return Err(CliError::EpsSquared);
            }
            Ok(Value::Element(Dual {
                re: x.re.div(&y.re)?,
                eps: x.eps.div(&y.re)?,
            }))
        }
        (Value::Form(w), Value::Element(y)) => Ok(Value::Form(w.scale(&plain_factor(&y)?.inv()?))),
        (a, b) => Err(mismatch("divide", &a, &b)),
    }
}

fn pow(a: Value, n: i64) -> Result<Value> {
    let Value::Element(x) = a else {
        return Err(CliError::TypeMismatch(format!(
            "cannot raise {} to a power",
            a.kind()
        )));
    };
    if x.has_eps() {
        return match n {
            0 => Ok(Value::Element(Dual::plain(Fraction::one(x.re.tower())))),
            1 => Ok(Value::Element(x)),
            _ => Err(CliError::EpsSquared),
        };
    }
    Ok(Value::Element(Dual::plain(x.re.pow(n)?)))
}

fn atom(a: Atom, tower: &Arc<TowerSpec>) -> Dual {
    let scalar = |s: Scalar| Dual::plain(s.into());
    match a {
        Atom::X => Dual::plain(Fraction::x(tower)),
        Atom::Trans(i) => scalar(Scalar::transcendental(tower, i)),
        Atom::Alpha => scalar(Scalar::alpha(tower).expect("parser resolved the generator")),
        Atom::Eps => Dual {
            re: Fraction::zero(tower),
            eps: Fraction::one(tower),
        },
    }
}

fn unit(v: Value) -> Result<DualUnit> {
    match v {
        Value::Element(d) => Ok(DualUnit::new(d.re, d.eps)?),
        other => Err(CliError::TypeMismatch(format!(
            "symbol slots hold dual numbers, not {}",
            other.kind()
        ))),
    }
}

pub fn eval(e: &Expr, tower: &Arc<TowerSpec>) -> Result<Value> {
    match e {
        Expr::Int(n) => Ok(Value::Element(Dual::plain(
            Scalar::from_int(tower, n.clone()).into(),
        ))),
        Expr::Atom(a) => Ok(Value::Element(atom(*a, tower))),
        Expr::Neg(x) => match eval(x, tower)? {
            Value::Element(d) => Ok(Value::Element(Dual {
                re: -&d.re,
                eps: -&d.eps,
            })),
            Value::Form(w) => Ok(Value::Form(-&w)),
            s @ Value::Symbol(_) => Err(CliError::TypeMismatch(format!(
                "cannot negate {}",
                s.kind()
            ))),
        },
        Expr::Bin(op, a, b) => {
            let (a, b) = (eval(a, tower)?, eval(b, tower)?);
            match op {
                BinOp::Add => add(a, b, false),
                BinOp::Sub => add(a, b, true),
                BinOp::Mul => mul(a, b),
                BinOp::Div => div(a, b),
            }
        }
        Expr::Pow(a, n) => pow(eval(a, tower)?, *n),
        Expr::D(a) => match eval(a, tower)? {
            Value::Element(d) if !d.has_eps() => Ok(Value::Form(d_abs(&d.re))),
            other => Err(CliError::TypeMismatch(format!(
                "d(.) applies to function-field elements, not {}",
                other.kind()
            ))),
        },
        Expr::Pair(a, b) => Ok(Value::Symbol(DualSymbol::new(
            unit(eval(a, tower)?)?,
            unit(eval(b, tower)?)?,
        ))),
    }
}

pub fn eval_str(src: &str, tower: &Arc<TowerSpec>) -> Result<Value> {
    eval(&parse_expression(src, tower)?, tower)
}

/// An element of `K` (no eps part).
pub fn element(src: &str, tower: &Arc<TowerSpec>) -> Result<Fraction> {
    match eval_str(src, tower)? {
        Value::Element(d) if !d.has_eps() => Ok(d.re),
        other => Err(CliError::TypeMismatch(format!(
            "expected a function-field element, got {}",
            other.kind()
        ))),
    }
}

/// A form; the element `0` is accepted as the zero form.
pub fn form(src: &str, tower: &Arc<TowerSpec>) -> Result<AbsoluteForm> {
    match eval_str(src, tower)? {
        Value::Form(w) => Ok(w),
        Value::Element(d) if d.re.is_zero() && !d.has_eps() => Ok(AbsoluteForm::zero(tower)),
        other => Err(CliError::TypeMismatch(format!(
            "expected a differential form, got {}",
            other.kind()
        ))),
    }
}

pub fn symbol(src: &str, tower: &Arc<TowerSpec>) -> Result<DualSymbol> {
    match eval_str(src, tower)? {
        Value::Symbol(s) => Ok(s),
        other => Err(CliError::TypeMismatch(format!(
            "expected a symbol {{a, b}}, got {}",
            other.kind()
        ))),
    }
}

/// `infinity`, or a monic squarefree polynomial such as `(x^2 - 2)`.
pub fn place(src: &str, tower: &Arc<TowerSpec>) -> Result<Place> {
    if src.trim() == "infinity" {
        return Ok(Place::Infinity);
    }
    let f = element(src, tower)?;
    if !f.is_polynomial() {
        return Err(CliError::TypeMismatch(
            "a place is given by a polynomial".into(),
        ));
    }
    Ok(Place::finite(f.num().clone())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt() -> Arc<TowerSpec> {
        TowerSpec::transcendental(&["t"]).unwrap()
    }

    #[test]
    fn differential_of_product() {
        let k = qt();
        let w = form("d(t*x^2)", &k).unwrap();
        assert_eq!(w.render(), "2*t*x*dx + x^2*dt");
        assert_eq!(
            form("t*d(x)/x + d(t)", &k).unwrap().render(),
            "t/(x)*dx + dt"
        );
    }

    #[test]
    fn symbol_slots() {
        let k = qt();
        let s = symbol("{1+eps*t, x}", &k).unwrap();
        assert!(s.left.z0().is_one());
        assert_eq!(s.left.z1().render(), "t");
        assert_eq!(s.right.z0(), &Fraction::x(&k));
        assert!(s.right.z1().is_zero());
    }

    #[test]
    fn type_errors() {
        let k = qt();
        assert!(matches!(
            eval_str("d(x) + x", &k),
            Err(CliError::TypeMismatch(_))
        ));
        assert!(matches!(
            eval_str("d(x) * d(t)", &k),
            Err(CliError::TypeMismatch(_))
        ));
        assert!(matches!(
            eval_str("d(d(x))", &k),
            Err(CliError::TypeMismatch(_))
        ));
        assert!(matches!(
            eval_str("{1, x} + 1", &k),
            Err(CliError::TypeMismatch(_))
        ));
        assert!(matches!(
            eval_str("eps*dx", &k),
            Err(CliError::TypeMismatch(_))
        ));
        assert_eq!(eval_str("1/(x - x)", &k), Err(CliError::DivisionByZero));
        assert_eq!(eval_str("dx/0", &k), Err(CliError::DivisionByZero));
        assert_eq!(eval_str("eps*eps", &k), Err(CliError::EpsSquared));
        assert_eq!(eval_str("(1 + eps)^2", &k), Err(CliError::EpsSquared));
        assert_eq!(eval_str("x/(1 + eps)", &k), Err(CliError::EpsSquared));
        assert!(matches!(
            eval_str("{eps, x}", &k),
            Err(CliError::Core(tanreg_core::Error::NonUnit))
        ));
    }

    #[test]
    fn dual_arithmetic() {
        let k = qt();
        let v = eval_str("(x + eps*t)*x - eps*(t*x)", &k).unwrap();
        assert_eq!(v.render(), "x^2");
        let v = eval_str("(1 + eps*x)/x", &k).unwrap();
        assert_eq!(v.render(), "1/(x) + eps*(1)");
        assert_eq!(eval_str("eps*x", &k).unwrap().render(), "eps*(x)");
    }

    #[test]
    fn places() {
        let k = qt();
        assert_eq!(place("infinity", &k).unwrap(), Place::Infinity);
        assert!(place("(x^2 - t)", &k).is_ok());
        assert!(place("x^2", &k).is_err());
        assert!(place("2*x", &k).is_err());
        assert!(place("1/x", &k).is_err());
    }
}
