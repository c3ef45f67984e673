//! Random normal-form values and the parse-after-render check.

use std::sync::Arc;

use rand::Rng;
use tanreg_core::algebra::{Fraction, TowerSpec};
use tanreg_core::random;

use crate::eval::{self, Dual, Value};

/// Tower files exercised by the round-trip suite.
pub const TOWERS: [&str; 6] = [
    "",
    "trans: t",
    "trans: t1, t2",
    "trans: t\nalg: a; minpoly: a^2 - t",
    "trans: t1, t2\nalg: a; minpoly: a^3 - t1*a - t2",
    "trans: s\nvar: y",
];

pub fn random_value<R: Rng>(rng: &mut R, tower: &Arc<TowerSpec>) -> Value {
    match rng.gen_range(0..5) {
        0 => Value::Element(dual(Fraction::from(random::scalar(rng, tower)), None)),
        1 => Value::Element(dual(random::fraction(rng, tower, 3, 3), None)),
        2 => {
            let re = random::fraction(rng, tower, 2, 2);
            let eps = random::nonzero_fraction(rng, tower, 2, 2);
            Value::Element(dual(re, Some(eps)))
        }
        3 => Value::Form(random::form(rng, tower, 2)),
        _ => Value::Symbol(random::dual_symbol(rng, tower, 2)),
    }
}

fn dual(re: Fraction, eps: Option<Fraction>) -> Dual {
    let eps = eps.unwrap_or_else(|| Fraction::zero(re.tower()));
    Dual { re, eps }
}

/// Renders `v`, parses the text back as the same kind of value and compares.
pub fn check(v: &Value, tower: &Arc<TowerSpec>) -> Result<(), String> {
    let text = v.render();
    let back = match v {
        Value::Form(_) => eval::form(&text, tower).map(Value::Form),
        _ => eval::eval_str(&text, tower),
    }
    .map_err(|e| format!("`{text}` does not parse back: {e}"))?;
    if &back == v {
        Ok(())
    } else {
        Err(format!("`{text}` parses back as `{}`", back.render()))
    }
}
