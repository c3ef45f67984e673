//! Shared helpers for the canonical text rendering.
//!
//! A rendered sum is a list of signed product-like bodies. Bodies never carry
//! a leading minus sign, so sums can be joined with ` + ` / ` - ` and a body
//! can be multiplied by a further factor without parentheses.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub negative: bool,
    pub body: String,
}

impl Term {
    pub fn new(negative: bool, body: String) -> Self {
        Self { negative, body }
    }
}

pub fn join_terms(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&t.body);
    }
    out
}

/// Multiplies a rendered coefficient by a power-product `factor`.
///
/// A single-term coefficient keeps its sign outside; a sum is parenthesized.
pub fn times(coeff: &[Term], factor: &str) -> Term {
    match coeff {
        [single] if single.body == "1" => Term::new(single.negative, factor.to_string()),
        [single] => Term::new(single.negative, format!("{}*{}", single.body, factor)),
        _ => Term::new(false, format!("({})*{}", join_terms(coeff), factor)),
    }
}

/// `num/(den)`, parenthesizing a multi-term numerator.
pub fn over(num: &[Term], den: &str) -> Term {
    match num {
        [single] => Term::new(single.negative, format!("{}/({})", single.body, den)),
        _ => Term::new(false, format!("({})/({})", join_terms(num), den)),
    }
}

pub fn power(name: &str, e: usize) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}
