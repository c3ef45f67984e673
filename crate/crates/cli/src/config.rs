//! Plain-text configuration: tower files and principal-part family files.
//!
//! Tower file, one `key: value` per line, `#` starts a comment:
//!
//! ```text
//! trans: t1, t2
//! alg: a; minpoly: a^2 - t1
//! var: x
//! ```
//!
//! Family file, one polar term per row:
//!
//! ```text
//! # place | component | order | numerator
//! (x)      | dx  | 1 | 1
//! infinity | dx  | 1 | -1
//! (x^2 - t)| dt  | 2 | x + 1
//! ```

use std::sync::Arc;

use tanreg_core::algebra::{BaseFrac, PolarTerm, TowerSpec};
use tanreg_core::differentials::{PrincipalPartAt, PrincipalParts};

use crate::error::{CliError, Result};
use crate::eval;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn config_err(what: &str, line: usize, msg: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("{what} line {line}: {msg}"))
}

/// The tower used when no file is given: `Q(t)` with variable `x`.
pub fn default_tower() -> Arc<TowerSpec> {
    TowerSpec::transcendental(&["t"]).expect("valid default")
}

pub fn parse_tower(text: &str) -> Result<Arc<TowerSpec>> {
    let mut trans: Option<Vec<String>> = None;
    let mut alg: Option<(usize, String, String)> = None;
    let mut var: Option<String> = None;
    for (n, line) in content_lines(text) {
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| config_err("tower", n, "expected `key: value`"))?;
        let value = value.trim();
        let dup = || config_err("tower", n, format!("`{}` given twice", key.trim()));
        match key.trim() {
            "trans" => {
                if trans.is_some() {
                    return Err(dup());
                }
                trans = Some(
                    value
                        .split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect(),
                );
            }
            "alg" => {
                if alg.is_some() {
                    return Err(dup());
                }
                let (name, rest) = value
                    .split_once(';')
                    .ok_or_else(|| config_err("tower", n, "expected `alg: a; minpoly: ...`"))?;
                let (mkey, poly) = rest
                    .split_once(':')
                    .ok_or_else(|| config_err("tower", n, "expected `minpoly: ...`"))?;
                if mkey.trim() != "minpoly" {
                    return Err(config_err("tower", n, "expected `minpoly: ...`"));
                }
                alg = Some((n, name.trim().to_string(), poly.trim().to_string()));
            }
            "var" => {
                if var.is_some() {
                    return Err(dup());
                }
                var = Some(value.to_string());
            }
            other => return Err(config_err("tower", n, format!("unknown key `{other}`"))),
        }
    }
    let trans = trans.unwrap_or_default();
    let var = var.unwrap_or_else(|| "x".into());
    let algebraic = match alg {
        None => None,
        Some((n, name, poly)) => {
            // the minimal polynomial is read as a polynomial in the generator
            let helper = TowerSpec::new(trans.clone(), None, name.clone())?;
            let f = eval::element(&poly, &helper)
                .map_err(|e| config_err("tower", n, format!("minpoly: {e}")))?;
            if !f.is_polynomial() {
                return Err(config_err("tower", n, "minpoly must be a polynomial"));
            }
            let coeffs: Vec<BaseFrac> = f
                .num()
                .coeffs()
                .iter()
                .map(|c| c.as_base().expect("helper tower has no generator"))
                .collect();
            Some((name, coeffs))
        }
    };
    Ok(TowerSpec::new(trans, algebraic, var)?)
}

/// `0` for the `dx` component, `i + 1` for `dt_i`.
fn component_index(name: &str, tower: &TowerSpec) -> Option<usize> {
    if name.strip_prefix('d') == Some(tower.variable()) {
        return Some(0);
    }
    (0..tower.num_transcendentals())
        .find(|&i| tower.differential_name(i) == name)
        .map(|i| i + 1)
}

pub fn parse_family(text: &str, tower: &Arc<TowerSpec>) -> Result<PrincipalParts> {
    let m = tower.num_transcendentals();
    let mut parts: Vec<PrincipalPartAt> = Vec::new();
    for (n, line) in content_lines(text) {
        let cols: Vec<&str> = line.split('|').map(str::trim).collect();
        let [place, component, order, numerator] = cols[..] else {
            return Err(config_err(
                "family",
                n,
                "expected `place | component | order | numerator`",
            ));
        };
        let place = eval::place(place, tower).map_err(|e| config_err("family", n, e))?;
        let c = component_index(component, tower)
            .ok_or_else(|| config_err("family", n, format!("unknown component `{component}`")))?;
        let order: u32 = order
            .parse()
            .ok()
            .filter(|&o| o >= 1)
            .ok_or_else(|| config_err("family", n, "order must be a positive integer"))?;
        let f = eval::element(numerator, tower).map_err(|e| config_err("family", n, e))?;
        if !f.is_polynomial() {
            return Err(config_err("family", n, "numerator must be a polynomial"));
        }
        let term = PolarTerm {
            order,
            numerator: f.num().clone(),
        };
        let at = match parts.iter().position(|p| p.place == place) {
            Some(i) => &mut parts[i],
            None => {
                parts.push(PrincipalPartAt {
                    tower: tower.clone(),
                    place,
                    dx_polar: Vec::new(),
                    dt_polar: vec![Vec::new(); m],
                });
                parts.last_mut().expect("just pushed")
            }
        };
        if c == 0 {
            at.dx_polar.push(term);
        } else {
            at.dt_polar[c - 1].push(term);
        }
    }
    Ok(PrincipalParts::new(tower, parts)?)
}

/// Rows in the family-file format, so that `rho` output can be fed back.
pub fn family_rows(family: &PrincipalParts) -> Vec<[String; 4]> {
    let tower = family.tower();
    let names: Vec<String> = std::iter::once(format!("d{}", tower.variable()))
        .chain((0..tower.num_transcendentals()).map(|i| tower.differential_name(i)))
        .collect();
    let mut rows = Vec::new();
    for p in family.parts() {
        for (name, terms) in names.iter().zip(p.components()) {
            for t in terms {
                rows.push([
                    p.place.render(),
                    name.clone(),
                    t.order.to_string(),
                    t.numerator.render(),
                ]);
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use tanreg_core::algebra::Scalar;

    #[test]
    fn tower_files() {
        let k = parse_tower("# two parameters\ntrans: t1, t2\n").unwrap();
        assert_eq!(k.num_transcendentals(), 2);
        assert_eq!(k.variable(), "x");
        let k = parse_tower("trans: t\nalg: a; minpoly: a^2 - t\nvar: z").unwrap();
        assert_eq!(k.degree(), 2);
        assert_eq!(k.variable(), "z");
        let a = Scalar::alpha(&k).unwrap();
        assert_eq!(&a * &a, Scalar::transcendental(&k, 0));
        assert_eq!(parse_tower("").unwrap().num_transcendentals(), 0);
    }

    #[test]
    fn bad_tower_files() {
        assert!(parse_tower("trans t").is_err());
        assert!(parse_tower("trans: t\ntrans: s").is_err());
        assert!(parse_tower("colour: red").is_err());
        assert!(parse_tower("trans: t\nalg: a; minpoly: 2*a^2 - t").is_err());
        assert!(parse_tower("trans: t\nalg: a; minpoly: a - t").is_err());
        assert!(parse_tower("alg: a; minpoly: a^2 - s").is_err());
        assert!(parse_tower("trans: t, t").is_err());
        assert!(parse_tower("trans: eps").is_err());
    }

    #[test]
    fn family_files_round_trip() {
        let k = default_tower();
        let text = "(x) | dx | 1 | 1\n(x - 1) | dx | 2 | t\ninfinity | dt | 2 | 3\n";
        let fam = parse_family(text, &k).unwrap();
        assert_eq!(fam.parts().len(), 3);
        let rows = family_rows(&fam);
        let again: String = rows.iter().map(|r| r.join(" | ") + "\n").collect();
        assert_eq!(parse_family(&again, &k).unwrap(), fam);
    }

    #[test]
    fn bad_family_rows() {
        let k = default_tower();
        assert!(parse_family("(x) | dx | 1", &k).is_err());
        assert!(parse_family("(x) | dy | 1 | 1", &k).is_err());
        assert!(parse_family("(x) | dx | 0 | 1", &k).is_err());
        assert!(parse_family("(x^2) | dx | 1 | 1", &k).is_err());
        assert!(parse_family("(x) | dx | 1 | 1/x", &k).is_err());
        assert!(parse_family("(x) | dx | 1 | x", &k).is_err());
        assert!(parse_family("(x) | dx | 1 | 1\n(x^2 - x) | dx | 1 | 1", &k).is_err());
    }
}
