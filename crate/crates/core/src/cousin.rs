//! Global sections, the kernel of `R'`, realizability of principal parts,
//! and end-to-end checks of the residue and tangent squares on `P^1`.

use std::sync::Arc;

use crate::algebra::{Fraction, Poly, Scalar, TowerSpec};
use crate::differentials::{
    principal_parts, principal_parts_on, project_rprime, res_h1x, residue_at, AbsoluteForm, Place,
    PrincipalParts, RelativeForm,
};
use crate::k2::{decompose_symbol, recompose_symbol, tan_symbol, tan_symbol_rel, DualSymbol};

/// A spanning list of global forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalSectionBasis {
    pub forms: Vec<AbsoluteForm>,
}

impl GlobalSectionBasis {
    /// `k`-dimension of the span, by elimination on the coefficient vectors.
    /// Panics if a form has a non-constant coefficient.
    pub fn dimension(&self) -> usize {
        let rows: Vec<Vec<Scalar>> = self.forms.iter().map(constant_coordinates).collect();
        rank(rows)
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }
}

/// Coordinates of a form with constant coefficients in `dx, dt_1, ..`.
fn constant_coordinates(w: &AbsoluteForm) -> Vec<Scalar> {
    w.components()
        .map(|c| c.as_scalar().expect("constant coefficient"))
        .collect()
}

/// Rank over `k` by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        let pivot: Vec<Scalar> = rows[r].iter().map(|v| v * &inv).collect();
        for row in rows.iter_mut().skip(r + 1) {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for (v, p) in row.iter_mut().zip(&pivot) {
                *v = &*v - &(&f * p);
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Solves `sum_j c_j basis_j = target` over `k`.
fn solve(basis: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = basis.len();
    let m = target.len();
    let tower = target.first()?.tower().clone();
    // augmented matrix: rows are equations (one per coordinate)
    let mut a: Vec<Vec<Scalar>> = (0..m)
        .map(|i| {
            let mut row: Vec<Scalar> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        a[r] = a[r].iter().map(|v| v * &inv).collect();
        for i in 0..m {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            let pivot = a[r].clone();
            for (v, p) in a[i].iter_mut().zip(&pivot) {
                *v = &*v - &(&f * p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut out = vec![Scalar::zero(&tower); n];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = a[i][n].clone();
    }
    Some(out)
}

/// Forms without poles anywhere on `P^1`.
///
/// A regular `a dx` needs `a` polynomial with `-u^-2 a(1/u)` regular, so
/// `a = 0`; a regular `b dt_i` needs `b` polynomial and bounded at infinity,
/// so `b` is a constant. The basis is therefore `dt_1, .., dt_m`.
pub fn global_sections_basis(tower: &Arc<TowerSpec>) -> GlobalSectionBasis {
    let forms = (0..tower.num_transcendentals())
        .map(|i| AbsoluteForm::dt_basis(tower, i))
        .filter(|w| principal_parts(w).is_empty())
        .collect();
    GlobalSectionBasis { forms }
}

/// Global sections killed by `R'`.
pub fn kernel_rprime_basis(tower: &Arc<TowerSpec>) -> GlobalSectionBasis {
    let forms = global_sections_basis(tower)
        .forms
        .into_iter()
        .filter(|w| project_rprime(w).is_zero())
        .collect();
    GlobalSectionBasis { forms }
}

/// Coordinates of `w` in the kernel basis, when `w` lies in the kernel.
pub fn kernel_coordinates(w: &AbsoluteForm) -> Option<Vec<Scalar>> {
    if !project_rprime(w).is_zero() || !principal_parts(w).is_empty() {
        return None;
    }
    let basis = kernel_rprime_basis(w.tower());
    let target = constant_coordinates(w);
    let cols: Vec<Vec<Scalar>> = basis.forms.iter().map(constant_coordinates).collect();
    if cols.is_empty() {
        return target.iter().all(Scalar::is_zero).then(Vec::new);
    }
    solve(&cols, &target)
}

pub fn kernel_membership(w: &AbsoluteForm) -> bool {
    kernel_coordinates(w).is_some()
}

/// Result of trying to realize a principal-parts family by a global form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub realizable: bool,
    pub total_residue: Scalar,
    pub witness: Option<AbsoluteForm>,
}

/// The only obstruction on `P^1` is the total residue of the `dx` data.
/// When it vanishes, the witness is the sum of the finite polar fractions
/// plus the polynomial that produces the prescribed data at infinity.
pub fn realize_principal_parts(family: &PrincipalParts) -> ObstructionReport {
    let tower = family.tower();
    let total_residue = family
        .parts()
        .iter()
        .fold(Scalar::zero(tower), |acc, p| &acc + &res_h1x(p));
    if !total_residue.is_zero() {
        return ObstructionReport {
            realizable: false,
            total_residue,
            witness: None,
        };
    }
    let at_inf = family.at(&Place::Infinity);
    let mut dx = family.finite_sum(0);
    if let Some(p) = at_inf {
        // -c u^-n du  <-  c x^(n-2) dx, n >= 2
        for t in p.dx_polar.iter().filter(|t| t.order >= 2) {
            let c = -&t.numerator.coeff(0);
            dx = &dx + &Fraction::from(Poly::monomial(c, (t.order - 2) as usize));
        }
    }
    let dt = (0..tower.num_transcendentals())
        .map(|i| {
            let mut b = family.finite_sum(i + 1);
            if let Some(p) = at_inf {
                for t in &p.dt_polar[i] {
                    let c = t.numerator.coeff(0);
                    b = &b + &Fraction::from(Poly::monomial(c, t.order as usize));
                }
            }
            b
        })
        .collect();
    ObstructionReport {
        realizable: true,
        total_residue,
        witness: Some(AbsoluteForm::new(dx, dt)),
    }
}

/// One row of a residue-square check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramEntry {
    pub place: Place,
    /// Residue of the local class of `beta`.
    pub lhs: Scalar,
    /// Residue of `R'(beta)` at the place.
    pub rhs: Scalar,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub entries: Vec<DiagramEntry>,
    /// Sum of the `rhs` column; zero by the residue theorem.
    pub residue_sum: Scalar,
    pub verdict: bool,
}

impl DiagramReport {
    pub fn failing(&self) -> impl Iterator<Item = &DiagramEntry> {
        self.entries.iter().filter(|e| !e.equal)
    }
}

/// Compares `Res o rho` with `Res o R'` at every place where `beta` has a pole.
pub fn verify_square_res(beta: &AbsoluteForm) -> DiagramReport {
    let places = principal_parts(beta).places();
    verify_square_res_on(beta, &places)
}

/// The same comparison at caller-chosen pairwise coprime places, for
/// instance a finer splitting than the canonical support.
pub fn verify_square_res_on(beta: &AbsoluteForm, places: &[Place]) -> DiagramReport {
    let rho = principal_parts_on(beta, places);
    let rel = project_rprime(beta);
    let entries: Vec<DiagramEntry> = places
        .iter()
        .map(|place| {
            let lhs = rho
                .at(place)
                .map_or_else(|| Scalar::zero(beta.tower()), res_h1x);
            let rhs = residue_at(&rel, place);
            DiagramEntry {
                place: place.clone(),
                equal: lhs == rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    let residue_sum = entries
        .iter()
        .fold(Scalar::zero(beta.tower()), |acc, e| &acc + &e.rhs);
    let verdict = entries.iter().all(|e| e.equal);
    DiagramReport {
        entries,
        residue_sum,
        verdict,
    }
}

/// Result of the tangent-square check for one symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TanSquareReport {
    pub absolute: AbsoluteForm,
    pub relative: RelativeForm,
    pub projected: RelativeForm,
    pub factors: [DualSymbol; 4],
    pub factor_sum: AbsoluteForm,
    /// `R'(tan s) = tan_rel s`.
    pub compatible: bool,
    /// `tan s` equals the sum over the four factors.
    pub additive: bool,
    /// The factors multiply back to `s`.
    pub recomposes: bool,
    /// `tan s` minus the relative image: the part `R'` forgets.
    pub discrepancy: AbsoluteForm,
    pub verdict: bool,
}

pub fn verify_square_tan(s: &DualSymbol) -> TanSquareReport {
    let absolute = tan_symbol(s);
    let relative = tan_symbol_rel(s);
    let projected = project_rprime(&absolute);
    let factors = decompose_symbol(s);
    let factor_sum = factors
        .iter()
        .fold(AbsoluteForm::zero(absolute.tower()), |acc, f| {
            &acc + &tan_symbol(f)
        });
    let compatible = projected == relative;
    let additive = factor_sum == absolute;
    let recomposes = recompose_symbol(&factors).as_ref() == Some(s);
    let discrepancy = &absolute - &relative.to_absolute();
    TanSquareReport {
        verdict: compatible && additive && recomposes,
        absolute,
        relative,
        projected,
        factors,
        factor_sum,
        compatible,
        additive,
        recomposes,
        discrepancy,
    }
}
