//! One function per subcommand, each producing a typed report.

use std::sync::Arc;

use tanreg_core::algebra::TowerSpec;
use tanreg_core::cousin::{
    global_sections_basis, kernel_rprime_basis, realize_principal_parts, verify_square_res,
    verify_square_tan, GlobalSectionBasis,
};
use tanreg_core::differentials::{
    is_exact, principal_parts, project_rprime, residue_at, AbsoluteForm,
};
use tanreg_core::k2::{decompose_symbol, tan_symbol, tan_symbol_rel};

use crate::config::{family_rows, parse_family};
use crate::error::Result;
use crate::eval;
use crate::report::*;

pub fn residue(tower: &Arc<TowerSpec>, form: &str, place: &str) -> Result<ResidueReport> {
    let w = eval::form(form, tower)?;
    let p = eval::place(place, tower)?;
    Ok(ResidueReport {
        form: w.render(),
        place: p.render(),
        residue: residue_at(&w, &p).render(),
    })
}

pub fn rho(tower: &Arc<TowerSpec>, form: &str) -> Result<RhoReport> {
    let w = eval::form(form, tower)?;
    let parts = family_rows(&principal_parts(&w))
        .into_iter()
        .map(|[place, component, order, numerator]| PolarRow {
            place,
            component,
            order: order.parse().expect("rendered order"),
            numerator,
        })
        .collect();
    Ok(RhoReport {
        form: w.render(),
        parts,
    })
}

pub fn tan(tower: &Arc<TowerSpec>, symbol: &str) -> Result<TanReport> {
    let s = eval::symbol(symbol, tower)?;
    Ok(TanReport {
        symbol: s.render(),
        tan: tan_symbol(&s).render(),
        tan_rel: tan_symbol_rel(&s).render(),
    })
}

pub fn decompose(tower: &Arc<TowerSpec>, symbol: &str) -> Result<DecomposeReport> {
    let s = eval::symbol(symbol, tower)?;
    let parts = decompose_symbol(&s);
    let sum = parts
        .iter()
        .fold(AbsoluteForm::zero(tower), |acc, p| &acc + &tan_symbol(p));
    let recomposes = tanreg_core::k2::recompose_symbol(&parts).as_ref() == Some(&s);
    Ok(DecomposeReport {
        symbol: s.render(),
        factors: parts
            .iter()
            .map(|p| Factor {
                symbol: p.render(),
                tan: tan_symbol(p).render(),
            })
            .collect(),
        sum: sum.render(),
        recomposes,
    })
}

/// The form is read in `Omega^1_{K/k}`: `dt` parts are projected away.
pub fn exactness(tower: &Arc<TowerSpec>, form: &str) -> Result<ExactReport> {
    let eta = project_rprime(&eval::form(form, tower)?);
    let e = is_exact(&eta);
    Ok(ExactReport {
        form: eta.render(),
        exact: e.exact,
        witness: e.witness.map(|h| h.render()),
    })
}

fn basis(b: GlobalSectionBasis) -> BasisReport {
    BasisReport {
        dimension: b.dimension(),
        basis: b.forms.iter().map(|w| w.render()).collect(),
    }
}

pub fn kernel(tower: &Arc<TowerSpec>) -> BasisReport {
    basis(kernel_rprime_basis(tower))
}

pub fn global_sections(tower: &Arc<TowerSpec>) -> BasisReport {
    basis(global_sections_basis(tower))
}

pub fn realize(tower: &Arc<TowerSpec>, family: &str) -> Result<RealizeReport> {
    let family = parse_family(family, tower)?;
    let r = realize_principal_parts(&family);
    Ok(RealizeReport {
        realizable: r.realizable,
        total_residue: r.total_residue.render(),
        witness: r.witness.map(|w| w.render()),
    })
}

pub fn verify_res(tower: &Arc<TowerSpec>, form: &str) -> Result<VerifyResReport> {
    let beta = eval::form(form, tower)?;
    let r = verify_square_res(&beta);
    Ok(VerifyResReport {
        form: beta.render(),
        entries: r
            .entries
            .iter()
            .map(|e| Entry {
                place: e.place.render(),
                lhs: e.lhs.render(),
                rhs: e.rhs.render(),
                equal: e.equal,
            })
            .collect(),
        residue_sum: r.residue_sum.render(),
        verdict: r.verdict,
        failing: r.failing().map(|e| e.place.render()).collect(),
    })
}

pub fn verify_tan(tower: &Arc<TowerSpec>, symbol: &str) -> Result<VerifyTanReport> {
    let s = eval::symbol(symbol, tower)?;
    let r = verify_square_tan(&s);
    Ok(VerifyTanReport {
        symbol: s.render(),
        absolute: r.absolute.render(),
        relative: r.relative.render(),
        projected: r.projected.render(),
        factors: r.factors.iter().map(|f| f.render()).collect(),
        factor_sum: r.factor_sum.render(),
        discrepancy: r.discrepancy.render(),
        compatible: r.compatible,
        additive: r.additive,
        recomposes: r.recomposes,
        verdict: r.verdict,
    })
}
