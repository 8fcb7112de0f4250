use num_traits::Zero;
use serde::Serialize;

use super::data::ExtendedSolutionData;
use crate::error::{Error, Result};
use crate::exactnum::RationalFunction;
use crate::liealg::{grading_of, FnMatrix, LambdaMatrix};

/// Component of the `λ^k` coefficient of `(exp C)⁻¹(exp C)_z` along a root vector of `𝔤^ξ_j`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub lambda: usize,
    pub level: i64,
    pub label: String,
    pub value: RationalFunction,
}

/// Outcome of [`check_extended_solution`]; `constraints` merges residuals that are constant multiples.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub pass: bool,
    pub residuals: Vec<Residual>,
    pub constraints: Vec<Residual>,
}

/// `exp C` with λ-polynomial entries.
pub fn exp_c(data: &ExtendedSolutionData) -> Result<LambdaMatrix> {
    data.assemble().exp_nilpotent()
}

/// `(exp C)⁻¹ (exp C)_z`, expanded exactly.
pub fn maurer_cartan(data: &ExtendedSolutionData) -> Result<LambdaMatrix> {
    let c = data.assemble();
    let e = c.exp_nilpotent()?;
    let einv = c.neg().exp_nilpotent()?;
    einv.mul(&e.dz())
}

fn proportional(f: &RationalFunction, g: &RationalFunction) -> bool {
    f.checked_div(g).is_ok_and(|q| q.as_constant().is_some())
}

/// Projects each `λ^i` coefficient onto `𝔤^ξ_{i+2} ⊕ … ⊕ 𝔤^ξ_{r(ξ)}`; passes when all projections vanish.
pub fn check_extended_solution(data: &ExtendedSolutionData) -> Result<CheckReport> {
    let g = &data.group;
    let gr = grading_of(g, &data.xi_cartan())?;
    let r = gr.r();
    let a = maurer_cartan(data)?;
    let mut residuals = Vec::new();
    for i in 0..r.max(0) as usize {
        let coeff: FnMatrix = a.lambda_coeff(i);
        for (&j, elems) in gr.levels.range(i as i64 + 2..) {
            for e in elems {
                let Some(root) = &e.root else { continue };
                let ((p, q), _) = g.root_positions(root)?;
                let v = coeff.get(p, q);
                if !v.is_zero() {
                    residuals.push(Residual { lambda: i, level: j, label: e.label.clone(), value: v.clone() });
                }
            }
        }
    }
    let mut constraints: Vec<Residual> = Vec::new();
    for res in &residuals {
        if !constraints.iter().any(|c| proportional(&res.value, &c.value)) {
            constraints.push(res.clone());
        }
    }
    Ok(CheckReport { pass: residuals.is_empty(), residuals, constraints })
}

/// Root direction at which the Maurer–Cartan form of a family must vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintSite {
    pub lambda: usize,
    pub level: i64,
    pub label: String,
}

fn generic_functions(data: &ExtendedSolutionData, salt: i64) -> Vec<RationalFunction> {
    data.coeffs
        .iter()
        .zip(0i64..)
        .map(|(c, k)| {
            let cs: Vec<i64> = (0..4).map(|j| (k * 7 + j * 3 + salt * 5).rem_euclid(11) + 1).collect();
            let keep_constant = !c.f.is_zero() && c.f.as_constant().is_some();
            let cs = if keep_constant { &cs[..1] } else { &cs[..] };
            RationalFunction::from_poly(crate::exactnum::Poly::from_ints(cs))
        })
        .collect()
}

/// Sites of the independent constraints of the family spanned by the datum's directions.
///
/// Coefficient functions become generic cubics, except nonzero constants, which stay generic
/// constants. Residuals that survive, up to constant multiples, are the family's constraints.
pub fn family_constraints(data: &ExtendedSolutionData) -> Result<Vec<ConstraintSite>> {
    let mut out: Vec<ConstraintSite> = Vec::new();
    for salt in 0..2 {
        let generic = data.with_functions(&generic_functions(data, salt));
        for c in check_extended_solution(&generic)?.constraints {
            let site = ConstraintSite { lambda: c.lambda, level: c.level, label: c.label };
            if !out.contains(&site) {
                out.push(site);
            }
        }
    }
    Ok(out)
}

/// One step `W_t = exp(C₀)·(⊕_{d ≤ t} eigenspaces of ξ)` of the flag of an S¹-invariant datum.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FlagStep {
    pub level: i64,
    pub vectors: Vec<Vec<RationalFunction>>,
}

pub fn sone_invariant_flag(data: &ExtendedSolutionData) -> Result<Vec<FlagStep>> {
    if !data.is_s1_invariant() {
        return Err(Error::NotSOneInvariant);
    }
    let g = &data.group;
    let e = exp_c(data)?.lambda_coeff(0);
    let d: Vec<i64> = g
        .diagonal(&data.xi_cartan().coords)
        .iter()
        .map(|x| crate::liealg::as_integer(x).ok_or_else(|| Error::NotSingleValued(x.to_string())))
        .collect::<Result<_>>()?;
    let mut levels: Vec<i64> = d.clone();
    levels.sort_unstable();
    levels.dedup();
    levels.pop();
    Ok(levels
        .into_iter()
        .map(|t| FlagStep {
            level: t,
            vectors: (0..g.size)
                .filter(|&a| d[a] <= t)
                .map(|a| (0..g.size).map(|row| e.get(row, a).clone()).collect())
                .collect(),
        })
        .collect())
}
