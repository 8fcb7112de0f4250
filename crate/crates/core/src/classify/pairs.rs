use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::lattice::{
    canonical_of_support, enumerate_canonical, enumerate_semi_canonical, is_in_lattice, lattice_box, preceq,
    preceq_lattice, LatticeElement,
};
use super::space::SymmetricSpaceId;
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::liealg::{grading_of, nullspace, AlgMatrix, Basis, CartanVector, ConstMatrix, Family, GroupSpec, Vector};
use crate::rootdata::Involution;

/// A class of harmonic maps: canonical ζ with involution τ, reached from the semi-canonical `source`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPair {
    pub zeta: LatticeElement,
    #[serde(serialize_with = "ser_tau")]
    pub tau: Involution,
    pub source: LatticeElement,
}

fn ser_tau<S: serde::Serializer>(t: &Involution, s: S) -> std::result::Result<S::Ok, S::Error> {
    t.to_json().serialize(s)
}

/// `exp(πξ)` for ξ with integer diagonal, as a ±1 diagonal matrix.
fn exp_pi(g: &GroupSpec, xi: &CartanVector) -> Result<ConstMatrix> {
    let mut m = AlgMatrix::zero(g.size, g.basis());
    for (a, d) in g.diagonal(&xi.coords).iter().enumerate() {
        if !d.is_integer() {
            return Err(Error::NotInLattice);
        }
        let odd = (d.to_integer() % 2u8) != num_bigint::BigInt::zero();
        m.set(a, a, GaussianRational::from_int(if odd { -1 } else { 1 }));
    }
    Ok(m)
}

/// `s_0 = π_{V_0} − π_{V_0}^⊥` in the u-basis.
fn s0(g: &GroupSpec) -> ConstMatrix {
    let n = g.coords();
    let mut m = AlgMatrix::zero(2 * n, Basis::U);
    for a in 0..2 * n {
        if a != n - 1 && a != 2 * n - 1 {
            m.set(a, a, GaussianRational::from_int(-1));
        }
    }
    m.set(n - 1, 2 * n - 1, GaussianRational::one());
    m.set(2 * n - 1, n - 1, GaussianRational::one());
    m
}

/// Antisymmetric form of the quaternionic structure in the v-basis.
fn k_v(n: usize) -> ConstMatrix {
    let m = 2 * n;
    let mut k = AlgMatrix::zero(m, Basis::V);
    for j in 0..n {
        k.set(m - 1 - j, j, GaussianRational::i());
        k.set(j, m - 1 - j, -GaussianRational::i());
    }
    k
}

/// Exact Pfaffian by expansion along the first row.
pub fn pfaffian(a: &ConstMatrix) -> GaussianRational {
    fn go(a: &ConstMatrix, idx: &[usize]) -> GaussianRational {
        if idx.is_empty() {
            return GaussianRational::one();
        }
        let i = idx[0];
        let mut acc = GaussianRational::zero();
        for (p, &j) in idx.iter().enumerate().skip(1) {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().copied().filter(|&t| t != i && t != j).collect();
            let term = x * &go(a, &rest);
            acc = if p % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let idx: Vec<usize> = (0..a.size()).collect();
    go(a, &idx)
}

/// Component of `P^σ` through `exp(πζ′)` for the base involution σ, when it is a supported space.
pub fn component_of(g: &GroupSpec, base: &Involution, zeta: &LatticeElement) -> Result<Option<SymmetricSpaceId>> {
    if !is_in_lattice(g, zeta) {
        return Err(Error::NotInLattice);
    }
    let xi = zeta.cartan(g).add(&base.shift());
    match g.family {
        Family::SO => {
            let m = exp_pi(g, &xi)?.mul(&s0(g))?;
            let rows: Vec<Vector> = m.sub(&AlgMatrix::identity(g.size, Basis::U))?.rows();
            let p = nullspace(&rows, g.size).len();
            let n = g.coords();
            Ok(match p {
                1 => Some(SymmetricSpaceId::RealProjective { n }),
                p if p % 2 == 1 => Some(SymmetricSpaceId::Grassmannian { p, n }),
                _ => None,
            })
        }
        Family::SU if g.size % 2 == 1 => Ok(Some(SymmetricSpaceId::Lagrangian { m: g.size })),
        Family::SU => {
            let n = g.size / 2;
            if base.shift_mod2()[0] == 1 {
                return Ok(Some(SymmetricSpaceId::Lagrangian { m: g.size }));
            }
            let k = k_v(n);
            let xk = exp_pi(g, &xi)?.mul(&k)?;
            let ratio = pfaffian(&xk) / pfaffian(&k);
            Ok((ratio == GaussianRational::one()).then_some(SymmetricSpaceId::Quaternionic { n }))
        }
    }
}

/// Whether `Ad(exp π(ξ−ξ′))` carries σ-invariant solutions of type ξ to constant loops.
pub fn norm2_check(g: &GroupSpec, sig: &Involution, xi: &CartanVector, xi2: &CartanVector) -> Result<bool> {
    if !preceq(g, xi, xi2)? {
        return Err(Error::OrderViolation(format!("{xi} is not below {xi2}")));
    }
    if !sig.fixes(xi) || !sig.fixes(xi2) {
        return Err(Error::XiNotSigmaFixed);
    }
    let diff = xi.sub(xi2);
    let gr = grading_of(g, xi)?;
    for (&j, elems) in gr.levels.range(1..) {
        let (k, m) = sig.split_on(elems)?;
        let part = if j % 2 == 0 { m } else { k };
        for x in &part {
            for a in 0..g.size {
                for b in 0..g.size {
                    if x.get(a, b).is_zero() {
                        continue;
                    }
                    let l = g.entry_level(&diff, a, b);
                    if l >= num_rational::BigRational::from_integer(j.into()) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn norm2_lattice(g: &GroupSpec, sig: &Involution, a: &LatticeElement, b: &LatticeElement) -> Result<bool> {
    norm2_check(g, sig, &a.cartan(g), &b.cartan(g))
}

fn maximal(cands: &[LatticeElement]) -> Vec<LatticeElement> {
    cands.iter().filter(|c| !cands.iter().any(|d| d != *c && preceq_lattice(c, d))).cloned().collect()
}

/// Pairs `(ζ, shift)` reached from one semi-canonical `ζ′`.
fn pairs_from(g: &GroupSpec, base: &Involution, fundamental: bool, src: &LatticeElement) -> Result<Vec<ClassPair>> {
    let mut cands = Vec::new();
    for xi in lattice_box(g, &src.zeta_coeffs) {
        if !xi.is_zero() && norm2_lattice(g, base, src, &xi)? {
            cands.push(xi);
        }
    }
    let canon: Vec<LatticeElement> = enumerate_canonical(g).into_iter().filter(|c| !c.is_zero()).collect();
    let mut out = Vec::new();
    for tilde in maximal(&cands) {
        for z in &canon {
            if !preceq_lattice(&tilde, z) {
                continue;
            }
            if !fundamental && !norm2_lattice(g, base, src, z)? {
                continue;
            }
            let shift: Vec<i64> =
                base.shift_zeta.iter().zip(src.sub(z).zeta_coeffs).map(|(s, d)| (s + d).rem_euclid(2)).collect();
            out.push(ClassPair { zeta: z.clone(), tau: Involution::with_shift(g, shift)?, source: src.clone() });
        }
    }
    Ok(out)
}

/// Every class `(ζ, τ)` of harmonic maps into the space, deduplicated by ζ and the realized τ.
pub fn class_pairs(g: &GroupSpec, space: SymmetricSpaceId) -> Result<Vec<ClassPair>> {
    if space.group() != *g {
        return Err(Error::UnsupportedSpace(format!("{space} is not a space of {g}")));
    }
    let base = space.base_involution();
    let fundamental = base.is_sigma_rho();
    let sources: Vec<LatticeElement> = enumerate_semi_canonical(g)
        .into_iter()
        .filter(|z| matches!(component_of(g, &base, z), Ok(Some(s)) if s == space))
        .collect();
    let found: Vec<Vec<ClassPair>> =
        sources.par_iter().map(|s| pairs_from(g, &base, fundamental, s)).collect::<Result<_>>()?;
    let mut uniq: BTreeMap<(Vec<i64>, Vec<i64>), ClassPair> = BTreeMap::new();
    for p in found.into_iter().flatten() {
        let key: (Vec<i64>, Vec<i64>) = (p.tau.shift_zeta.iter().rev().copied().collect(), p.zeta.zeta_coeffs.clone());
        uniq.entry(key).or_insert(p);
    }
    let mut out: Vec<ClassPair> = uniq.into_values().collect();
    out.sort_by_key(|p| {
        (p.tau.shift_zeta.iter().rev().copied().collect::<Vec<_>>(), p.zeta.support().len(), p.zeta.zeta_coeffs.clone())
    });
    Ok(out)
}

/// Canonical element with the support of `e`.
pub fn canonical_for(g: &GroupSpec, e: &LatticeElement) -> LatticeElement {
    canonical_of_support(g, &e.support())
}
