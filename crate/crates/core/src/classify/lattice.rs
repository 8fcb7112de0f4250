use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{CartanVector, GroupSpec};
use crate::rootdata::{h_coeffs, zeta_duals};

/// `Σ n_i ζ_i` with nonnegative integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeElement {
    pub zeta_coeffs: Vec<i64>,
}

impl LatticeElement {
    pub fn new(zeta_coeffs: Vec<i64>) -> Self {
        Self { zeta_coeffs }
    }

    pub fn zero(k: usize) -> Self {
        Self { zeta_coeffs: vec![0; k] }
    }

    pub fn is_zero(&self) -> bool {
        self.zeta_coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.zeta_coeffs.len()).filter(|&i| self.zeta_coeffs[i] != 0).collect()
    }

    pub fn cartan(&self, g: &GroupSpec) -> CartanVector {
        zeta_duals(g).combine(&self.zeta_coeffs)
    }

    pub fn h_coeffs(&self, g: &GroupSpec) -> Vec<BigRational> {
        h_coeffs(g, &self.cartan(g))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { zeta_coeffs: self.zeta_coeffs.iter().zip(&o.zeta_coeffs).map(|(a, b)| a - b).collect() }
    }

    /// Converts a σ_ρ-fixed Cartan vector into ζ-coordinates.
    pub fn from_cartan(g: &GroupSpec, xi: &CartanVector) -> Result<Self> {
        let c = zeta_duals(g).int_coeffs_of(xi).ok_or(Error::NotInLattice)?;
        let e = Self::new(c);
        if !is_in_lattice(g, &e) || e.zeta_coeffs.iter().any(|&c| c < 0) {
            return Err(Error::NotInLattice);
        }
        Ok(e)
    }
}

impl fmt::Display for LatticeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .zeta_coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| if c == 1 { format!("z{}", i + 1) } else { format!("{c}z{}", i + 1) })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join("+"))
        }
    }
}

/// `exp 2πξ = e`: every diagonal entry of ξ is an integer.
pub fn diagonal_integral(g: &GroupSpec, xi: &CartanVector) -> bool {
    g.diagonal(&xi.coords).iter().all(|d| d.is_integer())
}

pub fn is_in_lattice(g: &GroupSpec, e: &LatticeElement) -> bool {
    diagonal_integral(g, &e.cartan(g))
}

/// Least `m_i` with `m_i ζ_i` in the integer lattice.
pub fn min_multiples(g: &GroupSpec) -> Vec<i64> {
    zeta_duals(g)
        .zeta
        .iter()
        .map(|z| {
            g.diagonal(&z.coords)
                .iter()
                .fold(BigInt::from(1), |acc, d| acc.lcm(d.denom()))
                .try_into()
                .expect("small denominators")
        })
        .collect()
}

/// `ξ ⪯ ξ′`: every `H`-coefficient of ξ′ is at most the matching one of ξ.
pub fn preceq(g: &GroupSpec, xi: &CartanVector, xi2: &CartanVector) -> Result<bool> {
    let a = h_coeffs(g, xi);
    let b = h_coeffs(g, xi2);
    if a.iter().chain(&b).any(|c| c.is_negative()) {
        return Err(Error::NotInPositiveChamber);
    }
    Ok(a.iter().zip(&b).all(|(x, y)| y <= x))
}

/// [`preceq`] on ζ-coordinates.
pub fn preceq_lattice(xi: &LatticeElement, xi2: &LatticeElement) -> bool {
    xi.zeta_coeffs.iter().zip(&xi2.zeta_coeffs).all(|(a, b)| b <= a)
}

fn boxes(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Lattice elements with `0 ≤ n_i ≤ bounds_i`.
pub fn lattice_box(g: &GroupSpec, bounds: &[i64]) -> Vec<LatticeElement> {
    boxes(bounds).into_iter().map(LatticeElement::new).filter(|e| is_in_lattice(g, e)).collect()
}

/// Nonzero elements with each `n_i` in `{0} ∪ [1, 2m_i]`, lying in the lattice.
pub fn enumerate_semi_canonical(g: &GroupSpec) -> Vec<LatticeElement> {
    let m = min_multiples(g);
    let bounds: Vec<i64> = m.iter().map(|x| 2 * x).collect();
    let mut v: Vec<LatticeElement> = lattice_box(g, &bounds).into_iter().filter(|e| !e.is_zero()).collect();
    v.sort_by_key(|e| (e.support(), e.zeta_coeffs.clone()));
    v
}

/// The `⪯`-maximal lattice element of each support, `Σ_{i∈I} m_i ζ_i`; the empty support gives 0.
pub fn enumerate_canonical(g: &GroupSpec) -> Vec<LatticeElement> {
    let m = min_multiples(g);
    let k = m.len();
    let mut v: Vec<LatticeElement> = (0..1u64 << k)
        .map(|mask| LatticeElement::new((0..k).map(|i| if mask >> i & 1 == 1 { m[i] } else { 0 }).collect()))
        .collect();
    v.sort_by_key(|e| (e.support().len(), e.support()));
    v
}

/// Canonical element with the same support.
pub fn canonical_of_support(g: &GroupSpec, support: &[usize]) -> LatticeElement {
    let m = min_multiples(g);
    LatticeElement::new((0..m.len()).map(|i| if support.contains(&i) { m[i] } else { 0 }).collect())
}

/// The semi-canonical element congruent to `xi` modulo `2m_i`, with the same support.
pub fn reduce_semicanonical(g: &GroupSpec, xi: &LatticeElement) -> Result<LatticeElement> {
    if xi.zeta_coeffs.len() != min_multiples(g).len() || xi.zeta_coeffs.iter().any(|&c| c < 0) || !is_in_lattice(g, xi)
    {
        return Err(Error::NotInLattice);
    }
    let m = min_multiples(g);
    let c = xi
        .zeta_coeffs
        .iter()
        .zip(&m)
        .map(|(&r, &mi)| if r == 0 { 0 } else { (r - 1).rem_euclid(2 * mi) + 1 })
        .collect();
    Ok(LatticeElement::new(c))
}
