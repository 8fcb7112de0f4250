use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::roots::zeta_duals;
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::liealg::{
    as_integer, grading_of, normalize, nullspace, AlgMatrix, BasisElement, CartanVector, ConstMatrix, Family,
    GroupSpec, Ring, Vector,
};

/// `Ad(exp π shift) ∘ σ_ρ`, with the shift given by its ζ-coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Involution {
    pub group: GroupSpec,
    pub shift_zeta: Vec<i64>,
}

impl Involution {
    pub fn sigma_rho(g: &GroupSpec) -> Self {
        Self { group: *g, shift_zeta: vec![0; zeta_duals(g).k()] }
    }

    /// `σ_{ρ,i}` for `1 ≤ i ≤ k`.
    pub fn sigma_rho_i(g: &GroupSpec, i: usize) -> Result<Self> {
        let k = zeta_duals(g).k();
        if i == 0 || i > k {
            return Err(Error::ShiftNotInLattice(format!("no zeta_{i} for {g}")));
        }
        let mut c = vec![0; k];
        c[i - 1] = 1;
        Self::with_shift(g, c)
    }

    pub fn with_shift(g: &GroupSpec, shift_zeta: Vec<i64>) -> Result<Self> {
        let k = zeta_duals(g).k();
        if shift_zeta.len() != k {
            return Err(Error::ShiftNotInLattice(format!(
                "shift has {} coefficients, {g} needs {k}",
                shift_zeta.len()
            )));
        }
        Ok(Self { group: *g, shift_zeta })
    }

    /// Involution shifted by a σ-fixed Cartan element: `Ad(exp π ξ) ∘ self`.
    pub fn shifted_by(&self, xi: &CartanVector) -> Result<Self> {
        let sf = zeta_duals(&self.group);
        let c = sf
            .int_coeffs_of(xi)
            .ok_or_else(|| Error::ShiftNotInLattice(format!("{xi} is not an integer combination of the zeta basis")))?;
        let shift = self.shift_zeta.iter().zip(&c).map(|(a, b)| a + b).collect();
        Ok(Self { group: self.group, shift_zeta: shift })
    }

    /// Shift coefficients reduced into `{0, 1}`.
    pub fn shift_mod2(&self) -> Vec<i64> {
        self.shift_zeta.iter().map(|c| c.rem_euclid(2)).collect()
    }

    pub fn shift(&self) -> CartanVector {
        zeta_duals(&self.group).combine(&self.shift_zeta)
    }

    pub fn is_sigma_rho(&self) -> bool {
        self.shift_zeta.iter().all(|&c| c == 0)
    }

    pub fn name(&self) -> String {
        let nz: Vec<(usize, i64)> =
            self.shift_zeta.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        match nz.as_slice() {
            [] => "sigma_rho".into(),
            [(i, 1)] => format!("sigma_rho,{}", i + 1),
            _ => {
                let terms: Vec<String> = nz
                    .iter()
                    .map(|&(i, c)| if c == 1 { format!("z{}", i + 1) } else { format!("{c}z{}", i + 1) })
                    .collect();
                format!("Ad(exp pi({})) o sigma_rho", terms.join("+"))
            }
        }
    }

    /// Entry `(a, b)` of the input moves to `(a', b')` with the given sign, before the shift.
    fn base_target(&self, a: usize, b: usize) -> (usize, usize, i64) {
        let g = &self.group;
        match g.family {
            Family::SO => {
                let n = g.coords();
                let p = |x: usize| match x {
                    x if x == n - 1 => 2 * n - 1,
                    x if x == 2 * n - 1 => n - 1,
                    x => x,
                };
                let t = |x: usize| if x == n - 1 || x == 2 * n - 1 { 1 } else { -1 };
                (p(a), p(b), t(a) * t(b))
            }
            Family::SU => {
                let m = g.size;
                let j = |x: usize| if m.is_multiple_of(2) && x >= m / 2 { -1 } else { 1 };
                (m - 1 - b, m - 1 - a, -j(a) * j(b))
            }
        }
    }

    /// For each flat source index `a * n + b`, the flat target index and sign of `σ` on the Lie algebra.
    pub fn entry_action(&self) -> Result<Vec<(usize, i64)>> {
        let n = self.group.size;
        let signs = self.shift_signs()?;
        let mut out = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (a2, b2, s) = self.base_target(a, b);
                out.push((a2 * n + b2, s * signs[a2 * n + b2]));
            }
        }
        Ok(out)
    }

    /// Sign `(-1)^{level}` of the shift on each entry.
    fn shift_signs(&self) -> Result<Vec<i64>> {
        let g = &self.group;
        let xi = self.shift();
        let n = g.size;
        let mut out = vec![1; n * n];
        for a in 0..n {
            for b in 0..n {
                let l = g.entry_level(&xi, a, b);
                let l =
                    as_integer(&l).ok_or_else(|| Error::ShiftNotInLattice(format!("exp 2 pi {xi} is not central")))?;
                out[a * n + b] = if l.rem_euclid(2) == 0 { 1 } else { -1 };
            }
        }
        Ok(out)
    }

    /// The realized action `X ↦ σ(X)` on matrices in the group's basis.
    pub fn apply<E: Ring>(&self, m: &AlgMatrix<E>) -> Result<AlgMatrix<E>> {
        let g = &self.group;
        if m.size() != g.size || m.basis() != g.basis() {
            return Err(Error::BasisMismatch(format!("matrix does not belong to {g}")));
        }
        let n = g.size;
        let signs = self.shift_signs()?;
        let mut out = AlgMatrix::zero(n, g.basis());
        for a in 0..n {
            for b in 0..n {
                let x = m.get(a, b);
                if x.is_zero() {
                    continue;
                }
                let (a2, b2, s) = self.base_target(a, b);
                let s = s * signs[a2 * n + b2];
                out.set(a2, b2, if s > 0 { x.clone() } else { x.negate() });
            }
        }
        Ok(out)
    }

    pub fn fixes(&self, xi: &CartanVector) -> bool {
        let m = xi.matrix(&self.group);
        self.apply(&m).is_ok_and(|s| s == m)
    }

    /// Matrix of σ on the span of `elems`, in their coordinates; requires σ to preserve the span.
    fn restricted_matrix(&self, elems: &[BasisElement]) -> Result<Vec<Vector>> {
        let g = &self.group;
        let d = elems.len();
        let mut cols = Vec::with_capacity(d);
        for e in elems {
            let img = self.apply(&e.matrix)?;
            let full = g.coords_of(&img);
            let local: Vector = elems.iter().map(|f| full[f.index].clone()).collect();
            let covered: usize = elems.iter().filter(|f| !full[f.index].is_zero()).count();
            if covered != full.iter().filter(|x| !x.is_zero()).count() {
                return Err(Error::XiNotSigmaFixed);
            }
            cols.push(local);
        }
        Ok((0..d).map(|r| (0..d).map(|c| cols[c][r].clone()).collect()).collect())
    }

    /// `(𝔨, 𝔪)` bases of `σ` restricted to the span of `elems`.
    pub fn split_on(&self, elems: &[BasisElement]) -> Result<(Vec<ConstMatrix>, Vec<ConstMatrix>)> {
        let s = self.restricted_matrix(elems)?;
        let d = elems.len();
        let shifted = |lam: i64| -> Vec<Vector> {
            s.iter()
                .enumerate()
                .map(|(r, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(c, x)| if r == c { x - &GaussianRational::from_int(lam) } else { x.clone() })
                        .collect()
                })
                .collect()
        };
        let to_mats = |vs: Vec<Vector>| -> Vec<ConstMatrix> {
            vs.into_iter()
                .map(|mut v| {
                    normalize(&mut v);
                    let mut m = AlgMatrix::zero(self.group.size, self.group.basis());
                    for (c, e) in v.iter().zip(elems) {
                        if !c.is_zero() {
                            m = m.add(&e.matrix.scale(c)).unwrap();
                        }
                    }
                    m
                })
                .collect()
        };
        let k = to_mats(nullspace(&shifted(1), d));
        let m = to_mats(nullspace(&shifted(-1), d));
        Ok((k, m))
    }

    /// ±1-eigenspaces `(𝔨_σ^ℂ, 𝔪_σ^ℂ)` on all of `𝔤^ℂ`.
    pub fn eigenspace_split(&self) -> Result<(Vec<ConstMatrix>, Vec<ConstMatrix>)> {
        self.split_on(&self.group.lie_basis())
    }

    /// `(𝔨_τ, 𝔪_τ)` for `τ = Ad(exp πξ) ∘ σ` assembled level by level from the ξ-grading.
    pub fn tau_split_via_grading(&self, xi: &CartanVector) -> Result<(Vec<ConstMatrix>, Vec<ConstMatrix>)> {
        if !self.fixes(xi) {
            return Err(Error::XiNotSigmaFixed);
        }
        let gr = grading_of(&self.group, xi)?;
        let (mut kt, mut mt) = (Vec::new(), Vec::new());
        for (j, elems) in &gr.levels {
            let (k, m) = self.split_on(elems)?;
            if j.rem_euclid(2) == 0 {
                kt.extend(k);
                mt.extend(m);
            } else {
                kt.extend(m);
                mt.extend(k);
            }
        }
        Ok((kt, mt))
    }
}

/// Standalone form of [`Involution::eigenspace_split`].
pub fn eigenspace_split(sig: &Involution) -> Result<(Vec<ConstMatrix>, Vec<ConstMatrix>)> {
    sig.eigenspace_split()
}

/// Standalone form of [`Involution::tau_split_via_grading`].
pub fn tau_split_via_grading(sig: &Involution, xi: &CartanVector) -> Result<(Vec<ConstMatrix>, Vec<ConstMatrix>)> {
    sig.tau_split_via_grading(xi)
}

/// Standalone form of [`Involution::apply`].
pub fn realize_involution<E: Ring>(sig: &Involution, m: &AlgMatrix<E>) -> Result<AlgMatrix<E>> {
    sig.apply(m)
}

#[derive(Serialize, Deserialize)]
struct InvolutionJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shift_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    shift_zeta: Option<Vec<i64>>,
}

impl Involution {
    /// JSON form: `{"shift_index": i}` or `{"shift_index": null}`, or `{"shift_zeta": [..]}` for general shifts.
    pub fn to_json(&self) -> serde_json::Value {
        let nz: Vec<usize> = (0..self.shift_zeta.len()).filter(|&i| self.shift_zeta[i] != 0).collect();
        match nz.as_slice() {
            [] => serde_json::json!({ "shift_index": null }),
            [i] if self.shift_zeta[*i] == 1 => serde_json::json!({ "shift_index": i + 1 }),
            _ => serde_json::json!({ "shift_zeta": self.shift_zeta }),
        }
    }

    pub fn from_json(g: &GroupSpec, v: &serde_json::Value) -> Result<Self> {
        let j: InvolutionJson = serde_json::from_value(v.clone()).map_err(|e| Error::Schema(format!("sigma: {e}")))?;
        match (j.shift_index, j.shift_zeta) {
            (_, Some(c)) => Self::with_shift(g, c),
            (Some(i), None) => Self::sigma_rho_i(g, i),
            (None, None) => Ok(Self::sigma_rho(g)),
        }
    }
}

impl std::fmt::Display for Involution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}
