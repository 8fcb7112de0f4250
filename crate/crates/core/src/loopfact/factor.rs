use nalgebra::{ColPivQR, DMatrix};
use num_complex::Complex;

use super::laurent::{gamma_exponents, CMat, LaurentLoop};
use crate::classify::preceq;
use crate::error::{Error, Result};
use crate::exactnum::RationalFunction;
use crate::liealg::{CartanVector, FnMatrix};
use crate::weierstrass::{exp_c, sone_invariant_flag, ExtendedSolutionData};
use crate::Real;

/// Numerical knobs of the factorization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FactorOptions {
    /// Extra λ-powers appended to the default window.
    pub extra_window: usize,
    /// Relative singular-value cutoff for the span of the generators.
    pub rank_tol: f64,
    /// Absolute singular-value cutoff when extracting `W ⊖ λW`.
    pub fiber_tol: f64,
    /// Smallest admissible singular value of `F(1)`.
    pub basepoint_tol: f64,
}

impl Default for FactorOptions {
    fn default() -> Self {
        Self { extra_window: 0, rank_tol: 1e-10, fiber_tol: 1e-8, basepoint_tol: 1e-10 }
    }
}

fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("float conversion")
}

/// Tolerance `x`, floored at a multiple of the machine epsilon of `T`.
fn tol<T: Real>(x: f64) -> T {
    real::<T>(x).max(T::default_epsilon() * real(1000.0))
}

fn cx<T: Real>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}

/// `exp C` as a polynomial in λ, ready to be evaluated at many points.
#[derive(Clone, Debug)]
pub struct LoopAssembler {
    size: usize,
    exponents: Vec<i64>,
    exp_coeffs: Vec<FnMatrix>,
    coeff_fns: Vec<RationalFunction>,
}

impl LoopAssembler {
    pub fn new(data: &ExtendedSolutionData) -> Result<Self> {
        let e = exp_c(data)?;
        let deg = e.lambda_degree().unwrap_or(0);
        Ok(Self {
            size: data.group.size,
            exponents: gamma_exponents(&data.group, &data.xi_cartan())?,
            exp_coeffs: (0..=deg).map(|k| e.lambda_coeff(k)).collect(),
            coeff_fns: data.coeffs.iter().map(|c| c.f.clone()).collect(),
        })
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// `exp C(z0)` as a loop with nonnegative powers.
    pub fn exp_c_at<T: Real>(&self, z0: Complex<T>) -> Result<LaurentLoop<T>> {
        for f in &self.coeff_fns {
            f.eval(z0)?;
        }
        let n = self.size;
        let mut out = LaurentLoop::zero(n);
        for (k, m) in self.exp_coeffs.iter().enumerate() {
            let mut v = CMat::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    v[(i, j)] = m.get(i, j).eval(z0)?;
                }
            }
            out.add_term(k as i64, &v);
        }
        Ok(out)
    }

    /// `exp C(z0) · γ_ξ`.
    pub fn at<T: Real>(&self, z0: Complex<T>) -> Result<LaurentLoop<T>> {
        Ok(self.exp_c_at(z0)?.mul_diag_powers(&self.exponents))
    }

    /// `exp C(z0) · diag(λ^{d_a})` for other exponents.
    pub fn at_with<T: Real>(&self, z0: Complex<T>, d: &[i64]) -> Result<LaurentLoop<T>> {
        Ok(self.exp_c_at(z0)?.mul_diag_powers(d))
    }
}

pub fn loop_assemble<T: Real>(data: &ExtendedSolutionData, z0: Complex<T>) -> Result<LaurentLoop<T>> {
    LoopAssembler::new(data)?.at(z0)
}

/// Window truncation of `W = L·H₊`: an orthonormal basis of the coefficients
/// in λ-powers `[window.0, window.1)`, stacked block by block.
#[derive(Clone, Debug)]
pub struct WindowSubspace<T: Real> {
    pub window: (i64, i64),
    pub basis: CMat<T>,
    pub n: usize,
}

impl<T: Real> WindowSubspace<T> {
    pub fn len(&self) -> usize {
        (self.window.1 - self.window.0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.basis.ncols() == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Distance of `λW` (truncated to the window) from `W`.
    pub fn stability_residual(&self) -> T {
        let n = self.n;
        let rows = self.basis.nrows();
        let mut shifted = CMat::zeros(rows, self.dim());
        shifted.rows_mut(n, rows - n).copy_from(&self.basis.rows(0, rows - n));
        let proj = &self.basis * (self.basis.adjoint() * &shifted);
        (shifted - proj).norm()
    }
}

fn singular_values_sorted<T: Real>(m: &CMat<T>) -> (CMat<T>, Vec<(usize, T)>) {
    let svd = super::svd::svd(m);
    (svd.u, svd.sigma.into_iter().enumerate().collect())
}

fn check_invertible<T: Real>(l: &LaurentLoop<T>) -> Result<()> {
    for theta in [0.3, 1.7, 2.9] {
        let t: T = real(theta);
        let lam = Complex::new(t.cos(), t.sin());
        let m = l.eval(lam);
        let scale = m.column_iter().map(|c| c.norm()).fold(T::one(), |a, b| a * b);
        if scale == T::zero() || nalgebra::ComplexField::modulus(m.determinant()) <= tol::<T>(1e-12) * scale {
            return Err(Error::SingularLoop);
        }
    }
    Ok(())
}

pub fn model_subspace<T: Real>(l: &LaurentLoop<T>) -> Result<WindowSubspace<T>> {
    model_subspace_with(l, &FactorOptions::default())
}

pub fn model_subspace_with<T: Real>(l: &LaurentLoop<T>, opts: &FactorOptions) -> Result<WindowSubspace<T>> {
    let (lo, hi) = l.span().ok_or(Error::SingularLoop)?;
    check_invertible(l)?;
    let n = l.size();
    let len = (2 * (hi - lo) + 2) as usize + opts.extra_window;
    let mut gens = CMat::zeros(n * len, n * len);
    for k in 0..len {
        for (&p, m) in l.terms() {
            let pos = (p - lo) as usize + k;
            if pos < len {
                gens.view_mut((pos * n, k * n), (n, n)).copy_from(m);
            }
        }
    }
    let (u, s) = singular_values_sorted(&gens);
    let smax = s.first().map_or(T::zero(), |x| x.1);
    let keep: Vec<usize> = s.iter().filter(|x| x.1 > tol::<T>(opts.rank_tol) * smax).map(|x| x.0).collect();
    let basis = CMat::from_columns(&keep.iter().map(|&i| u.column(i).into_owned()).collect::<Vec<_>>());
    let basis = if keep.is_empty() { CMat::zeros(n * len, 0) } else { basis };
    Ok(WindowSubspace { window: (lo, lo + len as i64), basis, n })
}

/// Orthonormal basis of `W ⊖ λW`, stacked over λ-powers `window.0 ..= window.1`.
pub fn fiber<T: Real>(ws: &WindowSubspace<T>, opts: &FactorOptions) -> Result<CMat<T>> {
    let n = ws.n;
    let rows = n * (ws.len() + 1);
    let r = ws.dim();
    let mut s = CMat::zeros(rows, r + n);
    s.view_mut((0, 0), (n * ws.len(), r)).copy_from(&ws.basis);
    s.view_mut((n * ws.len(), r), (n, n)).copy_from(&CMat::identity(n, n));
    let mut q = CMat::zeros(rows, r);
    q.view_mut((n, 0), (n * ws.len(), r)).copy_from(&ws.basis);
    let p = &s - &q * (q.adjoint() * &s);
    let (_, sv) = singular_values_sorted(&p);
    let found = sv.iter().filter(|x| x.1 > tol::<T>(opts.fiber_tol)).count();
    if found != n {
        return Err(Error::FiberDimensionMismatch { expected: n, found });
    }
    let qr = ColPivQR::new(p);
    Ok(qr.q().columns(0, n).into_owned())
}

/// Assembles the stacked fiber basis into `F(λ)`.
pub fn fiber_loop<T: Real>(f: &CMat<T>, low: i64, n: usize) -> LaurentLoop<T> {
    let blocks = f.nrows() / n;
    LaurentLoop::from_terms(n, (0..blocks).map(|k| (low + k as i64, f.rows(k * n, n).into_owned())))
}

pub fn unitary_part<T: Real>(l: &LaurentLoop<T>) -> Result<LaurentLoop<T>> {
    unitary_part_with(l, &FactorOptions::default())
}

pub fn unitary_part_with<T: Real>(l: &LaurentLoop<T>, opts: &FactorOptions) -> Result<LaurentLoop<T>> {
    let n = l.size();
    let ws = model_subspace_with(l, opts)?;
    let f = fiber(&ws, opts)?;
    let fl = fiber_loop(&f, ws.window.0, n);
    let f1 = fl.eval(cx(T::one()));
    let (_, sv) = singular_values_sorted(&f1);
    if sv.last().is_none_or(|x| x.1 < tol::<T>(opts.basepoint_tol)) {
        return Err(Error::BasepointSingular);
    }
    let inv = f1.try_inverse().ok_or(Error::BasepointSingular)?;
    let mut phi = LaurentLoop::zero(n);
    for (&k, m) in fl.terms() {
        phi.add_term(k, &(m * &inv));
    }
    let mut phi = phi.pruned(real(1e-13));
    phi.set_based(true);
    Ok(phi)
}

pub fn dress<T: Real>(data: &ExtendedSolutionData, z0: Complex<T>) -> Result<LaurentLoop<T>> {
    unitary_part(&loop_assemble(data, z0)?)
}

pub fn evaluate<T: Real>(phi: &LaurentLoop<T>, lambda0: Complex<T>) -> CMat<T> {
    phi.eval(lambda0)
}

/// `unitary_part(exp C(z0)·γ_{ξ₂})`; `ξ₂` must be comparable with `ξ` under `⪯`.
pub fn morphism_u<T: Real>(data: &ExtendedSolutionData, xi2: &CartanVector, z0: Complex<T>) -> Result<LaurentLoop<T>> {
    let g = &data.group;
    let xi = data.xi_cartan();
    if !preceq(g, &xi, xi2)? && !preceq(g, xi2, &xi)? {
        return Err(Error::OrderViolation(format!("{xi} and {xi2} are not comparable")));
    }
    let d2 = gamma_exponents(g, xi2)?;
    unitary_part(&LoopAssembler::new(data)?.at_with(z0, &d2)?)
}

/// Orthonormal basis of the column span of `m`.
fn orthonormal_span<T: Real>(m: &CMat<T>) -> CMat<T> {
    let (u, s) = singular_values_sorted(m);
    let smax = s.first().map_or(T::zero(), |x| x.1);
    let cols: Vec<_> = s.iter().filter(|x| x.1 > real::<T>(1e-10) * smax).map(|x| u.column(x.0).into_owned()).collect();
    if cols.is_empty() {
        CMat::zeros(m.nrows(), 0)
    } else {
        CMat::from_columns(&cols)
    }
}

/// `Σ_t λ^t π_{A_t ⊖ A_{t−1}}` built from the S¹-invariant flag at `z0`.
pub fn flag_loop<T: Real>(data: &ExtendedSolutionData, z0: Complex<T>) -> Result<LaurentLoop<T>> {
    let steps = sone_invariant_flag(data)?;
    let n = data.group.size;
    let top = *gamma_exponents(&data.group, &data.xi_cartan())?.iter().max().unwrap_or(&0);
    let mut out = LaurentLoop::zero(n);
    let mut prev = CMat::zeros(n, n);
    for st in &steps {
        let mut m = CMat::zeros(n, st.vectors.len());
        for (j, v) in st.vectors.iter().enumerate() {
            for (i, f) in v.iter().enumerate() {
                m[(i, j)] = f.eval(z0)?;
            }
        }
        let q = orthonormal_span(&m);
        let proj = &q * q.adjoint();
        out.add_term(st.level, &(&proj - &prev));
        prev = proj;
    }
    out.add_term(top, &(DMatrix::identity(n, n) - prev));
    out.set_based(true);
    Ok(out)
}
