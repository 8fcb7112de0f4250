use nalgebra::DMatrix;
use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::sigma::{numeric_component, sigma_group};
use crate::classify::SymmetricSpaceId;
use crate::error::{Error, Result};
use crate::exactnum::RationalFunction;
use crate::liealg::{Family, GroupSpec, Vector};
use crate::loopfact::{CMat, LaurentLoop};
use crate::rootdata::Involution;
use crate::Real;

/// Outcome of one numeric check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub max_residual: f64,
    pub pass: bool,
    pub order: Option<f64>,
    pub component: Option<String>,
    pub samples: usize,
    pub skipped: usize,
}

impl Report {
    pub fn new(check: &str, max_residual: f64, tol: f64, samples: usize) -> Self {
        Self {
            check: check.to_string(),
            max_residual,
            pass: max_residual <= tol,
            order: None,
            component: None,
            samples,
            skipped: 0,
        }
    }
}

pub(crate) fn f64_of<T: Real>(x: T) -> f64 {
    nalgebra::try_convert::<T, f64>(x).unwrap_or(f64::NAN)
}

fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("float conversion")
}

fn one<T: Real>() -> Complex<T> {
    Complex::new(T::one(), T::zero())
}

fn inverse<T: Real>(m: &CMat<T>) -> Result<CMat<T>> {
    m.clone().try_inverse().ok_or(Error::SingularLoop)
}

/// `max ‖σ(Φ(−λ)Φ(−1)⁻¹) − Φ(λ)‖` over loops and λ samples.
pub fn check_tsigma<T: Real>(
    loops: &[LaurentLoop<T>],
    sig: &Involution,
    lambdas: &[Complex<T>],
    tol: f64,
) -> Result<Report> {
    let mut worst = T::zero();
    for phi in loops {
        let m1 = inverse(&phi.eval(-one::<T>()))?;
        for &lam in lambdas {
            let lhs = sigma_group(sig, &(phi.eval(-lam) * &m1))?;
            worst = worst.max((lhs - phi.eval(lam)).norm());
        }
    }
    Ok(Report::new("tsigma", f64_of(worst), tol, loops.len() * lambdas.len()))
}

/// `max ‖σ(φ)φ − I‖` and agreement of the connected component with `expected`.
pub fn check_psigma<T: Real>(
    g: &GroupSpec,
    sig: &Involution,
    phis: &[CMat<T>],
    expected: Option<SymmetricSpaceId>,
    tol: f64,
) -> Result<Report> {
    let n = g.size;
    let mut worst = T::zero();
    let mut comps = Vec::with_capacity(phis.len());
    for phi in phis {
        worst = worst.max((sigma_group(sig, phi)? * phi - CMat::identity(n, n)).norm());
        comps.push(numeric_component(g, sig, phi)?);
    }
    let mut r = Report::new("psigma", f64_of(worst), tol, phis.len());
    let first = comps.first().cloned().flatten();
    let agree = comps.iter().all(|c| *c == first);
    r.component = first.as_ref().map(|c| c.to_string());
    r.pass &= agree && first.is_some() && expected.is_none_or(|e| first == Some(e));
    Ok(r)
}

/// Finite-difference residual of `∂̄(φ⁻¹∂φ) + ∂(φ⁻¹∂̄φ)` at `z`.
fn harmonic_residual<T: Real, F>(phi: &F, z: Complex<T>, h: T) -> Result<T>
where
    F: Fn(Complex<T>) -> Result<CMat<T>>,
{
    let hx = Complex::new(h, T::zero());
    let hy = Complex::new(T::zero(), h);
    let c = phi(z)?;
    let (xp, xm, yp, ym) = (phi(z + hx)?, phi(z - hx)?, phi(z + hy)?, phi(z - hy)?);
    let two = Complex::new(real::<T>(2.0) * h, T::zero());
    let hh = Complex::new(h * h, T::zero());
    let px = (&xp - &xm) / two;
    let py = (&yp - &ym) / two;
    let lap = (&xp + &xm + &yp + &ym - &c * Complex::new(real(4.0), T::zero())) / hh;
    let ci = inverse(&c)?;
    let div = &ci * (lap - &px * &ci * &px - &py * &ci * &py);
    Ok(div.norm() * real(0.5))
}

/// Residuals of the harmonic-map equation for each step `h`, with the fitted order.
pub fn check_harmonic<T: Real, F>(phi: F, points: &[Complex<T>], hs: &[T], min_order: f64) -> Result<Report>
where
    F: Fn(Complex<T>) -> Result<CMat<T>> + Sync,
{
    let mut rs = Vec::with_capacity(hs.len());
    for &h in hs {
        let vals: Vec<Result<T>> = points.par_iter().map(|&z| harmonic_residual(&phi, z, h)).collect();
        let mut worst = T::zero();
        for v in vals {
            worst = worst.max(v?);
        }
        rs.push(f64_of(worst));
    }
    let floor = 1e-9;
    let mut r = Report::new("harmonic", rs.iter().copied().fold(0.0, f64::max), f64::INFINITY, points.len());
    if rs.iter().all(|x| *x <= floor) {
        r.pass = true;
        return Ok(r);
    }
    let xs: Vec<f64> = hs.iter().map(|h| f64_of(*h).ln()).collect();
    let ys: Vec<f64> = rs.iter().map(|x| x.max(1e-300).ln()).collect();
    let order = fit_slope(&xs, &ys);
    r.order = Some(order);
    r.pass = order >= min_order;
    Ok(r)
}

/// Least-squares slope of `ys` against `xs`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

/// Flatness of `(1−λ⁻¹)⁻¹ Φ(λ)⁻¹ ∂_z Φ(λ)`: its spread over the λ samples.
pub fn check_flatness<T: Real, F>(
    dress: F,
    points: &[Complex<T>],
    lambdas: &[Complex<T>],
    h: T,
    tol: f64,
) -> Result<Report>
where
    F: Fn(Complex<T>) -> Result<LaurentLoop<T>> + Sync,
{
    let vals: Vec<Result<T>> = points
        .par_iter()
        .map(|&z| {
            let hx = Complex::new(h, T::zero());
            let hy = Complex::new(T::zero(), h);
            let (xp, xm, yp, ym, c) = (dress(z + hx)?, dress(z - hx)?, dress(z + hy)?, dress(z - hy)?, dress(z)?);
            let four_h = Complex::new(real::<T>(4.0) * h, T::zero());
            let i = Complex::new(T::zero(), T::one());
            let mut forms = Vec::with_capacity(lambdas.len());
            for &lam in lambdas {
                let dz = ((xp.eval(lam) - xm.eval(lam)) - (yp.eval(lam) - ym.eval(lam)) * i) / four_h;
                let a = inverse(&c.eval(lam))? * dz / (one::<T>() - one::<T>() / lam);
                forms.push(a);
            }
            let mut worst = T::zero();
            for a in &forms[1..] {
                worst = worst.max((a - &forms[0]).norm());
            }
            Ok(worst)
        })
        .collect();
    let mut worst = T::zero();
    for v in vals {
        worst = worst.max(v?);
    }
    Ok(Report::new("flatness", f64_of(worst), tol, points.len()))
}

/// Largest coefficient difference between loops sampled at different points.
pub fn check_constant_loop<T: Real>(loops: &[LaurentLoop<T>], tol: f64) -> Report {
    let mut worst = T::zero();
    for (i, a) in loops.iter().enumerate() {
        for b in &loops[i + 1..] {
            worst = worst.max(a.max_coeff_diff(b));
        }
    }
    Report::new("constant_loop", f64_of(worst), tol, loops.len())
}

/// `Φ(λ)ᵀ S Φ(λ) = S` for SO, unitarity and `det = 1` for SU.
pub fn check_group<T: Real>(g: &GroupSpec, loops: &[LaurentLoop<T>], lambdas: &[Complex<T>], tol: f64) -> Report {
    let n = g.size;
    let mut s = CMat::<T>::zeros(n, n);
    for a in 0..n {
        s[(a, g.conj_index(a))] = one();
    }
    let mut worst = T::zero();
    for phi in loops {
        for &lam in lambdas {
            let m = phi.eval(lam);
            let e = match g.family {
                Family::SO => (m.transpose() * &s * &m - &s).norm(),
                Family::SU => (m.adjoint() * &m - CMat::identity(n, n))
                    .norm()
                    .max(nalgebra::ComplexField::modulus(m.determinant() - one::<T>())),
            };
            worst = worst.max(e);
        }
    }
    Report::new("group", f64_of(worst), tol, loops.len() * lambdas.len())
}

fn orthonormal<T: Real>(m: &CMat<T>, tol: T) -> CMat<T> {
    if m.ncols() == 0 {
        return m.clone();
    }
    let svd = crate::loopfact::svd::svd(m);
    let u = svd.u;
    let smax = svd.sigma.first().copied().unwrap_or(T::zero());
    let cols: Vec<_> =
        svd.sigma.iter().enumerate().filter(|(_, s)| **s > tol * smax).map(|(i, _)| u.column(i).into_owned()).collect();
    if cols.is_empty() {
        CMat::zeros(m.nrows(), 0)
    } else {
        CMat::from_columns(&cols)
    }
}

/// Orthonormal basis of the joint span of two orthonormal families' intersection.
fn intersect<T: Real>(a: &CMat<T>, b: &CMat<T>, tol: T) -> CMat<T> {
    if a.ncols() == 0 || b.ncols() == 0 {
        return CMat::zeros(a.nrows(), 0);
    }
    let resid = a - b * (b.adjoint() * a);
    let svd = crate::loopfact::svd::svd(&resid);
    let cols: Vec<_> =
        svd.sigma.iter().enumerate().filter(|(_, s)| **s < tol).map(|(i, _)| a * svd.v.column(i)).collect();
    if cols.is_empty() {
        CMat::zeros(a.nrows(), 0)
    } else {
        orthonormal(&CMat::from_columns(&cols), tol)
    }
}

/// Orthogonal complement of the column span of `m`.
fn complement<T: Real>(m: &CMat<T>, tol: T) -> CMat<T> {
    let n = m.nrows();
    let q = orthonormal(m, tol);
    orthonormal(&(CMat::identity(n, n) - &q * q.adjoint()), tol)
}

/// Sine of the largest principal angle between two subspaces of equal dimension.
fn subspace_gap<T: Real>(a: &CMat<T>, b: &CMat<T>) -> T {
    if a.ncols() != b.ncols() {
        return T::one();
    }
    let r = a - b * (b.adjoint() * a);
    crate::loopfact::svd::singular_values(&r).first().copied().unwrap_or(T::zero())
}

/// Bilinear pairing `Σ x_a y_{ā}` of the orthogonal structure.
fn pairing(g: &GroupSpec, x: &[RationalFunction], y: &[RationalFunction]) -> RationalFunction {
    (0..g.size).fold(RationalFunction::zero(), |acc, a| &acc + &(&x[a] * &y[g.conj_index(a)]))
}

/// Compares the line `φ(z)` with `R ∩ (A ⊕ Ā)^⊥` and checks `∂A ⊆ Ā^⊥` exactly.
pub fn cross_check_ras<T: Real>(
    g: &GroupSpec,
    samples: &[(Complex<T>, CMat<T>)],
    r: &[Vector],
    a: &[Vec<RationalFunction>],
    tol: f64,
) -> Result<Report> {
    if a.is_empty() {
        return Err(Error::Schema("the flag A is empty".into()));
    }
    let n = g.size;
    let mut exact_ok = true;
    for x in a {
        let dx: Vec<RationalFunction> = x.iter().map(|f| f.derivative()).collect();
        for y in a {
            exact_ok &= pairing(g, x, y).is_zero() && pairing(g, &dx, y).is_zero();
        }
    }
    let t: T = real(1e-8);
    let rmat = CMat::from_fn(n, r.len(), |i, j| r[j][i].to_complex::<T>());
    let rq = orthonormal(&rmat, t);
    let mut worst = T::zero();
    for (z, phi) in samples {
        let fixed = complement(&(phi - CMat::identity(n, n)).adjoint(), t);
        let line = intersect(&rq, &fixed, real(1e-6));
        let mut av = CMat::zeros(n, 2 * a.len());
        for (j, v) in a.iter().enumerate() {
            for (i, f) in v.iter().enumerate() {
                let val = f.eval(*z)?;
                av[(i, j)] = val;
                av[(g.conj_index(i), a.len() + j)] = val.conj();
            }
        }
        let perp = complement(&av, t);
        let want = intersect(&rq, &perp, real(1e-6));
        worst = worst.max(if line.ncols() == 0 { T::one() } else { subspace_gap(&line, &want) });
    }
    let mut rep = Report::new("ras", f64_of(worst), tol, samples.len());
    rep.pass &= exact_ok;
    Ok(rep)
}

/// Subspace of fixed vectors of a matrix, as a convenience for callers.
pub fn fixed_space<T: Real>(phi: &CMat<T>) -> CMat<T> {
    let n = phi.nrows();
    complement(&(phi - DMatrix::identity(n, n)).adjoint(), real(1e-8))
}
