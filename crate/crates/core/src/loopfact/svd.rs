//! One-sided Jacobi singular value decomposition for complex matrices.

use num_complex::Complex;

use super::laurent::CMat;
use crate::Real;

/// `m = U diag(σ) Vᴴ` with `σ` sorted in decreasing order.
///
/// Columns of `u` belonging to zero singular values are zero; `v` is always unitary.
pub(crate) struct Svd<T: Real> {
    pub u: CMat<T>,
    pub sigma: Vec<T>,
    pub v: CMat<T>,
}

const MAX_SWEEPS: usize = 80;

pub(crate) fn svd<T: Real>(m: &CMat<T>) -> Svd<T> {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut v = CMat::<T>::identity(cols, cols);
    let eps = T::default_epsilon();
    let negligible = (eps * m.norm()).powi(2);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in p + 1..cols {
                let alpha = a.column(p).norm_squared();
                let beta = a.column(q).norm_squared();
                if alpha <= negligible || beta <= negligible {
                    continue;
                }
                let gamma = a.column(p).dotc(&a.column(q));
                let g = nalgebra::ComplexField::modulus(gamma);
                if g == T::zero() || g <= eps * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase = gamma.unscale(g).conj();
                let two = T::one() + T::one();
                let zeta = (beta - alpha) / (two * g);
                let sign = if zeta >= T::zero() { T::one() } else { -T::one() };
                let t = sign / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                rotate(&mut a, p, q, phase, c, s);
                rotate(&mut v, p, q, phase, c, s);
            }
        }
        if !rotated {
            break;
        }
    }
    let norms: Vec<T> = (0..cols).map(|j| a.column(j).norm()).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap().then(i.cmp(&j)));
    let mut u = CMat::zeros(rows, cols);
    let mut vs = CMat::zeros(cols, cols);
    let mut sigma = Vec::with_capacity(cols);
    for (k, &j) in order.iter().enumerate() {
        let s = norms[j];
        if s > T::zero() {
            u.set_column(k, &a.column(j).unscale(s));
        }
        vs.set_column(k, &v.column(j));
        sigma.push(s);
    }
    Svd { u, sigma, v: vs }
}

/// `(x_p, x_q) ← (c x_p − s w x_q, s x_p + c w x_q)` with the unit phase `w` making `⟨x_p, w x_q⟩` real.
fn rotate<T: Real>(m: &mut CMat<T>, p: usize, q: usize, phase: Complex<T>, c: T, s: T) {
    for i in 0..m.nrows() {
        let xp = m[(i, p)];
        let xq = m[(i, q)] * phase;
        m[(i, p)] = xp.scale(c) - xq.scale(s);
        m[(i, q)] = xp.scale(s) + xq.scale(c);
    }
}

/// Singular values in decreasing order.
pub(crate) fn singular_values<T: Real>(m: &CMat<T>) -> Vec<T> {
    svd(m).sigma
}
