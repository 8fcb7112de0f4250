use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::liealg::{as_integer, CartanVector, GroupSpec};
use crate::Real;

pub type CMat<T> = DMatrix<Complex<T>>;

/// Finite Laurent series `Σ λ^k M_k` of square complex matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentLoop<T: Real> {
    terms: BTreeMap<i64, CMat<T>>,
    size: usize,
    based: bool,
}

impl<T: Real> LaurentLoop<T> {
    pub fn zero(size: usize) -> Self {
        Self { terms: BTreeMap::new(), size, based: false }
    }

    pub fn constant(m: CMat<T>) -> Self {
        let mut l = Self::zero(m.nrows());
        l.add_term(0, &m);
        l
    }

    pub fn identity(size: usize) -> Self {
        let mut l = Self::constant(CMat::identity(size, size));
        l.based = true;
        l
    }

    pub fn from_terms(size: usize, terms: impl IntoIterator<Item = (i64, CMat<T>)>) -> Self {
        let mut l = Self::zero(size);
        for (k, m) in terms {
            l.add_term(k, &m);
        }
        l
    }

    /// Adds `λ^k m`, dropping terms that cancel exactly.
    pub fn add_term(&mut self, k: i64, m: &CMat<T>) {
        assert_eq!(m.nrows(), self.size, "loop size mismatch");
        let e = self.terms.entry(k).or_insert_with(|| CMat::zeros(m.nrows(), m.ncols()));
        *e += m;
        if e.iter().all(|x| *x == Complex::new(T::zero(), T::zero())) {
            self.terms.remove(&k);
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_based(&self) -> bool {
        self.based
    }

    pub(crate) fn set_based(&mut self, based: bool) {
        self.based = based;
    }

    pub fn terms(&self) -> &BTreeMap<i64, CMat<T>> {
        &self.terms
    }

    pub fn term(&self, k: i64) -> CMat<T> {
        self.terms.get(&k).cloned().unwrap_or_else(|| CMat::zeros(self.size, self.size))
    }

    /// Lowest and highest λ-powers present; `None` for the zero loop.
    pub fn span(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    pub fn eval(&self, lambda: Complex<T>) -> CMat<T> {
        let mut out = CMat::zeros(self.size, self.size);
        for (&k, m) in &self.terms {
            out += m * lambda.powi(k as i32);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.size);
        for (&j, a) in &self.terms {
            for (&k, b) in &o.terms {
                out.add_term(j + k, &(a * b));
            }
        }
        out
    }

    /// Right multiplication by `diag(λ^{d_a})`.
    pub fn mul_diag_powers(&self, d: &[i64]) -> Self {
        let mut out = Self::zero(self.size);
        for (&k, m) in &self.terms {
            for (a, &da) in d.iter().enumerate() {
                let mut col = CMat::zeros(self.size, self.size);
                col.set_column(a, &m.column(a));
                out.add_term(k + da, &col);
            }
        }
        out
    }

    /// Largest Frobenius norm of the coefficientwise difference.
    pub fn max_coeff_diff(&self, o: &Self) -> T {
        let mut keys: Vec<i64> = self.terms.keys().chain(o.terms.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter().map(|k| (self.term(k) - o.term(k)).norm()).fold(T::zero(), |a, b| a.max(b))
    }

    /// Drops coefficients whose norm is at most `tol` times the largest one.
    pub fn pruned(&self, tol: T) -> Self {
        let max = self.terms.values().map(|m| m.norm()).fold(T::zero(), |a, b| a.max(b));
        let mut out = self.clone();
        out.terms.retain(|_, m| m.norm() > tol * max);
        out
    }
}

/// The exponents `d_a` with `γ_ξ(λ) = diag(λ^{d_a})`.
pub fn gamma_exponents(g: &GroupSpec, xi: &CartanVector) -> Result<Vec<i64>> {
    g.diagonal(&xi.coords)
        .iter()
        .map(|x| as_integer(x).ok_or_else(|| Error::NotSingleValued(format!("exponent {x} of {xi}"))))
        .collect()
}

pub fn gamma_xi<T: Real>(g: &GroupSpec, xi: &CartanVector) -> Result<LaurentLoop<T>> {
    let d = gamma_exponents(g, xi)?;
    let mut l = LaurentLoop::identity(g.size).mul_diag_powers(&d);
    l.set_based(true);
    Ok(l)
}
