use num_complex::Complex;

use crate::classify::SymmetricSpaceId;
use crate::error::{Error, Result};
use crate::liealg::{Family, GroupSpec};
use crate::loopfact::{gamma_exponents, CMat};
use crate::rootdata::Involution;
use crate::Real;

fn cx<T: Real>(x: f64) -> Complex<T> {
    Complex::new(T::from_f64(x).unwrap(), T::zero())
}

fn permute<T: Real>(sig: &Involution, m: &CMat<T>) -> Result<CMat<T>> {
    let n = sig.group.size;
    let mut out = CMat::zeros(n, n);
    for (src, (dst, s)) in sig.entry_action()?.into_iter().enumerate() {
        let v = m[(src / n, src % n)];
        out[(dst / n, dst % n)] = if s > 0 { v } else { -v };
    }
    Ok(out)
}

/// The involution acting on a group element.
pub fn sigma_group<T: Real>(sig: &Involution, g: &CMat<T>) -> Result<CMat<T>> {
    match sig.group.family {
        Family::SO => permute(sig, g),
        Family::SU => {
            let inv = g.clone().try_inverse().ok_or(Error::SingularLoop)?;
            Ok(-permute(sig, &inv)?)
        }
    }
}

/// `diag((-1)^{d_a})` for the shift of `sig`.
fn shift_sign<T: Real>(sig: &Involution) -> Result<CMat<T>> {
    let d = gamma_exponents(&sig.group, &sig.shift())?;
    Ok(CMat::from_diagonal(&nalgebra::DVector::from_iterator(
        d.len(),
        d.iter().map(|x| cx(if x.rem_euclid(2) == 0 { 1.0 } else { -1.0 })),
    )))
}

fn s0<T: Real>(n: usize) -> CMat<T> {
    let mut m = CMat::zeros(2 * n, 2 * n);
    for a in 0..2 * n {
        if a != n - 1 && a != 2 * n - 1 {
            m[(a, a)] = cx(-1.0);
        }
    }
    m[(n - 1, 2 * n - 1)] = cx(1.0);
    m[(2 * n - 1, n - 1)] = cx(1.0);
    m
}

fn k_v<T: Real>(n: usize) -> CMat<T> {
    let m = 2 * n;
    let mut k = CMat::zeros(m, m);
    for j in 0..n {
        k[(m - 1 - j, j)] = Complex::new(T::zero(), T::one());
        k[(j, m - 1 - j)] = Complex::new(T::zero(), -T::one());
    }
    k
}

/// Pfaffian of an antisymmetric matrix by expansion along the first row.
pub fn pfaffian_numeric<T: Real>(a: &CMat<T>) -> Complex<T> {
    fn go<T: Real>(a: &CMat<T>, idx: &[usize]) -> Complex<T> {
        if idx.is_empty() {
            return cx(1.0);
        }
        let mut acc = cx(0.0);
        for j in 1..idx.len() {
            let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[j]).collect();
            let term = a[(idx[0], idx[j])] * go(a, &rest);
            acc = if j % 2 == 1 { acc + term } else { acc - term };
        }
        acc
    }
    if a.nrows() % 2 == 1 {
        return cx(0.0);
    }
    go(a, &(0..a.nrows()).collect::<Vec<_>>())
}

/// Connected component of `P^σ` containing `phi`, named like the classification.
pub fn numeric_component<T: Real>(g: &GroupSpec, sig: &Involution, phi: &CMat<T>) -> Result<Option<SymmetricSpaceId>> {
    let tol = T::from_f64(1e-6).unwrap();
    match g.family {
        Family::SO => {
            let n = g.coords();
            let m = phi * shift_sign::<T>(sig)? * s0::<T>(n) - CMat::identity(2 * n, 2 * n);
            let p = crate::loopfact::svd::singular_values(&m).iter().filter(|s| **s < tol).count();
            Ok(match p {
                1 => Some(SymmetricSpaceId::RealProjective { n }),
                p if p % 2 == 1 => Some(SymmetricSpaceId::Grassmannian { p, n }),
                _ => None,
            })
        }
        Family::SU if g.size % 2 == 1 => Ok(Some(SymmetricSpaceId::Lagrangian { m: g.size })),
        Family::SU => {
            let n = g.size / 2;
            if sig.shift_mod2()[0] == 1 {
                return Ok(Some(SymmetricSpaceId::Lagrangian { m: g.size }));
            }
            let k = k_v::<T>(n);
            let x = phi * shift_sign::<T>(sig)? * &k;
            if (&x + x.transpose()).norm() > tol {
                return Ok(None);
            }
            let ratio = pfaffian_numeric(&x) / pfaffian_numeric(&k);
            Ok((nalgebra::ComplexField::modulus(ratio - cx(1.0)) < tol).then_some(SymmetricSpaceId::Quaternionic { n }))
        }
    }
}
