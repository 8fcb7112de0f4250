use std::fmt;

use serde::{Deserialize, Serialize};

use super::ring::{LambdaPoly, Ring};
use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, RationalFunction};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "u")]
    U,
    #[serde(rename = "v")]
    V,
}

/// Square matrix over a [`Ring`], tagged with the complex basis it is written in.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgMatrix<E> {
    n: usize,
    basis: Basis,
    data: Vec<E>,
}

pub type ConstMatrix = AlgMatrix<GaussianRational>;
pub type FnMatrix = AlgMatrix<RationalFunction>;
pub type LambdaMatrix = AlgMatrix<LambdaPoly>;

impl<E: Ring> AlgMatrix<E> {
    pub fn zero(n: usize, basis: Basis) -> Self {
        Self { n, basis, data: vec![E::zero(); n * n] }
    }

    pub fn identity(n: usize, basis: Basis) -> Self {
        let mut m = Self::zero(n, basis);
        for i in 0..n {
            m.data[i * n + i] = E::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>, basis: Basis) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self { n, basis, data: rows.into_iter().flatten().collect() }
    }

    /// `c E_{a,b}` with zero-based indices.
    pub fn unit(n: usize, basis: Basis, a: usize, b: usize, c: E) -> Self {
        let mut m = Self::zero(n, basis);
        m.data[a * n + b] = c;
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<E>> {
        self.data.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n != o.n || self.basis != o.basis {
            return Err(Error::BasisMismatch(format!(
                "{}x{} {:?} vs {}x{} {:?}",
                self.n, self.n, self.basis, o.n, o.n, o.basis
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a.plus(b)))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.zip(o, |a, b| a.minus(b)))
    }

    fn zip<F: Fn(&E, &E) -> E>(&self, o: &Self, f: F) -> Self {
        Self { n: self.n, basis: self.basis, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.n;
        let mut out = Self::zero(n, self.basis);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.data[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * n + j] = out.data[i * n + j].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    /// `AB − BA`.
    pub fn bracket(&self, o: &Self) -> Result<Self> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    pub fn neg(&self) -> Self {
        self.map(|e| e.negate())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map(|e| e.scaled(c))
    }

    pub fn times_entry(&self, c: &E) -> Self {
        self.map(|e| e.times(c))
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n, self.basis);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> E {
        (0..self.n).fold(E::zero(), |acc, i| acc.plus(self.get(i, i)))
    }

    pub fn map<F: Ring, G: Fn(&E) -> F>(&self, f: G) -> AlgMatrix<F> {
        AlgMatrix { n: self.n, basis: self.basis, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise map that also sees the (row, column) index.
    pub fn map_indexed<F: Ring, G: Fn(usize, usize, &E) -> F>(&self, f: G) -> AlgMatrix<F> {
        let n = self.n;
        AlgMatrix {
            n,
            basis: self.basis,
            data: self.data.iter().enumerate().map(|(k, e)| f(k / n, k % n, e)).collect(),
        }
    }

    /// Exponential of a nilpotent matrix as the finite sum of `C^k/k!`.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        let n = self.n;
        let mut out = Self::identity(n, self.basis);
        let mut term = Self::identity(n, self.basis);
        for k in 1..=n {
            term = term.mul(self)?.scale(&GaussianRational::from_frac(1, k as i64));
            if term.is_zero() {
                return Ok(out);
            }
            out = out.add(&term)?;
        }
        if term.mul(self)?.is_zero() {
            Ok(out)
        } else {
            Err(Error::NotNilpotent)
        }
    }
}

impl ConstMatrix {
    pub fn lift_rf(&self) -> FnMatrix {
        self.map(|c| RationalFunction::constant(c.clone()))
    }

    pub fn lift_lambda(&self) -> LambdaMatrix {
        self.map(|c| LambdaPoly::from(c.clone()))
    }
}

impl FnMatrix {
    pub fn lift_lambda(&self) -> LambdaMatrix {
        self.map(|c| LambdaPoly::from(c.clone()))
    }

    pub fn dz(&self) -> Self {
        self.map(|e| e.derivative())
    }
}

impl LambdaMatrix {
    /// Coefficient matrix of `λ^k`.
    pub fn lambda_coeff(&self, k: usize) -> FnMatrix {
        self.map(|e| e.coeff(k))
    }

    pub fn lambda_degree(&self) -> Option<usize> {
        self.entries().iter().filter_map(|e| e.degree()).max()
    }

    pub fn dz(&self) -> Self {
        self.map(|e| e.dz())
    }

    /// `Σ_k λ^k M_k`.
    pub fn from_lambda_coeffs(coeffs: &[FnMatrix]) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::BasisMismatch("empty".into()))?;
        let mut out = Self::zero(first.size(), first.basis());
        for (k, m) in coeffs.iter().enumerate() {
            out = out.add(&m.map(|e| LambdaPoly::term(k, e.clone())))?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson<E> {
    basis: Basis,
    rows: Vec<Vec<E>>,
}

impl<E: Ring + Serialize> Serialize for AlgMatrix<E> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson { basis: self.basis, rows: self.rows() }.serialize(s)
    }
}

impl<'de, E: Ring + Deserialize<'de>> Deserialize<'de> for AlgMatrix<E> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = MatrixJson::<E>::deserialize(d)?;
        let n = j.rows.len();
        if j.rows.iter().any(|r| r.len() != n) {
            return Err(D::Error::custom("matrix must be square"));
        }
        Ok(Self::from_rows(j.rows, j.basis))
    }
}

impl<E: Ring + fmt::Display> fmt::Display for AlgMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.data.chunks(self.n) {
            let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
