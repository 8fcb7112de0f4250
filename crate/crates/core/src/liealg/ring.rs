use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::exactnum::{GaussianRational, RationalFunction};

/// Commutative ring with Gaussian-rational scalars, used for matrix entries.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One {
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn scaled(&self, c: &GaussianRational) -> Self;
}

impl Ring for GaussianRational {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &GaussianRational) -> Self {
        self * c
    }
}

impl Ring for RationalFunction {
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &GaussianRational) -> Self {
        self.scale(c)
    }
}

/// Polynomial in the loop parameter λ with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LambdaPoly {
    coeffs: Vec<RationalFunction>,
}

impl LambdaPoly {
    pub fn new(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn term(k: usize, f: RationalFunction) -> Self {
        let mut v = vec![RationalFunction::zero(); k + 1];
        v[k] = f;
        Self::new(v)
    }

    pub fn constant(f: RationalFunction) -> Self {
        Self::term(0, f)
    }

    pub fn coeff(&self, k: usize) -> RationalFunction {
        self.coeffs.get(k).cloned().unwrap_or_else(RationalFunction::zero)
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Derivative in z, coefficientwise.
    pub fn dz(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.derivative()).collect())
    }

    pub fn map<F: Fn(&RationalFunction) -> RationalFunction>(&self, f: F) -> Self {
        Self::new(self.coeffs.iter().map(f).collect())
    }
}

impl From<RationalFunction> for LambdaPoly {
    fn from(f: RationalFunction) -> Self {
        Self::constant(f)
    }
}

impl From<GaussianRational> for LambdaPoly {
    fn from(c: GaussianRational) -> Self {
        Self::constant(RationalFunction::constant(c))
    }
}

impl Zero for LambdaPoly {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LambdaPoly {
    fn one() -> Self {
        Self::constant(RationalFunction::one())
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, o: LambdaPoly) -> LambdaPoly {
        self.plus(&o)
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, o: LambdaPoly) -> LambdaPoly {
        self.times(&o)
    }
}

impl Ring for LambdaPoly {
    fn plus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
    fn minus(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![RationalFunction::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if Zero::is_zero(b) {
                    continue;
                }
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        Self::new(v)
    }
    fn negate(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn scaled(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*L")?,
                _ => write!(f, "({c})*L^{k}")?,
            }
        }
        Ok(())
    }
}
