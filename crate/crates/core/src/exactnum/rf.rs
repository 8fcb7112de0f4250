use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GaussianRational, Poly};
use crate::error::{Error, Result};

pub const DEFAULT_POLE_THRESHOLD: f64 = 1e-12;

/// Exact ratio of polynomials in z: gcd-reduced, monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let l = den.lead().unwrap().inv().unwrap();
        Self { num: num.scale(&l), den: den.scale(&l) }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self { num: p, den: Poly::one() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::constant(GaussianRational::from_frac(n, d))
    }

    pub fn z() -> Self {
        Self::from_poly(Poly::z())
    }

    /// `c z^k`.
    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        Self::from_poly(Poly::monomial(c, k))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeffs().first().cloned().unwrap_or_else(GaussianRational::zero))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZeroFunction);
        }
        Ok(Self::reduce(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::reduce(n, &self.den * &self.den)
    }

    /// Value at `z0`; a pole is reported when `|den(z0)|` falls below
    /// `threshold` relative to the size of the denominator's terms.
    pub fn eval_with<T: crate::Real>(&self, z0: Complex<T>, threshold: T) -> Result<Complex<T>> {
        let d = self.den.eval(z0);
        let scale = self.den.coeff_norm(z0);
        if nalgebra::ComplexField::modulus(d) <= threshold * scale {
            return Err(Error::PoleAtPoint(format!("{z0}")));
        }
        Ok(self.num.eval(z0) / d)
    }

    pub fn eval<T: crate::Real>(&self, z0: Complex<T>) -> Result<Complex<T>> {
        self.eval_with(z0, T::from_f64(DEFAULT_POLE_THRESHOLD).unwrap())
    }

    pub fn eval_exact(&self, z0: &GaussianRational) -> Result<GaussianRational> {
        let d = self.den.eval_exact(z0);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(format!("{z0}")));
        }
        Ok(self.num.eval_exact(z0) / d)
    }
}

/// Dispatches one of the field operations; `Neg` ignores `g`.
pub fn rf_arith(op: RfOp, f: &RationalFunction, g: &RationalFunction) -> Result<RationalFunction> {
    Ok(match op {
        RfOp::Add => f + g,
        RfOp::Sub => f - g,
        RfOp::Mul => f * g,
        RfOp::Div => f.checked_div(g)?,
        RfOp::Neg => -f,
    })
}

pub fn rf_derivative(f: &RationalFunction) -> RationalFunction {
    f.derivative()
}

pub fn rf_eval(f: &RationalFunction, z0: Complex<f64>) -> Result<Complex<f64>> {
    f.eval(z0)
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RationalFunction::reduce(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::reduce(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: RationalFunction) -> RationalFunction {
        &self + &o
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: RationalFunction) -> RationalFunction {
        &self - &o
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: RationalFunction) -> RationalFunction {
        &self * &o
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: RationalFunction) -> RationalFunction {
        self.checked_div(&o).expect("division by the zero function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[derive(Serialize, Deserialize, Clone)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(b: &BigInt) -> Self {
        match b.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(b.to_string()),
        }
    }

    fn to_big(&self) -> std::result::Result<BigInt, String> {
        match self {
            JsonInt::Small(v) => Ok(BigInt::from(*v)),
            JsonInt::Big(s) => s.parse().map_err(|_| format!("bad integer {s}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RfJson {
    num: Vec<[JsonInt; 4]>,
    den: Vec<[JsonInt; 4]>,
}

fn poly_to_json(p: &Poly) -> Vec<[JsonInt; 4]> {
    p.coeffs().iter().map(|c| c.parts().each_ref().map(JsonInt::from_big)).collect()
}

fn poly_from_json(v: &[[JsonInt; 4]]) -> std::result::Result<Poly, String> {
    let mut cs = Vec::with_capacity(v.len());
    for q in v {
        let parts = [q[0].to_big()?, q[1].to_big()?, q[2].to_big()?, q[3].to_big()?];
        cs.push(GaussianRational::from_parts(&parts).ok_or("zero denominator")?);
    }
    Ok(Poly::new(cs))
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RfJson { num: poly_to_json(&self.num), den: poly_to_json(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = RfJson::deserialize(d)?;
        let num = poly_from_json(&j.num).map_err(D::Error::custom)?;
        let den = poly_from_json(&j.den).map_err(D::Error::custom)?;
        RationalFunction::new(num, den).map_err(D::Error::custom)
    }
}
