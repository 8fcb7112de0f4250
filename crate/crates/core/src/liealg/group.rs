use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::linsolve::Vector;
use super::matrix::{AlgMatrix, Basis, ConstMatrix};
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Family {
    SU,
    SO,
}

/// A classical group: `SU(m)` or `SO(2n)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct GroupSpec {
    pub family: Family,
    pub size: usize,
}

/// Primary entry of a root vector and, for SO, its mirrored entry.
pub type RootPositions = ((usize, usize), Option<(usize, usize)>);

impl GroupSpec {
    pub fn new(family: Family, size: usize) -> Result<Self> {
        let ok = match family {
            Family::SO => size >= 4 && size.is_multiple_of(2),
            Family::SU => size >= 3,
        };
        if !ok {
            return Err(Error::Schema(format!("unsupported group size {size} for {family:?}")));
        }
        Ok(Self { family, size })
    }

    pub fn so(size: usize) -> Self {
        Self::new(Family::SO, size).expect("SO size must be even and at least 4")
    }

    pub fn su(size: usize) -> Self {
        Self::new(Family::SU, size).expect("SU size must be at least 3")
    }

    /// Number of `L_i` coordinates: n for SO(2n), m for SU(m).
    pub fn coords(&self) -> usize {
        match self.family {
            Family::SO => self.size / 2,
            Family::SU => self.size,
        }
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::SO => self.size / 2,
            Family::SU => self.size - 1,
        }
    }

    pub fn basis(&self) -> Basis {
        match self.family {
            Family::SO => Basis::U,
            Family::SU => Basis::V,
        }
    }

    pub fn dim(&self) -> usize {
        let s = self.size;
        match self.family {
            Family::SO => s * (s - 1) / 2,
            Family::SU => s * s - 1,
        }
    }

    /// Diagonal of the matrix of a Cartan element with coordinates `c`.
    pub fn diagonal(&self, c: &[BigRational]) -> Vec<BigRational> {
        match self.family {
            Family::SO => c.iter().cloned().chain(c.iter().map(|x| -x.clone())).collect(),
            Family::SU => c.to_vec(),
        }
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Root> {
        let pos = self.positive_roots();
        let neg: Vec<Root> = pos.iter().map(|r| r.neg()).collect();
        pos.into_iter().chain(neg).collect()
    }

    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.coords();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                out.push(Root::pair(n, i, 1, j, -1));
                if self.family == Family::SO {
                    out.push(Root::pair(n, i, 1, j, 1));
                }
            }
        }
        out
    }

    pub fn is_root(&self, r: &Root) -> bool {
        r.coeffs.len() == self.coords() && self.roots().contains(r)
    }

    /// Root vector generating the root space, in the group's fixed basis.
    pub fn root_vector(&self, r: &Root) -> Result<ConstMatrix> {
        let ((a, b), mirror) = self.root_positions(r)?;
        let one = GaussianRational::one();
        let mut m = AlgMatrix::unit(self.size, self.basis(), a, b, one.clone());
        if let Some((c, d)) = mirror {
            m.set(c, d, -one);
        }
        Ok(m)
    }

    /// Primary entry (coefficient +1) and, for SO, the mirrored entry (coefficient −1).
    pub fn root_positions(&self, r: &Root) -> Result<RootPositions> {
        if !self.is_root(r) {
            return Err(Error::NotARoot { group: self.to_string(), root: r.coeffs.clone() });
        }
        let nz: Vec<(usize, i64)> =
            r.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        let (i, ci) = nz[0];
        let (j, cj) = nz[1];
        match self.family {
            Family::SU => Ok(if ci > 0 { ((i, j), None) } else { ((j, i), None) }),
            Family::SO => {
                let n = self.coords();
                Ok(match (ci, cj) {
                    (1, -1) => ((i, j), Some((n + j, n + i))),
                    (-1, 1) => ((j, i), Some((n + i, n + j))),
                    (1, 1) => ((i, n + j), Some((j, n + i))),
                    _ => ((n + i, j), Some((n + j, i))),
                })
            }
        }
    }

    /// Label of a root vector: `X12`, `Y12`, `Z12`, with `X21` for negative X roots.
    pub fn root_label(&self, r: &Root) -> String {
        let nz: Vec<(usize, i64)> =
            r.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
        let (i, ci) = nz[0];
        let (j, cj) = nz[1];
        let idx = |a: usize, b: usize| {
            if a < 9 && b < 9 {
                format!("{}{}", a + 1, b + 1)
            } else {
                format!("{},{}", a + 1, b + 1)
            }
        };
        match (self.family, ci, cj) {
            (Family::SU, 1, _) | (Family::SO, 1, -1) => format!("X{}", idx(i, j)),
            (Family::SU, _, _) | (Family::SO, -1, 1) => format!("X{}", idx(j, i)),
            (Family::SO, 1, 1) => format!("Y{}", idx(i, j)),
            _ => format!("Z{}", idx(i, j)),
        }
    }

    pub fn root_from_label(&self, label: &str) -> Option<Root> {
        self.roots().into_iter().find(|r| self.root_label(r) == label)
    }

    /// Root whose vector has a nonzero entry at `(a, b)`, with that entry.
    pub fn root_at(&self, a: usize, b: usize) -> Option<(Root, i64)> {
        if a == b {
            return None;
        }
        for r in self.roots() {
            let ((p, q), mirror) = self.root_positions(&r).unwrap();
            if (p, q) == (a, b) {
                return Some((r, 1));
            }
            if mirror == Some((a, b)) {
                return Some((r, -1));
            }
        }
        None
    }

    /// Basis of the Cartan subalgebra: `E_i` for SO, `E_{a,a} − E_{a+1,a+1}` for SU.
    pub fn cartan_basis(&self) -> Vec<ConstMatrix> {
        let one = GaussianRational::one();
        match self.family {
            Family::SO => {
                let n = self.coords();
                (0..n)
                    .map(|i| {
                        let mut m = AlgMatrix::unit(self.size, Basis::U, i, i, one.clone());
                        m.set(n + i, n + i, -one.clone());
                        m
                    })
                    .collect()
            }
            Family::SU => (0..self.size - 1)
                .map(|a| {
                    let mut m = AlgMatrix::unit(self.size, Basis::V, a, a, one.clone());
                    m.set(a + 1, a + 1, -one.clone());
                    m
                })
                .collect(),
        }
    }

    /// The basis of 𝔤^ℂ used for coordinates: all root vectors, then the Cartan basis.
    pub fn lie_basis(&self) -> Vec<BasisElement> {
        let mut out: Vec<BasisElement> = self
            .roots()
            .into_iter()
            .enumerate()
            .map(|(index, r)| BasisElement {
                index,
                label: self.root_label(&r),
                matrix: self.root_vector(&r).unwrap(),
                root: Some(r),
            })
            .collect();
        let base = out.len();
        for (k, m) in self.cartan_basis().into_iter().enumerate() {
            out.push(BasisElement { index: base + k, label: format!("T{}", k + 1), matrix: m, root: None });
        }
        out
    }

    /// Coordinates of a matrix of 𝔤^ℂ against [`GroupSpec::lie_basis`].
    pub fn coords_of<E: Ring>(&self, m: &AlgMatrix<E>) -> Vec<E> {
        let mut out: Vec<E> = self
            .roots()
            .iter()
            .map(|r| {
                let ((a, b), _) = self.root_positions(r).unwrap();
                m.get(a, b).clone()
            })
            .collect();
        match self.family {
            Family::SO => {
                for i in 0..self.coords() {
                    out.push(m.get(i, i).clone());
                }
            }
            Family::SU => {
                let mut acc = E::zero();
                for a in 0..self.size - 1 {
                    acc = acc.plus(m.get(a, a));
                    out.push(acc.clone());
                }
            }
        }
        out
    }

    /// Matrix with the given coordinates against [`GroupSpec::lie_basis`].
    pub fn from_coords(&self, x: &Vector) -> ConstMatrix {
        let mut m = AlgMatrix::zero(self.size, self.basis());
        for (e, c) in self.lie_basis().iter().zip(x) {
            if !c.is_zero() {
                m = m.add(&e.matrix.scale(c)).unwrap();
            }
        }
        m
    }

    /// Linear combination of basis labels, e.g. `X12-X34` or `X13+2Y13`.
    pub fn describe(&self, m: &ConstMatrix) -> String {
        let c = self.coords_of(m);
        let basis = self.lie_basis();
        let mut s = String::new();
        for (x, e) in c.iter().zip(&basis) {
            if x.is_zero() {
                continue;
            }
            let one = GaussianRational::one();
            let term = if *x == one {
                format!("+{}", e.label)
            } else if *x == -one {
                format!("-{}", e.label)
            } else {
                format!("+({x}){}", e.label)
            };
            s.push_str(&term);
        }
        if s.is_empty() {
            return "0".into();
        }
        s.strip_prefix('+').map(str::to_string).unwrap_or(s)
    }

    /// Membership in 𝔤^ℂ: trace zero for SU, `XᵀS + SX = 0` for SO.
    pub fn contains<E: Ring>(&self, m: &AlgMatrix<E>) -> bool {
        if m.size() != self.size || m.basis() != self.basis() {
            return false;
        }
        match self.family {
            Family::SU => m.trace().is_zero(),
            Family::SO => {
                let n = self.coords();
                let s = |a: usize| if a < n { a + n } else { a - n };
                (0..self.size).all(|a| (0..self.size).all(|b| m.get(b, s(a)).plus(m.get(a, s(b))).is_zero()))
            }
        }
    }

    /// Conjugation pairing `S`: `u_i ↔ ū_i` for SO, `v_j ↔ v_{m+1−j}` for SU.
    pub fn conj_index(&self, a: usize) -> usize {
        match self.family {
            Family::SO => {
                let n = self.coords();
                if a < n {
                    a + n
                } else {
                    a - n
                }
            }
            Family::SU => self.size - 1 - a,
        }
    }

    /// Level of the entry `(a, b)` under ξ, i.e. `d_a − d_b`.
    pub fn entry_level(&self, xi: &CartanVector, a: usize, b: usize) -> BigRational {
        let d = self.diagonal(&xi.coords);
        &d[a] - &d[b]
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::SO => write!(f, "SO{}", self.size),
            Family::SU => write!(f, "SU{}", self.size),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace(['(', ')'], "");
        let (fam, rest) = if let Some(r) = s.strip_prefix("SO") {
            (Family::SO, r)
        } else if let Some(r) = s.strip_prefix("SU") {
            (Family::SU, r)
        } else {
            return Err(Error::Schema(format!("unknown group {s}")));
        };
        let size: usize = rest.parse().map_err(|_| Error::Schema(format!("bad group size in {s}")))?;
        GroupSpec::new(fam, size)
    }
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    /// Position in [`GroupSpec::lie_basis`].
    pub index: usize,
    pub label: String,
    pub root: Option<Root>,
    pub matrix: ConstMatrix,
}

/// Root in `L_i` coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self { coeffs }
    }

    pub fn pair(n: usize, i: usize, ci: i64, j: usize, cj: i64) -> Self {
        let mut c = vec![0; n];
        c[i] = ci;
        c[j] = cj;
        Self { coeffs: c }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// `α(ξ)/i` for ξ with the given coordinates.
    pub fn eval(&self, xi: &CartanVector) -> BigRational {
        self.coeffs
            .iter()
            .zip(&xi.coords)
            .fold(BigRational::zero(), |acc, (&c, x)| acc + x * BigRational::from_integer(c.into()))
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c > 0 {
                if s.is_empty() {
                    ""
                } else {
                    "+"
                }
            } else {
                "-"
            };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            s.push_str(&format!("{sign}{mag}L{}", i + 1));
        }
        write!(f, "{s}")
    }
}

/// Element of the Cartan subalgebra in `E_i` coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct CartanVector {
    pub coords: Vec<BigRational>,
}

impl CartanVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self { coords: vec![BigRational::zero(); n] }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self { coords: c.iter().map(|&x| BigRational::from_integer(x.into())).collect() }
    }

    pub fn from_fracs(c: &[(i64, i64)]) -> Self {
        Self { coords: c.iter().map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect() }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { coords: self.coords.iter().map(|a| a * q).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(k.into()))
    }

    /// Diagonal matrix of ξ in the group's basis.
    pub fn matrix(&self, g: &GroupSpec) -> ConstMatrix {
        let d = g.diagonal(&self.coords);
        let mut m = AlgMatrix::zero(g.size, g.basis());
        for (a, x) in d.into_iter().enumerate() {
            m.set(a, a, GaussianRational::real(x));
        }
        m
    }
}

impl fmt::Display for CartanVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_positive() {
                if s.is_empty() {
                    ""
                } else {
                    "+"
                }
            } else {
                "-"
            };
            let mag = c.abs();
            let mag = if mag.is_one() { String::new() } else { format!("{mag}*") };
            s.push_str(&format!("{sign}{mag}E{}", i + 1));
        }
        if s.is_empty() {
            s.push('0');
        }
        write!(f, "{s}")
    }
}

impl Serialize for CartanVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CartanVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v: Vec<String> = Vec::deserialize(d)?;
        let coords = v
            .iter()
            .map(|s| s.parse::<BigRational>().map_err(|_| D::Error::custom(format!("bad rational {s}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self { coords })
    }
}

/// `q` as an integer, if it is one.
pub fn as_integer(q: &BigRational) -> Option<i64> {
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}
