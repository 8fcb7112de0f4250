use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::domain::{nilpotent_domain, NilpotentBasis};
use crate::classify::LatticeElement;
use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, RationalFunction};
use crate::liealg::{contained_in, AlgMatrix, CartanVector, ConstMatrix, Family, GroupSpec, LambdaMatrix, LambdaPoly};
use crate::rootdata::Involution;

/// One term `f(z) λ^k M` of the datum C.
#[derive(Clone, Debug, PartialEq)]
pub struct Coefficient {
    pub lambda: usize,
    pub label: String,
    pub matrix: ConstMatrix,
    pub f: RationalFunction,
}

/// Weierstrass datum `(G, σ, ξ, C)`; `sigma = None` leaves C unrestricted by an involution.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedSolutionData {
    pub group: GroupSpec,
    pub sigma: Option<Involution>,
    pub xi: LatticeElement,
    pub coeffs: Vec<Coefficient>,
}

/// Parses a combination of basis labels such as `X23-Y23`, `X13+2Y13` or `-X1,10`.
pub fn parse_combination(g: &GroupSpec, s: &str) -> Result<ConstMatrix> {
    let bad = || Error::Schema(format!("bad basis label '{s}'"));
    let basis = g.lie_basis();
    let mut out = AlgMatrix::zero(g.size, g.basis());
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    if chars.is_empty() {
        return Err(bad());
    }
    while i < chars.len() {
        let mut sign = 1;
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coef: i64 =
            if i > start { chars[start..i].iter().collect::<String>().parse().map_err(|_| bad())? } else { 1 };
        let lstart = i;
        if i >= chars.len() || !chars[i].is_ascii_alphabetic() {
            return Err(bad());
        }
        i += 1;
        while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == ',') {
            i += 1;
        }
        let label: String = chars[lstart..i].iter().collect();
        let e = basis.iter().find(|e| e.label == label).ok_or_else(bad)?;
        out = out.add(&e.matrix.scale(&GaussianRational::from_int(sign * coef)))?;
    }
    Ok(out)
}

impl ExtendedSolutionData {
    pub fn new(
        group: GroupSpec,
        sigma: Option<Involution>,
        xi: LatticeElement,
        terms: Vec<(usize, &str, RationalFunction)>,
    ) -> Result<Self> {
        let mut coeffs = Vec::with_capacity(terms.len());
        for (lambda, label, f) in terms {
            let matrix = parse_combination(&group, label)?;
            coeffs.push(Coefficient { lambda, label: label.to_string(), matrix, f });
        }
        let d = Self { group, sigma, xi, coeffs };
        d.validate()?;
        Ok(d)
    }

    pub fn xi_cartan(&self) -> CartanVector {
        self.xi.cartan(&self.group)
    }

    pub fn domain(&self) -> Result<NilpotentBasis> {
        nilpotent_domain(&self.group, &self.xi_cartan(), self.sigma.as_ref())
    }

    /// Every coefficient must lie in the domain at its power of λ.
    pub fn validate(&self) -> Result<()> {
        if self.xi.zeta_coeffs.len() != crate::rootdata::zeta_duals(&self.group).k() {
            return Err(Error::Schema(format!(
                "xi needs {} zeta coefficients",
                crate::rootdata::zeta_duals(&self.group).k()
            )));
        }
        let dom = self.domain()?;
        for c in &self.coeffs {
            let span: Vec<Vec<GaussianRational>> =
                dom.at(c.lambda).iter().map(|e| e.matrix.entries().to_vec()).collect();
            if !contained_in(&[c.matrix.entries().to_vec()], &span) {
                return Err(Error::Schema(format!(
                    "{} at lambda^{} is outside the Weierstrass domain",
                    c.label, c.lambda
                )));
            }
        }
        Ok(())
    }

    /// `C = Σ f_k(z) λ^k M_k`.
    pub fn assemble(&self) -> LambdaMatrix {
        let g = &self.group;
        let mut c = AlgMatrix::<LambdaPoly>::zero(g.size, g.basis());
        for t in &self.coeffs {
            let term = t.matrix.map(|x| {
                if num_traits::Zero::is_zero(x) {
                    LambdaPoly::default()
                } else {
                    LambdaPoly::term(t.lambda, t.f.scale(x))
                }
            });
            c = c.add(&term).expect("same group");
        }
        c
    }

    /// Substitutes new functions for the coefficients, in order.
    pub fn with_functions(&self, fs: &[RationalFunction]) -> Self {
        let mut d = self.clone();
        for (c, f) in d.coeffs.iter_mut().zip(fs) {
            c.f = f.clone();
        }
        d
    }

    pub fn is_s1_invariant(&self) -> bool {
        self.coeffs.iter().all(|c| c.lambda == 0 || num_traits::Zero::is_zero(&c.f))
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    family: Family,
    size: usize,
}

#[derive(Serialize, Deserialize)]
struct XiJson {
    zeta_coeffs: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    lambda: usize,
    label: String,
    #[serde(rename = "fn")]
    f: RationalFunction,
}

#[derive(Serialize, Deserialize)]
struct DataJson {
    group: GroupJson,
    sigma: Value,
    xi: XiJson,
    coeffs: Vec<CoeffJson>,
}

impl ExtendedSolutionData {
    pub fn to_json(&self) -> Value {
        let j = DataJson {
            group: GroupJson { family: self.group.family, size: self.group.size },
            sigma: self.sigma.as_ref().map_or(Value::Null, Involution::to_json),
            xi: XiJson { zeta_coeffs: self.xi.zeta_coeffs.clone() },
            coeffs: self
                .coeffs
                .iter()
                .map(|c| CoeffJson { lambda: c.lambda, label: c.label.clone(), f: c.f.clone() })
                .collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let j: DataJson = serde_json::from_value(v.clone()).map_err(|e| Error::Schema(e.to_string()))?;
        let group = GroupSpec::new(j.group.family, j.group.size)?;
        let sigma = if j.sigma.is_null() { None } else { Some(Involution::from_json(&group, &j.sigma)?) };
        let xi = LatticeElement::new(j.xi.zeta_coeffs);
        let terms = j.coeffs.iter().map(|c| (c.lambda, c.label.as_str(), c.f.clone())).collect();
        Self::new(group, sigma, xi, terms)
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        Self::from_json(&v)
    }
}
