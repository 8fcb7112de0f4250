use crate::error::{Error, Result};
use crate::liealg::{grading_of, CartanVector, ConstMatrix, GroupSpec};
use crate::rootdata::Involution;

/// Basis element of the Weierstrass domain, sitting at a fixed power of λ.
#[derive(Clone, Debug, PartialEq)]
pub struct DomainElement {
    pub lambda: usize,
    pub label: String,
    pub matrix: ConstMatrix,
}

/// Explicit basis of `u⁰_ξ`, or of its σ-adapted part `(u⁰_ξ)_σ`.
#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentBasis {
    pub elements: Vec<DomainElement>,
}

impl NilpotentBasis {
    pub fn at(&self, lambda: usize) -> Vec<&DomainElement> {
        self.elements.iter().filter(|e| e.lambda == lambda).collect()
    }

    pub fn labels_at(&self, lambda: usize) -> Vec<String> {
        self.at(lambda).iter().map(|e| e.label.clone()).collect()
    }

    pub fn max_lambda(&self) -> Option<usize> {
        self.elements.iter().map(|e| e.lambda).max()
    }
}

/// `⊕_{0≤i<r(ξ)} λ^i (𝔭^ξ_i)^⊥`, intersected with `𝔨_σ` for even `i` and `𝔪_σ` for odd `i` when σ is given.
pub fn nilpotent_domain(g: &GroupSpec, xi: &CartanVector, sig: Option<&Involution>) -> Result<NilpotentBasis> {
    if let Some(s) = sig {
        if !s.fixes(xi) {
            return Err(Error::XiNotSigmaFixed);
        }
    }
    let gr = grading_of(g, xi)?;
    let r = gr.r();
    let mut elements = Vec::new();
    for i in 0..r.max(0) {
        for (_, elems) in gr.levels.range(i + 1..) {
            let mats: Vec<ConstMatrix> = match sig {
                None => elems.iter().map(|e| e.matrix.clone()).collect(),
                Some(s) => {
                    let (k, m) = s.split_on(elems)?;
                    if i % 2 == 0 {
                        k
                    } else {
                        m
                    }
                }
            };
            for m in mats {
                elements.push(DomainElement { lambda: i as usize, label: g.describe(&m), matrix: m });
            }
        }
    }
    Ok(NilpotentBasis { elements })
}
