use std::collections::BTreeMap;

use super::group::{as_integer, BasisElement, CartanVector, GroupSpec};
use crate::error::{Error, Result};

/// Eigenspace decomposition of `ad ξ`: level `j` holds the basis of the `ji`-eigenspace.
#[derive(Clone, Debug)]
pub struct Grading {
    pub group: GroupSpec,
    pub xi: CartanVector,
    pub levels: BTreeMap<i64, Vec<BasisElement>>,
}

impl Grading {
    /// `r(ξ)`, the largest level with a nonzero eigenspace.
    pub fn r(&self) -> i64 {
        self.levels.keys().copied().max().unwrap_or(0)
    }

    pub fn level(&self, j: i64) -> &[BasisElement] {
        self.levels.get(&j).map_or(&[], |v| v.as_slice())
    }

    pub fn total_dim(&self) -> usize {
        self.levels.values().map(Vec::len).sum()
    }
}

pub fn grading_of(g: &GroupSpec, xi: &CartanVector) -> Result<Grading> {
    if xi.len() != g.coords() {
        return Err(Error::NonIntegralGrading(format!("{xi} has wrong length for {g}")));
    }
    let mut levels: BTreeMap<i64, Vec<BasisElement>> = BTreeMap::new();
    for e in g.lie_basis() {
        let j = match &e.root {
            None => 0,
            Some(r) => {
                let q = r.eval(xi);
                as_integer(&q).ok_or_else(|| Error::NonIntegralGrading(format!("root {r} takes value {q} on {xi}")))?
            }
        };
        levels.entry(j).or_default().push(e);
    }
    Ok(Grading { group: *g, xi: xi.clone(), levels })
}
