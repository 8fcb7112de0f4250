use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::GroupSpec;
use crate::rootdata::Involution;

/// Outer symmetric spaces of the classical groups handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetricSpaceId {
    /// `ℝP^{2n−1}` as a component of `SO(2n)`.
    RealProjective { n: usize },
    /// `G_p(ℝ^{2n})`, `p` odd and `3 ≤ p ≤ 2n−1`.
    Grassmannian { p: usize, n: usize },
    /// `SU(m)/SO(m)`.
    Lagrangian { m: usize },
    /// `SU(2n)/Sp(n)`.
    Quaternionic { n: usize },
}

impl SymmetricSpaceId {
    pub fn group(&self) -> GroupSpec {
        match *self {
            Self::RealProjective { n } | Self::Grassmannian { n, .. } => GroupSpec::so(2 * n),
            Self::Lagrangian { m } => GroupSpec::su(m),
            Self::Quaternionic { n } => GroupSpec::su(2 * n),
        }
    }

    /// Involution whose identity component realizes the space.
    pub fn base_involution(&self) -> Involution {
        let g = self.group();
        match *self {
            Self::Lagrangian { m } if m % 2 == 0 => Involution::sigma_rho_i(&g, 1).unwrap(),
            _ => Involution::sigma_rho(&g),
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            Self::RealProjective { n } => 2 * n - 1,
            Self::Grassmannian { p, n } => p * (2 * n - p),
            Self::Lagrangian { m } => (m * m + m) / 2 - 1,
            Self::Quaternionic { n } => (n - 1) * (2 * n + 1),
        }
    }

    /// Every space supported for the given group.
    pub fn all_for(g: &GroupSpec) -> Vec<Self> {
        match g.family {
            crate::liealg::Family::SO => {
                let n = g.size / 2;
                let mut v = vec![Self::RealProjective { n }];
                v.extend((1..n).map(|d| Self::Grassmannian { p: 2 * d + 1, n }));
                v
            }
            crate::liealg::Family::SU if g.size % 2 == 1 => vec![Self::Lagrangian { m: g.size }],
            crate::liealg::Family::SU => {
                vec![Self::Quaternionic { n: g.size / 2 }, Self::Lagrangian { m: g.size }]
            }
        }
    }
}

impl fmt::Display for SymmetricSpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::RealProjective { n } => write!(f, "RP{}", 2 * n - 1),
            Self::Grassmannian { p, n } => write!(f, "G{p}R{}", 2 * n),
            Self::Lagrangian { m } => write!(f, "L{m}s"),
            Self::Quaternionic { n } => write!(f, "Q{n}s"),
        }
    }
}

impl FromStr for SymmetricSpaceId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedSpace(s.to_string());
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let id = if let Some(r) = s.strip_prefix("RP") {
            let d = num(r)?;
            if d < 3 || d % 2 == 0 {
                return Err(bad());
            }
            Self::RealProjective { n: d.div_ceil(2) }
        } else if let Some(r) = s.strip_prefix('G') {
            let (p, amb) = r.split_once('R').ok_or_else(bad)?;
            let (p, amb) = (num(p)?, num(amb)?);
            if amb < 4 || amb % 2 == 1 || p % 2 == 0 || p >= amb {
                return Err(bad());
            }
            if p == 1 {
                Self::RealProjective { n: amb / 2 }
            } else {
                Self::Grassmannian { p, n: amb / 2 }
            }
        } else if let Some(r) = s.strip_prefix('L').and_then(|r| r.strip_suffix('s')) {
            let m = num(r)?;
            if m < 3 {
                return Err(bad());
            }
            Self::Lagrangian { m }
        } else if let Some(r) = s.strip_prefix('Q').and_then(|r| r.strip_suffix('s')) {
            let n = num(r)?;
            if n < 2 {
                return Err(bad());
            }
            Self::Quaternionic { n }
        } else {
            return Err(bad());
        };
        Ok(id)
    }
}

impl Serialize for SymmetricSpaceId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SymmetricSpaceId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
