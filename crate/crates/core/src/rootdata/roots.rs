use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::liealg::{CartanVector, Family, GroupSpec, Root};

/// Weight in `L_i` coordinates with rational coefficients.
pub type Weight = Vec<BigRational>;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `λ(ξ)/i` for a weight λ.
pub fn pair(w: &[BigRational], xi: &CartanVector) -> BigRational {
    w.iter().zip(&xi.coords).fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
}

pub fn root_weight(r: &Root) -> Weight {
    r.coeffs.iter().map(|&c| q(c, 1)).collect()
}

/// Simple roots `α_1..α_l` and their duals `H_1..H_l` with `α_i(H_j) = δ_ij`.
pub fn simple_roots(g: &GroupSpec) -> (Vec<Root>, Vec<CartanVector>) {
    let n = g.coords();
    match g.family {
        Family::SO => {
            let mut roots: Vec<Root> = (0..n - 1).map(|i| Root::pair(n, i, 1, i + 1, -1)).collect();
            roots.push(Root::pair(n, n - 2, 1, n - 1, 1));
            let mut hs = Vec::with_capacity(n);
            for i in 0..n.saturating_sub(2) {
                hs.push(CartanVector::new((0..n).map(|a| q((a <= i) as i64, 1)).collect()));
            }
            hs.push(CartanVector::new((0..n).map(|a| if a + 1 < n { q(1, 2) } else { q(-1, 2) }).collect()));
            hs.push(CartanVector::new(vec![q(1, 2); n]));
            (roots, hs)
        }
        Family::SU => {
            let m = n as i64;
            let roots = (0..n - 1).map(|i| Root::pair(n, i, 1, i + 1, -1)).collect();
            let hs = (1..n as i64)
                .map(|i| CartanVector::new((0..m).map(|a| if a < i { q(m - i, m) } else { q(-i, m) }).collect()))
                .collect();
            (roots, hs)
        }
    }
}

/// Nontrivial involution of the Dynkin diagram, as a permutation of simple-root indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramInvolution {
    /// Zero-based: `perm[i] = j` means `ρ(α_{i+1}) = α_{j+1}`.
    pub perm: Vec<usize>,
}

pub fn diagram_involution(g: &GroupSpec) -> Result<DiagramInvolution> {
    let l = g.rank();
    let perm = match g.family {
        Family::SO if l >= 2 => {
            let mut p: Vec<usize> = (0..l).collect();
            p.swap(l - 2, l - 1);
            p
        }
        Family::SU if l >= 2 => (0..l).map(|i| l - 1 - i).collect(),
        _ => return Err(Error::NoOuterInvolution(g.to_string())),
    };
    Ok(DiagramInvolution { perm })
}

pub fn cartan_matrix(g: &GroupSpec) -> Vec<Vec<i64>> {
    let (roots, _) = simple_roots(g);
    let dot = |a: &Root, b: &Root| a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * y).sum::<i64>();
    roots.iter().map(|a| roots.iter().map(|b| 2 * dot(a, b) / dot(b, b)).collect()).collect()
}

/// Semi-fundamental basis `β_1..β_k` and its dual `ζ_1..ζ_k` in `𝔱_{𝔨_ρ}`.
#[derive(Clone, Debug)]
pub struct SemiFundamental {
    pub beta: Vec<Weight>,
    pub zeta: Vec<CartanVector>,
}

fn half_sum(a: &Root, b: &Root) -> Weight {
    a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| q(x + y, 2)).collect()
}

pub fn zeta_duals(g: &GroupSpec) -> SemiFundamental {
    let (alpha, h) = simple_roots(g);
    let n = g.coords();
    match g.family {
        Family::SO => {
            let mut beta: Vec<Weight> = alpha[..n - 2].iter().map(root_weight).collect();
            beta.push(half_sum(&alpha[n - 2], &alpha[n - 1]));
            let zeta = (0..n - 1).map(|i| CartanVector::new((0..n).map(|a| q((a <= i) as i64, 1)).collect())).collect();
            SemiFundamental { beta, zeta }
        }
        Family::SU if n % 2 == 1 => {
            let k = n / 2;
            let beta = (0..k).map(|i| half_sum(&alpha[i], &alpha[n - 2 - i])).collect();
            let zeta = (0..k).map(|i| h[i].add(&h[n - 2 - i])).collect();
            SemiFundamental { beta, zeta }
        }
        Family::SU => {
            let k = n / 2;
            let mut beta = vec![root_weight(&alpha[k - 1])];
            let mut zeta = vec![h[k - 1].clone()];
            for i in 2..=k {
                beta.push(half_sum(&alpha[i - 2], &alpha[n - i]));
                zeta.push(h[i - 2].add(&h[n - i]));
            }
            SemiFundamental { beta, zeta }
        }
    }
}

impl SemiFundamental {
    pub fn k(&self) -> usize {
        self.zeta.len()
    }

    /// `Σ n_i ζ_i`.
    pub fn combine(&self, coeffs: &[i64]) -> CartanVector {
        let n = self.zeta[0].len();
        self.zeta.iter().zip(coeffs).fold(CartanVector::zero(n), |acc, (z, &c)| acc.add(&z.scale_int(c)))
    }

    /// Coefficients `β_i(ξ)` of ξ in the ζ-basis.
    pub fn coeffs_of(&self, xi: &CartanVector) -> Vec<BigRational> {
        self.beta.iter().map(|b| pair(b, xi)).collect()
    }

    /// Integer ζ-coefficients, when ξ lies in their integer span.
    pub fn int_coeffs_of(&self, xi: &CartanVector) -> Option<Vec<i64>> {
        let c = self.coeffs_of(xi);
        let ints: Option<Vec<i64>> = c.iter().map(crate::liealg::as_integer).collect();
        let ints = ints?;
        (self.combine(&ints) == *xi).then_some(ints)
    }
}

/// Coefficients of ξ in the `H`-basis, `α_i(ξ)`.
pub fn h_coeffs(g: &GroupSpec, xi: &CartanVector) -> Vec<BigRational> {
    simple_roots(g).0.iter().map(|a| a.eval(xi)).collect()
}
