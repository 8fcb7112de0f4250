use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{check_flatness, check_group, check_harmonic, check_psigma, check_tsigma, Report};
use crate::classify::component_of;
use crate::error::{Error, Result};
use crate::loopfact::{flag_loop, unitary_part, CMat, LaurentLoop, LoopAssembler};
use crate::weierstrass::ExtendedSolutionData;

type C = Complex<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Tsigma,
    Psigma,
    Harmonic,
    Flatness,
    Group,
    Sone,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Tsigma,
        CheckKind::Psigma,
        CheckKind::Harmonic,
        CheckKind::Flatness,
        CheckKind::Group,
        CheckKind::Sone,
    ];

    /// Whether the check makes sense for `data`.
    pub fn applies_to(self, data: &ExtendedSolutionData) -> bool {
        match self {
            CheckKind::Tsigma | CheckKind::Psigma => data.sigma.is_some(),
            CheckKind::Sone => data.is_s1_invariant(),
            _ => true,
        }
    }
}

impl std::str::FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.to_lowercase()))
            .map_err(|_| Error::Schema(format!("unknown check {s}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOptions {
    pub grid: (usize, usize),
    pub tol: f64,
    pub lambdas: usize,
    pub seed: u64,
    pub harmonic_steps: Vec<f64>,
    pub min_order: f64,
    pub flatness_step: f64,
    pub flatness_tol: f64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            grid: (9, 9),
            tol: 1e-9,
            lambdas: 20,
            seed: 1,
            harmonic_steps: vec![1e-2, 5e-3, 2.5e-3],
            min_order: 1.8,
            flatness_step: 1e-4,
            flatness_tol: 1e-6,
        }
    }
}

/// `a × b` points evenly spaced on `[−1, 1]²`, row by row.
pub fn grid_points(a: usize, b: usize) -> Vec<C> {
    let coord = |i: usize, k: usize| if k <= 1 { 0.0 } else { -1.0 + 2.0 * i as f64 / (k - 1) as f64 };
    (0..b).flat_map(|j| (0..a).map(move |i| Complex::new(coord(i, a), coord(j, b)))).collect()
}

/// Errors that mark a point of the exceptional discrete set rather than a failure.
pub fn is_exceptional(e: &Error) -> bool {
    matches!(
        e,
        Error::PoleAtPoint(_) | Error::BasepointSingular | Error::FiberDimensionMismatch { .. } | Error::SingularLoop
    )
}

pub type DressedPoint = (C, LaurentLoop<f64>);

/// Dresses `data` over the points, skipping exceptional ones.
pub fn dress_grid(asm: &LoopAssembler, points: &[C]) -> Result<(Vec<DressedPoint>, usize)> {
    let out: Vec<(C, Result<LaurentLoop<f64>>)> =
        points.par_iter().map(|&z| (z, asm.at(z).and_then(|l| unitary_part(&l)))).collect();
    let mut good = Vec::new();
    let mut skipped = 0;
    for (z, r) in out {
        match r {
            Ok(phi) => good.push((z, phi)),
            Err(e) if is_exceptional(&e) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok((good, skipped))
}

fn unit_circle(n: usize, seed: u64) -> Vec<C> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            Complex::new(t.cos(), t.sin())
        })
        .collect()
}

pub fn run_suite(data: &ExtendedSolutionData, checks: &[CheckKind], opts: &SuiteOptions) -> Result<Vec<Report>> {
    let asm = LoopAssembler::new(data)?;
    let points = grid_points(opts.grid.0, opts.grid.1);
    let (loops, skipped) = dress_grid(&asm, &points)?;
    if loops.is_empty() {
        return Err(Error::BasepointSingular);
    }
    let lambdas = unit_circle(opts.lambdas, opts.seed);
    let good: Vec<C> = loops.iter().map(|(z, _)| *z).collect();
    let phis: Vec<LaurentLoop<f64>> = loops.iter().map(|(_, l)| l.clone()).collect();
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let mut out = Vec::new();
    for kind in checks {
        if !kind.applies_to(data) {
            return Err(Error::Schema(format!("check {kind:?} does not apply to this datum")));
        }
        let mut rep = match kind {
            CheckKind::Tsigma => check_tsigma(&phis, data.sigma.as_ref().unwrap(), &lambdas, opts.tol)?,
            CheckKind::Psigma => {
                let sig = data.sigma.as_ref().unwrap();
                let expected = component_of(&data.group, sig, &data.xi)?;
                let minus: Vec<CMat<f64>> = phis.iter().map(|p| p.eval(Complex::new(-1.0, 0.0))).collect();
                check_psigma(&data.group, sig, &minus, expected, opts.tol)?
            }
            CheckKind::Harmonic => {
                let hs = &opts.harmonic_steps;
                check_harmonic(
                    |z| Ok(unitary_part(&asm.at(z)?)?.eval(Complex::new(-1.0, 0.0))),
                    &good,
                    hs,
                    opts.min_order,
                )?
            }
            CheckKind::Flatness => check_flatness(
                |z| unitary_part(&asm.at(z)?),
                &good,
                &lambdas[..lambdas.len().min(4)],
                opts.flatness_step,
                opts.flatness_tol,
            )?,
            CheckKind::Group => check_group(&data.group, &phis, &lambdas, 1e-10),
            CheckKind::Sone => {
                let mut worst: f64 = 0.0;
                for (z, phi) in &loops {
                    worst = worst.max(phi.max_coeff_diff(&flag_loop(data, *z)?));
                }
                Report::new("sone", worst, opts.tol, loops.len())
            }
        };
        rep.skipped = skipped;
        out.push(rep);
    }
    Ok(out)
}
