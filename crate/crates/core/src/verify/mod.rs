//! Numeric invariants of dressed extended solutions.

mod checks;
mod sigma;
mod suite;

pub use checks::{
    check_constant_loop, check_flatness, check_group, check_harmonic, check_psigma, check_tsigma, cross_check_ras,
    fit_slope, fixed_space, Report,
};
pub use sigma::{numeric_component, pfaffian_numeric, sigma_group};
pub use suite::{dress_grid, grid_points, is_exceptional, run_suite, CheckKind, SuiteOptions};
