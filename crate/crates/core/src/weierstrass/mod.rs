//! Weierstrass domains, assembly of the datum C and the exact extended-solution check.

mod check;
mod data;
mod domain;
mod examples;

pub use check::{
    check_extended_solution, exp_c, family_constraints, maurer_cartan, sone_invariant_flag, CheckReport,
    ConstraintSite, FlagStep, Residual,
};
pub use data::{parse_combination, Coefficient, ExtendedSolutionData};
pub use domain::{nilpotent_domain, DomainElement, NilpotentBasis};
pub use examples::{example, example_names};

#[cfg(test)]
mod tests;
