//! Simple roots, diagram involutions, semi-fundamental bases and the outer involutions they induce.

mod involution;
mod roots;

pub use involution::{eigenspace_split, realize_involution, tau_split_via_grading, Involution};
pub use roots::{
    cartan_matrix, diagram_involution, h_coeffs, pair, root_weight, simple_roots, zeta_duals, DiagramInvolution,
    SemiFundamental, Weight,
};
