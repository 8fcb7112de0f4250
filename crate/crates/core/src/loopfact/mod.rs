//! Numeric loop-group engine: Laurent loops, the Grassmannian model and dressing.

mod factor;
mod laurent;
pub(crate) mod svd;

pub use factor::{
    dress, evaluate, fiber, fiber_loop, flag_loop, loop_assemble, model_subspace, model_subspace_with, morphism_u,
    unitary_part, unitary_part_with, FactorOptions, LoopAssembler, WindowSubspace,
};
pub use laurent::{gamma_exponents, gamma_xi, CMat, LaurentLoop};
