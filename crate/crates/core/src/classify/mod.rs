//! Integer lattices, the order ⪯, canonical elements, components of `P^σ` and class pairs.

mod lattice;
mod pairs;
mod space;

pub use lattice::{
    canonical_of_support, diagonal_integral, enumerate_canonical, enumerate_semi_canonical, is_in_lattice, lattice_box,
    min_multiples, preceq, preceq_lattice, reduce_semicanonical, LatticeElement,
};
pub use pairs::{canonical_for, class_pairs, component_of, norm2_check, pfaffian, ClassPair};
pub use space::SymmetricSpaceId;
