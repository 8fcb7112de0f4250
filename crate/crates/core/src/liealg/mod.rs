//! Complexified Lie algebras of `SO(2n)` and `SU(m)` with exact entries.

mod grading;
mod group;
mod linsolve;
mod matrix;
mod ring;


pub use grading::{grading_of, Grading};
pub use group::{as_integer, BasisElement, CartanVector, Family, GroupSpec, Root};
pub use linsolve::{contained_in, normalize, nullspace, rank, rref, same_span, Vector};
pub use matrix::{AlgMatrix, Basis, ConstMatrix, FnMatrix, LambdaMatrix};
pub use ring::{LambdaPoly, Ring};
