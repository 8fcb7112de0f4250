//! Harmonic two-spheres in classical outer symmetric spaces.
//!
//! The exact layer ([`exactnum`], [`liealg`], [`rootdata`], [`classify`],
//! [`weierstrass`]) works over Gaussian rationals. The numeric layer
//! ([`loopfact`], [`verify`]) is generic over the float type.

pub mod classify;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod liealg;
pub mod loopfact;
pub mod rootdata;
pub mod verify;
pub mod weierstrass;

pub use error::{Error, Result};

/// Real scalar for the numeric layer.
pub trait Real: nalgebra::RealField + Copy {}

impl Real for f32 {}
impl Real for f64 {}
