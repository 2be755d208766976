//! Exact scalars, q-series building blocks, symmetric functions and seeded sampling.

pub mod qseries;
pub mod sampler;
pub mod scalar;
pub mod symfun;

pub use qseries::{cauchy_poly, gauss_binomial, qpochhammer, qpochhammer_product};
pub use sampler::{RangeSpec, SeededSampler};
pub use scalar::Scalar;
pub use symfun::{complete_sym, elem_sym, supersym_complete, VariableSet};
