//! Interpolation of BC-symmetric polynomials at 4n nodes, its `c = 0`
//! degeneration, and the geometric specializations.

mod bcpoly;
pub mod jackson;
pub mod newton;
mod nodes;
pub mod theorem;

pub use bcpoly::{bc_poly_from_roots, BcSymmetricPoly};
pub use jackson::{jackson_8phi7_sides, jackson_corollary_sides, Jackson8phi7};
pub use newton::newton_reconstruct_c0;
pub use nodes::{GeometricSpec, NodeSystem};
pub use theorem::{basis, coeff_c, coefficients, reconstruct, IndexConvention};
