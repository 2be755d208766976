//! Exact c-divided difference operators, the 4n-point interpolation formula
//! for BC-symmetric polynomials, and the determinant and basic hypergeometric
//! identities that follow from it. Every computation is over exact rationals.

pub mod detlab;
pub mod divop;
pub mod error;
pub mod exactcore;
pub mod interp;
pub mod mutation;
pub mod poly;
pub mod sides;

pub use error::{QidError, Result};
pub use exactcore::Scalar;
pub use poly::Poly;
pub use sides::Sides;
