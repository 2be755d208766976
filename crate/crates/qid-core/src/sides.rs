use crate::exactcore::Scalar;

/// The two computed sides of an identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sides {
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl Sides {
    pub fn new(lhs: Scalar, rhs: Scalar) -> Self {
        Sides { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}
