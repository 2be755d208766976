//! Fault injection for the verification harness.
//!
//! Each closed-form side that the harness checks has one designated integer
//! exponent. An [`ExponentShift`] adds to that exponent, which must make the
//! identity fail; the harness uses it to prove that a wrong formula is caught.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExponentShift(pub i64);

impl ExponentShift {
    pub const NONE: ExponentShift = ExponentShift(0);

    pub fn get(self) -> i64 {
        self.0
    }
}
