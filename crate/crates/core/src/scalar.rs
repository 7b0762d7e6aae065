//! Scalar abstraction: the whole crate is generic over the real field,
//! instantiated as `f32` or `f64` through the aliases at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar the matrix and quadrature code is generic over.
pub trait Real:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Shorthand for lossy conversion from `f64` literals.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal not representable")
    }

    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("usize not representable")
    }

    fn half() -> Self {
        Self::of(0.5)
    }

    fn two() -> Self {
        Self::of(2.0)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `max(1, a, b, ...)` scale used by the relative-plus-absolute tolerance policy.
pub fn tolerance_scale<T: Real>(operand_norms: &[T]) -> T {
    operand_norms
        .iter()
        .fold(T::one(), |acc, &n| if n > acc { n } else { acc })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scale_floors_at_one() {
        assert_eq!(tolerance_scale::<f64>(&[0.25, 0.5]), 1.0);
        assert_eq!(tolerance_scale::<f64>(&[3.0, 0.5]), 3.0);
        assert_eq!(tolerance_scale::<f64>(&[]), 1.0);
    }
}
