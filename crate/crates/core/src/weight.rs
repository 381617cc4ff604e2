//! Scalar abstraction for vertex weights.
//!
//! Solvers are written once against [`Weight`] and instantiated with concrete
//! integer types through the aliases at the crate root. Weights must be totally
//! ordered and exact, so floating point types are deliberately not admitted.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::Num;

pub trait Weight: Num + Copy + Ord + Debug + Display + Sum + Send + Sync + 'static {
    /// The weight equal to `count` copies of one.
    fn from_count(count: usize) -> Self {
        let mut total = Self::zero();
        for _ in 0..count {
            total = total + Self::one();
        }
        total
    }
}

impl<T> Weight for T where T: Num + Copy + Ord + Debug + Display + Sum + Send + Sync + 'static {}
