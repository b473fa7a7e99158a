//! Scalar types usable as masses.
//!
//! Everything that only adds, multiplies and divides masses is generic over
//! [`Scalar`], which covers `f32`, `f64` and exact rationals. Operations that
//! need a square root (the evidence distance and the conflict models built on
//! it) additionally require [`RealScalar`].

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// A mass value: a field element with an ordering and per-type tolerances.
pub trait Scalar:
    Num + Copy + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Allowed deviation of a mass sum from one.
    fn sum_tolerance() -> Self;

    /// Distance from one below which a conflict coefficient counts as total.
    fn total_conflict_tolerance() -> Self;

    /// Magnitude of negative rounding residue clamped to zero before a square root.
    fn cancellation_tolerance() -> Self;

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar type")
    }

    /// Lossy conversion used for diagnostics and error payloads.
    fn approx_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn abs_diff(self, other: Self) -> Self {
        if self >= other {
            self - other
        } else {
            other - self
        }
    }

    fn max_of(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }
}

/// Floating-point masses (`f32`, `f64`).
pub trait RealScalar: Scalar + Float {}

impl Scalar for f64 {
    fn sum_tolerance() -> Self {
        1e-9
    }
    fn total_conflict_tolerance() -> Self {
        1e-12
    }
    fn cancellation_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn sum_tolerance() -> Self {
        1e-5
    }
    fn total_conflict_tolerance() -> Self {
        1e-6
    }
    fn cancellation_tolerance() -> Self {
        1e-6
    }
}

impl RealScalar for f64 {}
impl RealScalar for f32 {}

// Rationals are exact: every tolerance is zero.
impl Scalar for Ratio<i64> {
    fn sum_tolerance() -> Self {
        Ratio::from_integer(0)
    }
    fn total_conflict_tolerance() -> Self {
        Ratio::from_integer(0)
    }
    fn cancellation_tolerance() -> Self {
        Ratio::from_integer(0)
    }
}

/// Sums terms in ascending order so the result depends only on the multiset
/// of terms, not on the order they were produced in.
pub(crate) fn canonical_sum<T: Scalar>(terms: &mut [T]) -> T {
    terms.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    terms.iter().fold(T::zero(), |acc, &t| acc + t)
}
