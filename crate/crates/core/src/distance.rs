//! Jaccard-weighted evidence distance.
//!
//! The distance is `sqrt(½ (m1 − m2)ᵀ D (m1 − m2))` with
//! `D(A, B) = |A ∩ B| / |A ∪ B|`. The `2^N × 2^N` matrix is never built: the
//! quadratic form is evaluated over the focal sets of the two inputs only.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::frame::Subset;
use crate::gbpa::Gbpa;
use crate::scalar::{RealScalar, Scalar};

/// How the `0/0` entry `D(∅, ∅)` is resolved. `D(∅, B)` is 0 for `B ≠ ∅` either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EmptySetConvention {
    /// `D(∅, ∅) = 1`: ∅ behaves like one more, unnamed, element.
    #[default]
    Distinct,
    /// `D(∅, ∅) = 0`: mass on ∅ is invisible to the distance.
    Invisible,
}

pub const DEFAULT_EMPTY_CONVENTION: EmptySetConvention = EmptySetConvention::Distinct;

/// Similarity weight between two subsets, in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct JaccardWeight<T>(T);

impl<T: Scalar> JaccardWeight<T> {
    pub fn between(a: &Subset, b: &Subset, convention: EmptySetConvention) -> Result<Self> {
        let union = a.union(b)?;
        Ok(JaccardWeight(weight(a, b, &union, convention)))
    }

    pub fn value(self) -> T {
        self.0
    }
}

fn weight<T: Scalar>(a: &Subset, b: &Subset, union: &Subset, convention: EmptySetConvention) -> T {
    if union.is_empty() {
        return match convention {
            EmptySetConvention::Distinct => T::one(),
            EmptySetConvention::Invisible => T::zero(),
        };
    }
    let common = a.meet(b).len();
    if common == 0 {
        return T::zero();
    }
    T::from_count(common) / T::from_count(union.len())
}

pub fn jaccard_index<T: Scalar>(a: &Subset, b: &Subset) -> Result<T> {
    Ok(JaccardWeight::between(a, b, DEFAULT_EMPTY_CONVENTION)?.value())
}

/// `⟨m1, m2⟩_D` summed over focal pairs.
pub fn inner_product<T: Scalar>(
    m1: &Gbpa<T>,
    m2: &Gbpa<T>,
    convention: EmptySetConvention,
) -> Result<T> {
    m1.ensure_same_frame(m2)?;
    let mut acc = T::zero();
    for (a, x) in m1.focal_elements() {
        for (b, y) in m2.focal_elements() {
            acc = acc + x * y * weight(&a, &b, &a.join(&b), convention);
        }
    }
    Ok(acc)
}

/// `½ (m1 − m2)ᵀ D (m1 − m2)`, exact for rational masses.
pub fn squared_distance<T: Scalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<T> {
    squared_distance_with(m1, m2, DEFAULT_EMPTY_CONVENTION)
}

pub fn squared_distance_with<T: Scalar>(
    m1: &Gbpa<T>,
    m2: &Gbpa<T>,
    convention: EmptySetConvention,
) -> Result<T> {
    m1.ensure_same_frame(m2)?;
    // Evaluating on the difference vector avoids the cancellation of
    // ‖m1‖² + ‖m2‖² − 2⟨m1, m2⟩ when the inputs are close.
    let mut diff: BTreeMap<Subset, T> = m1.focal_elements().collect();
    for (s, y) in m2.focal_elements() {
        let e = diff.entry(s).or_insert_with(T::zero);
        *e = *e - y;
    }
    let diff: Vec<(Subset, T)> = diff.into_iter().filter(|(_, v)| *v != T::zero()).collect();
    let mut acc = T::zero();
    for (i, (a, x)) in diff.iter().enumerate() {
        acc = acc + *x * *x * weight(a, a, a, convention);
        for (b, y) in &diff[i + 1..] {
            let w: T = weight(a, b, &a.join(b), convention);
            if w != T::zero() {
                acc = acc + (T::one() + T::one()) * *x * *y * w;
            }
        }
    }
    Ok(acc / (T::one() + T::one()))
}

/// Evidence distance in `[0, 1]`. Works for closed- and open-world inputs alike.
pub fn gbpa_distance<T: RealScalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<T> {
    gbpa_distance_with(m1, m2, DEFAULT_EMPTY_CONVENTION)
}

pub fn gbpa_distance_with<T: RealScalar>(
    m1: &Gbpa<T>,
    m2: &Gbpa<T>,
    convention: EmptySetConvention,
) -> Result<T> {
    let sq = squared_distance_with(m1, m2, convention)?;
    let sq = if sq < T::zero() && -sq < <T as Scalar>::cancellation_tolerance() {
        T::zero()
    } else {
        sq
    };
    Ok(sq.sqrt())
}
