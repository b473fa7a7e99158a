//! Pignistic probability transform and pignistic betting distance.

use crate::error::{EvidenceError, Result};
use crate::gbpa::{Gbpa, ProbDist};
use crate::scalar::Scalar;

/// Splits each focal mass evenly over its members and discounts by `1 − m(∅)`.
pub fn betp<T: Scalar>(m: &Gbpa<T>) -> Result<ProbDist<T>> {
    let open = T::one() - m.empty_mass();
    if open <= T::total_conflict_tolerance() {
        return Err(EvidenceError::EmptySetCertain);
    }
    let frame = m.frame().clone();
    let mut probs = vec![T::zero(); frame.len()];
    for (focal, mass) in m.focal_elements().filter(|(s, _)| !s.is_empty()) {
        let share = mass / (T::from_count(focal.len()) * open);
        for i in focal.indices() {
            probs[i] = probs[i] + share;
        }
    }
    Ok(ProbDist::from_parts(frame, probs))
}

/// Largest difference of pignistic probabilities over all subsets of the frame.
///
/// For two probability measures the maximum is attained on the set where the
/// first exceeds the second, so it equals `Σ_ω max(0, P1(ω) − P2(ω))`.
pub fn dif_betp<T: Scalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<T> {
    m1.ensure_same_frame(m2)?;
    let p1 = betp(m1)?;
    let p2 = betp(m2)?;
    let up = positive_part(p1.probs(), p2.probs());
    let down = positive_part(p2.probs(), p1.probs());
    // Both equal the total variation; the larger one absorbs rounding and keeps symmetry.
    let tv = up.max_of(down);
    Ok(if tv > T::one() { T::one() } else { tv })
}

fn positive_part<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(
        T::zero(),
        |acc, (&x, &y)| if x > y { acc + (x - y) } else { acc },
    )
}
