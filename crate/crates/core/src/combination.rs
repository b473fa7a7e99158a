//! Belief, plausibility and the two combination rules.
//!
//! [`gcr_combine`] is the open-world rule: the product of the two ∅ masses is
//! kept on ∅, and the remaining mass is spread over the nonempty
//! intersections in proportion to their conjunctive weight, renormalized by
//! `1 − K`. When neither input puts mass on ∅ it coincides with Dempster's
//! rule. If `K = 1` the result is `m(∅) = 1`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{EvidenceError, Result};
use crate::frame::Subset;
use crate::gbpa::Gbpa;
use crate::scalar::{canonical_sum, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Dempster,
    Gcr,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Dempster => "dempster",
            Rule::Gcr => "gcr",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CombinationOutcome<T = f64> {
    pub result: Gbpa<T>,
    pub conflict_k: T,
    pub rule: Rule,
}

/// Generalized belief. `GBel(∅) = m(∅)`; for nonempty `A` the sum runs over
/// nonempty subsets of `A` only, so ∅ mass never supports a proposition inside
/// the frame.
pub fn gbel<T: Scalar>(m: &Gbpa<T>, a: &Subset) -> Result<T> {
    m.frame().check(a)?;
    if a.is_empty() {
        return Ok(m.empty_mass());
    }
    Ok(m.focal_elements()
        .filter(|(b, _)| !b.is_empty() && b.bits() & !a.bits() == 0)
        .fold(T::zero(), |acc, (_, v)| acc + v))
}

/// Generalized plausibility. `GPl(∅) = m(∅)`; otherwise the mass of focal
/// sets meeting `A`.
pub fn gpl<T: Scalar>(m: &Gbpa<T>, a: &Subset) -> Result<T> {
    m.frame().check(a)?;
    if a.is_empty() {
        return Ok(m.empty_mass());
    }
    Ok(m.focal_elements()
        .filter(|(b, _)| !b.disjoint(a))
        .fold(T::zero(), |acc, (_, v)| acc + v))
}

/// Conflict coefficient `K`: product mass on disjoint focal pairs, pairs
/// involving ∅ included.
pub fn conflict_coefficient<T: Scalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<T> {
    m1.ensure_same_frame(m2)?;
    Ok(conjunctive(m1, m2).1)
}

/// Unnormalized conjunctive masses on nonempty intersections, and `K`.
/// Terms are summed in canonical order so swapping the operands gives a
/// bit-identical result.
fn conjunctive<T: Scalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> (BTreeMap<Subset, T>, T) {
    let mut terms: BTreeMap<Subset, Vec<T>> = BTreeMap::new();
    let mut conflict_terms = Vec::new();
    for (b, x) in m1.focal_elements() {
        for (c, y) in m2.focal_elements() {
            let product = x * y;
            let meet = b.meet(&c);
            if meet.is_empty() {
                conflict_terms.push(product);
            } else {
                terms.entry(meet).or_default().push(product);
            }
        }
    }
    let k = canonical_sum(&mut conflict_terms);
    let sums = terms
        .into_iter()
        .map(|(s, mut v)| (s, canonical_sum(&mut v)))
        .collect();
    (sums, k)
}

fn is_total_conflict<T: Scalar>(k: T) -> bool {
    T::one() - k <= T::total_conflict_tolerance()
}

/// Clamps rounding residue so `K` stays within `[0, 1]`.
fn clamp_unit<T: Scalar>(k: T) -> T {
    if k > T::one() {
        T::one()
    } else {
        k
    }
}

pub fn dempster_combine<T: Scalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<CombinationOutcome<T>> {
    m1.ensure_same_frame(m2)?;
    for m in [m1, m2] {
        if !m.is_classical() {
            return Err(EvidenceError::NonClassical(m.empty_mass().approx_f64()));
        }
    }
    let (mut masses, k) = conjunctive(m1, m2);
    if is_total_conflict(k) {
        return Err(EvidenceError::TotalConflict);
    }
    let norm = T::one() - k;
    for v in masses.values_mut() {
        *v = *v / norm;
    }
    Ok(CombinationOutcome {
        result: Gbpa::from_parts(m1.frame().clone(), masses),
        conflict_k: clamp_unit(k),
        rule: Rule::Dempster,
    })
}

pub fn gcr_combine<T: Scalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<CombinationOutcome<T>> {
    m1.ensure_same_frame(m2)?;
    let frame = m1.frame().clone();
    let (mut masses, k) = conjunctive(m1, m2);
    if is_total_conflict(k) {
        let mut only_empty = BTreeMap::new();
        only_empty.insert(frame.empty_set(), T::one());
        return Ok(CombinationOutcome {
            result: Gbpa::from_parts(frame, only_empty),
            conflict_k: clamp_unit(k),
            rule: Rule::Gcr,
        });
    }
    let empty = m1.empty_mass() * m2.empty_mass();
    let scale = T::one() - empty;
    let norm = T::one() - k;
    for v in masses.values_mut() {
        *v = scale * *v / norm;
    }
    masses.insert(frame.empty_set(), empty);
    Ok(CombinationOutcome {
        result: Gbpa::from_parts(frame, masses),
        conflict_k: k,
        rule: Rule::Gcr,
    })
}

pub fn combine<T: Scalar>(rule: Rule, m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<CombinationOutcome<T>> {
    match rule {
        Rule::Dempster => dempster_combine(m1, m2),
        Rule::Gcr => gcr_combine(m1, m2),
    }
}

/// Left fold of `rule` over `bodies`; `conflict_k` is that of the last step.
pub fn combine_sequence<T: Scalar>(
    rule: Rule,
    bodies: &[Gbpa<T>],
) -> Result<CombinationOutcome<T>> {
    let (first, rest) = match bodies {
        [first, rest @ ..] if !rest.is_empty() => (first, rest),
        _ => return Err(EvidenceError::TooFewBodies(bodies.len())),
    };
    let mut outcome = combine(rule, first, &rest[0])?;
    for next in &rest[1..] {
        outcome = combine(rule, &outcome.result, next)?;
    }
    Ok(outcome)
}
