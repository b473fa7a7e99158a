//! Generalized basic probability assignments.
//!
//! A [`Gbpa`] is a sparse mass function over the subsets of a frame in which
//! the empty set may carry mass. That mass models hypotheses lying outside the
//! known frame. With `m(∅) = 0` the assignment is an ordinary closed-world BPA.

use std::collections::BTreeMap;

use crate::error::{EvidenceError, Result};
use crate::frame::{Frame, Subset};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Gbpa<T = f64> {
    frame: Frame,
    masses: BTreeMap<Subset, T>,
}

impl<T: Scalar> Gbpa<T> {
    /// Validates and builds an assignment. Zero masses are dropped; the total
    /// must be within [`Scalar::sum_tolerance`] of one.
    pub fn new<I>(frame: Frame, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, T)>,
    {
        let masses = collect_masses(&frame, assignments)?;
        let total = total(&masses);
        if total.abs_diff(T::one()) > T::sum_tolerance() {
            return Err(EvidenceError::MassSum(total.approx_f64()));
        }
        Ok(Gbpa { frame, masses })
    }

    /// Like [`Gbpa::new`] but rescales the masses to sum to one instead of
    /// rejecting an off-unit total.
    pub fn renormalized<I>(frame: Frame, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Subset, T)>,
    {
        let mut masses = collect_masses(&frame, assignments)?;
        let total = total(&masses);
        if total <= T::zero() {
            return Err(EvidenceError::DegenerateMass(total.approx_f64()));
        }
        for m in masses.values_mut() {
            *m = *m / total;
        }
        Ok(Gbpa { frame, masses })
    }

    /// Builds an assignment from label lists, e.g. `&[(&["a"], 0.6), (&[], 0.4)]`.
    pub fn from_labels<S: AsRef<str>>(frame: &Frame, assignments: &[(&[S], T)]) -> Result<Self> {
        let pairs = assignments
            .iter()
            .map(|(members, m)| Ok((frame.subset(members)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        Gbpa::new(frame.clone(), pairs)
    }

    /// Total ignorance: `m(Ω) = 1`.
    pub fn vacuous(frame: Frame) -> Self {
        let mut masses = BTreeMap::new();
        masses.insert(frame.full_set(), T::one());
        Gbpa { frame, masses }
    }

    /// All mass on ∅: the truth lies outside the frame.
    pub fn unknown(frame: Frame) -> Self {
        let mut masses = BTreeMap::new();
        masses.insert(frame.empty_set(), T::one());
        Gbpa { frame, masses }
    }

    /// Assembles a result produced by a combination rule. Masses are assumed
    /// nonnegative and normalized by construction.
    pub(crate) fn from_parts(frame: Frame, masses: BTreeMap<Subset, T>) -> Self {
        let masses = masses.into_iter().filter(|(_, m)| *m > T::zero()).collect();
        Gbpa { frame, masses }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// m(A); zero for non-focal sets.
    pub fn mass(&self, subset: &Subset) -> T {
        self.masses.get(subset).copied().unwrap_or_else(T::zero)
    }

    pub fn empty_mass(&self) -> T {
        self.mass(&self.frame.empty_set())
    }

    /// True iff `m(∅) = 0`.
    pub fn is_classical(&self) -> bool {
        self.empty_mass() == T::zero()
    }

    /// Focal sets and their masses, in ascending bit order.
    pub fn focal_elements(&self) -> impl Iterator<Item = (Subset, T)> + '_ {
        self.masses.iter().map(|(s, m)| (*s, *m))
    }

    pub fn focal_count(&self) -> usize {
        self.masses.len()
    }

    pub fn total_mass(&self) -> T {
        total(&self.masses)
    }

    pub(crate) fn ensure_same_frame(&self, other: &Gbpa<T>) -> Result<()> {
        if self.frame == other.frame {
            Ok(())
        } else {
            Err(EvidenceError::FrameMismatch)
        }
    }
}

fn collect_masses<T: Scalar, I>(frame: &Frame, assignments: I) -> Result<BTreeMap<Subset, T>>
where
    I: IntoIterator<Item = (Subset, T)>,
{
    let mut masses = BTreeMap::new();
    let mut seen = std::collections::BTreeSet::new();
    for (subset, mass) in assignments {
        frame.check(&subset)?;
        let non_negative = matches!(
            mass.partial_cmp(&T::zero()),
            Some(std::cmp::Ordering::Greater | std::cmp::Ordering::Equal)
        );
        if !non_negative || !mass.approx_f64().is_finite() {
            return Err(EvidenceError::InvalidMass {
                focal: frame.display(&subset),
                mass: mass.approx_f64(),
            });
        }
        if !seen.insert(subset) {
            return Err(EvidenceError::DuplicateFocalSet(frame.display(&subset)));
        }
        if mass > T::zero() {
            masses.insert(subset, mass);
        }
    }
    Ok(masses)
}

fn total<T: Scalar>(masses: &BTreeMap<Subset, T>) -> T {
    masses.values().fold(T::zero(), |acc, &m| acc + m)
}

/// A probability distribution over the singletons of a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbDist<T = f64> {
    frame: Frame,
    probs: Vec<T>,
}

impl<T: Scalar> ProbDist<T> {
    pub(crate) fn from_parts(frame: Frame, probs: Vec<T>) -> Self {
        debug_assert_eq!(frame.len(), probs.len());
        ProbDist { frame, probs }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn prob(&self, label: &str) -> Option<T> {
        self.frame.index_of(label).map(|i| self.probs[i])
    }

    /// Probability of a subset: the sum over its members.
    pub fn prob_of(&self, subset: &Subset) -> Result<T> {
        self.frame.check(subset)?;
        Ok(subset
            .indices()
            .fold(T::zero(), |acc, i| acc + self.probs[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn abc() -> Frame {
        Frame::new(["a", "b", "c"]).unwrap()
    }

    const NONE: &[&str] = &[];

    #[test]
    fn closed_world_example() {
        let f = abc();
        let m =
            Gbpa::from_labels(&f, &[(&["a"][..], 0.6), (&["c"], 0.2), (&["b", "c"], 0.2)]).unwrap();
        assert_eq!(m.empty_mass(), 0.0);
        assert!(m.is_classical());
        assert_eq!(m.focal_count(), 3);
    }

    #[test]
    fn open_world_example() {
        let f = abc();
        let m = Gbpa::from_labels(
            &f,
            &[
                (&["a"][..], 0.6),
                (&["b"], 0.1),
                (&["b", "c"], 0.2),
                (NONE, 0.1),
            ],
        )
        .unwrap();
        assert_eq!(m.empty_mass(), 0.1);
        assert!(!m.is_classical());
    }

    #[test]
    fn vacuous_is_classical() {
        let m: Gbpa = Gbpa::vacuous(abc());
        assert!(m.is_classical());
        assert_eq!(m.mass(&abc().full_set()), 1.0);
    }

    #[test]
    fn rejects_bad_sums() {
        let f = abc();
        let err = Gbpa::from_labels(&f, &[(&["b"][..], 0.5)]).unwrap_err();
        assert_eq!(err, EvidenceError::MassSum(0.5));
        // m(∅) = 0.1 alone is malformed, not silently repaired
        assert!(matches!(
            Gbpa::from_labels(&f, &[(NONE, 0.1)]).unwrap_err(),
            EvidenceError::MassSum(_)
        ));
    }

    #[test]
    fn rejects_negative_and_duplicates() {
        let f = abc();
        assert!(matches!(
            Gbpa::from_labels(&f, &[(&["a"][..], -0.1), (&["b"], 1.1)]).unwrap_err(),
            EvidenceError::InvalidMass { .. }
        ));
        assert!(matches!(
            Gbpa::from_labels(&f, &[(&["a"][..], f64::NAN)]).unwrap_err(),
            EvidenceError::InvalidMass { .. }
        ));
        assert_eq!(
            Gbpa::from_labels(&f, &[(&["a"][..], 0.5), (&["a"], 0.5)]).unwrap_err(),
            EvidenceError::DuplicateFocalSet("{a}".into())
        );
    }

    #[test]
    fn zero_masses_are_dropped() {
        let f = abc();
        let m = Gbpa::from_labels(&f, &[(&["a"][..], 1.0), (&["b"], 0.0)]).unwrap();
        assert_eq!(m.focal_count(), 1);
    }

    #[test]
    fn tolerance_boundary() {
        let f = abc();
        assert!(Gbpa::from_labels(&f, &[(&["a"][..], 0.5), (&["b"], 0.5 + 5e-10)]).is_ok());
        assert!(Gbpa::from_labels(&f, &[(&["a"][..], 0.5), (&["b"], 0.5 + 5e-9)]).is_err());
    }

    #[test]
    fn renormalize_rescales() {
        let f = abc();
        let m: Gbpa = Gbpa::renormalized(
            f.clone(),
            [(f.subset(&["a"]).unwrap(), 0.2), (f.empty_set(), 0.2)],
        )
        .unwrap();
        assert!((m.empty_mass() - 0.5).abs() < 1e-15);
        assert!(Gbpa::<f64>::renormalized(f.clone(), []).is_err());
    }

    #[test]
    fn exact_rational_masses() {
        let f = abc();
        let third = Ratio::new(1i64, 3);
        let m = Gbpa::from_labels(&f, &[(&["a"][..], third), (&["b"], third), (&["c"], third)])
            .unwrap();
        assert_eq!(m.total_mass(), Ratio::from_integer(1));
        assert!(Gbpa::from_labels(&f, &[(&["a"][..], third)]).is_err());
    }

    #[test]
    fn foreign_subset_rejected() {
        let f = abc();
        let g = Frame::new(["x"]).unwrap();
        let err = Gbpa::new(f, [(g.full_set(), 1.0)]).unwrap_err();
        assert_eq!(err, EvidenceError::FrameMismatch);
    }
}
