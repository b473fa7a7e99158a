//! Two-component conflict models and the threshold verdict.
//!
//! Each model pairs a conflict coefficient with a dissimilarity measure. Two
//! bodies of evidence are judged in conflict only when both components exceed
//! the tolerance ε; there is no default ε.

use std::fmt;

use crate::combination::conflict_coefficient;
use crate::distance::gbpa_distance;
use crate::error::{EvidenceError, Result};
use crate::gbpa::Gbpa;
use crate::scalar::{RealScalar, Scalar};
use crate::transforms::dif_betp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConflictModel {
    /// ⟨K, difBetP⟩ on closed-world evidence.
    Liu,
    /// ⟨K, evidence distance⟩ on closed-world evidence.
    Modified,
    /// ⟨K, evidence distance⟩ with ∅ mass allowed on both sides.
    Generalized,
}

impl fmt::Display for ConflictModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConflictModel::Liu => "liu",
            ConflictModel::Modified => "modified",
            ConflictModel::Generalized => "generalized",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConflictMeasure<T = f64> {
    pub coefficient: T,
    pub distance: T,
    pub model: ConflictModel,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConflictVerdict<T = f64> {
    pub in_conflict: bool,
    pub epsilon: T,
}

impl<T> fmt::Display for ConflictVerdict<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.in_conflict {
            "in conflict"
        } else {
            "not in conflict"
        })
    }
}

fn require_classical<T: Scalar>(bodies: [&Gbpa<T>; 2]) -> Result<()> {
    for m in bodies {
        if !m.is_classical() {
            return Err(EvidenceError::NonClassical(m.empty_mass().approx_f64()));
        }
    }
    Ok(())
}

pub fn liu_cf<T: Scalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<ConflictMeasure<T>> {
    m1.ensure_same_frame(m2)?;
    require_classical([m1, m2])?;
    Ok(ConflictMeasure {
        coefficient: conflict_coefficient(m1, m2)?,
        distance: dif_betp(m1, m2)?,
        model: ConflictModel::Liu,
    })
}

pub fn modified_cf<T: RealScalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<ConflictMeasure<T>> {
    m1.ensure_same_frame(m2)?;
    require_classical([m1, m2])?;
    Ok(ConflictMeasure {
        coefficient: conflict_coefficient(m1, m2)?,
        distance: gbpa_distance(m1, m2)?,
        model: ConflictModel::Modified,
    })
}

pub fn generalized_cf<T: RealScalar>(m1: &Gbpa<T>, m2: &Gbpa<T>) -> Result<ConflictMeasure<T>> {
    Ok(ConflictMeasure {
        coefficient: conflict_coefficient(m1, m2)?,
        distance: gbpa_distance(m1, m2)?,
        model: ConflictModel::Generalized,
    })
}

pub fn conflict_measure<T: RealScalar>(
    model: ConflictModel,
    m1: &Gbpa<T>,
    m2: &Gbpa<T>,
) -> Result<ConflictMeasure<T>> {
    match model {
        ConflictModel::Liu => liu_cf(m1, m2),
        ConflictModel::Modified => modified_cf(m1, m2),
        ConflictModel::Generalized => generalized_cf(m1, m2),
    }
}

/// Conflict iff both components strictly exceed `epsilon`.
pub fn judge_conflict<T: Scalar>(
    cf: &ConflictMeasure<T>,
    epsilon: T,
) -> Result<ConflictVerdict<T>> {
    if !(epsilon >= T::zero() && epsilon <= T::one()) {
        return Err(EvidenceError::EpsilonOutOfRange(epsilon.approx_f64()));
    }
    Ok(ConflictVerdict {
        in_conflict: cf.coefficient > epsilon && cf.distance > epsilon,
        epsilon,
    })
}
