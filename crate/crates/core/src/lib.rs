//! Open-world evidence theory.
//!
//! Mass functions here may assign mass to the empty set, which stands for
//! hypotheses outside the known frame of discernment. The crate provides
//! generalized belief and plausibility, Dempster's rule and its open-world
//! generalization, pignistic probabilities, the Jaccard-weighted evidence
//! distance, and three two-component conflict models.
//!
//! The core is generic over the mass type: `f64` (the default), `f32`, or
//! exact `Ratio<i64>` for everything that does not need a square root.
//!
//! ```
//! use gevidence::{gcr_combine, Frame, Gbpa};
//!
//! let frame = Frame::new(["a", "b", "c"]).unwrap();
//! let m1: Gbpa = Gbpa::from_labels(&frame, &[(&["a"][..], 0.2), (&["b"], 0.2), (&[], 0.6)]).unwrap();
//! let m2 = Gbpa::from_labels(&frame, &[(&["a"][..], 0.2), (&["b", "c"], 0.1), (&[], 0.7)]).unwrap();
//! let fused = gcr_combine(&m1, &m2).unwrap();
//! assert!((fused.result.empty_mass() - 0.42).abs() < 1e-12);
//! ```

pub mod cli;
pub mod combination;
pub mod conflict;
pub mod distance;
pub mod error;
pub mod experiments;
pub mod frame;
pub mod gbpa;
pub mod io;
pub mod scalar;
pub mod transforms;

pub use combination::{
    combine, combine_sequence, conflict_coefficient, dempster_combine, gbel, gcr_combine, gpl,
    CombinationOutcome, Rule,
};
pub use conflict::{
    conflict_measure, generalized_cf, judge_conflict, liu_cf, modified_cf, ConflictMeasure,
    ConflictModel, ConflictVerdict,
};
pub use distance::{
    gbpa_distance, gbpa_distance_with, jaccard_index, squared_distance, EmptySetConvention,
    JaccardWeight,
};
pub use error::{EvidenceError, Result};
pub use frame::{set_algebra, Frame, SetAlgebra, Subset};
pub use gbpa::{Gbpa, ProbDist};
pub use io::{emit_table, parse_evidence_document, EvidenceDocument, TableFormat};
pub use scalar::{RealScalar, Scalar};
pub use transforms::{betp, dif_betp};

pub use num_rational::Rational64;

pub type Gbpa64 = Gbpa<f64>;
pub type Gbpa32 = Gbpa<f32>;
pub type ExactGbpa = Gbpa<Rational64>;

pub type ProbDist64 = ProbDist<f64>;
pub type ProbDist32 = ProbDist<f32>;
pub type ExactProbDist = ProbDist<Rational64>;

pub type CombinationOutcome64 = CombinationOutcome<f64>;
pub type CombinationOutcome32 = CombinationOutcome<f32>;
pub type ExactCombinationOutcome = CombinationOutcome<Rational64>;

pub type ConflictMeasure64 = ConflictMeasure<f64>;
pub type ConflictMeasure32 = ConflictMeasure<f32>;
