//! Frames of discernment and bit-encoded subsets.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{EvidenceError, Result};

pub const MAX_FRAME_SIZE: usize = 64;

/// Fingerprint of a frame's label list. Frames with identical labels share it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrameId(u64);

#[derive(Debug)]
struct FrameData {
    id: FrameId,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered set of mutually exclusive hypotheses. Cheap to clone.
#[derive(Clone)]
pub struct Frame(Arc<FrameData>);

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(EvidenceError::EmptyFrame);
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(EvidenceError::FrameTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(EvidenceError::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(EvidenceError::DuplicateLabel(label.clone()));
            }
        }
        let mut hasher = DefaultHasher::new();
        labels.hash(&mut hasher);
        let id = FrameId(hasher.finish());
        Ok(Frame(Arc::new(FrameData { id, labels, index })))
    }

    pub fn id(&self) -> FrameId {
        self.0.id
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    fn mask(&self) -> u64 {
        if self.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.len()) - 1
        }
    }

    /// Builds a subset from member labels. An empty list yields ∅.
    pub fn subset<S: AsRef<str>>(&self, members: &[S]) -> Result<Subset> {
        let mut bits = 0u64;
        for m in members {
            let m = m.as_ref();
            let i = self
                .index_of(m)
                .ok_or_else(|| EvidenceError::UnknownLabel(m.to_string()))?;
            bits |= 1 << i;
        }
        Ok(Subset {
            bits,
            frame: self.id(),
        })
    }

    pub fn subset_from_bits(&self, bits: u64) -> Result<Subset> {
        if bits & !self.mask() != 0 {
            return Err(EvidenceError::BitsOutOfRange(bits));
        }
        Ok(Subset {
            bits,
            frame: self.id(),
        })
    }

    pub fn empty_set(&self) -> Subset {
        Subset {
            bits: 0,
            frame: self.id(),
        }
    }

    /// The whole frame Ω.
    pub fn full_set(&self) -> Subset {
        Subset {
            bits: self.mask(),
            frame: self.id(),
        }
    }

    pub fn singleton(&self, index: usize) -> Result<Subset> {
        if index >= self.len() {
            return Err(EvidenceError::BitsOutOfRange(u64::MAX));
        }
        Ok(Subset {
            bits: 1 << index,
            frame: self.id(),
        })
    }

    /// Iterates over every subset of the frame, ∅ included. Only sensible for small frames.
    pub fn power_set(&self) -> impl Iterator<Item = Subset> + '_ {
        assert!(
            self.len() < 32,
            "power set enumeration limited to frames below 32 elements"
        );
        (0..(1u64 << self.len())).map(move |bits| Subset {
            bits,
            frame: self.id(),
        })
    }

    pub fn members<'a>(&'a self, subset: &Subset) -> Result<Vec<&'a str>> {
        self.check(subset)?;
        Ok(subset
            .indices()
            .map(|i| self.0.labels[i].as_str())
            .collect())
    }

    /// Renders a subset as `{a,b}`, or `∅`.
    pub fn display(&self, subset: &Subset) -> String {
        if subset.is_empty() {
            return "∅".to_string();
        }
        let names: Vec<&str> = subset
            .indices()
            .filter_map(|i| self.0.labels.get(i).map(String::as_str))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn check(&self, subset: &Subset) -> Result<()> {
        if subset.frame != self.id() {
            Err(EvidenceError::FrameMismatch)
        } else {
            Ok(())
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Frame {}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Frame").field(&self.0.labels).finish()
    }
}

/// A subset of a frame, stored as a membership bit-vector. The zero pattern is ∅.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u64,
    frame: FrameId,
}

impl Subset {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn frame_id(&self) -> FrameId {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index < 64 && self.bits & (1 << index) != 0
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..64).filter(move |i| bits & (1 << i) != 0)
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.same_frame(other)?;
        Ok(self.meet(other))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.same_frame(other)?;
        Ok(self.join(other))
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        self.same_frame(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    pub(crate) fn meet(&self, other: &Subset) -> Subset {
        Subset {
            bits: self.bits & other.bits,
            frame: self.frame,
        }
    }

    pub(crate) fn join(&self, other: &Subset) -> Subset {
        Subset {
            bits: self.bits | other.bits,
            frame: self.frame,
        }
    }

    pub(crate) fn disjoint(&self, other: &Subset) -> bool {
        self.bits & other.bits == 0
    }

    fn same_frame(&self, other: &Subset) -> Result<()> {
        if self.frame == other.frame {
            Ok(())
        } else {
            Err(EvidenceError::FrameMismatch)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetAlgebra {
    pub intersection: Subset,
    pub union: Subset,
    pub card_a: usize,
    pub card_b: usize,
}

pub fn set_algebra(a: &Subset, b: &Subset) -> Result<SetAlgebra> {
    Ok(SetAlgebra {
        intersection: a.intersection(b)?,
        union: a.union(b)?,
        card_a: a.len(),
        card_b: b.len(),
    })
}
