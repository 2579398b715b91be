use std::fmt;
use std::sync::Arc;

use crate::bits::{bits, compress, low_mask};
use crate::error::{Error, Result};

/// Largest supported ground set; subsets must fit in one machine word.
pub const MAX_GROUND: usize = 62;

/// An ordered finite ground set. Element `i` corresponds to bit `i` of a subset mask.
#[derive(Clone)]
pub struct GroundSet {
    labels: Arc<[String]>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        Ok(GroundSet {
            labels: labels.into(),
        })
    }

    /// Ground set labelled `1..=n`.
    pub fn numbered(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| i.to_string()))
    }

    pub fn empty() -> Self {
        GroundSet {
            labels: Arc::from(Vec::new()),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn full(&self) -> u64 {
        low_mask(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    /// Mask of the given labels.
    pub fn mask_of<I, S>(&self, labels: I) -> Result<u64>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        labels
            .into_iter()
            .try_fold(0u64, |m, l| Ok(m | 1 << self.index_of(l.as_ref())?))
    }

    pub fn check_subset(&self, x: u64) -> Result<()> {
        if x & !self.full() != 0 {
            Err(Error::NotASubset {
                subset: x,
                n: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Labels of the elements in `x`, in ground order.
    pub fn labels_of(&self, x: u64) -> Vec<&str> {
        bits(x).map(|i| self.label(i)).collect()
    }

    /// The sub-ground set on `x`, re-indexed densely in the original order.
    pub fn restrict(&self, x: u64) -> GroundSet {
        if x == self.full() {
            return self.clone();
        }
        GroundSet {
            labels: bits(x)
                .map(|i| self.labels[i].clone())
                .collect::<Vec<_>>()
                .into(),
        }
    }

    /// Re-index a subset of `x` onto the ground set produced by [`GroundSet::restrict`].
    #[inline]
    pub fn reindex(&self, y: u64, x: u64) -> u64 {
        if x == self.full() {
            y
        } else {
            compress(y, x)
        }
    }

    /// Human-readable subset, e.g. `{p,q}`.
    pub fn format_subset(&self, x: u64) -> String {
        format!("{{{}}}", self.labels_of(x).join(","))
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }
}

impl Eq for GroundSet {}

impl std::hash::Hash for GroundSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}
