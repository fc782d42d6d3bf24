//! Ground sets and bitmask subsets.
//!
//! Element labels are opaque tokens with a fixed canonical total order (the
//! construction order). All set-valued results are emitted in canonical
//! order, so every operation in the crate is deterministic.

use std::fmt;
use std::sync::Arc;

use crate::{Error, Result};

/// A subset of a ground set, stored as a bitmask over canonical positions.
///
/// Bit `i` corresponds to the `i`-th element of the owning [`GroundSet`].
/// Masks are only meaningful relative to one ground set; operations that
/// take masks validate them against the matroid's ground.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mask(pub u64);

/// Largest supported ground set (bit width of `Mask`).
pub const MAX_ELEMENTS: usize = 64;

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(n: usize) -> Mask {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == 64 {
            Mask(u64::MAX)
        } else {
            Mask((1u64 << n) - 1)
        }
    }

    pub fn bit(i: usize) -> Mask {
        Mask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Mask {
        let mut m = 0u64;
        for i in iter {
            m |= 1 << i;
        }
        Mask(m)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, i: usize) -> Mask {
        Mask(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Mask {
        Mask(self.0 & !(1 << i))
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn inter(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn minus(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Mask) -> bool {
        self.0 & other.0 == 0
    }

    /// Iterate element indices in canonical (ascending) order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Iterate element indices in reverse canonical order.
    pub fn iter_rev(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = 63 - rest.leading_zeros() as usize;
                rest &= !(1u64 << i);
                Some(i)
            }
        })
    }

    /// All subsets of `self`, ascending by the mask's numeric value.
    pub fn subsets(self) -> impl Iterator<Item = Mask> {
        let universe = self.0;
        let mut cur = Some(0u64);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == universe {
                None
            } else {
                Some((s.wrapping_sub(universe)) & universe)
            };
            Some(Mask(s))
        })
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mask{{{:b}}}", self.0)
    }
}

/// Canonical order for lists of sets: by size, then by mask value.
pub fn canonical_set_order(a: Mask, b: Mask) -> std::cmp::Ordering {
    (a.len(), a.0).cmp(&(b.len(), b.0))
}

#[derive(Debug)]
struct GroundInner {
    labels: Vec<String>,
}

/// An ordered finite sequence of distinct element labels.
///
/// Cheap to clone; two ground sets compare equal when they carry the same
/// labels in the same order.
#[derive(Clone, Debug)]
pub struct GroundSet {
    inner: Arc<GroundInner>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<GroundSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::GroundTooLarge {
                size: labels.len(),
                cap: MAX_ELEMENTS,
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidSpec(format!("duplicate label {l:?}")));
            }
        }
        Ok(GroundSet {
            inner: Arc::new(GroundInner { labels }),
        })
    }

    /// Default labels `a, b, c, ...` for small sizes, `e0, e1, ...` otherwise.
    pub fn with_default_labels(n: usize) -> GroundSet {
        let labels: Vec<String> = if n <= 26 {
            (0..n)
                .map(|i| ((b'a' + i as u8) as char).to_string())
                .collect()
        } else {
            (0..n).map(|i| format!("e{i}")).collect()
        };
        GroundSet::new(labels).expect("default labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn full_mask(&self) -> Mask {
        Mask::full(self.len())
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.inner.labels.iter().position(|l| l == label)
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.index_of(label).is_some()
    }

    /// Build a mask from labels; unknown labels yield [`Error::NotInGround`].
    pub fn mask_of<I, S>(&self, labels: I) -> Result<Mask>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut m = Mask::EMPTY;
        for l in labels {
            let l = l.as_ref();
            match self.index_of(l) {
                Some(i) => m = m.with(i),
                None => return Err(Error::NotInGround(l.to_string())),
            }
        }
        Ok(m)
    }

    /// The labels of `mask` in canonical order.
    pub fn labels_of(&self, mask: Mask) -> Vec<&str> {
        mask.iter().map(|i| self.label(i)).collect()
    }

    /// Comma-joined canonical-order rendering of a set, `-` for the empty set.
    pub fn format_mask(&self, mask: Mask) -> String {
        if mask.is_empty() {
            "-".to_string()
        } else {
            self.labels_of(mask).join(",")
        }
    }

    /// Fast pointer check, falling back to label-sequence comparison.
    pub fn same_as(&self, other: &GroundSet) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.labels == other.inner.labels
    }

    /// Do the two grounds carry the same labels, in any order?
    pub fn same_label_set(&self, other: &GroundSet) -> bool {
        self.len() == other.len() && self.inner.labels.iter().all(|l| other.contains_label(l))
    }

    /// Positionwise relabeling: `perm[i]` is the index in `other` of our
    /// `i`-th label. `None` when the label sets differ.
    pub fn permutation_to(&self, other: &GroundSet) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        self.inner
            .labels
            .iter()
            .map(|l| other.index_of(l))
            .collect()
    }

    /// A mask in-ground check for argument validation.
    pub fn check_mask(&self, mask: Mask) -> Result<()> {
        if mask.is_subset(self.full_mask()) {
            Ok(())
        } else {
            Err(Error::NotInGround(format!(
                "mask has bits outside the {}-element ground set",
                self.len()
            )))
        }
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GroundSet {}
