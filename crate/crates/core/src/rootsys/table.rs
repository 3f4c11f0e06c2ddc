use std::collections::{BTreeSet, HashMap};

use super::{CartanClass, RestrictedClass, Root, WeylElement};
use crate::error::{Error, Result};

/// Subsets of the positive roots as bit masks over [`RootTable`] indices.
pub type Mask = u128;

/// Indexed positive roots of one restricted class, for fast set operations
/// inside Weyl group loops.
#[derive(Debug, Clone)]
pub struct RootTable {
    class: RestrictedClass,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootTable {
    pub fn new(class: RestrictedClass) -> Result<Self> {
        let positive = class.positive_roots();
        if positive.len() > Mask::BITS as usize {
            return Err(Error::Capacity(format!(
                "{class} has {} positive roots; masks hold at most {}",
                positive.len(),
                Mask::BITS
            )));
        }
        let index = positive.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        Ok(Self { class, positive, index })
    }

    pub fn class(&self) -> RestrictedClass {
        self.class
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn full_mask(&self) -> Mask {
        if self.positive.len() == Mask::BITS as usize {
            Mask::MAX
        } else {
            (1 << self.positive.len()) - 1
        }
    }

    /// Index of `±r`.
    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.normalized()).copied()
    }

    pub fn mask_of<'a>(&self, roots: impl IntoIterator<Item = &'a Root>) -> Result<Mask> {
        roots.into_iter().try_fold(0, |m, r| {
            self.index_of(r)
                .map(|i| m | 1 << i)
                .ok_or_else(|| Error::Domain(format!("{r} is not a root of {}", self.class)))
        })
    }

    pub fn roots_of(&self, mask: Mask) -> BTreeSet<Root> {
        self.positive
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, r)| r.clone())
            .collect()
    }

    /// Positive parts of `w(±S)` for the set `S` encoded by `mask`.
    pub fn image(&self, w: &WeylElement, mask: Mask) -> Mask {
        let mut out = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let img = w.apply(&self.positive[i]);
            out |= 1 << self.index[&img.normalized()];
        }
        out
    }

    /// Per-index multiplicities for `cc`.
    pub fn weights(&self, cc: &CartanClass) -> Result<Vec<u64>> {
        if cc.restricted_class() != self.class {
            return Err(Error::Domain(format!("{cc} does not have restricted system {}", self.class)));
        }
        self.positive
            .iter()
            .map(|r| cc.multiplicity(r).map(u64::from))
            .collect()
    }
}

/// Multiplicity-weighted size of a mask.
pub fn weighted(mask: Mask, weights: &[u64]) -> u64 {
    let mut m = mask;
    let mut total = 0;
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        total += weights[i];
    }
    total
}
