use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{Kind, RestrictedClass, Root};
use crate::error::{Error, Result};

/// Default largest rank for which the Weyl group is enumerated.
pub const DEFAULT_WEYL_CAP: usize = 7;

/// Environment variable overriding [`DEFAULT_WEYL_CAP`].
pub const WEYL_CAP_ENV: &str = "ORBITAL_AC_WEYL_CAP";

/// The effective Weyl enumeration cap.
pub fn weyl_cap() -> usize {
    std::env::var(WEYL_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_WEYL_CAP)
}

/// A signed permutation `e_i -> ±e_{perm[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    perm: Vec<usize>,
    flips: Vec<bool>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            flips: vec![false; n],
        }
    }

    /// Builds an element; `flips[i]` negates the image of `e_i`.
    pub fn new(perm: Vec<usize>, flips: Vec<bool>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parameter(format!("{perm:?} is not a permutation")));
            }
        }
        if flips.len() != n {
            return Err(Error::Parameter("sign vector length mismatch".into()));
        }
        Ok(Self { perm, flips })
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    pub fn flip_count(&self) -> usize {
        self.flips.iter().filter(|&&f| f).count()
    }

    /// Whether this element belongs to the Weyl group of `rc`.
    pub fn belongs_to(&self, rc: &RestrictedClass) -> bool {
        self.perm.len() == rc.ambient_dim()
            && match rc.kind() {
                Kind::A => self.flip_count() == 0,
                Kind::D => self.flip_count().is_multiple_of(2),
                _ => true,
            }
    }

    pub fn apply_vec<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Copy + Default + std::ops::Neg<Output = T>,
    {
        let mut out = vec![T::default(); v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = if self.flips[i] { -x } else { x };
        }
        out
    }

    pub fn apply(&self, r: &Root) -> Root {
        Root::new(self.apply_vec(r.coeffs()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            flips[i] = other.flips[i] ^ self.flips[j];
        }
        WeylElement { perm, flips }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut flips = vec![false; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            flips[self.perm[i]] = self.flips[i];
        }
        WeylElement { perm, flips }
    }
}

/// Exhaustive enumeration of a classical Weyl group.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    class: RestrictedClass,
}

impl WeylGroup {
    pub fn new(class: RestrictedClass, cap: usize) -> Result<Self> {
        if class.rank() > cap {
            return Err(Error::Capacity(format!(
                "Weyl group of {class} exceeds the rank cap {cap} (set {WEYL_CAP_ENV} to override)"
            )));
        }
        Ok(Self { class })
    }

    pub fn class(&self) -> RestrictedClass {
        self.class
    }

    pub fn order(&self) -> u128 {
        self.class.weyl_order()
    }

    /// Every group element exactly once.
    pub fn iter(&self) -> impl Iterator<Item = WeylElement> + '_ {
        let n = self.class.ambient_dim();
        let kind = self.class.kind();
        let masks: Vec<u32> = match kind {
            Kind::A => vec![0],
            Kind::D => (0..1u32 << n).filter(|m| m.count_ones() % 2 == 0).collect(),
            _ => (0..1u32 << n).collect(),
        };
        (0..n).permutations(n).flat_map(move |perm| {
            masks
                .clone()
                .into_iter()
                .map(move |m| WeylElement {
                    perm: perm.clone(),
                    flips: (0..n).map(|i| m >> i & 1 == 1).collect(),
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeSet, HashSet};

    use super::*;

    fn group(kind: Kind, n: usize) -> WeylGroup {
        RestrictedClass::new(kind, n).unwrap().weyl_group().unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(group(Kind::A, 1).iter().count(), 2);
        assert_eq!(group(Kind::D, 3).iter().count(), 24);
        assert_eq!(group(Kind::B, 2).iter().count(), 8);
        for (kind, n) in [(Kind::A, 4), (Kind::B, 3), (Kind::C, 4), (Kind::D, 4), (Kind::BC, 3)] {
            let g = group(kind, n);
            let all: HashSet<_> = g.iter().collect();
            assert_eq!(all.len() as u128, g.order());
            assert_eq!(g.iter().count() as u128, g.order());
        }
    }

    #[test]
    fn d3_closed_under_composition() {
        let g = group(Kind::D, 3);
        let rc = g.class();
        let all: HashSet<_> = g.iter().collect();
        for a in &all {
            assert!(a.belongs_to(&rc));
            assert!(all.contains(&a.inverse()));
            for b in &all {
                assert!(all.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn roots_permuted_bijectively() {
        for (kind, n) in [(Kind::A, 3), (Kind::B, 2), (Kind::B, 3), (Kind::C, 3), (Kind::D, 4), (Kind::BC, 3)] {
            let g = group(kind, n);
            let roots: BTreeSet<_> = g.class().roots().into_iter().collect();
            for w in g.iter() {
                let img: BTreeSet<_> = roots.iter().map(|r| w.apply(r)).collect();
                assert_eq!(img, roots, "{} {:?}", g.class(), w);
            }
        }
    }

    #[test]
    fn compose_matches_sequential_application() {
        let g = group(Kind::B, 3);
        let elems: Vec<_> = g.iter().step_by(7).collect();
        let v = [3i64, -5, 7];
        for a in &elems {
            for b in &elems {
                assert_eq!(a.compose(b).apply_vec(&v), a.apply_vec(&b.apply_vec(&v)));
            }
            assert_eq!(a.inverse().apply_vec(&a.apply_vec(&v)), v);
        }
    }

    #[test]
    fn cap_enforced() {
        let rc = RestrictedClass::new(Kind::B, 8).unwrap();
        assert!(matches!(rc.weyl_group_with_cap(7), Err(Error::Capacity(_))));
        assert!(rc.weyl_group_with_cap(8).is_ok());
    }
}
