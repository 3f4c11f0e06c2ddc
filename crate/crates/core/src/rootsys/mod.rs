//! Classical restricted root systems `A_n`, `B_n`, `C_n`, `D_n` and `BC_n`.
//!
//! Roots are exact integer vectors over the standard coordinates
//! `e_1, ..., e_N`, where `N = n + 1` for `A_n` and `N = n` otherwise. A root
//! is *positive* when its first nonzero coordinate is positive; this
//! convention is used throughout the crate.

mod cartan;
mod table;
mod weyl;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact;

pub use cartan::CartanClass;
pub use table::{weighted, Mask, RootTable};
pub use weyl::{weyl_cap, WeylElement, WeylGroup, DEFAULT_WEYL_CAP, WEYL_CAP_ENV};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    BC,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::BC => "BC",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            "BC" => Ok(Kind::BC),
            other => Err(Error::Parse(format!("unknown root system kind `{other}`"))),
        }
    }
}

/// A restricted root system type together with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RestrictedClass {
    kind: Kind,
    rank: usize,
}

impl RestrictedClass {
    pub fn new(kind: Kind, rank: usize) -> Result<Self> {
        let min = if kind == Kind::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::Parameter(format!(
                "{kind}_{rank}: rank must be at least {min}"
            )));
        }
        Ok(Self { kind, rank })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of ambient coordinates.
    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            Kind::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// The positive roots, in a fixed deterministic order.
    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.ambient_dim();
        let mut out = Vec::new();
        let has_single = matches!(self.kind, Kind::B | Kind::BC);
        let has_double = matches!(self.kind, Kind::C | Kind::BC);
        for i in 0..n {
            if has_single {
                out.push(Root::unit(n, i, 1));
            }
            if has_double {
                out.push(Root::unit(n, i, 2));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                out.push(Root::pair(n, i, j, -1));
                if self.kind != Kind::A {
                    out.push(Root::pair(n, i, j, 1));
                }
            }
        }
        out
    }

    /// All roots, positive and negative.
    pub fn roots(&self) -> Vec<Root> {
        self.positive_roots()
            .into_iter()
            .flat_map(|r| {
                let neg = r.negated();
                [r, neg]
            })
            .collect()
    }

    /// Closed-form count of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.kind {
            Kind::A => n * (n + 1) / 2,
            Kind::B | Kind::C => n * n,
            Kind::D => n * (n - 1),
            Kind::BC => n * n + n,
        }
    }

    /// Whether `r` (of either sign) is a root of this system.
    pub fn contains(&self, r: &Root) -> bool {
        if r.dim() != self.ambient_dim() {
            return false;
        }
        let nz: Vec<i32> = r.0.iter().copied().filter(|&c| c != 0).collect();
        match nz.as_slice() {
            [a, b] => a.abs() == 1 && b.abs() == 1 && (self.kind != Kind::A || a + b == 0),
            [a] => match a.abs() {
                1 => matches!(self.kind, Kind::B | Kind::BC),
                2 => matches!(self.kind, Kind::C | Kind::BC),
                _ => false,
            },
            _ => false,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.kind {
            Kind::A => fact(n + 1),
            Kind::B | Kind::C | Kind::BC => (1u128 << n) * fact(n),
            Kind::D => (1u128 << (n - 1)) * fact(n),
        }
    }

    /// Weyl group enumeration using the configured rank cap.
    pub fn weyl_group(&self) -> Result<WeylGroup> {
        WeylGroup::new(*self, weyl_cap())
    }

    pub fn weyl_group_with_cap(&self, cap: usize) -> Result<WeylGroup> {
        WeylGroup::new(*self, cap)
    }
}

impl fmt::Display for RestrictedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind, self.rank)
    }
}

/// Shape of a root, which determines its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootShape {
    /// `e_i ± e_j`
    Pair,
    /// `e_i`
    Single,
    /// `2 e_i`
    Double,
}

/// A root as an integer coefficient vector over `e_1, ..., e_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Self(coeffs)
    }

    fn unit(n: usize, i: usize, c: i32) -> Self {
        let mut v = vec![0; n];
        v[i] = c;
        Self(v)
    }

    fn pair(n: usize, i: usize, j: usize, sign: i32) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        v[j] = sign;
        Self(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// The positive member of `{self, -self}`.
    pub fn normalized(&self) -> Root {
        if self.is_positive() {
            self.clone()
        } else {
            self.negated()
        }
    }

    pub fn shape(&self) -> Option<RootShape> {
        let nz: Vec<i32> = self.0.iter().copied().filter(|&c| c != 0).collect();
        match nz.as_slice() {
            [a, b] if a.abs() == 1 && b.abs() == 1 => Some(RootShape::Pair),
            [a] if a.abs() == 1 => Some(RootShape::Single),
            [a] if a.abs() == 2 => Some(RootShape::Double),
            _ => None,
        }
    }

    /// Evaluates the root as a linear functional on `v`.
    pub fn eval(&self, v: &[i64]) -> i64 {
        self.0.iter().zip(v).map(|(&c, &x)| i64::from(c) * x).sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            write!(f, "{sign}{mag}e{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Rank of the rational span of a set of roots.
pub fn subsystem_rank<'a>(roots: impl IntoIterator<Item = &'a Root>) -> usize {
    let rows: Vec<Vec<i64>> = roots
        .into_iter()
        .map(|r| r.0.iter().map(|&c| i64::from(c)).collect())
        .collect();
    exact::rank(&rows)
}

/// Multiplicity-weighted size of a set of positive roots.
pub fn subsystem_dim<'a>(
    roots: impl IntoIterator<Item = &'a Root>,
    cc: &CartanClass,
) -> Result<u64> {
    roots
        .into_iter()
        .map(|r| cc.multiplicity(r).map(u64::from))
        .sum()
}

/// The full root set `±roots`, closed under negation.
pub fn symmetrize<'a>(roots: impl IntoIterator<Item = &'a Root>) -> BTreeSet<Root> {
    roots
        .into_iter()
        .flat_map(|r| [r.clone(), r.negated()])
        .collect()
}

/// Whether the subsystem is *full*: every root of `rc` in the rational span of
/// `roots` is already in `±roots`.
pub fn is_full(roots: &BTreeSet<Root>, rc: &RestrictedClass) -> bool {
    let rows: Vec<Vec<i64>> = roots
        .iter()
        .map(|r| r.0.iter().map(|&c| i64::from(c)).collect())
        .collect();
    rc.positive_roots().iter().all(|a| {
        let v: Vec<i64> = a.0.iter().map(|&c| i64::from(c)).collect();
        roots.contains(a) || !exact::in_span(&rows, &v)
    })
}
