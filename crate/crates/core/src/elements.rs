//! Elements of `a` described up to Weyl conjugacy by their block structure.
//!
//! For kinds `B`, `C`, `D`, `BC` an element is
//! `(0,…,0, a_1,…,a_1, …, a_m,…,±a_m)` with `J` leading zeros and blocks of
//! sizes `s_1 ≥ s_2 ≥ …` holding distinct positive values. The minus sign on
//! the last entry only matters in `D_n` with `J = 0`. For `A_n` the element
//! is an `(n+1)`-vector of blocks with distinct values summing to zero.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{subsystem_dim, CartanClass, Kind, RestrictedClass, Root};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypedElement {
    context: RestrictedClass,
    zero_block: usize,
    blocks: Vec<usize>,
    minus: bool,
}

/// Which part of an element controls its `S` value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dominant {
    /// `S = max s_i`.
    Su,
    /// `S = 2J` (dominant `B`, `C`, `D` or `BC` type).
    ZeroBlock,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SuParity {
    Plus,
    Minus,
    NotApplicable,
}

/// Positive annihilating roots of an element and their Lie type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorSystem {
    pub roots: BTreeSet<Root>,
    pub type_label: String,
    /// `(J, [s_i])` of the element the system came from.
    pub component_ranks: (usize, Vec<usize>),
}

impl AnnihilatorSystem {
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }
}

impl TypedElement {
    /// Builds an element from its zero-block length, block sizes (any order)
    /// and the `D_n` minus flag.
    pub fn new(context: RestrictedClass, zero_block: usize, blocks: &[usize], minus: bool) -> Result<Self> {
        let bad = |msg: String| Err(Error::Parameter(format!("{context}: {msg}")));
        if blocks.contains(&0) {
            return bad("block sizes must be positive".into());
        }
        let mut blocks = blocks.to_vec();
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        let total = zero_block + blocks.iter().sum::<usize>();
        match context.kind() {
            Kind::A => {
                if zero_block != 0 {
                    return bad("J must be 0 in type A".into());
                }
                if total != context.ambient_dim() {
                    return bad(format!("block sizes must sum to {}", context.ambient_dim()));
                }
                if blocks.len() < 2 {
                    return bad("the zero element is not allowed".into());
                }
            }
            kind => {
                if total != context.rank() {
                    return bad(format!("J + Σ s_i must equal {}", context.rank()));
                }
                if blocks.is_empty() {
                    return bad("the zero element is not allowed".into());
                }
                if minus && (kind != Kind::D || zero_block != 0) {
                    return bad("the minus sign is only meaningful in type D with J = 0".into());
                }
            }
        }
        Ok(Self { context, zero_block, blocks, minus })
    }

    /// The type of an explicit coordinate vector (up to Weyl conjugacy).
    pub fn from_vector(context: RestrictedClass, v: &[i64]) -> Result<Self> {
        if v.len() != context.ambient_dim() {
            return Err(Error::Parameter(format!(
                "{context} expects {} coordinates, got {}",
                context.ambient_dim(),
                v.len()
            )));
        }
        let group_sizes = |vals: Vec<i64>| {
            let mut vals = vals;
            vals.sort_unstable();
            let mut sizes: Vec<usize> = vals
                .chunk_by(|a, b| a == b)
                .map(<[i64]>::len)
                .collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            sizes
        };
        if context.kind() == Kind::A {
            return Self::new(context, 0, &group_sizes(v.to_vec()), false);
        }
        let zero_block = v.iter().filter(|&&x| x == 0).count();
        let nonzero: Vec<i64> = v.iter().copied().filter(|&x| x != 0).map(i64::abs).collect();
        let negatives = v.iter().filter(|&&x| x < 0).count();
        let minus = context.kind() == Kind::D && zero_block == 0 && negatives % 2 == 1;
        Self::new(context, zero_block, &group_sizes(nonzero), minus)
    }

    pub fn context(&self) -> RestrictedClass {
        self.context
    }

    /// `J`.
    pub fn zero_block(&self) -> usize {
        self.zero_block
    }

    /// Block sizes, largest first.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn minus(&self) -> bool {
        self.minus
    }

    /// The canonical tag values: `a_i = i` for kinds `B`, `C`, `D`, `BC`;
    /// for `A`, distinct integers with `Σ s_i a_i = 0`.
    pub fn canonical_values(&self) -> Vec<i64> {
        let idx: Vec<i64> = (1..=self.blocks.len() as i64).collect();
        if self.context.kind() != Kind::A {
            return idx;
        }
        let n = self.context.ambient_dim() as i64;
        let weighted: i64 = self.blocks.iter().zip(&idx).map(|(&s, &i)| s as i64 * i).sum();
        idx.iter().map(|&i| n * i - weighted).collect()
    }

    /// The coordinate vector with canonical tag values.
    pub fn vector(&self) -> Vec<i64> {
        self.vector_with(&self.canonical_values())
            .expect("canonical values are admissible")
    }

    /// The coordinate vector with caller-chosen tag values, one per block.
    /// Values must be distinct (and positive outside type `A`).
    pub fn vector_with(&self, values: &[i64]) -> Result<Vec<i64>> {
        if values.len() != self.blocks.len() {
            return Err(Error::Parameter(format!(
                "expected {} block values, got {}",
                self.blocks.len(),
                values.len()
            )));
        }
        let distinct: BTreeSet<_> = values.iter().collect();
        if distinct.len() != values.len() {
            return Err(Error::Parameter("block values must be distinct".into()));
        }
        if self.context.kind() != Kind::A && values.iter().any(|&a| a <= 0) {
            return Err(Error::Parameter("block values must be positive".into()));
        }
        let mut v = vec![0; self.zero_block];
        for (&s, &a) in self.blocks.iter().zip(values) {
            v.extend(std::iter::repeat_n(a, s));
        }
        if self.minus {
            *v.last_mut().expect("nonempty") *= -1;
        }
        Ok(v)
    }

    /// Positive roots vanishing on the canonical vector.
    pub fn annihilator(&self) -> AnnihilatorSystem {
        let v = self.vector();
        let roots = self
            .context
            .positive_roots()
            .into_iter()
            .filter(|r| r.eval(&v) == 0)
            .collect();
        AnnihilatorSystem {
            roots,
            type_label: self.type_label(),
            component_ranks: (self.zero_block, self.blocks.clone()),
        }
    }

    /// The annihilator assembled factor by factor from the block structure:
    /// `Ψ_0` on the zero block, then one `SU(s_l)` per block, with the last
    /// block using `e_i + e_n` when the minus sign is present.
    pub fn psi_decomposition(&self) -> Vec<BTreeSet<Root>> {
        let n = self.context.ambient_dim();
        let unit = |i: usize, c: i32| {
            let mut v = vec![0; n];
            v[i] = c;
            Root::new(v)
        };
        let pair = |i: usize, j: usize, s: i32| {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = s;
            Root::new(v)
        };
        let j = self.zero_block;
        let mut factors = Vec::new();
        let mut psi0 = BTreeSet::new();
        let kind = self.context.kind();
        if kind != Kind::A {
            for k in 0..j {
                if matches!(kind, Kind::B | Kind::BC) {
                    psi0.insert(unit(k, 1));
                }
                if matches!(kind, Kind::C | Kind::BC) {
                    psi0.insert(unit(k, 2));
                }
                for l in k + 1..j {
                    psi0.insert(pair(k, l, -1));
                    psi0.insert(pair(k, l, 1));
                }
            }
        }
        factors.push(psi0);
        let mut start = j;
        for (idx, &s) in self.blocks.iter().enumerate() {
            let end = start + s;
            let last = idx + 1 == self.blocks.len();
            let mut psi = BTreeSet::new();
            if last && self.minus {
                for a in start..end - 1 {
                    for b in a + 1..end - 1 {
                        psi.insert(pair(a, b, -1));
                    }
                    psi.insert(pair(a, end - 1, 1));
                }
            } else {
                for a in start..end {
                    for b in a + 1..end {
                        psi.insert(pair(a, b, -1));
                    }
                }
            }
            factors.push(psi);
            start = end;
        }
        factors
    }

    /// Lie type of the annihilator, e.g. `BC_2 × SU(3) × SU(2)`. Empty
    /// factors are omitted; the empty system is written `∅`.
    pub fn type_label(&self) -> String {
        let mut parts = Vec::new();
        let j = self.zero_block;
        let kind = self.context.kind();
        let zero_factor = match kind {
            Kind::A => None,
            Kind::D => (j >= 2).then(|| format!("D_{j}")),
            k => (j >= 1).then(|| format!("{k}_{j}")),
        };
        parts.extend(zero_factor);
        parts.extend(self.blocks.iter().filter(|&&s| s >= 2).map(|s| format!("SU({s})")));
        if parts.is_empty() {
            "∅".to_string()
        } else {
            parts.join(" × ")
        }
    }

    /// `(S, dominant part)`.
    pub fn s_value(&self) -> (usize, Dominant) {
        let max_s = self.blocks.iter().copied().max().unwrap_or(0);
        if self.context.kind() == Kind::A {
            return (max_s, Dominant::Su);
        }
        if 2 * self.zero_block >= max_s {
            (2 * self.zero_block, Dominant::ZeroBlock)
        } else {
            (max_s, Dominant::Su)
        }
    }

    /// The rank-`(n−1)` element obtained by dropping one coordinate: a zero
    /// when `2J ≥ s_1`, otherwise one entry of the largest block.
    pub fn reduce(&self) -> Result<TypedElement> {
        let n = self.context.rank();
        if n < 2 || (self.context.kind() == Kind::D && n < 3) {
            return Err(Error::Capacity(format!("cannot reduce an element of {}", self.context)));
        }
        let context = RestrictedClass::new(self.context.kind(), n - 1)?;
        let mut blocks = self.blocks.clone();
        let mut zero_block = self.zero_block;
        if self.context.kind() != Kind::A && 2 * zero_block >= blocks[0] {
            zero_block -= 1;
        } else {
            blocks[0] -= 1;
            if blocks[0] == 0 {
                blocks.remove(0);
            }
        }
        // With J > 0 a sign is absorbed by flipping a zero coordinate.
        let minus = self.minus && zero_block == 0;
        TypedElement::new(context, zero_block, &blocks, minus)
    }

    /// `dim N_Z = Σ_{α ∈ Φ⁺ ∖ Φ_Z} dim g_α`.
    pub fn dim_orbit(&self, cc: &CartanClass) -> Result<u64> {
        if cc.restricted_class() != self.context {
            return Err(Error::Domain(format!(
                "{cc} has restricted system {}, element lives in {}",
                cc.restricted_class(),
                self.context
            )));
        }
        let ann = self.annihilator().roots;
        let rest: Vec<Root> = self
            .context
            .positive_roots()
            .into_iter()
            .filter(|r| !ann.contains(r))
            .collect();
        subsystem_dim(&rest, cc)
    }

    /// Distinguishes the two `SU(n)` classes of `D_n`.
    pub fn su_class_parity(&self) -> SuParity {
        let n = self.context.rank();
        if self.context.kind() == Kind::D && self.zero_block == 0 && self.blocks == [n] {
            if self.minus {
                SuParity::Minus
            } else {
                SuParity::Plus
            }
        } else {
            SuParity::NotApplicable
        }
    }

    pub fn is_regular(&self) -> bool {
        self.annihilator().is_empty()
    }

    /// The type-expression form, e.g. `J=2; s=3,3,1` or `J=0; s=4; minus`.
    pub fn expr(&self) -> String {
        let s = self.blocks.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        let mut out = if self.context.kind() == Kind::A {
            format!("s={s}")
        } else {
            format!("J={}; s={s}", self.zero_block)
        };
        if self.minus {
            out.push_str("; minus");
        }
        out
    }

    /// Parses `J=<int>; s=<int,...>[; minus]` or `v=<int,...>` in a given
    /// context. Outside type `A` an omitted `J` takes up the coordinates
    /// not covered by the blocks.
    pub fn parse_in(context: RestrictedClass, expr: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("`{expr}`: {m}"));
        let ints = |s: &str| -> Result<Vec<i64>> {
            s.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad("expected integers")))
                .collect()
        };
        let mut zero_block = None;
        let mut blocks = None;
        let mut vector = None;
        let mut minus = false;
        for part in expr.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some((k, v)) => match k.trim() {
                    "J" => {
                        let j = v.trim().parse::<usize>().map_err(|_| bad("J must be a nonnegative integer"))?;
                        zero_block = Some(j);
                    }
                    "s" => {
                        let s = ints(v)?;
                        if s.iter().any(|&x| x <= 0) {
                            return Err(bad("block sizes must be positive"));
                        }
                        blocks = Some(s.into_iter().map(|x| x as usize).collect::<Vec<_>>());
                    }
                    "v" => vector = Some(ints(v)?),
                    other => return Err(bad(&format!("unknown key `{other}`"))),
                },
                None if part == "minus" => minus = true,
                None => return Err(bad(&format!("unexpected `{part}`"))),
            }
        }
        match (vector, blocks) {
            (Some(v), None) if zero_block.is_none() && !minus => Self::from_vector(context, &v),
            (None, Some(s)) => {
                let rest = if context.kind() == Kind::A {
                    0
                } else {
                    context.rank().saturating_sub(s.iter().sum())
                };
                Self::new(context, zero_block.unwrap_or(rest), &s, minus)
            }
            _ => Err(bad("give either `v=...` or `s=...` (with optional `J=` and `minus`)")),
        }
    }
}

impl fmt::Display for TypedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.context, self.expr())
    }
}

impl FromStr for TypedElement {
    type Err = Error;

    /// Parses `<kind>_<rank>: <expr>`, e.g. `D_4: J=0; s=4; minus`.
    fn from_str(s: &str) -> Result<Self> {
        let (ctx, expr) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("`{s}`: expected `<kind>_<rank>: <expr>`")))?;
        let (kind, rank) = ctx
            .trim()
            .split_once('_')
            .ok_or_else(|| Error::Parse(format!("`{ctx}`: expected `<kind>_<rank>`")))?;
        let rank = rank
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{ctx}`: bad rank")))?;
        let context = RestrictedClass::new(kind.parse()?, rank)?;
        Self::parse_in(context, expr)
    }
}

/// All element types of a restricted class: every `(J, partition, sign)`
/// combination, without identifying Weyl-conjugate annihilators.
pub fn enumerate_types(context: RestrictedClass) -> Vec<TypedElement> {
    let mut out = Vec::new();
    if context.kind() == Kind::A {
        for p in partitions(context.ambient_dim()) {
            if p.len() >= 2 {
                out.push(TypedElement::new(context, 0, &p, false).expect("valid partition"));
            }
        }
        return out;
    }
    let n = context.rank();
    for j in 0..n {
        for p in partitions(n - j) {
            out.push(TypedElement::new(context, j, &p, false).expect("valid partition"));
            if context.kind() == Kind::D && j == 0 {
                out.push(TypedElement::new(context, j, &p, true).expect("valid partition"));
            }
        }
    }
    out
}

/// Partitions of `n` into positive parts, largest part first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(kind: Kind, n: usize) -> RestrictedClass {
        RestrictedClass::new(kind, n).unwrap()
    }

    fn el(kind: Kind, n: usize, j: usize, s: &[usize], minus: bool) -> TypedElement {
        TypedElement::new(ctx(kind, n), j, s, minus).unwrap()
    }

    fn labels(a: &AnnihilatorSystem) -> Vec<String> {
        a.roots.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn annihilator_examples() {
        let reg = el(Kind::C, 3, 0, &[1, 1, 1], false);
        assert!(reg.annihilator().is_empty());
        assert!(reg.is_regular());

        let b = el(Kind::B, 2, 1, &[1], false);
        let a = b.annihilator();
        assert_eq!(labels(&a), ["e1"]);
        assert_eq!(a.type_label, "B_1");
        assert!(!b.is_regular());

        let d = el(Kind::D, 3, 0, &[3], true);
        assert_eq!(d.vector(), [1, 1, -1]);
        let a = d.annihilator();
        let mut got = labels(&a);
        got.sort();
        assert_eq!(got, ["e1+e3", "e1-e2", "e2+e3"]);
        assert_eq!(a.type_label, "SU(3)");

        let a2 = el(Kind::A, 2, 0, &[2, 1], false);
        assert!(!a2.is_regular());
        assert_eq!(a2.vector().iter().sum::<i64>(), 0);
    }

    #[test]
    fn label_grammar() {
        assert_eq!(el(Kind::BC, 7, 2, &[3, 2], false).type_label(), "BC_2 × SU(3) × SU(2)");
        assert_eq!(el(Kind::D, 4, 1, &[3], false).type_label(), "SU(3)");
        assert_eq!(el(Kind::D, 4, 2, &[2], false).type_label(), "D_2 × SU(2)");
        assert_eq!(el(Kind::B, 3, 0, &[1, 1, 1], false).type_label(), "∅");
        assert_eq!(el(Kind::A, 3, 0, &[2, 2], false).type_label(), "SU(2) × SU(2)");
    }

    #[test]
    fn s_values() {
        assert_eq!(el(Kind::B, 5, 2, &[3], false).s_value(), (4, Dominant::ZeroBlock));
        assert_eq!(el(Kind::C, 3, 0, &[3], false).s_value(), (3, Dominant::Su));
        assert_eq!(el(Kind::A, 3, 0, &[2, 2], false).s_value(), (2, Dominant::Su));
        assert_eq!(el(Kind::D, 3, 0, &[1, 1, 1], false).s_value(), (1, Dominant::Su));
    }

    #[test]
    fn reduce_examples() {
        let r = el(Kind::B, 5, 2, &[3], false).reduce().unwrap();
        assert_eq!(r, el(Kind::B, 4, 1, &[3], false));
        let r = el(Kind::C, 3, 0, &[3], false).reduce().unwrap();
        assert_eq!(r, el(Kind::C, 2, 0, &[2], false));
        let r = el(Kind::D, 4, 0, &[4], true).reduce().unwrap();
        assert_eq!(r, el(Kind::D, 3, 0, &[3], true));
        assert!(matches!(el(Kind::B, 1, 0, &[1], false).reduce(), Err(Error::Capacity(_))));
    }

    #[test]
    fn orbit_dimensions() {
        let ai: CartanClass = "AI:3".parse().unwrap();
        assert_eq!(el(Kind::A, 2, 0, &[2, 1], false).dim_orbit(&ai).unwrap(), 2);
        for n in 3..=6 {
            let di = CartanClass::DI(n);
            let su_n = el(Kind::D, n, 0, &[n], false);
            assert_eq!(su_n.dim_orbit(&di).unwrap() as usize, n * (n - 1) / 2);
            let su_n1 = el(Kind::D, n, 0, &[n - 1, 1], false);
            assert_eq!(
                su_n1.dim_orbit(&di).unwrap() as usize,
                (n - 1) * (n - 2) / 2 + 2 * (n - 1)
            );
        }
        assert!(el(Kind::B, 3, 0, &[3], false).dim_orbit(&CartanClass::DI(3)).is_err());
    }

    #[test]
    fn parity_classes() {
        assert_eq!(el(Kind::D, 4, 0, &[4], false).su_class_parity(), SuParity::Plus);
        assert_eq!(el(Kind::D, 4, 0, &[4], true).su_class_parity(), SuParity::Minus);
        assert_eq!(el(Kind::B, 3, 0, &[3], false).su_class_parity(), SuParity::NotApplicable);
    }

    #[test]
    fn invalid_elements() {
        assert!(TypedElement::new(ctx(Kind::B, 3), 3, &[], false).is_err());
        assert!(TypedElement::new(ctx(Kind::A, 3), 0, &[4], false).is_err());
        assert!(TypedElement::new(ctx(Kind::B, 3), 0, &[3], true).is_err());
        assert!(TypedElement::new(ctx(Kind::D, 3), 1, &[2], true).is_err());
        assert!(TypedElement::new(ctx(Kind::C, 3), 1, &[1], false).is_err());
    }

    #[test]
    fn parse_forms() {
        let d4 = ctx(Kind::D, 4);
        assert_eq!(TypedElement::parse_in(d4, "s=4").unwrap(), el(Kind::D, 4, 0, &[4], false));
        assert_eq!(TypedElement::parse_in(d4, "J=0; s=4; minus").unwrap(), el(Kind::D, 4, 0, &[4], true));
        assert_eq!(TypedElement::parse_in(d4, "v=3,3,3,-3").unwrap(), el(Kind::D, 4, 0, &[4], true));
        assert_eq!(TypedElement::parse_in(d4, "v=0,-3,3,5").unwrap(), el(Kind::D, 4, 1, &[2, 1], false));
        let b5 = ctx(Kind::B, 5);
        assert_eq!(TypedElement::parse_in(b5, "v=0,0,1,1,1").unwrap(), el(Kind::B, 5, 2, &[3], false));
        let a3 = ctx(Kind::A, 3);
        assert_eq!(TypedElement::parse_in(a3, "v=1,1,-1,-1").unwrap(), el(Kind::A, 3, 0, &[2, 2], false));
        assert!(TypedElement::parse_in(a3, "v=2,2,2,2").is_err());
        assert!(TypedElement::parse_in(d4, "s=4; t=1").is_err());
        assert!(TypedElement::parse_in(d4, "J=x; s=4").is_err());
        assert!(TypedElement::parse_in(d4, "v=1,2; s=1").is_err());
        let z: TypedElement = "BC_7: J=2; s=3,2".parse().unwrap();
        assert_eq!(z.to_string(), "BC_7: J=2; s=3,2");
    }

    #[test]
    fn enumerated_type_counts() {
        // A_3: partitions of 4 with at least two parts.
        assert_eq!(enumerate_types(ctx(Kind::A, 3)).len(), 4);
        // B_2: J=0: [2],[1,1]; J=1: [1].
        assert_eq!(enumerate_types(ctx(Kind::B, 2)).len(), 3);
        assert_eq!(partitions(5).len(), 7);
    }
}
