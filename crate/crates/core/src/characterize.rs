//! Symbolic decision: eligibility, exceptional tuples and the final verdict.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::elements::{enumerate_types, AnnihilatorSystem, TypedElement};
use crate::error::{Error, Result};
use crate::rootsys::{CartanClass, Kind, Mask, RestrictedClass, Root, RootTable};

/// An `L`-tuple of nonzero elements of one symmetric space, `L ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleQuery {
    cartan: CartanClass,
    elements: Vec<TypedElement>,
}

impl TupleQuery {
    pub fn new(cartan: CartanClass, elements: Vec<TypedElement>) -> Result<Self> {
        let cartan = cartan.validated()?;
        let rc = cartan.restricted_class();
        if elements.len() < 2 {
            return Err(Error::Parameter(format!(
                "a tuple needs at least two elements, got {}",
                elements.len()
            )));
        }
        if let Some(z) = elements.iter().find(|z| z.context() != rc) {
            return Err(Error::Domain(format!("{z} does not live in {rc} ({cartan})")));
        }
        Ok(Self { cartan, elements })
    }

    pub fn cartan(&self) -> CartanClass {
        self.cartan
    }

    pub fn elements(&self) -> &[TypedElement] {
        &self.elements
    }

    pub fn restricted_class(&self) -> RestrictedClass {
        self.cartan.restricted_class()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionalCase {
    /// `A_{2m-1}`, a pair of `SU(m) × SU(m)` elements.
    #[serde(rename = "case1")]
    AHalfHalf,
    /// `D_n`, `SU(n)` paired with `SU(n)` or `SU(n-1)`.
    #[serde(rename = "case2")]
    DSunPair,
    /// `D_4`, `SU(4)` paired with a subset-conjugate `SU(2) × SU(2)` or with
    /// `D_2 × SU(2)`.
    #[serde(rename = "case3")]
    D4Special,
    /// `D_3` or `D_4`, three `SU(n)` elements (pairwise conjugate for `n = 4`).
    #[serde(rename = "case4")]
    DSunTriple,
}

impl fmt::Display for ExceptionalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ExceptionalCase::AHalfHalf => "case1",
            ExceptionalCase::DSunPair => "case2",
            ExceptionalCase::D4Special => "case3",
            ExceptionalCase::DSunTriple => "case4",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "ac")]
    AbsolutelyContinuous,
    #[serde(rename = "singular")]
    Singular,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::AbsolutelyContinuous => "ac",
            Verdict::Singular => "singular",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eligibility {
    pub s_values: Vec<usize>,
    pub threshold: usize,
    pub eligible: bool,
    /// `threshold − Σ S`; negative when not eligible.
    pub margin: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionReport {
    #[serde(rename = "S")]
    pub s_values: Vec<usize>,
    pub threshold: usize,
    pub eligible: bool,
    pub margin: i64,
    #[serde(with = "case_serde")]
    pub exceptional: Option<ExceptionalCase>,
    pub verdict: Verdict,
    /// Annihilator type of each element, in tuple order.
    pub types: Vec<String>,
}

mod case_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::ExceptionalCase;

    pub fn serialize<S: Serializer>(v: &Option<ExceptionalCase>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(c) => c.serialize(s),
            None => s.serialize_str("none"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<ExceptionalCase>, D::Error> {
        let s = String::deserialize(d)?;
        if s == "none" {
            return Ok(None);
        }
        ExceptionalCase::deserialize(serde::de::value::StrDeserializer::<D::Error>::new(&s)).map(Some)
    }
}

/// `Σ S ≤ (L−1)(n+1)` in type `A_n`, `Σ S ≤ (L−1)·2n` otherwise. Ties are
/// eligible.
pub fn eligible(q: &TupleQuery) -> Eligibility {
    let rc = q.restricted_class();
    let l = q.elements.len();
    let per = match rc.kind() {
        Kind::A => rc.rank() + 1,
        _ => 2 * rc.rank(),
    };
    let threshold = (l - 1) * per;
    let s_values: Vec<usize> = q.elements.iter().map(|z| z.s_value().0).collect();
    let total: usize = s_values.iter().sum();
    Eligibility {
        eligible: total <= threshold,
        margin: threshold as i64 - total as i64,
        s_values,
        threshold,
    }
}

fn is_su_full(z: &TypedElement) -> bool {
    let rc = z.context();
    rc.kind() == Kind::D && z.zero_block() == 0 && z.blocks() == [rc.rank()]
}

fn has_label(z: &TypedElement, label: &str) -> bool {
    z.type_label() == label
}

/// The first exceptional case the tuple falls under, if any.
pub fn exceptional(q: &TupleQuery) -> Result<Option<ExceptionalCase>> {
    let rc = q.restricted_class();
    let n = rc.rank();
    let zs = q.elements();
    let either = |p: &dyn Fn(&TypedElement, &TypedElement) -> Result<bool>| -> Result<bool> {
        Ok(p(&zs[0], &zs[1])? || p(&zs[1], &zs[0])?)
    };

    if rc.kind() == Kind::A && zs.len() == 2 && rc.ambient_dim().is_multiple_of(2) {
        let m = rc.ambient_dim() / 2;
        if m >= 2 && zs.iter().all(|z| z.blocks() == [m, m]) {
            return Ok(Some(ExceptionalCase::AHalfHalf));
        }
    }
    if rc.kind() != Kind::D {
        return Ok(None);
    }
    if zs.len() == 2 && n >= 3 {
        let lesser = format!("SU({})", n - 1);
        if either(&|a, b| Ok(is_su_full(a) && (is_su_full(b) || has_label(b, &lesser))))? {
            return Ok(Some(ExceptionalCase::DSunPair));
        }
    }
    if zs.len() == 2 && n == 4 {
        let hit = either(&|a, b| {
            if !is_su_full(a) {
                return Ok(false);
            }
            if has_label(b, "D_2 × SU(2)") {
                return Ok(true);
            }
            if has_label(b, "SU(2) × SU(2)") {
                return conjugate_subset(&b.annihilator(), &a.annihilator(), &rc);
            }
            Ok(false)
        })?;
        if hit {
            return Ok(Some(ExceptionalCase::D4Special));
        }
    }
    if zs.len() == 3 && (n == 3 || n == 4) && zs.iter().all(is_su_full) {
        let conj = if n == 4 {
            let a: Vec<_> = zs.iter().map(TypedElement::annihilator).collect();
            conjugate(&a[0], &a[1], &rc)? && conjugate(&a[1], &a[2], &rc)?
        } else {
            true
        };
        if conj {
            return Ok(Some(ExceptionalCase::DSunTriple));
        }
    }
    Ok(None)
}

fn masks(a: &BTreeSet<Root>, b: &BTreeSet<Root>, rc: &RestrictedClass) -> Result<(RootTable, Mask, Mask)> {
    let table = RootTable::new(*rc)?;
    let ma = table.mask_of(a)?;
    let mb = table.mask_of(b)?;
    Ok((table, ma, mb))
}

/// Whether some Weyl element maps `±inner` into `±outer`.
pub fn conjugate_subset(inner: &AnnihilatorSystem, outer: &AnnihilatorSystem, rc: &RestrictedClass) -> Result<bool> {
    roots_conjugate_subset(&inner.roots, &outer.roots, rc)
}

pub fn roots_conjugate_subset(inner: &BTreeSet<Root>, outer: &BTreeSet<Root>, rc: &RestrictedClass) -> Result<bool> {
    let group = rc.weyl_group()?;
    if inner.len() > outer.len() {
        return Ok(false);
    }
    let (table, mi, mo) = masks(inner, outer, rc)?;
    let found = group.iter().any(|w| table.image(&w, mi) & !mo == 0);
    Ok(found)
}

/// Whether the two systems are Weyl conjugate as full root sets.
pub fn conjugate(a: &AnnihilatorSystem, b: &AnnihilatorSystem, rc: &RestrictedClass) -> Result<bool> {
    roots_conjugate(&a.roots, &b.roots, rc)
}

pub fn roots_conjugate(a: &BTreeSet<Root>, b: &BTreeSet<Root>, rc: &RestrictedClass) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    roots_conjugate_subset(a, b, rc)
}

/// The verdict: absolutely continuous iff eligible and not exceptional.
pub fn decide(q: &TupleQuery) -> Result<DecisionReport> {
    let el = eligible(q);
    let exc = exceptional(q)?;
    let verdict = if el.eligible && exc.is_none() {
        Verdict::AbsolutelyContinuous
    } else {
        Verdict::Singular
    };
    Ok(DecisionReport {
        s_values: el.s_values,
        threshold: el.threshold,
        eligible: el.eligible,
        margin: el.margin,
        exceptional: exc,
        verdict,
        types: q.elements.iter().map(TypedElement::type_label).collect(),
    })
}

/// One representative per Weyl-conjugacy class of annihilators, in
/// enumeration order (`J` ascending, larger blocks first, plus before minus).
pub fn type_classes(rc: RestrictedClass) -> Result<Vec<TypedElement>> {
    let mut reps: Vec<(TypedElement, AnnihilatorSystem)> = Vec::new();
    for z in enumerate_types(rc) {
        let a = z.annihilator();
        let mut dup = false;
        for (_, b) in &reps {
            if b.type_label == a.type_label && b.len() == a.len() && conjugate(&a, b, &rc)? {
                dup = true;
                break;
            }
        }
        if !dup {
            reps.push((z, a));
        }
    }
    Ok(reps.into_iter().map(|(z, _)| z).collect())
}

/// Default largest tuple length for [`survey`].
pub const SURVEY_MAX_L: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    /// Type expressions of the tuple members.
    pub elements: Vec<String>,
    pub report: DecisionReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Survey {
    pub cartan: String,
    pub restricted: String,
    pub l: usize,
    pub rows: Vec<SurveyRow>,
    pub total: usize,
    pub singular: usize,
}

impl Survey {
    pub fn singular_rows(&self) -> impl Iterator<Item = &SurveyRow> {
        self.rows.iter().filter(|r| r.report.verdict == Verdict::Singular)
    }
}

/// Verdicts for every unordered `L`-tuple of element types, `L ≤ 4`.
pub fn survey(cc: &CartanClass, l: usize) -> Result<Survey> {
    survey_up_to(cc, l, SURVEY_MAX_L)
}

/// [`survey`] with a caller-chosen bound on `L`.
pub fn survey_up_to(cc: &CartanClass, l: usize, max_l: usize) -> Result<Survey> {
    if l < 2 || l > max_l {
        return Err(Error::Capacity(format!("survey tuple length must be in 2..={max_l}, got {l}")));
    }
    let rc = cc.restricted_class();
    let types = type_classes(rc)?;
    let mut rows = Vec::new();
    for combo in itertools::Itertools::combinations_with_replacement(types.iter(), l) {
        let elements: Vec<TypedElement> = combo.into_iter().cloned().collect();
        let q = TupleQuery::new(*cc, elements)?;
        let report = decide(&q)?;
        rows.push(SurveyRow {
            elements: q.elements().iter().map(TypedElement::expr).collect(),
            report,
        });
    }
    let singular = rows.iter().filter(|r| r.report.verdict == Verdict::Singular).count();
    Ok(Survey {
        cartan: cc.to_string(),
        restricted: rc.to_string(),
        l,
        total: rows.len(),
        singular,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(cc: &CartanClass, expr: &str) -> TypedElement {
        TypedElement::parse_in(cc.restricted_class(), expr).unwrap()
    }

    fn query(cc: &str, exprs: &[&str]) -> TupleQuery {
        let cc: CartanClass = cc.parse().unwrap();
        TupleQuery::new(cc, exprs.iter().map(|e| el(&cc, e)).collect()).unwrap()
    }

    #[test]
    fn eligibility_examples() {
        let e = eligible(&query("AI:4", &["s=2,2", "s=2,2"]));
        assert_eq!((e.eligible, e.margin, e.threshold), (true, 0, 4));
        let e = eligible(&query("BDI:3,4", &["J=2; s=1", "J=2; s=1"]));
        assert_eq!((e.eligible, e.s_values.as_slice()), (false, &[4, 4][..]));
        let e = eligible(&query("CI:3", &["s=1,1,1", "s=1,1,1"]));
        assert!(e.eligible);
    }

    #[test]
    fn exceptional_examples() {
        let q = query("DI:4", &["s=4", "s=3,1"]);
        assert_eq!(exceptional(&q).unwrap(), Some(ExceptionalCase::DSunPair));
        let q = query("DI:4", &["s=4", "s=4", "s=4; minus"]);
        assert_eq!(exceptional(&q).unwrap(), None);
        let q = query("DI:4", &["s=4", "s=4", "s=4"]);
        assert_eq!(exceptional(&q).unwrap(), Some(ExceptionalCase::DSunTriple));
        let q = query("BDI:4,5", &["s=4", "s=4"]);
        assert_eq!(exceptional(&q).unwrap(), None);
        let q = query("AI:4", &["s=2,2", "s=2,2"]);
        assert_eq!(exceptional(&q).unwrap(), Some(ExceptionalCase::AHalfHalf));
        let q = query("DI:4", &["s=4", "J=2; s=2"]);
        assert_eq!(exceptional(&q).unwrap(), Some(ExceptionalCase::D4Special));
        let q = query("DI:4", &["s=2,2; minus", "s=4; minus"]);
        assert_eq!(exceptional(&q).unwrap(), Some(ExceptionalCase::D4Special));
    }

    #[test]
    fn subset_conjugacy_in_d4() {
        let cc = CartanClass::DI(4);
        let rc = cc.restricted_class();
        let su4 = el(&cc, "s=4").annihilator();
        let plus = el(&cc, "s=2,2").annihilator();
        let minus = el(&cc, "s=2,2; minus").annihilator();
        assert!(conjugate_subset(&plus, &su4, &rc).unwrap());
        assert!(!conjugate_subset(&minus, &su4, &rc).unwrap());
        let all = AnnihilatorSystem {
            roots: rc.positive_roots().into_iter().collect(),
            type_label: "D_4".into(),
            component_ranks: (4, vec![]),
        };
        assert!(conjugate_subset(&minus, &all, &rc).unwrap());
        assert!(conjugate_subset(&su4, &all, &rc).unwrap());
    }

    #[test]
    fn decide_examples() {
        let r = decide(&query("DI:4", &["s=4", "s=2,2; minus"])).unwrap();
        assert_eq!(r.verdict, Verdict::AbsolutelyContinuous);
        let r = decide(&query("AI:4", &["s=2,2", "s=2,2"])).unwrap();
        assert_eq!((r.verdict, r.exceptional), (Verdict::Singular, Some(ExceptionalCase::AHalfHalf)));
        let r = decide(&query("BDI:3,4", &["s=1,1,1", "J=2; s=1"])).unwrap();
        assert_eq!(r.verdict, Verdict::AbsolutelyContinuous);
    }

    #[test]
    fn report_json_schema() {
        let r = decide(&query("DI:4", &["s=4", "s=3,1"])).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["exceptional"], "case2");
        assert_eq!(v["verdict"], "singular");
        assert_eq!(v["S"], serde_json::json!([4, 3]));
        assert_eq!(v["threshold"], 8);
        let back: DecisionReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
        let r = decide(&query("CI:2", &["s=1,1", "s=2"])).unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["exceptional"], "none");
        assert_eq!(serde_json::from_value::<DecisionReport>(v).unwrap(), r);
    }

    #[test]
    fn bad_queries() {
        let cc = CartanClass::DI(4);
        assert!(TupleQuery::new(cc, vec![el(&cc, "s=4")]).is_err());
        let other: CartanClass = "CI:4".parse().unwrap();
        assert!(TupleQuery::new(cc, vec![el(&cc, "s=4"), el(&other, "s=4")]).is_err());
        assert!(survey(&cc, 5).is_err());
    }

    #[test]
    fn type_classes_merge_conjugates() {
        // D_3: J=1 [2] and J=0 [2,1] have the same annihilator; SU(3) has a
        // single class since 3 is odd.
        let d3 = CartanClass::BDI(3, 3).restricted_class();
        let reps = type_classes(d3).unwrap();
        let labels: Vec<String> = reps.iter().map(TypedElement::type_label).collect();
        assert_eq!(labels, ["SU(3)", "SU(2)", "∅", "D_2"]);
        // D_4: SU(4) and SU(2) × SU(2) split into two classes each.
        let d4 = CartanClass::DI(4).restricted_class();
        let reps = type_classes(d4).unwrap();
        let count = |l: &str| reps.iter().filter(|z| z.type_label() == l).count();
        assert_eq!(count("SU(4)"), 2);
        assert_eq!(count("SU(2) × SU(2)"), 2);
        assert_eq!(count("SU(3)"), 1);
    }
}
