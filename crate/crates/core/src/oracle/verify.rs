//! Exhaustive agreement between the symbolic decision and the oracle.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::probe::{oracle_decide, OracleVerdict};
use super::realization::Realization;
use crate::characterize::{decide, type_classes, TupleQuery, Verdict};
use crate::elements::TypedElement;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub elements: Vec<String>,
    pub types: Vec<String>,
    pub combinatorial: Verdict,
    pub oracle: OracleVerdict,
    pub max_rank: usize,
    pub target: usize,
    pub trials_run: usize,
    pub agree: bool,
    /// Singular values of the best trial.
    pub singular_values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub cartan: String,
    pub l: usize,
    pub trials: usize,
    pub seed: u64,
    pub rows: Vec<VerifyRow>,
    pub disagreements: usize,
}

impl Verification {
    pub fn agreement(&self) -> f64 {
        if self.rows.is_empty() {
            return 1.0;
        }
        1.0 - self.disagreements as f64 / self.rows.len() as f64
    }
}

pub fn verify_tuple(q: &TupleQuery, r: &Realization, trials: usize, seed: u64) -> Result<VerifyRow> {
    let report = decide(q)?;
    let out = oracle_decide(q, r, trials, seed)?;
    let agree = matches!(
        (report.verdict, out.verdict),
        (Verdict::AbsolutelyContinuous, OracleVerdict::Ac) | (Verdict::Singular, OracleVerdict::SingularLikely)
    );
    Ok(VerifyRow {
        elements: q.elements().iter().map(TypedElement::expr).collect(),
        types: report.types,
        combinatorial: report.verdict,
        oracle: out.verdict,
        max_rank: out.max_rank,
        target: out.target,
        trials_run: out.trials_run,
        agree,
        singular_values: out.best().singular_values.clone(),
    })
}

/// Every unordered `L`-tuple of element type classes.
pub fn verify_exhaustive(r: &Realization, l: usize, trials: usize, seed: u64) -> Result<Verification> {
    let types = type_classes(r.restricted_class())?;
    let mut rows = Vec::new();
    for combo in types.iter().cloned().combinations_with_replacement(l) {
        let q = TupleQuery::new(r.cartan(), combo)?;
        rows.push(verify_tuple(&q, r, trials, seed)?);
    }
    let disagreements = rows.iter().filter(|x| !x.agree).count();
    Ok(Verification { cartan: r.cartan().to_string(), l, trials, seed, rows, disagreements })
}

/// Singular-value spectra as CSV, one row per tuple.
pub fn spectra_csv(v: &Verification) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let width = v.rows.iter().map(|r| r.singular_values.len()).max().unwrap_or(0);
    let mut header: Vec<String> = ["cartan", "elements", "combinatorial", "oracle", "max_rank", "target", "agree"]
        .into_iter()
        .map(String::from)
        .collect();
    header.extend((1..=width).map(|i| format!("sigma_{i}")));
    w.write_record(&header).map_err(csv_err)?;
    for row in &v.rows {
        let mut rec = vec![
            v.cartan.clone(),
            row.elements.join(" | "),
            row.combinatorial.to_string(),
            row.oracle.to_string(),
            row.max_rank.to_string(),
            row.target.to_string(),
            row.agree.to_string(),
        ];
        rec.extend(row.singular_values.iter().map(|s| format!("{s:e}")));
        rec.resize(header.len(), String::new());
        w.write_record(&rec).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| crate::Error::Defect(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn csv_err(e: csv::Error) -> crate::Error {
    crate::Error::Defect(format!("csv: {e}"))
}
