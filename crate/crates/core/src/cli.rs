//! Command-line front end. [`run`] does all the work and returns the exit
//! status with the text to print, so the binary stays a thin shell.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::characterize::{decide, survey_up_to, type_classes, Survey, TupleQuery, SURVEY_MAX_L};
use crate::elements::TypedElement;
use crate::error::{Error, Result};
use crate::oracle::{
    eigen_multiplicity_check, spectra_csv, verify_exhaustive, verify_tuple, Realization, Verification,
    DEFAULT_TRIALS,
};
use crate::rootsys::{CartanClass, RootShape, WEYL_CAP_ENV};
use crate::wright::{wright_holds, WrightReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "orbital-ac",
    version,
    about = "Absolute continuity of convolutions of orbital measures on classical symmetric spaces",
    after_help = format!("The Weyl group enumeration cap (max rank) can be raised with {WEYL_CAP_ENV}.")
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one tuple.
    Decide(TupleArgs),
    /// Verdicts for every unordered L-tuple of element types.
    Survey(SurveyArgs),
    /// Per-subsystem ledger of the Wright-type sufficient criterion.
    Wright(TupleArgs),
    /// Cross-validate verdicts against the numerical tangent-span oracle.
    Verify(VerifyArgs),
    /// Restricted roots, multiplicities, element types and, when a matrix
    /// model exists, its structure audit.
    Info(InfoArgs),
}

#[derive(Debug, Args)]
pub struct TupleArgs {
    /// Cartan class, e.g. `AI:4`, `CII:2,3`, `BDI:3,4`, `DI:4`.
    #[arg(long)]
    pub cartan: String,
    /// Element expression: `J=<int>; s=<int,...>[; minus]` or `v=<int,...>`.
    #[arg(long = "z", required = true)]
    pub z: Vec<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(long)]
    pub cartan: String,
    #[arg(long = "L")]
    pub l: usize,
    /// Largest accepted tuple length.
    #[arg(long, default_value_t = SURVEY_MAX_L)]
    pub max_l: usize,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub cartan: String,
    /// Tuple length for `--exhaustive`.
    #[arg(long = "L", default_value_t = 2)]
    pub l: usize,
    /// Run every unordered tuple of element types instead of `--z`.
    #[arg(long, conflicts_with = "z")]
    pub exhaustive: bool,
    #[arg(long = "z")]
    pub z: Vec<String>,
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `csv` dumps the singular-value spectra.
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct InfoArgs {
    #[arg(long)]
    pub cartan: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Parameter(_) | Error::Domain(_) => EXIT_PARSE,
        Error::Capacity(_) => EXIT_CAPACITY,
        Error::Defect(_) => EXIT_DISAGREEMENT,
    }
}

/// Runs one command: `(exit status, output)`. Errors are rendered as a
/// single `error: ...` line.
pub fn run(cmd: &Command) -> (i32, String) {
    match dispatch(cmd) {
        Ok(x) => x,
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}

fn dispatch(cmd: &Command) -> Result<(i32, String)> {
    match cmd {
        Command::Decide(a) => {
            let q = parse_query(&a.cartan, &a.z)?;
            let report = decide(&q)?;
            let out = match a.format {
                Format::Json => json(&report),
                Format::Csv => {
                    let mut w = csv_writer();
                    w.write_record(["elements", "types", "S", "threshold", "eligible", "exceptional", "verdict"])
                        .map_err(csv_err)?;
                    w.write_record([
                        exprs(&q).join(" | "),
                        report.types.join(" | "),
                        join(&report.s_values, " "),
                        report.threshold.to_string(),
                        report.eligible.to_string(),
                        case_str(&report.exceptional),
                        report.verdict.to_string(),
                    ])
                    .map_err(csv_err)?;
                    finish(w)?
                }
                Format::Pretty => {
                    let mut s = String::new();
                    let _ = writeln!(s, "{} ({})", q.cartan(), q.restricted_class());
                    for (z, t) in q.elements().iter().zip(&report.types) {
                        let _ = writeln!(s, "  {:<20} {t}", z.expr());
                    }
                    let total: usize = report.s_values.iter().sum();
                    let _ = writeln!(
                        s,
                        "S = {} (sum {total}), threshold {}, eligible: {}",
                        join(&report.s_values, " + "),
                        report.threshold,
                        report.eligible
                    );
                    let _ = writeln!(s, "exceptional: {}", case_str(&report.exceptional));
                    let _ = writeln!(s, "verdict: {}", report.verdict);
                    s
                }
            };
            Ok((EXIT_OK, out))
        }
        Command::Survey(a) => {
            let cc = parse_cartan(&a.cartan)?;
            let sv = survey_up_to(&cc, a.l, a.max_l)?;
            Ok((EXIT_OK, render_survey(&sv, a.format)?))
        }
        Command::Wright(a) => {
            let q = parse_query(&a.cartan, &a.z)?;
            let rep = wright_holds(&q)?;
            Ok((EXIT_OK, render_wright(&q, &rep, a.format)?))
        }
        Command::Verify(a) => {
            let cc = parse_cartan(&a.cartan)?;
            let r = Realization::build(&cc)?;
            let v = if a.exhaustive {
                verify_exhaustive(&r, a.l, a.trials, a.seed)?
            } else {
                let q = parse_query(&a.cartan, &a.z)?;
                let row = verify_tuple(&q, &r, a.trials, a.seed)?;
                let disagreements = usize::from(!row.agree);
                Verification {
                    cartan: cc.to_string(),
                    l: q.elements().len(),
                    trials: a.trials,
                    seed: a.seed,
                    rows: vec![row],
                    disagreements,
                }
            };
            let code = if v.disagreements == 0 { EXIT_OK } else { EXIT_DISAGREEMENT };
            Ok((code, render_verify(&v, a.format)?))
        }
        Command::Info(a) => {
            let cc = parse_cartan(&a.cartan)?;
            Ok((EXIT_OK, render_info(&cc, a.format)?))
        }
    }
}

fn parse_cartan(s: &str) -> Result<CartanClass> {
    s.parse::<CartanClass>()?.validated()
}

fn parse_query(cartan: &str, z: &[String]) -> Result<TupleQuery> {
    let cc = parse_cartan(cartan)?;
    let rc = cc.restricted_class();
    let elements = z
        .iter()
        .map(|e| TypedElement::parse_in(rc, e))
        .collect::<Result<Vec<_>>>()?;
    TupleQuery::new(cc, elements)
}

fn exprs(q: &TupleQuery) -> Vec<String> {
    q.elements().iter().map(TypedElement::expr).collect()
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn case_str(c: &Option<crate::characterize::ExceptionalCase>) -> String {
    c.map_or_else(|| "none".to_string(), |c| c.to_string())
}

fn json<T: Serialize>(x: &T) -> String {
    let mut s = serde_json::to_string_pretty(x).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::Writer::from_writer(Vec::new())
}

fn finish(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Defect(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Defect(format!("csv: {e}"))
}

fn render_survey(sv: &Survey, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => json(sv),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["elements", "types", "S_sum", "threshold", "eligible", "exceptional", "verdict"])
                .map_err(csv_err)?;
            for row in &sv.rows {
                let r = &row.report;
                w.write_record([
                    row.elements.join(" | "),
                    r.types.join(" | "),
                    r.s_values.iter().sum::<usize>().to_string(),
                    r.threshold.to_string(),
                    r.eligible.to_string(),
                    case_str(&r.exceptional),
                    r.verdict.to_string(),
                ])
                .map_err(csv_err)?;
            }
            finish(w)?
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "{} ({}), L = {}: {} tuples", sv.cartan, sv.restricted, sv.l, sv.total);
            let _ = writeln!(s, "singular tuples: {}", sv.singular);
            for row in sv.singular_rows() {
                let _ = writeln!(
                    s,
                    "  {}  [{}]  exceptional: {}",
                    row.report.types.join(", "),
                    row.elements.join(" | "),
                    case_str(&row.report.exceptional)
                );
            }
            s
        }
    })
}

fn render_wright(q: &TupleQuery, rep: &WrightReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => json(rep),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["psi", "dim_psi", "lhs", "rhs", "deficits", "holds"]).map_err(csv_err)?;
            for r in &rep.rows {
                w.write_record([
                    r.psi.clone(),
                    r.dim_psi.to_string(),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    join(&r.deficits, " "),
                    r.holds.to_string(),
                ])
                .map_err(csv_err)?;
            }
            finish(w)?
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "{} ({}), dim Φ = {}", rep.cartan, q.restricted_class(), rep.dim_phi);
            let _ = writeln!(s, "tuple: {}", exprs(q).join(" | "));
            let _ = writeln!(s, "{:<24} {:>7} {:>6} {:>6}  {:<16} holds", "Ψ", "dim Ψ", "lhs", "rhs", "deficits");
            for r in &rep.rows {
                let _ = writeln!(
                    s,
                    "{:<24} {:>7} {:>6} {:>6}  {:<16} {}",
                    r.psi,
                    r.dim_psi,
                    r.lhs,
                    r.rhs,
                    join(&r.deficits, " "),
                    r.holds
                );
            }
            let _ = writeln!(s, "criterion holds: {}", rep.overall);
            s
        }
    })
}

fn render_verify(v: &Verification, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => json(v),
        Format::Csv => spectra_csv(v)?,
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "{} L = {}, trials = {}, seed = {}", v.cartan, v.l, v.trials, v.seed);
            for r in &v.rows {
                let _ = writeln!(
                    s,
                    "  {:<40} {:<9} {:<16} rank {:>3}/{:<3} {}",
                    r.types.join(", "),
                    r.combinatorial.to_string(),
                    r.oracle.to_string(),
                    r.max_rank,
                    r.target,
                    if r.agree { "ok" } else { "DISAGREE" }
                );
            }
            let _ = writeln!(
                s,
                "agreement: {:.1}% ({}/{})",
                100.0 * v.agreement(),
                v.rows.len() - v.disagreements,
                v.rows.len()
            );
            s
        }
    })
}

#[derive(Debug, Serialize)]
struct Info {
    cartan: String,
    restricted: String,
    multiplicities: Vec<(String, u32)>,
    dim_p: u64,
    types: Vec<InfoType>,
    audit: Option<crate::oracle::StructureAudit>,
    root_spaces: Option<Vec<crate::oracle::RootSpaceCheck>>,
}

#[derive(Debug, Serialize)]
struct InfoType {
    expr: String,
    label: String,
    s_value: usize,
    dim_orbit: u64,
    largest_eigenspace: Option<usize>,
}

fn render_info(cc: &CartanClass, format: Format) -> Result<String> {
    let rc = cc.restricted_class();
    let realization = match Realization::build(cc) {
        Ok(r) => Some(r),
        Err(Error::Capacity(_)) => None,
        Err(e) => return Err(e),
    };
    let mut types = Vec::new();
    for z in type_classes(rc)? {
        let largest_eigenspace = match &realization {
            Some(r) => Some(eigen_multiplicity_check(&z, r)?.largest),
            None => None,
        };
        types.push(InfoType {
            expr: z.expr(),
            label: z.type_label(),
            s_value: z.s_value().0,
            dim_orbit: z.dim_orbit(cc)?,
            largest_eigenspace,
        });
    }
    let root_spaces = match &realization {
        Some(r) => {
            let regular = type_classes(rc)?
                .into_iter()
                .find(TypedElement::is_regular)
                .expect("every system has regular elements");
            Some(r.root_space_checks(&regular)?)
        }
        None => None,
    };
    let info = Info {
        cartan: cc.to_string(),
        restricted: rc.to_string(),
        multiplicities: [("e_i±e_j", RootShape::Pair), ("e_i", RootShape::Single), ("2e_i", RootShape::Double)]
            .into_iter()
            .map(|(n, sh)| (n.to_string(), cc.shape_multiplicity(sh)))
            .filter(|&(_, m)| m > 0)
            .collect(),
        dim_p: cc.dim_p(),
        types,
        audit: realization.as_ref().map(|r| r.audit().clone()),
        root_spaces,
    };
    Ok(match format {
        Format::Json => json(&info),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["expr", "type", "S", "dim_orbit", "largest_eigenspace"]).map_err(csv_err)?;
            for t in &info.types {
                w.write_record([
                    t.expr.clone(),
                    t.label.clone(),
                    t.s_value.to_string(),
                    t.dim_orbit.to_string(),
                    t.largest_eigenspace.map_or_else(String::new, |m| m.to_string()),
                ])
                .map_err(csv_err)?;
            }
            finish(w)?
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(s, "{} restricted system {}, dim p = {}", info.cartan, info.restricted, info.dim_p);
            let m: Vec<String> = info.multiplicities.iter().map(|(n, m)| format!("m({n}) = {m}")).collect();
            let _ = writeln!(s, "multiplicities: {}", m.join(", "));
            let _ = writeln!(s, "element types ({}):", info.types.len());
            for t in &info.types {
                let _ = writeln!(s, "  {:<22} {:<24} S = {:<3} dim N_Z = {}", t.expr, t.label, t.s_value, t.dim_orbit);
            }
            match (&info.audit, &info.root_spaces) {
                (Some(a), Some(rs)) => {
                    let _ = writeln!(
                        s,
                        "matrix model {0}×{0}: dim g = {1}, dim k = {2}, dim p = {3}, dim a = {4}",
                        a.matrix_size, a.dim_g, a.dim_k, a.dim_p, a.dim_a
                    );
                    let _ = writeln!(
                        s,
                        "audit max residual {:.2e}: {}",
                        a.max_residual(),
                        if a.passed { "passed" } else { "FAILED" }
                    );
                    let bad = rs.iter().filter(|c| c.measured != c.expected as usize).count();
                    let _ = writeln!(s, "root spaces: {} positive roots, {bad} multiplicity mismatches", rs.len());
                }
                _ => {
                    let _ = writeln!(s, "no matrix model for this class");
                }
            }
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut argv = vec!["orbital-ac"];
        argv.extend_from_slice(args);
        run(&Cli::try_parse_from(argv).unwrap().command)
    }

    #[test]
    fn decide_exceptional_pair() {
        let (code, out) = call(&["decide", "--cartan", "DI:4", "--z", "s=4", "--z", "s=3", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "singular");
        assert_eq!(v["exceptional"], "case2");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["decide", "--cartan", "DI:4", "--z", "s=banana"]).0, EXIT_PARSE);
        assert_eq!(call(&["decide", "--cartan", "XX:4", "--z", "s=4"]).0, EXIT_PARSE);
        assert_eq!(call(&["verify", "--cartan", "AII:3", "--exhaustive"]).0, EXIT_CAPACITY);
        assert_eq!(call(&["survey", "--cartan", "AI:5", "--L", "9"]).0, EXIT_CAPACITY);
    }

    #[test]
    fn verify_exhaustive_agrees() {
        let args = ["verify", "--cartan", "BDI:3,3", "--L", "2", "--exhaustive", "--trials", "8", "--seed", "7"];
        let (code, out) = call(&args);
        assert_eq!(code, 0);
        assert!(out.contains("agreement: 100.0%"));
        assert_eq!(call(&args), (code, out));
    }
}
