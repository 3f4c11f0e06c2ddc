use std::process::{Command, Output};

use orbital_ac::characterize::{decide, survey_up_to, DecisionReport, Survey, TupleQuery};
use orbital_ac::elements::TypedElement;
use orbital_ac::oracle::{verify_exhaustive, Realization, Verification};
use orbital_ac::rootsys::CartanClass;
use orbital_ac::wright::{wright_holds, WrightReport};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbital-ac")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn query(cartan: &str, exprs: &[&str]) -> TupleQuery {
    let cc: CartanClass = cartan.parse().unwrap();
    let zs = exprs
        .iter()
        .map(|e| TypedElement::parse_in(cc.restricted_class(), e).unwrap())
        .collect();
    TupleQuery::new(cc, zs).unwrap()
}

#[test]
fn decide_json_round_trips() {
    let o = bin(&["decide", "--cartan", "DI:4", "--z", "s=4", "--z", "s=3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let parsed: DecisionReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parsed, decide(&query("DI:4", &["s=4", "s=3"])).unwrap());
    assert_eq!(parsed.exceptional.unwrap().to_string(), "case2");
}

#[test]
fn wright_json_round_trips() {
    let o = bin(&["wright", "--cartan", "CII:4,4", "--z", "J=2; s=2", "--z", "s=4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let parsed: WrightReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parsed, wright_holds(&query("CII:4,4", &["J=2; s=2", "s=4"])).unwrap());
    assert!(parsed.overall);
}

#[test]
fn survey_matches_library_and_lists_all_su4() {
    let o = bin(&["survey", "--cartan", "AI:5", "--L", "4", "--format", "json"]);
    let parsed: Survey = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parsed, survey_up_to(&CartanClass::AI(5), 4, 4).unwrap());
    let pretty = stdout(&bin(&["survey", "--cartan", "AI:5", "--L", "4"]));
    assert!(pretty.contains("singular tuples: 1\n  SU(4), SU(4), SU(4), SU(4)"), "{pretty}");
}

#[test]
fn verify_is_deterministic_and_round_trips() {
    let args = ["verify", "--cartan", "BDI:3,3", "--L", "2", "--exhaustive", "--trials", "8", "--seed", "7", "--format", "json"];
    let a = bin(&args);
    let b = bin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let parsed: Verification = serde_json::from_str(&stdout(&a)).unwrap();
    let r = Realization::build(&CartanClass::BDI(3, 3)).unwrap();
    assert_eq!(parsed, verify_exhaustive(&r, 2, 8, 7).unwrap());
    assert_eq!(parsed.disagreements, 0);
    let csv = stdout(&bin(&["verify", "--cartan", "BDI:3,3", "--L", "2", "--exhaustive", "--seed", "7", "--format", "csv"]));
    assert_eq!(csv.lines().count(), parsed.rows.len() + 1);
    assert!(csv.starts_with("cartan,elements,combinatorial,oracle,max_rank,target,agree,sigma_1"));
}

#[test]
fn exit_codes_follow_the_contract() {
    assert_eq!(bin(&["decide", "--cartan", "DI:4", "--z", "J=x"]).status.code(), Some(2));
    assert_eq!(bin(&["decide", "--cartan", "DI:4"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "--cartan", "CII:2,2", "--exhaustive"]).status.code(), Some(3));
    let capped = Command::new(env!("CARGO_BIN_EXE_orbital-ac"))
        .args(["wright", "--cartan", "CI:5", "--z", "s=5", "--z", "s=5"])
        .env("ORBITAL_AC_WEYL_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn info_reports_audit() {
    let out = stdout(&bin(&["info", "--cartan", "BDI:2,4"]));
    assert!(out.contains("dim p = 8"), "{out}");
    assert!(out.contains("passed"), "{out}");
    assert!(out.contains("0 multiplicity mismatches"), "{out}");
    let out = stdout(&bin(&["info", "--cartan", "DIII:5"]));
    assert!(out.contains("no matrix model"), "{out}");
}
