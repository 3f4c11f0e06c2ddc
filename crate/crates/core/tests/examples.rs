#[path = "../examples/root_systems.rs"]
mod root_systems;
#[path = "../examples/element_types.rs"]
mod element_types;
#[path = "../examples/decide.rs"]
mod decide;
#[path = "../examples/survey.rs"]
mod survey;
#[path = "../examples/wright_ledger.rs"]
mod wright_ledger;
#[path = "../examples/structure_audit.rs"]
mod structure_audit;
#[path = "../examples/oracle_verify.rs"]
mod oracle_verify;
#[path = "../examples/d4_intersections.rs"]
mod d4_intersections;

#[test]
fn root_systems_runs() {
    root_systems::main().unwrap();
}

#[test]
fn element_types_runs() {
    element_types::main().unwrap();
}

#[test]
fn decide_runs() {
    decide::main().unwrap();
}

#[test]
fn survey_runs() {
    survey::main().unwrap();
}

#[test]
fn wright_ledger_runs() {
    wright_ledger::main().unwrap();
}

#[test]
fn structure_audit_runs() {
    structure_audit::main().unwrap();
}

#[test]
fn oracle_verify_runs() {
    oracle_verify::main().unwrap();
}

#[test]
fn d4_intersections_runs() {
    d4_intersections::main().unwrap();
}
