//! Numerical ground truth from explicit matrix realizations.

pub mod linalg;
mod probe;
mod realization;
mod verify;

pub use probe::{
    ad, eigen_multiplicity_check, oracle_decide, random_k, random_k_with, span_rank, span_spectrum,
    tangent_basis, tangent_spectrum, EigenReport, OracleOutcome, OracleVerdict, RankProbe, DEFAULT_TRIALS,
    RANK_REL_TOL,
};
pub use realization::{realizable, Realization, RootSpaceCheck, StructureAudit, AUDIT_TOL};
pub use verify::{spectra_csv, verify_exhaustive, verify_tuple, Verification, VerifyRow};
