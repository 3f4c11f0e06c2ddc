//! Tangent spaces, random elements of `K` and the span-rank test.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::linalg::{bracket, numerical_rank, singular_values, Mat};
use super::realization::Realization;
use crate::characterize::TupleQuery;
use crate::elements::TypedElement;
use crate::error::{Error, Result};
use crate::rootsys::Kind;

/// Singular values at most `RANK_REL_TOL · σ_max` count as zero.
pub const RANK_REL_TOL: f64 = 1e-8;

/// Default number of random trials in [`oracle_decide`].
pub const DEFAULT_TRIALS: usize = 8;

fn p_matrix(r: &Realization, mats: &[Mat]) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(r.basis_p().len(), mats.len());
    for (c, x) in mats.iter().enumerate() {
        m.set_column(c, &r.p_coords(x));
    }
    m
}

/// `{[Z, E] : E ∈ basis(k)}` before orthonormalization.
fn tangent_generators(z: &Mat, r: &Realization) -> Vec<Mat> {
    r.basis_k().iter().map(|e| bracket(z, e)).collect()
}

/// Singular values of `ad(Z)|_k` in `p` coordinates.
pub fn tangent_spectrum(z: &TypedElement, r: &Realization) -> Result<Vec<f64>> {
    let zm = r.embed(z)?;
    Ok(singular_values(&p_matrix(r, &tangent_generators(&zm, r))))
}

/// Orthonormal basis of `N_Z = [Z, k]`. Its size must equal the
/// combinatorial orbit dimension.
pub fn tangent_basis(z: &TypedElement, r: &Realization) -> Result<Vec<Mat>> {
    let zm = r.embed(z)?;
    let gens = p_matrix(r, &tangent_generators(&zm, r));
    let expected = z.dim_orbit(&r.cartan())? as usize;
    if gens.ncols() == 0 {
        return check_rank(z, r, 0, expected).map(|_| Vec::new());
    }
    let svd = gens.svd(true, false);
    let u = svd.u.expect("requested U");
    let max = svd.singular_values.max();
    let keep: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| max > 0.0 && svd.singular_values[i] > RANK_REL_TOL * max)
        .collect();
    check_rank(z, r, keep.len(), expected)?;
    let s = r.matrix_size();
    Ok(keep
        .into_iter()
        .map(|i| {
            r.basis_p()
                .iter()
                .zip(u.column(i).iter())
                .fold(Mat::zeros(s, s), |acc, (b, &w)| acc + b * w)
        })
        .collect())
}

fn check_rank(z: &TypedElement, r: &Realization, got: usize, expected: usize) -> Result<()> {
    if got != expected {
        return Err(Error::Defect(format!(
            "{}: numerical dim N_Z = {got} but dim_orbit = {expected} for {z}",
            r.cartan()
        )));
    }
    Ok(())
}

/// `exp(A)` for `A = Σ c_i E_i` over the `k` basis, `c_i` uniform on
/// `[-1, 1]`.
pub fn random_k_with(r: &Realization, rng: &mut impl Rng) -> Mat {
    let s = r.matrix_size();
    let a = r
        .basis_k()
        .iter()
        .fold(Mat::zeros(s, s), |acc, e| acc + e * rng.gen_range(-1.0..=1.0));
    a.exp()
}

pub fn random_k(r: &Realization, seed: u64) -> Mat {
    random_k_with(r, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `Ad(k) X = k X k⁻¹`; `k` is orthogonal in all realizations.
pub fn ad(k: &Mat, x: &Mat) -> Mat {
    k * x * k.transpose()
}

fn span_matrix(r: &Realization, bases: &[Vec<Mat>], ks: &[Mat]) -> DMatrix<f64> {
    let mats: Vec<Mat> = bases
        .iter()
        .zip(ks)
        .flat_map(|(b, k)| b.iter().map(move |t| ad(k, t)))
        .collect();
    p_matrix(r, &mats)
}

/// Singular values of the stacked `Ad(k_j) N_{Z_j}` in `p` coordinates.
pub fn span_spectrum(q: &TupleQuery, ks: &[Mat], r: &Realization) -> Result<Vec<f64>> {
    if ks.len() != q.elements().len() {
        return Err(Error::Parameter(format!(
            "{} group elements for a tuple of length {}",
            ks.len(),
            q.elements().len()
        )));
    }
    let bases = q
        .elements()
        .iter()
        .map(|z| tangent_basis(z, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(singular_values(&span_matrix(r, &bases, ks)))
}

/// Numerical rank of `Σ_j Ad(k_j) N_{Z_j}`.
pub fn span_rank(q: &TupleQuery, ks: &[Mat], r: &Realization) -> Result<usize> {
    Ok(numerical_rank(&span_spectrum(q, ks, r)?, RANK_REL_TOL))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleVerdict {
    Ac,
    SingularLikely,
}

impl std::fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OracleVerdict::Ac => "ac",
            OracleVerdict::SingularLikely => "singular_likely",
        })
    }
}

/// One trial of [`oracle_decide`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankProbe {
    pub seed: u64,
    pub trial: usize,
    #[serde(skip)]
    pub sampled_k: Vec<Mat>,
    pub achieved_rank: usize,
    pub target: usize,
    /// Ranks of the first `1, 2, ..., L` summands.
    pub prefix_ranks: Vec<usize>,
    pub singular_values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub verdict: OracleVerdict,
    pub max_rank: usize,
    pub target: usize,
    pub trials_run: usize,
    pub probes: Vec<RankProbe>,
}

impl OracleOutcome {
    pub fn deficit(&self) -> usize {
        self.target - self.max_rank
    }

    /// The probe reaching the maximal rank (first one on ties).
    pub fn best(&self) -> &RankProbe {
        self.probes
            .iter()
            .find(|p| p.achieved_rank == self.max_rank)
            .expect("at least one trial")
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Samples `(k_2, ..., k_L)` up to `trials` times, `k_1 = Id`, and stops at
/// the first full-rank span. A full-rank hit certifies absolute continuity.
pub fn oracle_decide(q: &TupleQuery, r: &Realization, trials: usize, seed: u64) -> Result<OracleOutcome> {
    if trials == 0 {
        return Err(Error::Parameter("at least one trial is required".into()));
    }
    if q.cartan().restricted_class() != r.restricted_class() || q.cartan().dim_p() != r.cartan().dim_p() {
        return Err(Error::Domain(format!("query in {} against realization of {}", q.cartan(), r.cartan())));
    }
    let bases = q
        .elements()
        .iter()
        .map(|z| tangent_basis(z, r))
        .collect::<Result<Vec<_>>>()?;
    let target = r.basis_p().len();
    let s = r.matrix_size();
    let mut probes = Vec::new();
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let mut ks = vec![Mat::identity(s, s)];
        ks.extend((1..bases.len()).map(|_| random_k_with(r, &mut rng)));
        let mut prefix_ranks = Vec::with_capacity(bases.len());
        let mut sv = Vec::new();
        for j in 1..=bases.len() {
            sv = singular_values(&span_matrix(r, &bases[..j], &ks[..j]));
            let rank = numerical_rank(&sv, RANK_REL_TOL);
            if prefix_ranks.last().is_some_and(|&prev| rank < prev) {
                return Err(Error::Defect(format!(
                    "span rank dropped from {} to {rank} when adding summand {j} (trial {trial})",
                    prefix_ranks.last().unwrap()
                )));
            }
            prefix_ranks.push(rank);
        }
        let achieved_rank = *prefix_ranks.last().expect("L ≥ 2");
        probes.push(RankProbe {
            seed,
            trial,
            sampled_k: ks,
            achieved_rank,
            target,
            prefix_ranks,
            singular_values: sv,
        });
        if achieved_rank == target {
            break;
        }
    }
    let max_rank = probes.iter().map(|p| p.achieved_rank).max().expect("trials ≥ 1");
    Ok(OracleOutcome {
        verdict: if max_rank == target { OracleVerdict::Ac } else { OracleVerdict::SingularLikely },
        max_rank,
        target,
        trials_run: probes.len(),
        probes,
    })
}

/// Eigenvalue multiplicities of `embed(Z)` against the block structure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenReport {
    /// `(eigenvalue, multiplicity)`, ascending.
    pub spectrum: Vec<(f64, usize)>,
    pub predicted: Vec<(i64, usize)>,
    pub largest: usize,
    pub zero_multiplicity: usize,
}

/// Predicted spectrum of the embedded canonical vector: the tag values with
/// block multiplicities in `AI`; `±a_j` with multiplicity `s_j` and `0` with
/// multiplicity `2J` (`CI`) or `2J + q − p` (`BDI`).
fn predicted_spectrum(z: &TypedElement, r: &Realization) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    let values = z.canonical_values();
    if z.context().kind() == Kind::A {
        for (&a, &s) in values.iter().zip(z.blocks()) {
            *out.entry(a).or_default() += s;
        }
        return out;
    }
    for (&a, &s) in values.iter().zip(z.blocks()) {
        *out.entry(a).or_default() += s;
        *out.entry(-a).or_default() += s;
    }
    let zeros = 2 * z.zero_block() + r.matrix_size() - 2 * z.context().rank();
    if zeros > 0 {
        out.insert(0, zeros);
    }
    out
}

pub fn eigen_multiplicity_check(z: &TypedElement, r: &Realization) -> Result<EigenReport> {
    let zm = r.embed(z)?;
    let mut eig: Vec<f64> = zm.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    let tol = 1e-8 * eig.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    let mut spectrum: Vec<(f64, usize)> = Vec::new();
    for x in eig {
        match spectrum.last_mut() {
            Some((v, m)) if (x - *v).abs() < tol => *m += 1,
            _ => spectrum.push((x, 1)),
        }
    }
    let predicted: Vec<(i64, usize)> = predicted_spectrum(z, r).into_iter().collect();
    let matches = spectrum.len() == predicted.len()
        && spectrum
            .iter()
            .zip(&predicted)
            .all(|((v, m), (a, s))| m == s && (v - *a as f64).abs() < tol);
    if !matches {
        return Err(Error::Defect(format!(
            "{}: spectrum {spectrum:?} of {z} differs from {predicted:?}",
            r.cartan()
        )));
    }
    let largest = spectrum.iter().map(|&(_, m)| m).max().unwrap_or(0);
    let zero_multiplicity = predicted.iter().find(|(a, _)| *a == 0).map_or(0, |&(_, m)| m);
    Ok(EigenReport { spectrum, predicted, largest, zero_multiplicity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanClass;

    fn el(r: &Realization, e: &str) -> TypedElement {
        TypedElement::parse_in(r.restricted_class(), e).unwrap()
    }

    #[test]
    fn tangent_ranks() {
        let r = Realization::build(&CartanClass::AI(2)).unwrap();
        assert_eq!(tangent_basis(&el(&r, "s=1,1"), &r).unwrap().len(), 1);
        let r = Realization::build(&CartanClass::DI(4)).unwrap();
        assert_eq!(tangent_basis(&el(&r, "J=0; s=4"), &r).unwrap().len(), 6);
        let r = Realization::build(&CartanClass::BDI(2, 3)).unwrap();
        let z = el(&r, "v=0,1");
        assert_eq!(tangent_basis(&z, &r).unwrap().len() as u64, z.dim_orbit(&r.cartan()).unwrap());
    }

    #[test]
    fn random_k_properties() {
        let r = Realization::build(&CartanClass::BDI(2, 3)).unwrap();
        let k = random_k(&r, 11);
        assert_eq!(k, random_k(&r, 11));
        assert!((&k * k.transpose() - Mat::identity(5, 5)).norm() < 1e-12);
        for p in r.basis_p() {
            let img = ad(&k, p);
            assert!(super::super::linalg::residual(r.basis_p(), &img).norm() < 1e-10);
        }
    }

    #[test]
    fn small_decisions() {
        let r = Realization::build(&CartanClass::AI(2)).unwrap();
        let z = el(&r, "s=1,1");
        let q = TupleQuery::new(r.cartan(), vec![z.clone(), z]).unwrap();
        let out = oracle_decide(&q, &r, DEFAULT_TRIALS, 1).unwrap();
        assert_eq!((out.verdict, out.max_rank, out.target), (OracleVerdict::Ac, 2, 2));

        let r = Realization::build(&CartanClass::DI(3)).unwrap();
        let z = el(&r, "J=0; s=3");
        let q = TupleQuery::new(r.cartan(), vec![z.clone(), z]).unwrap();
        let out = oracle_decide(&q, &r, DEFAULT_TRIALS, 1).unwrap();
        assert_eq!(out.verdict, OracleVerdict::SingularLikely);
        assert!(out.max_rank <= 6);
        assert_eq!(out.trials_run, DEFAULT_TRIALS);
    }

    #[test]
    fn eigen_examples() {
        let r = Realization::build(&CartanClass::AI(4)).unwrap();
        assert_eq!(eigen_multiplicity_check(&el(&r, "s=2,2"), &r).unwrap().largest, 2);
        let r = Realization::build(&CartanClass::BDI(2, 4)).unwrap();
        assert_eq!(eigen_multiplicity_check(&el(&r, "v=0,1"), &r).unwrap().zero_multiplicity, 4);
        let r = Realization::build(&CartanClass::CI(3)).unwrap();
        let rep = eigen_multiplicity_check(&el(&r, "J=0; s=1,1,1"), &r).unwrap();
        assert!(rep.spectrum.iter().all(|&(_, m)| m == 1));
    }
}
