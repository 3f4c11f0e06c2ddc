//! The Wright-type sufficient criterion for absolute continuity.
//!
//! For an `m`-tuple and every co-rank-one full subsystem `Ψ ⊆ Φ`:
//!
//! ```text
//! (m − 1)(dim Φ − dim Ψ) − 1  ≥  Σ_i ( dim Φ_{Z_i} − min_{σ ∈ W} dim(Φ_{Z_i} ∩ σ Ψ) )
//! ```
//!
//! where `dim` counts positive roots with multiplicity. If every `Ψ`
//! passes, the tuple is absolutely continuous.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::characterize::{roots_conjugate, TupleQuery};
use crate::elements::{enumerate_types, AnnihilatorSystem, TypedElement};
use crate::error::{Error, Result};
use crate::rootsys::{is_full, subsystem_rank, weighted, CartanClass, Mask, RestrictedClass, Root, RootTable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorankOneSubsystem {
    pub roots: BTreeSet<Root>,
    pub type_label: String,
    pub representative: TypedElement,
}

/// One representative per conjugacy class of co-rank-one full subsystems,
/// taken from annihilators of maximally singular elements.
pub fn enumerate_corank_one(cc: &CartanClass) -> Result<Vec<CorankOneSubsystem>> {
    corank_one_subsystems(cc.restricted_class())
}

pub fn corank_one_subsystems(rc: RestrictedClass) -> Result<Vec<CorankOneSubsystem>> {
    rc.weyl_group()?;
    let mut out: Vec<CorankOneSubsystem> = Vec::new();
    for z in enumerate_types(rc) {
        let a = z.annihilator();
        if subsystem_rank(&a.roots) + 1 != rc.rank() {
            continue;
        }
        let mut dup = false;
        for psi in &out {
            if psi.roots.len() == a.roots.len() && roots_conjugate(&psi.roots, &a.roots, &rc)? {
                dup = true;
                break;
            }
        }
        if dup {
            continue;
        }
        if !is_full(&a.roots, &rc) {
            return Err(Error::Defect(format!("annihilator of {z} is not a full subsystem")));
        }
        out.push(CorankOneSubsystem {
            roots: a.roots,
            type_label: a.type_label,
            representative: z,
        });
    }
    Ok(out)
}

/// `min_{σ ∈ W} dim(Φ_Z ∩ σ Ψ)`, intersecting full root sets and weighting
/// the positive part by multiplicity.
pub fn min_conjugate_intersection_dim(
    phi_z: &AnnihilatorSystem,
    psi: &CorankOneSubsystem,
    cc: &CartanClass,
) -> Result<u64> {
    min_intersection_dim(&phi_z.roots, &psi.roots, cc)
}

pub fn min_intersection_dim(a: &BTreeSet<Root>, b: &BTreeSet<Root>, cc: &CartanClass) -> Result<u64> {
    let rc = cc.restricted_class();
    let table = RootTable::new(rc)?;
    let weights = table.weights(cc)?;
    let ma = table.mask_of(a)?;
    let orbit = orbit_masks(&table, table.mask_of(b)?)?;
    Ok(orbit.iter().map(|&m| weighted(ma & m, &weights)).min().unwrap_or(0))
}

/// Distinct images `w(S)` over the whole Weyl group.
fn orbit_masks(table: &RootTable, mask: Mask) -> Result<Vec<Mask>> {
    let group = table.class().weyl_group()?;
    let set: HashSet<Mask> = group.iter().map(|w| table.image(&w, mask)).collect();
    let mut v: Vec<Mask> = set.into_iter().collect();
    v.sort_unstable();
    Ok(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WrightRow {
    pub psi: String,
    pub dim_psi: u64,
    pub lhs: i64,
    pub rhs: i64,
    /// `dim Φ_{Z_i} − min dim(Φ_{Z_i} ∩ σΨ)` per tuple member.
    pub deficits: Vec<u64>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WrightReport {
    pub cartan: String,
    pub dim_phi: u64,
    pub rows: Vec<WrightRow>,
    pub overall: bool,
}

/// Evaluates the criterion for one query.
pub fn wright_holds(q: &TupleQuery) -> Result<WrightReport> {
    WrightChecker::new(q.cartan())?.check(q.elements())
}

/// Criterion evaluator for one Cartan class. Subsystem orbits and
/// per-element minima are cached across calls.
#[derive(Debug, Clone)]
pub struct WrightChecker {
    cartan: CartanClass,
    table: RootTable,
    weights: Vec<u64>,
    dim_phi: u64,
    psis: Vec<(CorankOneSubsystem, u64, Vec<Mask>)>,
    minima: HashMap<TypedElement, (u64, Vec<u64>)>,
}

impl WrightChecker {
    pub fn new(cartan: CartanClass) -> Result<Self> {
        let rc = cartan.restricted_class();
        let table = RootTable::new(rc)?;
        let weights = table.weights(&cartan)?;
        let dim_phi = weights.iter().sum();
        let psis = corank_one_subsystems(rc)?
            .into_iter()
            .map(|psi| {
                let mask = table.mask_of(&psi.roots)?;
                let dim = weighted(mask, &weights);
                Ok((psi, dim, orbit_masks(&table, mask)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cartan,
            table,
            weights,
            dim_phi,
            psis,
            minima: HashMap::new(),
        })
    }

    pub fn subsystems(&self) -> impl Iterator<Item = &CorankOneSubsystem> {
        self.psis.iter().map(|(p, _, _)| p)
    }

    /// `(dim Φ_Z, [min_σ dim(Φ_Z ∩ σΨ) for each Ψ])`.
    fn minima(&mut self, z: &TypedElement) -> Result<(u64, Vec<u64>)> {
        if let Some(v) = self.minima.get(z) {
            return Ok(v.clone());
        }
        let mz = self.table.mask_of(&z.annihilator().roots)?;
        let dim_z = weighted(mz, &self.weights);
        let mins = self
            .psis
            .iter()
            .map(|(_, _, orbit)| {
                orbit
                    .iter()
                    .map(|&m| weighted(mz & m, &self.weights))
                    .min()
                    .unwrap_or(0)
            })
            .collect::<Vec<_>>();
        self.minima.insert(z.clone(), (dim_z, mins.clone()));
        Ok((dim_z, mins))
    }

    pub fn check(&mut self, elements: &[TypedElement]) -> Result<WrightReport> {
        let rc = self.cartan.restricted_class();
        if let Some(z) = elements.iter().find(|z| z.context() != rc) {
            return Err(Error::Domain(format!("{z} does not live in {rc}")));
        }
        let data = elements
            .iter()
            .map(|z| self.minima(z))
            .collect::<Result<Vec<_>>>()?;
        let m = elements.len() as i64;
        let rows: Vec<WrightRow> = self
            .psis
            .iter()
            .enumerate()
            .map(|(k, (psi, dim_psi, _))| {
                let lhs = (m - 1) * (self.dim_phi as i64 - *dim_psi as i64) - 1;
                let deficits: Vec<u64> = data.iter().map(|(dz, mins)| dz - mins[k]).collect();
                let rhs = deficits.iter().sum::<u64>() as i64;
                WrightRow {
                    psi: psi.type_label.clone(),
                    dim_psi: *dim_psi,
                    lhs,
                    rhs,
                    deficits,
                    holds: lhs >= rhs,
                }
            })
            .collect();
        Ok(WrightReport {
            cartan: self.cartan.to_string(),
            dim_phi: self.dim_phi,
            overall: rows.iter().all(|r| r.holds),
            rows,
        })
    }
}
