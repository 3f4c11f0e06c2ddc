//! Builds the matrix models and prints their structure audit, root-space
//! multiplicities and eigenvalue patterns.

use orbital_ac::characterize::type_classes;
use orbital_ac::oracle::{eigen_multiplicity_check, Realization};
use orbital_ac::rootsys::CartanClass;
use orbital_ac::Result;

pub fn main() -> Result<()> {
    for cc in [CartanClass::AI(4), CartanClass::CI(3), CartanClass::BDI(2, 4), CartanClass::DI(4)] {
        let r = Realization::build(&cc)?;
        let a = r.audit();
        println!(
            "{cc}: {0}×{0} matrices, dim g = {1}, dim k = {2}, dim p = {3} (predicted {4}), max residual {5:.1e}",
            a.matrix_size,
            a.dim_g,
            a.dim_k,
            a.dim_p,
            a.predicted_dim_p,
            a.max_residual()
        );
        let types = type_classes(r.restricted_class())?;
        let regular = types.iter().find(|z| z.is_regular()).expect("regular type");
        for c in r.root_space_checks(regular)? {
            println!("    g_{:<8} dim {} (table {})  adZ residual {:.1e}", c.root, c.measured, c.expected, c.ad_residual);
        }
        for z in &types {
            let e = eigen_multiplicity_check(z, &r)?;
            println!("    {:<18} largest eigenspace {}  zero eigenspace {}", z.type_label(), e.largest, e.zero_multiplicity);
        }
    }
    Ok(())
}
