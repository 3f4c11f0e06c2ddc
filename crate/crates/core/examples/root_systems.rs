//! Restricted root systems, multiplicities and Weyl groups of a few
//! classical symmetric spaces.

use orbital_ac::rootsys::{CartanClass, RootShape};
use orbital_ac::Result;

pub fn main() -> Result<()> {
    for s in ["AI:4", "AIII:2,5", "CII:3,3", "DIII:5", "BDI:3,4", "DI:4"] {
        let cc: CartanClass = s.parse()?;
        let rc = cc.restricted_class();
        let mults: Vec<String> = [RootShape::Pair, RootShape::Single, RootShape::Double]
            .into_iter()
            .map(|sh| cc.shape_multiplicity(sh))
            .map(|m| m.to_string())
            .collect();
        println!(
            "{cc:<10} {rc:<6} |Φ⁺| = {:<3} |W| = {:<6} mult(pair, single, double) = ({}) dim p = {}",
            rc.positive_root_count(),
            rc.weyl_order(),
            mults.join(", "),
            cc.dim_p()
        );
    }
    let rc: CartanClass = "BDI:2,3".parse()?;
    let roots: Vec<String> = rc.restricted_class().positive_roots().iter().map(ToString::to_string).collect();
    println!("positive roots of B_2: {}", roots.join(", "));
    Ok(())
}
