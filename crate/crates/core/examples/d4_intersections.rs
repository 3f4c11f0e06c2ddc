//! Exhaustive Weyl-group minima of intersections between the rank-3
//! subsystems of `D_4`.

use orbital_ac::characterize::type_classes;
use orbital_ac::elements::TypedElement;
use orbital_ac::rootsys::{symmetrize, CartanClass};
use orbital_ac::wright::min_intersection_dim;
use orbital_ac::Result;

pub fn main() -> Result<()> {
    let cc = CartanClass::DI(4);
    let rc = cc.restricted_class();
    let w = rc.weyl_group()?;
    let rank3: Vec<TypedElement> = type_classes(rc)?
        .into_iter()
        .filter(|z| orbital_ac::rootsys::subsystem_rank(&z.annihilator().roots) == 3)
        .collect();
    for a in &rank3 {
        for b in &rank3 {
            let (ra, rb) = (a.annihilator().roots, b.annihilator().roots);
            let positive = min_intersection_dim(&ra, &rb, &cc)?;
            let full_a = symmetrize(&ra);
            let full_b = symmetrize(&rb);
            let signed = w
                .iter()
                .map(|g| full_b.iter().filter(|r| full_a.contains(&g.apply(r))).count())
                .min()
                .expect("nonempty group");
            println!(
                "{:<16} {:<16} min positive {positive}  min ± {signed}",
                format!("{} [{}]", a.type_label(), a.expr()),
                format!("{} [{}]", b.type_label(), b.expr()),
            );
        }
    }
    Ok(())
}
