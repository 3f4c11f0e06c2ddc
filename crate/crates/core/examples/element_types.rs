//! Element types of `D_4`: annihilating roots, type labels, S-values, orbit
//! dimensions and the reduction step used by the induction.

use orbital_ac::characterize::type_classes;
use orbital_ac::elements::{enumerate_types, TypedElement};
use orbital_ac::rootsys::{CartanClass, RestrictedClass};
use orbital_ac::Result;

pub fn main() -> Result<()> {
    let cc = CartanClass::DI(4);
    let rc = cc.restricted_class();
    println!("{} raw types, {} conjugacy classes", enumerate_types(rc).len(), type_classes(rc)?.len());
    for z in type_classes(rc)? {
        let (s, dominant) = z.s_value();
        let roots: Vec<String> = z.annihilator().roots.iter().map(ToString::to_string).collect();
        println!(
            "{:<20} v = {:?}  {:<14} S = {s} ({dominant:?})  dim N_Z = {:<2}  Φ_Z = {{{}}}",
            z.expr(),
            z.vector(),
            z.type_label(),
            z.dim_orbit(&cc)?,
            roots.join(", ")
        );
    }

    let z: TypedElement = "D_4: v=0,0,3,5".parse()?;
    println!("{z} has type {}", z.type_label());
    let reduced = z.reduce()?;
    println!("reduces to {reduced} of type {}", reduced.type_label());

    let a = TypedElement::parse_in(RestrictedClass::new(rc.kind(), 4)?, "J=0; s=4; minus")?;
    println!("{a}: SU(n) parity {:?}", a.su_class_parity());
    Ok(())
}
