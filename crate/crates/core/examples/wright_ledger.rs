//! The Wright-type sufficient criterion: co-rank-one subsystems, Weyl-minimal
//! intersections and the per-subsystem ledger.

use orbital_ac::characterize::TupleQuery;
use orbital_ac::elements::TypedElement;
use orbital_ac::rootsys::CartanClass;
use orbital_ac::wright::{enumerate_corank_one, min_conjugate_intersection_dim, wright_holds};
use orbital_ac::Result;

pub fn main() -> Result<()> {
    // Intersection chart for C_4 under three multiplicity assignments.
    for cc in [CartanClass::CI(4), CartanClass::AIII(4, 4), CartanClass::CII(4, 4)] {
        let rc = cc.restricted_class();
        let psis = enumerate_corank_one(&cc)?;
        let labels: Vec<&str> = psis.iter().map(|p| p.type_label.as_str()).collect();
        println!("{cc}: Ψ = {}", labels.join(" | "));
        for expr in ["J=0; s=4", "J=2; s=2"] {
            let z = TypedElement::parse_in(rc, expr)?;
            let ann = z.annihilator();
            let row = psis
                .iter()
                .map(|p| min_conjugate_intersection_dim(&ann, p, &cc).map(|d| d.to_string()))
                .collect::<Result<Vec<_>>>()?;
            println!("  {:<14} {}", ann.type_label, row.join(" | "));
        }
    }

    let cc = CartanClass::CII(4, 4);
    let rc = cc.restricted_class();
    let q = TupleQuery::new(
        cc,
        vec![TypedElement::parse_in(rc, "J=2; s=2")?, TypedElement::parse_in(rc, "J=0; s=4")?],
    )?;
    let rep = wright_holds(&q)?;
    println!("{cc} (C_2 × SU(2), SU(4)): criterion holds = {}", rep.overall);
    for r in &rep.rows {
        println!("  {:<14} lhs {:>3}  rhs {:>3}  {}", r.psi, r.lhs, r.rhs, r.holds);
    }
    Ok(())
}
