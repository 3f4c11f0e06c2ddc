//! Cross-validates symbolic verdicts against the numerical tangent-span
//! oracle for every pair of element types.

use orbital_ac::characterize::TupleQuery;
use orbital_ac::elements::TypedElement;
use orbital_ac::oracle::{oracle_decide, spectra_csv, verify_exhaustive, Realization, DEFAULT_TRIALS};
use orbital_ac::rootsys::CartanClass;
use orbital_ac::Result;

pub fn main() -> Result<()> {
    for cc in [CartanClass::AI(4), CartanClass::BDI(3, 3), CartanClass::CI(2)] {
        let r = Realization::build(&cc)?;
        let v = verify_exhaustive(&r, 2, DEFAULT_TRIALS, 7)?;
        println!("{cc}: {} pairs, {} disagreements", v.rows.len(), v.disagreements);
        for row in &v.rows {
            println!(
                "    {:<28} {:<9} {:<16} rank {}/{}",
                row.types.join(", "),
                row.combinatorial.to_string(),
                row.oracle.to_string(),
                row.max_rank,
                row.target
            );
        }
        if cc == CartanClass::CI(2) {
            print!("{}", spectra_csv(&v)?);
        }
    }

    // The (SU(3), SU(2)) family in D_3 falls short by a dimension count.
    let cc = CartanClass::DI(3);
    let r = Realization::build(&cc)?;
    let rc = cc.restricted_class();
    let x = TypedElement::parse_in(rc, "s=3")?;
    let y = TypedElement::parse_in(rc, "s=2")?;
    let (dx, dy) = (x.dim_orbit(&cc)?, y.dim_orbit(&cc)?);
    let out = oracle_decide(&TupleQuery::new(cc, vec![x, y])?, &r, DEFAULT_TRIALS, 1)?;
    println!(
        "{cc} (SU(3), SU(2)): dim N_X + dim N_Y = {dx} + {dy} < {}; best rank {} after {} trials",
        out.target, out.max_rank, out.trials_run
    );
    Ok(())
}
