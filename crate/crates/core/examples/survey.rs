//! Surveys every unordered tuple of element types and lists the singular
//! ones, reproducing the sharpness statements for types `A_n`, `B_3` and
//! `D_4`.

use orbital_ac::characterize::{survey_up_to, Survey};
use orbital_ac::rootsys::CartanClass;
use orbital_ac::Result;

fn show(s: &Survey) {
    println!("{} ({}), L = {}: {} of {} tuples singular", s.cartan, s.restricted, s.l, s.singular, s.total);
    for row in s.singular_rows() {
        println!("    {}", row.report.types.join(", "));
    }
}

pub fn main() -> Result<()> {
    for n in 2..=5 {
        let cc = CartanClass::AI(n);
        let rank = n - 1;
        if rank >= 2 {
            show(&survey_up_to(&cc, rank, 5)?);
        }
        show(&survey_up_to(&cc, rank + 1, 5)?);
    }
    show(&survey_up_to(&CartanClass::BDI(3, 4), 2, 3)?);
    show(&survey_up_to(&CartanClass::BDI(3, 4), 3, 3)?);
    show(&survey_up_to(&CartanClass::DI(4), 3, 3)?);
    Ok(())
}
