//! Symbolic decision for single tuples: eligibility, exceptional cases and
//! the resulting verdict.

use orbital_ac::characterize::{decide, TupleQuery};
use orbital_ac::elements::TypedElement;
use orbital_ac::rootsys::CartanClass;
use orbital_ac::Result;

fn query(cartan: &str, exprs: &[&str]) -> Result<TupleQuery> {
    let cc: CartanClass = cartan.parse()?;
    let rc = cc.restricted_class();
    let zs = exprs
        .iter()
        .map(|e| TypedElement::parse_in(rc, e))
        .collect::<Result<Vec<_>>>()?;
    TupleQuery::new(cc, zs)
}

pub fn main() -> Result<()> {
    let cases: &[(&str, &[&str])] = &[
        ("AI:4", &["s=2,2", "s=2,2"]),
        ("AI:4", &["s=2,2", "s=2,1,1"]),
        ("DI:4", &["s=4", "s=3"]),
        ("DI:4", &["s=4", "s=4; minus", "s=4"]),
        ("DI:4", &["s=4", "s=4", "s=4"]),
        ("BDI:3,4", &["J=2; s=1", "J=2; s=1"]),
        ("CII:2,5", &["J=1; s=1", "s=2", "s=1,1"]),
        ("AIII:3,3", &["J=0; s=3", "J=0; s=3"]),
    ];
    for (cartan, exprs) in cases {
        let q = query(cartan, exprs)?;
        let r = decide(&q)?;
        let exc = r.exceptional.map_or("none".to_string(), |c| c.to_string());
        println!(
            "{cartan:<9} {:<40} S = {:?} ≤ {}? {:<5}  exceptional {exc:<5} → {}",
            r.types.join(", "),
            r.s_values,
            r.threshold,
            r.eligible,
            r.verdict
        );
    }
    let q = query("DI:4", &["s=4", "s=3"])?;
    println!("{}", serde_json::to_string(&decide(&q)?).expect("serializable"));
    Ok(())
}
