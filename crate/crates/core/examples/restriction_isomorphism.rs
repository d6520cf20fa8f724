//! Two non-isomorphic modules whose restrictions to every proper subalgebra
//! agree, and the restriction function of a single module.

use modequiv::algebra::Scope;
use modequiv::equiv::{r_isomorphic, restriction_function};
use modequiv::families::paper_fixture;
use modequiv::linalg::Fp;
use modequiv::modrep::{is_isomorphic, SearchConfig};

fn main() -> modequiv::Result<()> {
    let cfg = SearchConfig::default();
    let (_, ms) = paper_fixture("wild6", Fp::new(2)?)?;
    let (m1, m2) = (&ms[0], &ms[1]);

    println!("M1 ~ M2: {}", is_isomorphic(m1, m2, &cfg)?.verdict());
    for scope in [Scope::Maximal, Scope::All] {
        let r = r_isomorphic(m1, m2, scope, &cfg)?;
        println!("M1 ~R M2 over {scope:?} subalgebras: {} ({} checked)", r.verdict, r.checked);
    }

    let (_, tame) = paper_fixture("tame3", Fp::new(3)?)?;
    let rf = restriction_function(&tame[0], Scope::All, &cfg)?;
    println!("restriction classes of tame3.M1 over F_3:");
    for class in &rf.partition.classes {
        let names: Vec<&str> = class.iter().map(|&i| rf.partition.labels[i].as_str()).collect();
        println!("  {}", names.join(" | "));
    }
    Ok(())
}
