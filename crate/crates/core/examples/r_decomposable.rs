//! R-decomposability: does every proper restriction split?

use modequiv::equiv::r_decomposable;
use modequiv::families::paper_fixture;
use modequiv::linalg::Fp;
use modequiv::modrep::{is_indecomposable, SearchConfig};

fn main() -> modequiv::Result<()> {
    let cfg = SearchConfig::default();
    for p in [2, 3] {
        let (_, ms) = paper_fixture("rdec4", Fp::new(p)?)?;
        let m = &ms[0];
        println!("p={p}: indecomposable {}", is_indecomposable(m, cfg.budget)?.verdict());
        let v = r_decomposable(m, &cfg)?;
        print!("  r-decomposable {}", v.verdict);
        match &v.witness {
            Some(w) => println!(": {}", w.summary()),
            None => println!(),
        }
    }
    Ok(())
}
