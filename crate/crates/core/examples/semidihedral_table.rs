//! A table algebra: the semidihedral local algebra, its automorphism group,
//! and the twist relation between its two line modules.

use modequiv::algebra::{automorphism_space_size, enumerate_automorphisms};
use modequiv::equiv::t_isomorphic;
use modequiv::families::paper_fixture;
use modequiv::linalg::Fp;
use modequiv::modrep::{is_isomorphic, SearchConfig};

fn main() -> modequiv::Result<()> {
    let cfg = SearchConfig::default();
    for p in [2, 3] {
        let f = Fp::new(p)?;
        let (algebra, modules) = paper_fixture("semidih2", f)?;
        let table = algebra.table_data().expect("table algebra");
        println!("p={p}: dim {} with basis {:?}", table.dim(), table.labels());
        println!("  candidate maps {}", automorphism_space_size(&algebra));
        let auts = enumerate_automorphisms(&algebra, cfg.budget)?;
        println!("  automorphisms {}", auts.len());

        let (m1, m2) = (&modules[0], &modules[1]);
        println!("  M1 ~ M2: {}", is_isomorphic(m1, m2, &cfg)?.verdict());
        let t = t_isomorphic(m1, m2, &cfg)?;
        println!("  M1 ~T M2: {}", t.verdict);
        if let Some(w) = t.twist_witness() {
            println!("  via {}", w.description);
            assert!(w.verify(m1, m2));
        }
    }
    Ok(())
}
