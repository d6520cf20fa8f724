//! Splitting a module into indecomposable summands.

use modequiv::families::{jordan, paper_fixture};
use modequiv::linalg::Fp;
use modequiv::modrep::{decompose_with_basis, direct_sum, is_indecomposable, is_isomorphic, SearchConfig};

fn main() -> modequiv::Result<()> {
    let cfg = SearchConfig::default();
    let f = Fp::new(3)?;
    let m = direct_sum(&jordan(f, 1, 2)?, &jordan(f, 2, 1)?)?;
    let d = decompose_with_basis(&m, cfg.budget)?;
    println!("J(1,2) + J(2,1) splits into dims {:?}", d.parts.iter().map(|p| p.dim()).collect::<Vec<_>>());
    println!("basis:\n{}", d.basis);

    let (_, tame) = paper_fixture("tame3", f)?;
    let s = direct_sum(&tame[0], &tame[1])?;
    let parts = decompose_with_basis(&s, cfg.budget)?.parts;
    for p in &parts {
        let home = tame.iter().position(|t| matches!(is_isomorphic(p, t, &cfg), Ok(r) if r.witness().is_some()));
        println!(
            "summand dim {} indecomposable {} matches tame3.M{}",
            p.dim(),
            is_indecomposable(p, cfg.budget)?.verdict(),
            home.map_or("?".to_string(), |i| (i + 1).to_string())
        );
    }
    Ok(())
}
