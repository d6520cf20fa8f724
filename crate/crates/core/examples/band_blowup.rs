//! Band modules over a dihedral algebra and their blow-ups along a Jordan
//! block.

use modequiv::families::{b_blowup, band4, band4_algebra, band4_matrices};
use modequiv::linalg::Fp;
use modequiv::modrep::{is_indecomposable, is_isomorphic, SearchConfig};

fn main() -> modequiv::Result<()> {
    let cfg = SearchConfig::default();
    let f = Fp::new(3)?;
    let bands = f.units().map(|l| band4(f, l, 1)).collect::<modequiv::Result<Vec<_>>>()?;
    for (i, b) in bands.iter().enumerate() {
        println!("B({}) dim {} indecomposable {}", i + 1, b.dim(), is_indecomposable(b, cfg.budget)?.verdict());
    }
    // when λ = c² the word is a square, so v1 + c v3 generates a summand
    println!("B(1) ~ B(2): {}", is_isomorphic(&bands[0], &bands[1], &cfg)?.verdict());

    // a blow-up must still satisfy the relations
    let (bx, by) = band4_matrices(f, 1);
    match b_blowup(&band4_algebra(f), &bx, &by, 2) {
        Ok(m) => println!("blow-up of dim {}", m.dim()),
        Err(e) => println!("blow-up rejected: {e}"),
    }
    Ok(())
}
