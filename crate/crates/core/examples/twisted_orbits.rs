//! Twisting by algebra automorphisms: Jordan blocks over k[X] and the
//! classes they fall into.

use modequiv::equiv::{t_classes, t_orbit};
use modequiv::families::jordan;
use modequiv::linalg::Fp;
use modequiv::modrep::SearchConfig;

fn main() -> modequiv::Result<()> {
    let cfg = SearchConfig::default();
    let f = Fp::new(3)?;
    let blocks = f.elements().map(|l| jordan(f, l, 2)).collect::<modequiv::Result<Vec<_>>>()?;

    let classes = t_classes(&blocks, &cfg)?;
    println!("J(l, 2) for l in F_3 fall into {} T-class(es): {:?}", classes.class_count(), classes.classes);

    let orbit = t_orbit(&blocks[0], &blocks, &cfg)?;
    let c = &orbit.closure;
    println!(
        "{} automorphisms give {} twist classes, closed under the list: {}",
        c.automorphisms,
        c.representatives.len(),
        c.is_closed()
    );
    Ok(())
}
