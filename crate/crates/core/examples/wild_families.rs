//! Two-parameter and three-parameter families over a wild algebra, grouped by
//! T-isomorphism.

use modequiv::equiv::t_classes;
use modequiv::families::{c2, c3};
use modequiv::linalg::Fp;
use modequiv::modrep::SearchConfig;

fn main() -> modequiv::Result<()> {
    let cfg = SearchConfig::default();
    let f = Fp::new(3)?;
    let units: Vec<u64> = f.units().collect();

    let mut labels = Vec::new();
    let mut ms = Vec::new();
    for &a in &units {
        for &b in &units {
            labels.push(format!("C2({a},{b})"));
            ms.push(c2(f, a, b)?);
        }
    }
    let p = t_classes(&ms, &cfg)?;
    println!("C2 over F_3: {} modules, {} T-classes", ms.len(), p.class_count());
    for class in &p.classes {
        let names: Vec<&str> = class.iter().map(|&i| labels[i].as_str()).collect();
        println!("  {}", names.join(" "));
    }

    let mut ms = Vec::new();
    for &a in &units {
        for &b in &units {
            ms.push(c3(f, a, b, 1)?);
        }
    }
    let p = t_classes(&ms, &cfg)?;
    println!("C3(a, b, 1) over F_3: class sizes {:?}", p.class_sizes());
    Ok(())
}
