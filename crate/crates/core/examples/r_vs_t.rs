//! The three relations side by side on the projective-line family K(l, n).

use modequiv::algebra::Scope;
use modequiv::equiv::{r_isomorphic, rt_isomorphic, t_isomorphic};
use modequiv::families::{k_module, Lambda};
use modequiv::linalg::Fp;
use modequiv::modrep::{is_isomorphic, SearchConfig};

fn main() -> modequiv::Result<()> {
    let cfg = SearchConfig::default();
    let f = Fp::new(2)?;
    let line = Lambda::projective_line(f);
    let ms = line.iter().map(|&l| k_module(f, l, 1)).collect::<modequiv::Result<Vec<_>>>()?;

    println!("{:>4} {:>4}  iso  R    T    RT", "l", "l'");
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            let (a, b) = (&ms[i], &ms[j]);
            println!(
                "{:>4} {:>4}  {:<4} {:<4} {:<4} {}",
                line[i].to_string(),
                line[j].to_string(),
                is_isomorphic(a, b, &cfg)?.verdict().to_string(),
                r_isomorphic(a, b, Scope::All, &cfg)?.verdict.to_string(),
                t_isomorphic(a, b, &cfg)?.verdict.to_string(),
                rt_isomorphic(a, b, &cfg)?.verdict,
            );
        }
    }
    Ok(())
}
