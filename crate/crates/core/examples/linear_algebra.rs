//! Exact matrix arithmetic over F_p: reduced row echelon form, kernels,
//! inverses and powers.

use modequiv::linalg::{Fp, Mat};

fn main() -> modequiv::Result<()> {
    let f = Fp::new(5)?;
    let a = Mat::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 2]])?;
    println!("A over {f}:\n{a}");

    let (r, pivots) = a.rref();
    println!("rref:\n{r}pivots {pivots:?}, rank {}", a.rank());

    match a.inverse()? {
        Some(inv) => {
            println!("inverse:\n{inv}");
            assert!((&a * &inv).is_identity());
        }
        None => println!("A is singular"),
    }

    // rank + nullity = columns
    let b = Mat::from_rows(f, &[vec![1, 2, 3, 4], vec![2, 4, 1, 3]])?;
    let kernel = b.kernel_basis();
    println!("B has rank {} and kernel {:?}", b.rank(), kernel);
    for v in &kernel {
        assert!(b.apply(v).iter().all(|&x| x == 0));
    }

    // a nilpotent Jordan block
    let n = Mat::from_units(f, 3, &[(2, 1, 1), (3, 2, 1)]);
    println!("N^2:\n{}N^3 is zero: {}", n.pow(2)?, n.pow(3)?.is_zero());
    Ok(())
}
