use super::{same_algebra, Module};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Basis of `Hom_A(source, target)`, as `target.dim x source.dim` matrices.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Mat>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `sum coeffs[i] * basis[i]`.
    pub fn combination(&self, coeffs: &[u64]) -> Mat {
        let field = self.basis.first().map(Mat::field);
        let mut acc = match field {
            Some(f) => Mat::zeros(f, self.target_dim, self.source_dim),
            None => panic!("combination of an empty basis"),
        };
        for (c, b) in coeffs.iter().zip(&self.basis) {
            acc.add_scaled(b, *c);
        }
        acc
    }
}

/// Intertwiners `phi` with `B_g phi = phi A_g` for every generator, where
/// `A` acts on `m1` and `B` on `m2`. Solved as the kernel of one linear
/// system in the `dim(m2) * dim(m1)` entries of `phi`.
pub fn hom_space(m1: &Module, m2: &Module) -> Result<HomBasis> {
    if !same_algebra(m1.algebra(), m2.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let field = m1.field();
    let (n1, n2) = (m1.dim(), m2.dim());
    let unknowns = n1 * n2;
    let gens = m1.action().len();
    let mut sys = Mat::zeros(field, gens * unknowns, unknowns);
    // phi[r][c] is unknown r * n1 + c; equation (g, i, j) is entry (i, j) of
    // B_g phi - phi A_g.
    for (g, (a, b)) in m1.action().iter().zip(m2.action()).enumerate() {
        let base = g * unknowns;
        for i in 0..n2 {
            for j in 0..n1 {
                let row = base + i * n1 + j;
                for r in 0..n2 {
                    let v = b.get(i, r);
                    if v != 0 {
                        let col = r * n1 + j;
                        sys.set(row, col, field.add(sys.get(row, col), v));
                    }
                }
                for c in 0..n1 {
                    let v = a.get(c, j);
                    if v != 0 {
                        let col = i * n1 + c;
                        sys.set(row, col, field.sub(sys.get(row, col), v));
                    }
                }
            }
        }
    }
    let basis = sys
        .kernel_basis()
        .into_iter()
        .map(|v| Mat::from_vec(field, n2, n1, v))
        .collect();
    Ok(HomBasis {
        source_dim: n1,
        target_dim: n2,
        basis,
    })
}

pub fn end_space(m: &Module) -> HomBasis {
    hom_space(m, m).expect("same module")
}
