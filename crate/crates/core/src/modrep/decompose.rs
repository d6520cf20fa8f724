use std::sync::Arc;

use super::iso::first_in_span;
use super::{direct_sum_all, end_space, Module, Verdict};
use crate::error::{Error, Result};
use crate::linalg::{space_size, Fp, Mat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Indecomposability {
    /// End(M) was enumerated and holds no idempotent besides 0 and 1.
    Indecomposable { end_dim: usize },
    /// A nontrivial idempotent endomorphism.
    Decomposable { idempotent: Mat },
    Undecided { end_dim: usize },
}

impl Indecomposability {
    /// `Yes` when indecomposable.
    pub fn verdict(&self) -> Verdict {
        match self {
            Indecomposability::Indecomposable { .. } => Verdict::Yes,
            Indecomposability::Decomposable { .. } => Verdict::No,
            Indecomposability::Undecided { .. } => Verdict::Undecided,
        }
    }

    pub fn is_indecomposable(&self) -> bool {
        matches!(self, Indecomposability::Indecomposable { .. })
    }

    pub fn is_decomposable(&self) -> bool {
        matches!(self, Indecomposability::Decomposable { .. })
    }
}

/// Decides indecomposability.
///
/// First a Fitting pass: for every End basis element `e` and every scalar
/// `c`, the kernel and image of `(e - c)^dim` split the module whenever both
/// are nonzero. Failing that, End(M) is enumerated for idempotents when it has
/// at most `budget` elements.
pub fn is_indecomposable(m: &Module, budget: u64) -> Result<Indecomposability> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::DimensionMismatch("the zero module has no indecomposability verdict".into()));
    }
    let field = m.field();
    let end = end_space(m);
    let id = Mat::identity(field, n);
    for e in &end.basis {
        for c in field.elements() {
            let shifted = e - &id.scale(c);
            if let Some(idem) = fitting_idempotent(&shifted)? {
                return Ok(Indecomposability::Decomposable { idempotent: idem });
            }
        }
    }
    if space_size(field, end.dim()) > budget as u128 {
        return Ok(Indecomposability::Undecided { end_dim: end.dim() });
    }
    let found = first_in_span(&end, field, |e| !e.is_zero() && !e.is_identity() && &(e * e) == e);
    Ok(match found {
        Some(idempotent) => Indecomposability::Decomposable { idempotent },
        None => Indecomposability::Indecomposable { end_dim: end.dim() },
    })
}

/// Projection onto `im(a^n)` along `ker(a^n)`, when both are nonzero.
fn fitting_idempotent(a: &Mat) -> Result<Option<Mat>> {
    let n = a.rows();
    let power = a.pow(n as u64)?;
    let image = power.column_space();
    if image.is_empty() || image.len() == n {
        return Ok(None);
    }
    let kernel = power.kernel_basis();
    Ok(Some(projection(a.field(), n, &image, &kernel)))
}

fn projection(field: Fp, n: usize, onto: &[Vec<u64>], along: &[Vec<u64>]) -> Mat {
    let cols: Vec<Vec<u64>> = onto.iter().chain(along).cloned().collect();
    let p = Mat::from_columns(field, n, &cols);
    let inv = p.inverse().expect("square").expect("complementary subspaces");
    let mut d = Mat::zeros(field, n, n);
    for i in 0..onto.len() {
        d.set(i, i, 1);
    }
    &(&p * &d) * &inv
}

/// Indecomposable summands together with the basis that exhibits them.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub parts: Vec<Module>,
    /// Columns are the new basis; `basis^-1 * A * basis` is the block-diagonal
    /// action of the direct sum of `parts`.
    pub basis: Mat,
}

pub fn decompose(m: &Module, budget: u64) -> Result<Vec<Module>> {
    Ok(decompose_with_basis(m, budget)?.parts)
}

/// Splits along idempotents until every part is certified indecomposable.
/// The result is checked: conjugating by `basis` gives the direct sum of
/// the parts exactly.
pub fn decompose_with_basis(m: &Module, budget: u64) -> Result<Decomposition> {
    let (parts, basis) = split(m, budget)?;
    let sum = direct_sum_all(m.algebra(), &parts)?;
    let inv = basis.inverse()?.expect("change of basis is invertible");
    for (a, b) in m.action().iter().zip(sum.action()) {
        if &(&(&inv * a) * &basis) != b {
            return Err(Error::DimensionMismatch("decomposition failed to reassemble".into()));
        }
    }
    Ok(Decomposition { parts, basis })
}

fn split(m: &Module, budget: u64) -> Result<(Vec<Module>, Mat)> {
    let field = m.field();
    let n = m.dim();
    if n == 0 {
        return Ok((Vec::new(), Mat::identity(field, 0)));
    }
    match is_indecomposable(m, budget)? {
        Indecomposability::Indecomposable { .. } => Ok((vec![m.clone()], Mat::identity(field, n))),
        Indecomposability::Undecided { end_dim } => Err(Error::Undecided(format!(
            "indecomposability of a {n}-dimensional summand (End of dimension {end_dim}) exceeds the budget"
        ))),
        Indecomposability::Decomposable { idempotent } => {
            let image = idempotent.column_space();
            let kernel = idempotent.kernel_basis();
            let r = image.len();
            let cols: Vec<Vec<u64>> = image.into_iter().chain(kernel).collect();
            let p = Mat::from_columns(field, n, &cols);
            let inv = p.inverse()?.expect("image and kernel of an idempotent are complementary");
            let conj: Vec<Mat> = m.action().iter().map(|a| &(&inv * a) * &p).collect();
            let top = Module::new_unchecked(
                Arc::clone(m.algebra()),
                r,
                conj.iter().map(|a| a.block(0, 0, r, r)).collect(),
            );
            let bottom = Module::new_unchecked(
                Arc::clone(m.algebra()),
                n - r,
                conj.iter().map(|a| a.block(r, r, n - r, n - r)).collect(),
            );
            let (mut parts, b1) = split(&top, budget)?;
            let (parts2, b2) = split(&bottom, budget)?;
            parts.extend(parts2);
            let inner = Mat::block_diag(field, &[&b1, &b2]);
            Ok((parts, &p * &inner))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    const BUDGET: u64 = 1 << 20;

    #[test]
    fn trivial_two_splits_with_an_idempotent() {
        let f = Fp::new(2).unwrap();
        let a = Arc::new(Algebra::rsz(f, 2));
        let t = Module::trivial(a, 2).unwrap();
        let Indecomposability::Decomposable { idempotent } = is_indecomposable(&t, BUDGET).unwrap() else {
            panic!("trivial(2) splits");
        };
        assert_eq!(&idempotent * &idempotent, idempotent);
        assert_eq!(idempotent.rank(), 1);
    }

    #[test]
    fn trivial_three_has_three_parts() {
        let f = Fp::new(3).unwrap();
        let a = Arc::new(Algebra::rsz(f, 3));
        let parts = decompose(&Module::trivial(a, 3).unwrap(), BUDGET).unwrap();
        assert_eq!(parts.iter().map(Module::dim).collect::<Vec<_>>(), vec![1, 1, 1]);
    }

    #[test]
    fn jordan_blocks_are_indecomposable() {
        for p in [2, 3] {
            let f = Fp::new(p).unwrap();
            let a = Arc::new(Algebra::free_univariate(f));
            for n in 1..=4 {
                for lambda in f.elements() {
                    let j = Mat::from_fn(f, n, n, |i, k| if i == k { lambda } else { u64::from(i == k + 1) });
                    let m = Module::new(Arc::clone(&a), n, vec![j]).unwrap();
                    assert!(is_indecomposable(&m, BUDGET).unwrap().is_indecomposable(), "p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn semisimple_matrix_splits_by_eigenvalue() {
        let f = Fp::new(5).unwrap();
        let a = Arc::new(Algebra::free_univariate(f));
        let x = Mat::from_rows(f, &[vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, 3]]).unwrap();
        let m = Module::new(a, 3, vec![x]).unwrap();
        let d = decompose_with_basis(&m, BUDGET).unwrap();
        assert_eq!(d.parts.len(), 3);
        assert_eq!(d.basis.rows(), 3);
    }

    #[test]
    fn zero_module_has_no_verdict() {
        let f = Fp::new(2).unwrap();
        let a = Arc::new(Algebra::rsz(f, 1));
        assert!(is_indecomposable(&Module::trivial(Arc::clone(&a), 0).unwrap(), BUDGET).is_err());
        assert!(decompose(&Module::trivial(a, 0).unwrap(), BUDGET).unwrap().is_empty());
    }
}
