//! Modules as validated tuples of action matrices, and the decision
//! procedures built on their Hom-spaces.

mod decompose;
mod hom;
pub(crate) mod iso;

pub use decompose::{decompose, decompose_with_basis, is_indecomposable, Decomposition, Indecomposability};
pub use hom::{end_space, hom_space, HomBasis};
pub use iso::{is_isomorphic, IsoResult, NonIsoCertificate, SearchConfig};

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Automorphism, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Mat};

/// Three-valued outcome of a decision procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::Undecided => "UNDECIDED",
        })
    }
}

/// A finite-dimensional left module: one `dim x dim` matrix per generator,
/// satisfying every relation of the algebra.
#[derive(Clone)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Vec<Mat>,
}

impl PartialEq for Module {
    fn eq(&self, other: &Module) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.dim == other.dim && self.action == other.action
    }
}

impl Eq for Module {}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Module {
    /// Validates the action against the algebra relations.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Result<Module> {
        let field = algebra.field();
        if action.len() != algebra.generator_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for {} generators",
                action.len(),
                algebra.generator_count()
            )));
        }
        for m in &action {
            if m.field() != field {
                return Err(Error::ModulusMismatch {
                    left: field.modulus(),
                    right: m.field().modulus(),
                });
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "action matrix is {}x{}, module dimension is {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for rel in algebra.relations() {
            if !rel.evaluate(&action, dim)?.is_zero() {
                return Err(Error::RelationViolated {
                    relation: rel.display_with(algebra.generators()).to_string(),
                });
            }
        }
        Ok(Module { algebra, dim, action })
    }

    /// Module of dimension `d` on which every generator acts as zero.
    pub fn trivial(algebra: Arc<Algebra>, d: usize) -> Result<Module> {
        let field = algebra.field();
        let action = vec![Mat::zeros(field, d, d); algebra.generator_count()];
        Module::new(algebra, d, action)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Module {
        Module { algebra, dim, action }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Fp {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Mat] {
        &self.action
    }

    /// The module `P A P^-1` for each action matrix `A`.
    pub fn conjugate(&self, p: &Mat) -> Result<Module> {
        let inv = p
            .inverse()?
            .ok_or_else(|| Error::ParameterOutOfDomain("conjugating matrix is singular".into()))?;
        if p.rows() != self.dim {
            return Err(Error::DimensionMismatch("conjugating matrix size".into()));
        }
        let action = self.action.iter().map(|a| &(p * a) * &inv).collect();
        Ok(Module::new_unchecked(Arc::clone(&self.algebra), self.dim, action))
    }

    /// Whether `phi : self -> other` satisfies `other_g * phi = phi * self_g`
    /// for every generator.
    pub fn intertwines(&self, other: &Module, phi: &Mat) -> bool {
        phi.rows() == other.dim
            && phi.cols() == self.dim
            && self
                .action
                .iter()
                .zip(&other.action)
                .all(|(a, b)| &(b * phi) == &(phi * a))
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module")
            .field("algebra", &self.algebra.kind_name())
            .field("dim", &self.dim)
            .field("action", &self.action)
            .finish()
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "module of dimension {} over {}", self.dim, self.algebra)?;
        for (name, m) in self.algebra.generators().iter().zip(&self.action) {
            writeln!(f, "{name}:")?;
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Block-diagonal sum.
pub fn direct_sum(m1: &Module, m2: &Module) -> Result<Module> {
    if !same_algebra(&m1.algebra, &m2.algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let field = m1.field();
    let action = m1
        .action
        .iter()
        .zip(&m2.action)
        .map(|(a, b)| Mat::block_diag(field, &[a, b]))
        .collect();
    Ok(Module::new_unchecked(Arc::clone(&m1.algebra), m1.dim + m2.dim, action))
}

pub fn direct_sum_all(algebra: &Arc<Algebra>, parts: &[Module]) -> Result<Module> {
    parts
        .iter()
        .try_fold(Module::trivial(Arc::clone(algebra), 0)?, |acc, m| direct_sum(&acc, m))
}

/// Dimension of the socle: the common kernel of the radical generators.
pub fn socle_dim(m: &Module) -> Result<usize> {
    let gens = m
        .algebra
        .radical_generators()
        .ok_or(Error::UnsupportedAlgebraKind(m.algebra.kind_name()))?;
    if gens.is_empty() {
        return Ok(m.dim);
    }
    let parts: Vec<&Mat> = gens.iter().map(|&g| &m.action[g]).collect();
    let stacked = Mat::vstack(m.field(), &parts)?;
    Ok(stacked.kernel_basis().len())
}

/// Restriction to a subalgebra `k*1 + W`: the `i`-th subalgebra generator acts
/// as the `w_basis[i]` combination of the parent actions.
pub fn restrict(m: &Module, s: &Subalgebra) -> Result<Module> {
    if !same_algebra(&m.algebra, s.parent()) {
        return Err(Error::AlgebraMismatch);
    }
    let field = m.field();
    let action = s
        .w_basis()
        .iter()
        .map(|w| {
            let mut acc = Mat::zeros(field, m.dim, m.dim);
            for (c, a) in w.iter().zip(&m.action) {
                acc.add_scaled(a, *c);
            }
            acc
        })
        .collect();
    Ok(Module::new_unchecked(Arc::clone(s.as_algebra()), m.dim, action))
}

/// `f(M)`: generator `g` acts as `M`'s action of `f(g)`.
pub fn twist(m: &Module, f: &Automorphism) -> Result<Module> {
    f.check(&m.algebra)?;
    let twisted = twist_unchecked(m, f);
    Module::new(Arc::clone(&twisted.algebra), twisted.dim, twisted.action)
}

/// Twist by an automorphism already known to belong to the algebra.
pub(crate) fn twist_unchecked(m: &Module, f: &Automorphism) -> Module {
    let field = m.field();
    let action = match f {
        Automorphism::Linear(a) => (0..a.rows())
            .map(|i| {
                let mut acc = Mat::zeros(field, m.dim, m.dim);
                for (j, src) in m.action.iter().enumerate() {
                    acc.add_scaled(src, a.get(i, j));
                }
                acc
            })
            .collect(),
        _ => f
            .image_polys(&m.algebra)
            .iter()
            .map(|poly| poly.evaluate(&m.action, m.dim).expect("validated module"))
            .collect(),
    };
    Module::new_unchecked(Arc::clone(&m.algebra), m.dim, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{enumerate_proper_subalgebras, Scope};

    fn k(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    fn rsz(p: u64, g: usize) -> Arc<Algebra> {
        Arc::new(Algebra::rsz(k(p), g))
    }

    #[test]
    fn validates_eq5_triple() {
        let a = rsz(2, 3);
        let f = a.field();
        let m = Module::new(
            a,
            4,
            vec![
                Mat::unit(f, 4, 3, 1),
                Mat::unit(f, 4, 3, 2),
                Mat::from_units(f, 4, &[(3, 1, 1), (4, 2, 1)]),
            ],
        );
        assert!(m.is_ok());
    }

    #[test]
    fn idempotent_action_violates_square_zero() {
        let a = rsz(2, 2);
        let f = a.field();
        let err = Module::new(a, 2, vec![Mat::unit(f, 2, 1, 1), Mat::zeros(f, 2, 2)]).unwrap_err();
        assert_eq!(err, Error::RelationViolated { relation: "X^2".into() });
    }

    #[test]
    fn semidihedral_eq14_pair_is_valid() {
        let a = Arc::new(Algebra::semidihedral(k(2)).unwrap());
        let f = a.field();
        assert!(Module::new(Arc::clone(&a), 2, vec![Mat::zeros(f, 2, 2), Mat::unit(f, 2, 2, 1)]).is_ok());
        assert!(Module::new(a, 2, vec![Mat::unit(f, 2, 2, 1), Mat::zeros(f, 2, 2)]).is_ok());
    }

    #[test]
    fn wrong_generator_count_or_size() {
        let a = rsz(2, 2);
        let f = a.field();
        assert!(matches!(
            Module::new(Arc::clone(&a), 2, vec![Mat::zeros(f, 2, 2)]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            Module::new(a, 2, vec![Mat::zeros(f, 3, 2), Mat::zeros(f, 2, 2)]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn trivial_modules_and_sums() {
        let a = rsz(2, 2);
        let t1 = Module::trivial(Arc::clone(&a), 1).unwrap();
        let t2 = Module::trivial(Arc::clone(&a), 2).unwrap();
        assert_eq!(direct_sum(&t1, &t1).unwrap(), t2);
        let t0 = Module::trivial(Arc::clone(&a), 0).unwrap();
        assert_eq!(direct_sum(&t2, &t0).unwrap(), t2);
        let t3 = Module::trivial(a, 3).unwrap();
        let s = direct_sum(&t2, &t3).unwrap();
        assert_eq!(s.dim(), 5);
        let other = Module::trivial(rsz(2, 3), 1).unwrap();
        assert_eq!(direct_sum(&t1, &other), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn socle_dims_of_tame_pair() {
        let a = rsz(2, 2);
        let f = a.field();
        let m1 = Module::new(Arc::clone(&a), 3, vec![Mat::unit(f, 3, 3, 1), Mat::unit(f, 3, 3, 2)]).unwrap();
        let m2 = Module::new(Arc::clone(&a), 3, vec![Mat::unit(f, 3, 2, 1), Mat::unit(f, 3, 3, 1)]).unwrap();
        assert_eq!(socle_dim(&m1).unwrap(), 1);
        assert_eq!(socle_dim(&m2).unwrap(), 2);
        assert_eq!(socle_dim(&Module::trivial(a, 4).unwrap()).unwrap(), 4);
        let free = Arc::new(Algebra::free_univariate(f));
        assert!(socle_dim(&Module::trivial(free, 1).unwrap()).is_err());
    }

    #[test]
    fn restriction_by_coefficient_selection() {
        let a = rsz(2, 3);
        let f = a.field();
        let m = Module::new(
            Arc::clone(&a),
            6,
            vec![
                Mat::from_units(f, 6, &[(4, 1, 1), (5, 2, 1), (6, 3, 1)]),
                Mat::unit(f, 6, 4, 2),
                Mat::unit(f, 6, 5, 3),
            ],
        )
        .unwrap();
        let s = Subalgebra::with_basis(Arc::clone(&a), vec![vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let r = restrict(&m, &s).unwrap();
        assert_eq!(r.action(), &[Mat::unit(f, 6, 4, 2), Mat::unit(f, 6, 5, 3)]);
        let zero = &enumerate_proper_subalgebras(&a, Scope::All).unwrap()[0];
        let r0 = restrict(&m, zero).unwrap();
        assert!(r0.action().is_empty());
        assert_eq!(r0.dim(), 6);
    }

    #[test]
    fn twist_by_identity_is_noop() {
        let a = rsz(3, 2);
        let f = a.field();
        let m = Module::new(Arc::clone(&a), 2, vec![Mat::unit(f, 2, 2, 1), Mat::zeros(f, 2, 2)]).unwrap();
        assert_eq!(twist(&m, &Automorphism::identity(&a)).unwrap(), m);
    }

    #[test]
    fn twist_rejects_foreign_automorphism() {
        let a = rsz(3, 2);
        let m = Module::trivial(Arc::clone(&a), 2).unwrap();
        assert_eq!(
            twist(&m, &Automorphism::Affine { scale: 1, shift: 0 }),
            Err(Error::AlgebraMismatch)
        );
    }
}
