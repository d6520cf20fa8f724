//! Presented algebras: radical-square-zero, free univariate, dihedral-type and
//! explicit multiplication tables.

mod automorphism;
mod subalgebra;
mod table;

pub use automorphism::{enumerate_automorphisms, automorphism_space_size, Automorphism};
pub use subalgebra::{enumerate_proper_subalgebras, Scope, Subalgebra};
pub use table::TableAlgebra;

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Fp, Mat};
use crate::ncpoly::{NcPoly, RewriteSystem};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// `k<X_1..X_g> / (X_1..X_g)^2`.
    Rsz { generators: usize },
    /// `k[X]`, no relations.
    FreeUnivariate,
    /// `k<X,Y> / (X^2, Y^2, (XY)^k X^eps1, (YX)^k Y^eps2)`.
    Dihedral { k: usize, eps1: bool, eps2: bool },
    Table(TableAlgebra),
}

/// An associative unital algebra over `F_p` given by generators and relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    field: Fp,
    kind: AlgebraKind,
    generators: Vec<String>,
    relations: Vec<NcPoly>,
}

fn default_names(g: usize) -> Vec<String> {
    if g <= 3 {
        ["X", "Y", "Z"][..g].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=g).map(|i| format!("X{i}")).collect()
    }
}

impl Algebra {
    /// Radical-square-zero algebra on `g` generators; `g = 0` gives `k` itself.
    pub fn rsz(field: Fp, g: usize) -> Self {
        let mut relations = Vec::with_capacity(g * g);
        for i in 0..g {
            for j in 0..g {
                relations.push(NcPoly::monomial(field, 1, vec![i, j]));
            }
        }
        Algebra {
            field,
            kind: AlgebraKind::Rsz { generators: g },
            generators: default_names(g),
            relations,
        }
    }

    pub fn free_univariate(field: Fp) -> Self {
        Algebra {
            field,
            kind: AlgebraKind::FreeUnivariate,
            generators: vec!["X".into()],
            relations: Vec::new(),
        }
    }

    pub fn dihedral(field: Fp, k: usize, eps1: bool, eps2: bool) -> Result<Self> {
        if k == 0 {
            return Err(Error::ParameterOutOfDomain("dihedral exponent k must be >= 1".into()));
        }
        let x = NcPoly::generator(field, 0);
        let y = NcPoly::generator(field, 1);
        let xy = x.mul(&y).pow(k);
        let yx = y.mul(&x).pow(k);
        let relations = vec![
            x.pow(2),
            y.pow(2),
            if eps1 { xy.mul(&x) } else { xy },
            if eps2 { yx.mul(&y) } else { yx },
        ];
        Ok(Algebra {
            field,
            kind: AlgebraKind::Dihedral { k, eps1, eps2 },
            generators: default_names(2),
            relations,
        })
    }

    /// `k<x,y> / (x^2, y^3, y^2 - xyx)`, materialized as a 7-dimensional
    /// table through rewriting completion and certified by
    /// [`Algebra::validate`].
    pub fn semidihedral(field: Fp) -> Result<Self> {
        let x = NcPoly::generator(field, 0);
        let y = NcPoly::generator(field, 1);
        let relations = vec![x.pow(2), y.pow(3), y.pow(2).sub(&x.mul(&y).mul(&x))];

        // weight(y) > 2 weight(x) orients y^2 -> xyx
        let mut rs = RewriteSystem::new(vec![1, 3]);
        rs.add_equation(Some(vec![0, 0]), None);
        rs.add_equation(Some(vec![1, 1, 1]), None);
        rs.add_equation(Some(vec![1, 1]), Some(vec![0, 1, 0]));
        rs.complete(64)?;
        let names = vec!["x".to_string(), "y".to_string()];
        let table = TableAlgebra::from_rewriting(field, &rs, &names, 16)?;
        let algebra = Algebra {
            field,
            kind: AlgebraKind::Table(table),
            generators: names,
            relations,
        };
        algebra.validate()?;
        Ok(algebra)
    }

    /// Table algebra from explicit data. Validated before returning.
    pub fn table(
        field: Fp,
        generators: Vec<String>,
        table: TableAlgebra,
        relations: Vec<NcPoly>,
    ) -> Result<Self> {
        let algebra = Algebra {
            field,
            kind: AlgebraKind::Table(table),
            generators,
            relations,
        };
        algebra.validate()?;
        Ok(algebra)
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            AlgebraKind::Rsz { .. } => "rsz",
            AlgebraKind::FreeUnivariate => "free_univariate",
            AlgebraKind::Dihedral { .. } => "dihedral",
            AlgebraKind::Table(_) => "table",
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn table_data(&self) -> Option<&TableAlgebra> {
        match &self.kind {
            AlgebraKind::Table(t) => Some(t),
            _ => None,
        }
    }

    /// Dimension of the algebra, when finite.
    pub fn dim(&self) -> Option<usize> {
        match &self.kind {
            AlgebraKind::Rsz { generators } => Some(generators + 1),
            AlgebraKind::Table(t) => Some(t.dim()),
            _ => None,
        }
    }

    /// Generators whose actions span the radical action, or `None` when the
    /// algebra has no canonical radical (the free univariate algebra).
    pub fn radical_generators(&self) -> Option<Vec<usize>> {
        match &self.kind {
            AlgebraKind::Rsz { generators } => Some((0..*generators).collect()),
            AlgebraKind::Dihedral { .. } => Some(vec![0, 1]),
            AlgebraKind::Table(t) => Some(
                (0..self.generators.len())
                    .filter(|&g| t.generator_basis_index(g).is_some_and(|b| t.radical().contains(&b)))
                    .collect(),
            ),
            AlgebraKind::FreeUnivariate => None,
        }
    }

    /// The `X <-> Y` swap preserves the relation set.
    pub fn is_swap_symmetric(&self) -> bool {
        matches!(self.kind, AlgebraKind::Dihedral { eps1, eps2, .. } if eps1 == eps2)
    }

    /// Checks a table algebra: two-sided unit, associativity on all basis
    /// triples, defining words, and vanishing of every listed relation.
    /// Presentation kinds are valid by construction.
    pub fn validate(&self) -> Result<()> {
        match &self.kind {
            AlgebraKind::Table(t) => t.validate(self.field, self.generators.len(), &self.relations),
            _ => Ok(()),
        }
    }

    /// Radical-square-zero algebra materialized as a multiplication table.
    pub fn rsz_table(&self) -> Result<Algebra> {
        let AlgebraKind::Rsz { generators } = self.kind else {
            return Err(Error::UnsupportedAlgebraKind(self.kind_name()));
        };
        Algebra::table(
            self.field,
            self.generators.clone(),
            TableAlgebra::rsz(self.field, generators),
            self.relations.clone(),
        )
    }

    /// Evaluates a polynomial on action matrices of size `dim`.
    pub fn evaluate(&self, poly: &NcPoly, action: &[Mat], dim: usize) -> Result<Mat> {
        poly.evaluate(action, dim)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self
            .relations
            .iter()
            .map(|r| r.display_with(&self.generators).to_string())
            .collect();
        write!(
            f,
            "{}<{}>/({}) over {}",
            self.kind_name(),
            self.generators.join(","),
            rels.join(", "),
            self.field
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    fn rel_strings(a: &Algebra) -> Vec<String> {
        a.relations()
            .iter()
            .map(|r| r.display_with(a.generators()).to_string())
            .collect()
    }

    #[test]
    fn rsz_relations() {
        let a = Algebra::rsz(k(2), 2);
        assert_eq!(rel_strings(&a), ["X^2", "XY", "YX", "Y^2"]);
        let w = Algebra::rsz(k(2), 3);
        assert_eq!(w.relations().len(), 9);
        assert_eq!(w.dim(), Some(4));
        assert_eq!(Algebra::rsz(k(3), 1).dim(), Some(2));
    }

    #[test]
    fn dihedral_relations() {
        let a = Algebra::dihedral(k(5), 1, true, true).unwrap();
        assert_eq!(rel_strings(&a), ["X^2", "Y^2", "XYX", "YXY"]);
        let b = Algebra::dihedral(k(2), 2, false, true).unwrap();
        assert_eq!(rel_strings(&b), ["X^2", "Y^2", "XYXY", "YXYXY"]);
        assert!(!b.is_swap_symmetric());
        assert!(Algebra::dihedral(k(2), 0, true, true).is_err());
    }

    #[test]
    fn semidihedral_table_shape() {
        let a = Algebra::semidihedral(k(2)).unwrap();
        let t = a.table_data().unwrap();
        assert_eq!(t.dim(), 7);
        assert_eq!(t.labels(), ["1", "x", "y", "xy", "yx", "xyx", "yxy"]);
        assert_eq!(t.unit(), 0);
        assert_eq!(t.radical(), &[1, 2, 3, 4, 5, 6]);
        // y * y = xyx
        assert_eq!(t.product(2, 2), t.basis_vector(5));
        // (xy)(xy) = 0
        assert!(t.product(3, 3).iter().all(|&c| c == 0));
        assert_eq!(a.radical_generators(), Some(vec![0, 1]));
    }

    #[test]
    fn semidihedral_valid_over_several_fields() {
        for p in [2, 3, 5, 7] {
            Algebra::semidihedral(k(p)).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn rsz_table_is_associative() {
        let a = Algebra::rsz(k(3), 3).rsz_table().unwrap();
        a.validate().unwrap();
        assert_eq!(a.dim(), Some(4));
    }

    #[test]
    fn broken_table_is_rejected() {
        let a = Algebra::semidihedral(k(2)).unwrap();
        let mut t = a.table_data().unwrap().clone();
        // x * y := 1
        t.set_product(1, 2, t.basis_vector(0));
        let err = Algebra::table(k(2), a.generators().to_vec(), t, a.relations().to_vec());
        assert!(matches!(err, Err(Error::TableInconsistent(_))));
    }

    #[test]
    fn free_univariate_has_no_radical() {
        let a = Algebra::free_univariate(k(5));
        assert!(a.relations().is_empty());
        assert_eq!(a.radical_generators(), None);
    }
}
