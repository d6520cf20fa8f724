//! JSON file schema for algebras and modules.
//!
//! ```json
//! {"algebra": {"field": 2, "kind": "rsz", "generators": 3},
//!  "dim": 4,
//!  "action": [[[0,0,0,0],[0,0,0,0],[1,0,0,0],[0,0,0,0]], ...]}
//! ```
//!
//! Matrix entries may be any integers; they are reduced mod p.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraKind, TableAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Fp, Mat};
use crate::modrep::Module;
use crate::ncpoly::NcPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: u64,
    #[serde(flatten)]
    pub kind: KindFile,
}

/// A relation as a list of `[coefficient, word]` terms.
pub type RelationFile = Vec<(i64, Vec<usize>)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KindFile {
    Rsz {
        generators: usize,
    },
    FreeUnivariate,
    Dihedral {
        k: usize,
        eps1: bool,
        eps2: bool,
    },
    /// The built-in semidihedral table.
    Semidihedral,
    Table {
        generators: Vec<String>,
        labels: Vec<String>,
        words: Vec<Vec<usize>>,
        unit: usize,
        /// `products[i][j]` is the coordinate vector of `b_i b_j`.
        products: Vec<Vec<Vec<i64>>>,
        radical: Vec<usize>,
        relations: Vec<RelationFile>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub algebra: AlgebraFile,
    pub dim: usize,
    pub action: Vec<Vec<Vec<i64>>>,
}

impl AlgebraFile {
    pub fn build(&self) -> Result<Algebra> {
        let field = Fp::new(self.field)?;
        match &self.kind {
            KindFile::Rsz { generators } => Ok(Algebra::rsz(field, *generators)),
            KindFile::FreeUnivariate => Ok(Algebra::free_univariate(field)),
            KindFile::Dihedral { k, eps1, eps2 } => Algebra::dihedral(field, *k, *eps1, *eps2),
            KindFile::Semidihedral => Algebra::semidihedral(field),
            KindFile::Table {
                generators,
                labels,
                words,
                unit,
                products,
                radical,
                relations,
            } => {
                let products = products
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|v| v.iter().map(|&c| field.reduce(c)).collect())
                            .collect()
                    })
                    .collect();
                let table = TableAlgebra::new(labels.clone(), words.clone(), *unit, products, radical.clone())?;
                let relations = relations
                    .iter()
                    .map(|terms| {
                        NcPoly::from_terms(field, terms.iter().map(|(c, w)| (field.reduce(*c), w.clone())))
                    })
                    .collect();
                Algebra::table(field, generators.clone(), table, relations)
            }
        }
    }

    pub fn from_algebra(a: &Algebra) -> AlgebraFile {
        let kind = match a.kind() {
            AlgebraKind::Rsz { generators } => KindFile::Rsz {
                generators: *generators,
            },
            AlgebraKind::FreeUnivariate => KindFile::FreeUnivariate,
            AlgebraKind::Dihedral { k, eps1, eps2 } => KindFile::Dihedral {
                k: *k,
                eps1: *eps1,
                eps2: *eps2,
            },
            AlgebraKind::Table(t) => KindFile::Table {
                generators: a.generators().to_vec(),
                labels: t.labels().to_vec(),
                words: t.words().to_vec(),
                unit: t.unit(),
                products: t
                    .product_array()
                    .into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|v| v.into_iter().map(|c| c as i64).collect())
                            .collect()
                    })
                    .collect(),
                radical: t.radical().to_vec(),
                relations: a
                    .relations()
                    .iter()
                    .map(|r| r.terms().iter().map(|(c, w)| (*c as i64, w.clone())).collect())
                    .collect(),
            },
        };
        AlgebraFile {
            field: a.field().modulus(),
            kind,
        }
    }
}

fn schema_err(e: serde_json::Error) -> Error {
    Error::Schema(e.to_string())
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    serde_json::from_str::<AlgebraFile>(text).map_err(schema_err)?.build()
}

impl ModuleFile {
    /// Builds the module over `algebra`, which must match the embedded one.
    pub fn build_over(&self, algebra: &Arc<Algebra>) -> Result<Module> {
        let field = algebra.field();
        let n = self.dim;
        if self.action.len() != algebra.generator_count() {
            return Err(Error::Schema(format!(
                "expected {} action matrices, got {}",
                algebra.generator_count(),
                self.action.len()
            )));
        }
        let mut mats = Vec::with_capacity(self.action.len());
        for (g, rows) in self.action.iter().enumerate() {
            let cols = rows.first().map_or(0, Vec::len);
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::Schema(format!(
                    "action matrix {} ({}) must be {n}x{n}, got {}x{cols}",
                    g,
                    algebra.generators()[g],
                    rows.len()
                )));
            }
            mats.push(Mat::from_rows(field, rows)?);
        }
        Module::new(Arc::clone(algebra), n, mats)
    }

    pub fn from_module(m: &Module) -> ModuleFile {
        ModuleFile {
            algebra: AlgebraFile::from_algebra(m.algebra()),
            dim: m.dim(),
            action: m
                .action()
                .iter()
                .map(|a| {
                    a.to_rows()
                        .into_iter()
                        .map(|r| r.into_iter().map(|c| c as i64).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

pub fn parse_module(text: &str) -> Result<Module> {
    let file: ModuleFile = serde_json::from_str(text).map_err(schema_err)?;
    let algebra = Arc::new(file.algebra.build()?);
    file.build_over(&algebra)
}

pub fn module_to_json(m: &Module) -> String {
    serde_json::to_string_pretty(&ModuleFile::from_module(m)).expect("plain data")
}

pub fn read_module(path: &Path) -> Result<Module> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))?;
    parse_module(&text).map_err(|e| match e {
        Error::Schema(msg) => Error::Schema(format!("{}: {msg}", path.display())),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::paper_fixture;
    use crate::modrep::same_algebra;

    #[test]
    fn round_trip_every_fixture() {
        for name in crate::families::FIXTURE_NAMES {
            let (_, ms) = paper_fixture(name, Fp::new(3).unwrap()).unwrap();
            for m in ms {
                let back = parse_module(&module_to_json(&m)).unwrap();
                assert!(same_algebra(back.algebra(), m.algebra()), "{name}");
                assert_eq!(back, m, "{name}");
            }
        }
    }

    #[test]
    fn entries_are_reduced() {
        let m = parse_module(
            r#"{"algebra": {"field": 3, "kind": "free_univariate"}, "dim": 2, "action": [[[4, 0], [-1, 1]]]}"#,
        )
        .unwrap();
        assert_eq!(m.action()[0].to_rows(), vec![vec![1, 0], vec![2, 1]]);
    }

    #[test]
    fn wrong_shape_is_a_schema_error() {
        let e = parse_module(
            r#"{"algebra": {"field": 2, "kind": "rsz", "generators": 1}, "dim": 3, "action": [[[0,0],[0,0],[1,0]]]}"#,
        )
        .unwrap_err();
        assert!(matches!(e, Error::Schema(ref m) if m.contains("3x3") && m.contains("3x2")), "{e}");
    }

    #[test]
    fn relation_violation_names_the_relation() {
        let e = parse_module(
            r#"{"algebra": {"field": 2, "kind": "rsz", "generators": 2}, "dim": 2, "action": [[[1,0],[0,0]], [[0,0],[0,0]]]}"#,
        )
        .unwrap_err();
        assert_eq!(e, Error::RelationViolated { relation: "X^2".into() });
    }

    #[test]
    fn unknown_kind_is_rejected() {
        assert!(matches!(parse_algebra(r#"{"field": 2, "kind": "lie"}"#), Err(Error::Schema(_))));
        assert!(matches!(parse_algebra(r#"{"field": 4, "kind": "free_univariate"}"#), Err(Error::InvalidModulus(4))));
    }
}
