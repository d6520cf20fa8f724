use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraKind};
use crate::error::{Error, Result};
use crate::linalg::{CoefficientVectors, Mat};

/// Which proper subalgebras a restriction-based relation quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Maximal,
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Scope::All),
            "maximal" => Ok(Scope::Maximal),
            other => Err(Error::Schema(format!("unknown scope `{other}`"))),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::All => "all",
            Scope::Maximal => "maximal",
        })
    }
}

/// Unital subalgebra `k*1 + W` of a radical-square-zero algebra, with `W`
/// spanned by `w_basis` (coefficient vectors over the parent generators).
#[derive(Clone, Debug)]
pub struct Subalgebra {
    parent: Arc<Algebra>,
    w_basis: Vec<Vec<u64>>,
    as_algebra: Arc<Algebra>,
}

impl Subalgebra {
    /// Subalgebra spanned by the given radical vectors, in the given basis.
    pub fn with_basis(parent: Arc<Algebra>, w_basis: Vec<Vec<u64>>) -> Result<Self> {
        let AlgebraKind::Rsz { generators } = *parent.kind() else {
            return Err(Error::UnsupportedAlgebraKind(parent.kind_name()));
        };
        let field = parent.field();
        if w_basis.iter().any(|v| v.len() != generators) {
            return Err(Error::DimensionMismatch(format!(
                "subspace vectors must have {generators} coordinates"
            )));
        }
        let w_basis: Vec<Vec<u64>> = w_basis
            .into_iter()
            .map(|v| v.into_iter().map(|c| c % field.modulus()).collect())
            .collect();
        if !w_basis.is_empty() {
            let m = Mat::from_fn(field, w_basis.len(), generators, |i, j| w_basis[i][j]);
            if m.rank() != w_basis.len() {
                return Err(Error::ParameterOutOfDomain("subspace basis is linearly dependent".into()));
            }
        }
        let as_algebra = Arc::new(Algebra::rsz(field, w_basis.len()));
        Ok(Subalgebra {
            parent,
            w_basis,
            as_algebra,
        })
    }

    pub fn parent(&self) -> &Arc<Algebra> {
        &self.parent
    }

    pub fn w_basis(&self) -> &[Vec<u64>] {
        &self.w_basis
    }

    pub fn as_algebra(&self) -> &Arc<Algebra> {
        &self.as_algebra
    }

    pub fn dim_w(&self) -> usize {
        self.w_basis.len()
    }

    pub fn is_proper(&self) -> bool {
        self.w_basis.len() < self.parent.generator_count()
    }

    /// Human-readable span, e.g. `span(X + 2Z, Y)`.
    pub fn describe(&self) -> String {
        let names = self.parent.generators();
        let vecs: Vec<String> = self
            .w_basis
            .iter()
            .map(|v| {
                let parts: Vec<String> = v
                    .iter()
                    .zip(names)
                    .filter(|(c, _)| **c != 0)
                    .map(|(c, n)| if *c == 1 { n.clone() } else { format!("{c}{n}") })
                    .collect();
                parts.join(" + ")
            })
            .collect();
        if vecs.is_empty() {
            "k*1".to_string()
        } else {
            format!("span({})", vecs.join(", "))
        }
    }
}

/// Proper unital subalgebras of a radical-square-zero algebra.
///
/// Every subspace `W` of the radical is closed under multiplication, so the
/// proper subalgebras are exactly `k*1 + W` for `W` a proper subspace. Each
/// `W` is given by its reduced row echelon basis. Order: by dimension, then
/// pivot columns, then free entries, all lexicographic.
pub fn enumerate_proper_subalgebras(parent: &Arc<Algebra>, scope: Scope) -> Result<Vec<Subalgebra>> {
    let AlgebraKind::Rsz { generators: g } = *parent.kind() else {
        return Err(Error::UnsupportedAlgebraKind(parent.kind_name()));
    };
    let dims: Vec<usize> = match scope {
        Scope::All => (0..g).collect(),
        Scope::Maximal if g == 0 => Vec::new(),
        Scope::Maximal => vec![g - 1],
    };
    let mut out = Vec::new();
    for d in dims {
        for basis in echelon_subspaces(parent.field(), g, d) {
            out.push(Subalgebra::with_basis(Arc::clone(parent), basis)?);
        }
    }
    Ok(out)
}

fn echelon_subspaces(field: crate::linalg::Fp, n: usize, d: usize) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for pivots in combinations(n, d) {
        // free positions: (row, col) with col > pivot[row] and col not a pivot
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| {
                let pivots = &pivots;
                ((pivots[r] + 1)..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        for fill in CoefficientVectors::new(field, free.len()) {
            let mut rows = vec![vec![0u64; n]; d];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&fill) {
                rows[r][c] = v;
            }
            out.push(rows);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Fp;

    fn rsz(p: u64, g: usize) -> Arc<Algebra> {
        Arc::new(Algebra::rsz(Fp::new(p).unwrap(), g))
    }

    /// Gaussian binomial coefficient, counted independently of the echelon
    /// enumeration.
    fn gaussian_binomial(n: u32, k: u32, q: u64) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= q.pow(n - i) - 1;
            den *= q.pow(i + 1) - 1;
        }
        num / den
    }

    #[test]
    fn counts_match_gaussian_binomials() {
        assert_eq!(enumerate_proper_subalgebras(&rsz(2, 3), Scope::Maximal).unwrap().len(), 7);
        assert_eq!(enumerate_proper_subalgebras(&rsz(2, 3), Scope::All).unwrap().len(), 15);
        // k*1 plus the q + 1 lines of F_3^2
        assert_eq!(enumerate_proper_subalgebras(&rsz(3, 2), Scope::All).unwrap().len(), 5);
        for (p, g) in [(2u64, 2usize), (3, 3), (5, 2), (5, 3), (2, 4)] {
            let all: u64 = (0..g as u32).map(|k| gaussian_binomial(g as u32, k, p)).sum();
            let got = enumerate_proper_subalgebras(&rsz(p, g), Scope::All).unwrap().len();
            assert_eq!(got as u64, all, "p={p} g={g}");
        }
    }

    #[test]
    fn maximal_are_the_codimension_one_members_of_all() {
        let a = rsz(3, 3);
        let all = enumerate_proper_subalgebras(&a, Scope::All).unwrap();
        let max = enumerate_proper_subalgebras(&a, Scope::Maximal).unwrap();
        let from_all: Vec<_> = all
            .iter()
            .filter(|s| s.dim_w() == 2)
            .map(|s| s.w_basis().to_vec())
            .collect();
        let maxes: Vec<_> = max.iter().map(|s| s.w_basis().to_vec()).collect();
        assert_eq!(from_all, maxes);
        assert!(all.iter().all(Subalgebra::is_proper));
    }

    #[test]
    fn first_subalgebra_is_the_scalars() {
        let all = enumerate_proper_subalgebras(&rsz(2, 2), Scope::All).unwrap();
        assert_eq!(all[0].dim_w(), 0);
        assert_eq!(all[0].describe(), "k*1");
        assert_eq!(all[1].describe(), "span(X)");
    }

    #[test]
    fn non_rsz_is_unsupported() {
        let a = Arc::new(Algebra::free_univariate(Fp::new(2).unwrap()));
        assert!(matches!(
            enumerate_proper_subalgebras(&a, Scope::All),
            Err(Error::UnsupportedAlgebraKind("free_univariate"))
        ));
    }

    #[test]
    fn dependent_basis_rejected() {
        let a = rsz(2, 2);
        assert!(Subalgebra::with_basis(a, vec![vec![1, 1], vec![1, 1]]).is_err());
    }
}
