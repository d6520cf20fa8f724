//! Parametric module families and the fixed example modules.
//!
//! Matrix conventions: `e_ij` is 1-based, actions are left actions, and
//! Jordan blocks carry their ones on the subdiagonal.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Fp, Mat};
use crate::modrep::Module;

/// A family parameter in `F_p ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lambda {
    Finite(u64),
    Infinity,
}

impl Lambda {
    /// `F_p` followed by `∞`.
    pub fn projective_line(field: Fp) -> Vec<Lambda> {
        field.elements().map(Lambda::Finite).chain([Lambda::Infinity]).collect()
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Finite(v) => write!(f, "{v}"),
            Lambda::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Lambda {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inf" | "∞" | "infinity" => Ok(Lambda::Infinity),
            _ => s
                .parse()
                .map(Lambda::Finite)
                .map_err(|_| Error::ParameterOutOfDomain(format!("bad parameter `{s}`"))),
        }
    }
}

/// `lambda` on the diagonal, ones on the subdiagonal.
pub fn jordan_block(field: Fp, lambda: u64, n: usize) -> Mat {
    Mat::from_fn(field, n, n, |i, j| {
        if i == j {
            lambda
        } else {
            u64::from(i == j + 1)
        }
    })
}

/// `J(λ, n)` over `k[X]`.
pub fn jordan(field: Fp, lambda: u64, n: usize) -> Result<Module> {
    if n == 0 {
        return Err(Error::ParameterOutOfDomain("n >= 1".into()));
    }
    Module::new(
        Arc::new(Algebra::free_univariate(field)),
        n,
        vec![jordan_block(field, lambda, n)],
    )
}

/// `K(λ, n)` over `k[X,Y]/(X,Y)^2`: both actions live in the lower-left
/// `n x n` block; finite `λ` puts `(E_n, J(λ,n))` there and `∞` puts
/// `(J(0,n), E_n)`.
pub fn k_module(field: Fp, lambda: Lambda, n: usize) -> Result<Module> {
    if n == 0 {
        return Err(Error::ParameterOutOfDomain("n >= 1".into()));
    }
    let (bx, by) = match lambda {
        Lambda::Finite(l) => (Mat::identity(field, n), jordan_block(field, l % field.modulus(), n)),
        Lambda::Infinity => (jordan_block(field, 0, n), Mat::identity(field, n)),
    };
    let lower_left = |b: &Mat| {
        let mut m = Mat::zeros(field, 2 * n, 2 * n);
        m.set_block(n, 0, b);
        m
    };
    Module::new(
        Arc::new(Algebra::rsz(field, 2)),
        2 * n,
        vec![lower_left(&bx), lower_left(&by)],
    )
}

/// `B(w, λ, m)` from a one-copy band `(bx, by)` of size `n`: `m` diagonal
/// copies of `bx` for `X`, and for `Y` copies of `by` on the diagonal glued
/// by `e_nn` on the block subdiagonal. The result is validated, so a glue
/// incompatible with the relations yields `RelationViolated`.
pub fn b_blowup(algebra: &Arc<Algebra>, bx: &Mat, by: &Mat, m: usize) -> Result<Module> {
    let field = algebra.field();
    let n = bx.rows();
    Module::new(Arc::clone(algebra), n, vec![bx.clone(), by.clone()])?;
    if m == 0 {
        return Err(Error::ParameterOutOfDomain("m >= 1".into()));
    }
    let mut x = Mat::zeros(field, n * m, n * m);
    let mut y = Mat::zeros(field, n * m, n * m);
    let glue = Mat::unit(field, n, n, n);
    for i in 0..m {
        x.set_block(i * n, i * n, bx);
        y.set_block(i * n, i * n, by);
        if i + 1 < m {
            y.set_block((i + 1) * n, i * n, &glue);
        }
    }
    Module::new(Arc::clone(algebra), n * m, vec![x, y])
}

/// Band matrices `(e21 + e43, e23 + λ e41)` for the dihedral-type algebra
/// with `k = 1`, `ε1 = ε2 = 1`.
pub fn band4_matrices(field: Fp, lambda: u64) -> (Mat, Mat) {
    (
        Mat::from_units(field, 4, &[(2, 1, 1), (4, 3, 1)]),
        Mat::from_units(field, 4, &[(2, 3, 1), (4, 1, lambda as i64)]),
    )
}

pub fn band4_algebra(field: Fp) -> Arc<Algebra> {
    Arc::new(Algebra::dihedral(field, 1, true, true).expect("k = 1"))
}

/// `B(w, λ, m)` for the band4 fixture.
pub fn band4(field: Fp, lambda: u64, m: usize) -> Result<Module> {
    if lambda % field.modulus() == 0 {
        return Err(Error::ParameterOutOfDomain("band parameter must be nonzero".into()));
    }
    let (bx, by) = band4_matrices(field, lambda);
    b_blowup(&band4_algebra(field), &bx, &by, m)
}

fn nonzero(field: Fp, name: &str, v: u64) -> Result<u64> {
    let v = v % field.modulus();
    if v == 0 {
        Err(Error::ParameterOutOfDomain(format!("{name} must be nonzero")))
    } else {
        Ok(v)
    }
}

/// `C(α, β)`: dimension 2, `(x, y, z) = (e21, α e21, β e21)`.
pub fn c2(field: Fp, alpha: u64, beta: u64) -> Result<Module> {
    let alpha = nonzero(field, "alpha", alpha)?;
    let beta = nonzero(field, "beta", beta)?;
    let e21 = Mat::unit(field, 2, 2, 1);
    Module::new(
        Arc::new(Algebra::rsz(field, 3)),
        2,
        vec![e21.clone(), e21.scale(alpha), e21.scale(beta)],
    )
}

/// `C(α, β, γ)`: dimension 5, `x = e41 + e32`, `y = e51 + e42`,
/// `z = α e32 + β e41 + γ (e51 + e42)`.
pub fn c3(field: Fp, alpha: u64, beta: u64, gamma: u64) -> Result<Module> {
    let alpha = nonzero(field, "alpha", alpha)? as i64;
    let beta = nonzero(field, "beta", beta)? as i64;
    let gamma = nonzero(field, "gamma", gamma)? as i64;
    Module::new(
        Arc::new(Algebra::rsz(field, 3)),
        5,
        vec![
            Mat::from_units(field, 5, &[(4, 1, 1), (3, 2, 1)]),
            Mat::from_units(field, 5, &[(5, 1, 1), (4, 2, 1)]),
            Mat::from_units(field, 5, &[(3, 2, alpha), (4, 1, beta), (5, 1, gamma), (4, 2, gamma)]),
        ],
    )
}

/// Two-dimensional modules over the semidihedral algebra: `(e21, λ e21)` for
/// finite `λ`, `(0, e21)` at `∞`.
pub fn semidihedral_line(algebra: &Arc<Algebra>, lambda: Lambda) -> Result<Module> {
    let field = algebra.field();
    let e21 = Mat::unit(field, 2, 2, 1);
    let action = match lambda {
        Lambda::Finite(l) => vec![e21.clone(), e21.scale(l)],
        Lambda::Infinity => vec![Mat::zeros(field, 2, 2), e21],
    };
    Module::new(Arc::clone(algebra), 2, action)
}

/// A family member addressed by tag and parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Jordan { lambda: u64, n: usize },
    K { lambda: Lambda, n: usize },
    Band { lambda: u64, m: usize },
    C2 { alpha: u64, beta: u64 },
    C3 { alpha: u64, beta: u64, gamma: u64 },
    Fixture { name: String, index: usize },
}

impl FamilySpec {
    pub fn build(&self, field: Fp) -> Result<Module> {
        match self {
            FamilySpec::Jordan { lambda, n } => jordan(field, *lambda, *n),
            FamilySpec::K { lambda, n } => k_module(field, *lambda, *n),
            FamilySpec::Band { lambda, m } => band4(field, *lambda, *m),
            FamilySpec::C2 { alpha, beta } => c2(field, *alpha, *beta),
            FamilySpec::C3 { alpha, beta, gamma } => c3(field, *alpha, *beta, *gamma),
            FamilySpec::Fixture { name, index } => {
                let (_, modules) = paper_fixture(name, field)?;
                modules
                    .into_iter()
                    .nth(*index)
                    .ok_or_else(|| Error::UnknownFixture(format!("{name}.M{}", index + 1)))
            }
        }
    }
}

pub const FIXTURE_NAMES: [&str; 7] = ["tame3", "wild6", "rdec4", "rdist4", "rnott6", "semidih2", "band4"];

/// Named example modules with their algebra.
///
/// * `tame3`: dimension-3 modules over `k[X,Y]/(X,Y)^2` with socles of
///   dimension 1 and 2.
/// * `wild6`: `(x, y, z)` and `(x, z, y)` with `x = e41+e52+e63`, `y = e42`,
///   `z = e53`.
/// * `rdec4`: `(e31, e32, e31+e42)`.
/// * `rdist4`: `(0, e41, e31+e42)` and `(e41, e31+e42, e42)`.
/// * `rnott6`: `(e51+e42, e61+e53, e52+e43+e63)` and the same with
///   `z = e41+e62+e63`.
/// * `semidih2`: `(e21, 0)` and `(0, e21)` over the semidihedral algebra.
/// * `band4`: the dihedral band for every nonzero `λ`, in increasing order.
pub fn paper_fixture(name: &str, field: Fp) -> Result<(Arc<Algebra>, Vec<Module>)> {
    let u = |n: usize, terms: &[(usize, usize)]| {
        Mat::from_units(field, n, &terms.iter().map(|&(i, j)| (i, j, 1)).collect::<Vec<_>>())
    };
    let zero = |n: usize| Mat::zeros(field, n, n);
    let (algebra, actions): (Arc<Algebra>, Vec<(usize, Vec<Mat>)>) = match name {
        "tame3" => (
            Arc::new(Algebra::rsz(field, 2)),
            vec![
                (3, vec![u(3, &[(3, 1)]), u(3, &[(3, 2)])]),
                (3, vec![u(3, &[(2, 1)]), u(3, &[(3, 1)])]),
            ],
        ),
        "wild6" => {
            let x = u(6, &[(4, 1), (5, 2), (6, 3)]);
            let y = u(6, &[(4, 2)]);
            let z = u(6, &[(5, 3)]);
            (
                Arc::new(Algebra::rsz(field, 3)),
                vec![(6, vec![x.clone(), y.clone(), z.clone()]), (6, vec![x, z, y])],
            )
        }
        "rdec4" => (
            Arc::new(Algebra::rsz(field, 3)),
            vec![(4, vec![u(4, &[(3, 1)]), u(4, &[(3, 2)]), u(4, &[(3, 1), (4, 2)])])],
        ),
        "rdist4" => (
            Arc::new(Algebra::rsz(field, 3)),
            vec![
                (4, vec![zero(4), u(4, &[(4, 1)]), u(4, &[(3, 1), (4, 2)])]),
                (4, vec![u(4, &[(4, 1)]), u(4, &[(3, 1), (4, 2)]), u(4, &[(4, 2)])]),
            ],
        ),
        "rnott6" => {
            let x = u(6, &[(5, 1), (4, 2)]);
            let y = u(6, &[(6, 1), (5, 3)]);
            (
                Arc::new(Algebra::rsz(field, 3)),
                vec![
                    (6, vec![x.clone(), y.clone(), u(6, &[(5, 2), (4, 3), (6, 3)])]),
                    (6, vec![x, y, u(6, &[(4, 1), (6, 2), (6, 3)])]),
                ],
            )
        }
        "semidih2" => (
            Arc::new(Algebra::semidihedral(field)?),
            vec![(2, vec![u(2, &[(2, 1)]), zero(2)]), (2, vec![zero(2), u(2, &[(2, 1)])])],
        ),
        "band4" => {
            let algebra = band4_algebra(field);
            let modules = field
                .units()
                .map(|l| {
                    let (bx, by) = band4_matrices(field, l);
                    (4, vec![bx, by])
                })
                .collect();
            (algebra, modules)
        }
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    let modules = actions
        .into_iter()
        .map(|(dim, action)| Module::new(Arc::clone(&algebra), dim, action))
        .collect::<Result<Vec<_>>>()?;
    Ok((algebra, modules))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{is_indecomposable, socle_dim};

    fn k(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    #[test]
    fn jordan_convention() {
        assert!(jordan(k(2), 0, 1).unwrap().action()[0].is_zero());
        assert_eq!(
            jordan(k(3), 1, 2).unwrap().action()[0],
            Mat::from_rows(k(3), &[vec![1, 0], vec![1, 1]]).unwrap()
        );
    }

    #[test]
    fn k_module_small_cases() {
        let f = k(2);
        let m = k_module(f, Lambda::Finite(0), 1).unwrap();
        assert_eq!(m.action(), &[Mat::unit(f, 2, 2, 1), Mat::zeros(f, 2, 2)]);
        let inf = k_module(f, Lambda::Infinity, 1).unwrap();
        assert_eq!(inf.action(), &[Mat::zeros(f, 2, 2), Mat::unit(f, 2, 2, 1)]);
        let big = k_module(k(3), Lambda::Finite(1), 2).unwrap();
        assert_eq!(big.dim(), 4);
    }

    #[test]
    fn every_family_member_validates() {
        for p in [2, 3, 5] {
            let f = k(p);
            for n in 1..=3 {
                for l in f.elements() {
                    jordan(f, l, n).unwrap();
                }
                for l in Lambda::projective_line(f) {
                    k_module(f, l, n).unwrap();
                }
            }
            for a in f.units() {
                for b in f.units() {
                    c2(f, a, b).unwrap();
                    for c in f.units() {
                        c3(f, a, b, c).unwrap();
                    }
                }
                band4(f, a, 1).unwrap();
            }
            let sd = Arc::new(Algebra::semidihedral(f).unwrap());
            for l in Lambda::projective_line(f) {
                semidihedral_line(&sd, l).unwrap();
            }
            for name in FIXTURE_NAMES {
                paper_fixture(name, f).unwrap();
            }
        }
    }

    #[test]
    fn parameter_domains() {
        assert!(matches!(c2(k(3), 0, 1), Err(Error::ParameterOutOfDomain(_))));
        assert!(matches!(c3(k(3), 1, 1, 0), Err(Error::ParameterOutOfDomain(_))));
        assert!(matches!(band4(k(5), 0, 1), Err(Error::ParameterOutOfDomain(_))));
        assert!(matches!(paper_fixture("nope", k(2)), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn band_blowup() {
        let f = k(5);
        let one = band4(f, 2, 1).unwrap();
        let (bx, by) = band4_matrices(f, 2);
        assert_eq!(one.action(), &[bx, by]);
        // Y^2 picks up λ e41 in the glued block
        assert_eq!(
            band4(f, 2, 2).unwrap_err(),
            Error::RelationViolated { relation: "Y^2".into() }
        );
    }

    #[test]
    fn tame3_socles_and_indecomposability() {
        for p in [2, 3, 5] {
            let (_, ms) = paper_fixture("tame3", k(p)).unwrap();
            assert_eq!(socle_dim(&ms[0]).unwrap(), 1);
            assert_eq!(socle_dim(&ms[1]).unwrap(), 2);
            for m in &ms {
                assert_eq!(m.dim(), 3);
                assert!(is_indecomposable(m, 1 << 20).unwrap().is_indecomposable());
            }
        }
    }

    #[test]
    fn family_spec_builds_fixture_members() {
        let spec = FamilySpec::Fixture {
            name: "wild6".into(),
            index: 1,
        };
        let m = spec.build(k(2)).unwrap();
        assert_eq!(m.action()[1], Mat::unit(k(2), 6, 5, 3));
        assert!("inf".parse::<Lambda>().unwrap() == Lambda::Infinity);
    }
}
