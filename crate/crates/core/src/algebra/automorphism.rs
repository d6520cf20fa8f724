use std::fmt::Write as _;

use super::{Algebra, AlgebraKind, TableAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{space_size, CoefficientVectors, Fp, Mat};
use crate::ncpoly::NcPoly;

/// An algebra automorphism, described by where it sends each generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Automorphism {
    /// Radical-square-zero: `X_i -> sum_j m[i][j] X_j` for invertible `m`.
    Linear(Mat),
    /// Free univariate: `X -> scale * X + shift`, `scale != 0`.
    Affine { scale: u64, shift: u64 },
    /// Dihedral-type: `X -> scale_x * X, Y -> scale_y * Y`, or with `swap`
    /// `X -> scale_x * Y, Y -> scale_y * X`.
    Monomial { scale_x: u64, scale_y: u64, swap: bool },
    /// Table algebra: generator images as coefficient vectors over the basis,
    /// and the induced basis map (column `b` is the image of basis element `b`).
    Table { images: Vec<Vec<u64>>, basis_map: Mat },
}

impl Automorphism {
    pub fn identity(a: &Algebra) -> Automorphism {
        let field = a.field();
        match a.kind() {
            AlgebraKind::Rsz { generators } => Automorphism::Linear(Mat::identity(field, *generators)),
            AlgebraKind::FreeUnivariate => Automorphism::Affine { scale: 1, shift: 0 },
            AlgebraKind::Dihedral { .. } => Automorphism::Monomial {
                scale_x: 1,
                scale_y: 1,
                swap: false,
            },
            AlgebraKind::Table(t) => Automorphism::Table {
                images: t
                    .generator_vectors(a.generator_count())
                    .expect("validated table has generator basis elements"),
                basis_map: Mat::identity(field, t.dim()),
            },
        }
    }

    /// `f_a : X -> X, Y -> aY` on a dihedral-type algebra.
    pub fn scale_y(a: u64) -> Automorphism {
        Automorphism::Monomial {
            scale_x: 1,
            scale_y: a,
            swap: false,
        }
    }

    pub fn swap() -> Automorphism {
        Automorphism::Monomial {
            scale_x: 1,
            scale_y: 1,
            swap: true,
        }
    }

    /// Checks that the payload fits the algebra and induces a bijection.
    pub fn check(&self, a: &Algebra) -> Result<()> {
        let field = a.field();
        let ok = match (self, a.kind()) {
            (Automorphism::Linear(m), AlgebraKind::Rsz { generators }) => {
                m.rows() == *generators && m.field() == field && m.is_invertible()?.0
            }
            (Automorphism::Affine { scale, .. }, AlgebraKind::FreeUnivariate) => scale % field.modulus() != 0,
            (Automorphism::Monomial { scale_x, scale_y, swap }, AlgebraKind::Dihedral { .. }) => {
                scale_x % field.modulus() != 0
                    && scale_y % field.modulus() != 0
                    && (!swap || a.is_swap_symmetric())
            }
            (Automorphism::Table { images, basis_map }, AlgebraKind::Table(t)) => {
                images.len() == a.generator_count()
                    && basis_map.rows() == t.dim()
                    && is_table_automorphism(field, t, a.relations(), images)
            }
            _ => return Err(Error::AlgebraMismatch),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ParameterOutOfDomain("map is not an automorphism".into()))
        }
    }

    /// Generator images as polynomials in the generators.
    pub fn image_polys(&self, a: &Algebra) -> Vec<NcPoly> {
        let field = a.field();
        match (self, a.kind()) {
            (Automorphism::Linear(m), _) => (0..m.rows())
                .map(|i| NcPoly::from_terms(field, (0..m.cols()).map(|j| (m.get(i, j), vec![j]))))
                .collect(),
            (Automorphism::Affine { scale, shift }, _) => {
                vec![NcPoly::from_terms(field, [(*scale, vec![0]), (*shift, vec![])])]
            }
            (Automorphism::Monomial { .. }, _) => {
                let m = self.monomial_matrix(field);
                Automorphism::Linear(m).image_polys(a)
            }
            (Automorphism::Table { images, .. }, AlgebraKind::Table(t)) => images
                .iter()
                .map(|v| {
                    NcPoly::from_terms(
                        field,
                        v.iter().zip(t.words()).map(|(&c, w)| (c, w.clone())),
                    )
                })
                .collect(),
            (Automorphism::Table { .. }, _) => panic!("table automorphism on a presentation algebra"),
        }
    }

    fn monomial_matrix(&self, field: Fp) -> Mat {
        let Automorphism::Monomial { scale_x, scale_y, swap } = *self else {
            unreachable!()
        };
        if swap {
            Mat::from_vec(field, 2, 2, vec![0, scale_x, scale_y, 0])
        } else {
            Mat::from_vec(field, 2, 2, vec![scale_x, 0, 0, scale_y])
        }
    }

    /// The composite `self ∘ inner`: apply `inner` first, then `self`.
    ///
    /// With twisting defined by `twist(m, f)(g) = m(f(g))`, this satisfies
    /// `twist(twist(m, f), g) = twist(m, f.compose(g))`.
    pub fn compose(&self, inner: &Automorphism, a: &Algebra) -> Result<Automorphism> {
        let field = a.field();
        Ok(match (self, inner) {
            (Automorphism::Linear(outer), Automorphism::Linear(inner)) => Automorphism::Linear(inner.mat_mul(outer)?),
            (Automorphism::Affine { scale: a1, shift: b1 }, Automorphism::Affine { scale: c, shift: d }) => {
                Automorphism::Affine {
                    scale: field.mul(*c, *a1),
                    shift: field.add(field.mul(*c, *b1), *d),
                }
            }
            (Automorphism::Monomial { .. }, Automorphism::Monomial { .. }) => {
                let m = inner.monomial_matrix(field).mat_mul(&self.monomial_matrix(field))?;
                if m.get(0, 1) == 0 {
                    Automorphism::Monomial {
                        scale_x: m.get(0, 0),
                        scale_y: m.get(1, 1),
                        swap: false,
                    }
                } else {
                    Automorphism::Monomial {
                        scale_x: m.get(0, 1),
                        scale_y: m.get(1, 0),
                        swap: true,
                    }
                }
            }
            (
                Automorphism::Table { basis_map: outer, .. },
                Automorphism::Table { images, basis_map },
            ) => Automorphism::Table {
                images: images.iter().map(|v| outer.apply(v)).collect(),
                basis_map: outer.mat_mul(basis_map)?,
            },
            _ => return Err(Error::AlgebraMismatch),
        })
    }

    pub fn is_identity(&self, a: &Algebra) -> bool {
        *self == Automorphism::identity(a)
    }

    /// Short description such as `X -> X + 2Y, Y -> Y`.
    pub fn describe(&self, a: &Algebra) -> String {
        let mut out = String::new();
        for (i, img) in self.image_polys(a).iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{} -> {}", a.generators()[i], img.display_with(a.generators()));
        }
        out
    }
}

/// Size of the candidate space searched by [`enumerate_automorphisms`].
pub fn automorphism_space_size(a: &Algebra) -> u128 {
    let field = a.field();
    match a.kind() {
        AlgebraKind::Rsz { generators } => space_size(field, generators * generators),
        AlgebraKind::FreeUnivariate => space_size(field, 2),
        AlgebraKind::Dihedral { .. } => {
            let units = (field.modulus() - 1) as u128;
            units * units * if a.is_swap_symmetric() { 2 } else { 1 }
        }
        AlgebraKind::Table(t) => space_size(field, t.radical().len() * a.generator_count()),
    }
}

/// All automorphisms of the algebra, in a deterministic order.
///
/// Radical-square-zero algebras give `GL(g, q)`. The free univariate algebra
/// gives the affine maps. Dihedral-type algebras give the monomial maps
/// (independent scalings of `X` and `Y`, plus the swap when the relations are
/// swap-symmetric). Table algebras are searched over generator images in the
/// radical span, keeping those that satisfy every relation and induce an
/// invertible multiplicative basis map.
pub fn enumerate_automorphisms(a: &Algebra, budget: u64) -> Result<Vec<Automorphism>> {
    let space = automorphism_space_size(a);
    if space > budget as u128 {
        return Err(Error::BudgetExceeded { space, budget });
    }
    let field = a.field();
    Ok(match a.kind() {
        AlgebraKind::Rsz { generators: g } => CoefficientVectors::new(field, g * g)
            .map(|v| Mat::from_vec(field, *g, *g, v))
            .filter(|m| m.rank() == *g)
            .map(Automorphism::Linear)
            .collect(),
        AlgebraKind::FreeUnivariate => field
            .units()
            .flat_map(|scale| field.elements().map(move |shift| Automorphism::Affine { scale, shift }))
            .collect(),
        AlgebraKind::Dihedral { .. } => {
            let swaps: &[bool] = if a.is_swap_symmetric() { &[false, true] } else { &[false] };
            let mut out = Vec::new();
            for &swap in swaps {
                for scale_x in field.units() {
                    for scale_y in field.units() {
                        out.push(Automorphism::Monomial { scale_x, scale_y, swap });
                    }
                }
            }
            out
        }
        AlgebraKind::Table(t) => table_automorphisms(field, t, a.relations(), a.generator_count()),
    })
}

fn table_automorphisms(field: Fp, t: &TableAlgebra, relations: &[NcPoly], generators: usize) -> Vec<Automorphism> {
    let radical = t.radical();
    let candidates: Vec<Vec<u64>> = CoefficientVectors::new(field, radical.len())
        .map(|coeffs| {
            let mut v = vec![0u64; t.dim()];
            for (&r, c) in radical.iter().zip(coeffs) {
                v[r] = c;
            }
            v
        })
        .collect();
    // relations checked as soon as their highest generator is assigned
    let mut by_last: Vec<Vec<&NcPoly>> = vec![Vec::new(); generators];
    for rel in relations {
        by_last[rel.max_generator().unwrap_or(0)].push(rel);
    }
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(generators);
    search(field, t, &candidates, &by_last, &mut images, generators, &mut out);
    out
}

fn search(
    field: Fp,
    t: &TableAlgebra,
    candidates: &[Vec<u64>],
    by_last: &[Vec<&NcPoly>],
    images: &mut Vec<Vec<u64>>,
    generators: usize,
    out: &mut Vec<Automorphism>,
) {
    let g = images.len();
    if g == generators {
        if let Some(basis_map) = induced_basis_map(field, t, images) {
            out.push(Automorphism::Table {
                images: images.clone(),
                basis_map,
            });
        }
        return;
    }
    for cand in candidates {
        images.push(cand.clone());
        let ok = by_last[g]
            .iter()
            .all(|rel| t.evaluate(field, rel, images).iter().all(|&c| c == 0));
        if ok {
            search(field, t, candidates, by_last, images, generators, out);
        }
        images.pop();
    }
}

/// Basis map induced by generator images, if it is invertible and
/// multiplicative on basis pairs.
fn induced_basis_map(field: Fp, t: &TableAlgebra, images: &[Vec<u64>]) -> Option<Mat> {
    let cols: Vec<Vec<u64>> = t.words().iter().map(|w| t.word_element(field, w, images)).collect();
    let map = Mat::from_columns(field, t.dim(), &cols);
    if map.rank() != t.dim() {
        return None;
    }
    for i in 0..t.dim() {
        for j in 0..t.dim() {
            if map.apply(t.product(i, j)) != t.mul(field, &cols[i], &cols[j]) {
                return None;
            }
        }
    }
    Some(map)
}

fn is_table_automorphism(field: Fp, t: &TableAlgebra, relations: &[NcPoly], images: &[Vec<u64>]) -> bool {
    relations
        .iter()
        .all(|rel| t.evaluate(field, rel, images).iter().all(|&c| c == 0))
        && induced_basis_map(field, t, images).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    const BUDGET: u64 = 1 << 20;

    #[test]
    fn gl3_over_f2_has_168_elements() {
        let a = Algebra::rsz(k(2), 3);
        assert_eq!(enumerate_automorphisms(&a, BUDGET).unwrap().len(), 168);
    }

    #[test]
    fn gl_orders_match_formula() {
        // |GL(n,q)| = prod_{i<n} (q^n - q^i)
        for (p, n) in [(2u64, 2usize), (3, 2), (5, 2), (3, 3)] {
            let expected: u64 = (0..n as u32).map(|i| p.pow(n as u32) - p.pow(i)).product();
            let a = Algebra::rsz(k(p), n);
            assert_eq!(enumerate_automorphisms(&a, BUDGET).unwrap().len() as u64, expected);
        }
    }

    #[test]
    fn affine_maps_of_free_univariate() {
        let a = Algebra::free_univariate(k(3));
        let auts = enumerate_automorphisms(&a, BUDGET).unwrap();
        assert_eq!(auts.len(), 6);
        assert!(auts.iter().all(|f| matches!(f, Automorphism::Affine { scale, .. } if *scale != 0)));
    }

    #[test]
    fn semidihedral_automorphisms_fix_the_shape_of_x() {
        let a = Algebra::semidihedral(k(2)).unwrap();
        let auts = enumerate_automorphisms(&a, BUDGET).unwrap();
        assert!(!auts.is_empty());
        for f in &auts {
            let Automorphism::Table { images, basis_map } = f else { panic!() };
            // coordinates: [1, x, y, xy, yx, xyx, yxy]
            assert_eq!(images[0][2], 0, "coefficient of y in f(x)");
            assert_ne!(images[0][1], 0, "coefficient of x in f(x)");
            assert_eq!(basis_map.column(0), vec![1, 0, 0, 0, 0, 0, 0]);
            for r in 1..7 {
                assert_eq!(basis_map.get(0, r), 0, "radical maps into radical");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let a = Algebra::rsz(k(5), 3);
        assert!(matches!(
            enumerate_automorphisms(&a, BUDGET),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn dihedral_monomial_group() {
        let sym = Algebra::dihedral(k(5), 1, true, true).unwrap();
        assert_eq!(enumerate_automorphisms(&sym, BUDGET).unwrap().len(), 32);
        let asym = Algebra::dihedral(k(5), 1, true, false).unwrap();
        assert_eq!(enumerate_automorphisms(&asym, BUDGET).unwrap().len(), 16);
        assert!(Automorphism::swap().check(&asym).is_err());
        assert!(Automorphism::swap().check(&sym).is_ok());
    }

    fn assert_closed(a: &Algebra) {
        let auts = enumerate_automorphisms(a, BUDGET).unwrap();
        for f in &auts {
            for g in &auts {
                let h = f.compose(g, a).unwrap();
                assert!(auts.contains(&h), "{} ∘ {} missing", f.describe(a), g.describe(a));
            }
        }
        assert!(auts.iter().any(|f| f.is_identity(a)));
    }

    #[test]
    fn enumerations_are_closed_under_composition() {
        assert_closed(&Algebra::rsz(k(2), 3));
        assert_closed(&Algebra::free_univariate(k(5)));
        assert_closed(&Algebra::dihedral(k(3), 1, true, true).unwrap());
        assert_closed(&Algebra::semidihedral(k(2)).unwrap());
    }

    #[test]
    fn describe_lists_generator_images() {
        let a = Algebra::free_univariate(k(5));
        let f = Automorphism::Affine { scale: 2, shift: 3 };
        assert_eq!(f.describe(&a), "X -> 3 + 2X");
    }
}
