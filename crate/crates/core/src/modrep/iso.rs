use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{hom_space, same_algebra, HomBasis, Module, Verdict};
use crate::error::{Error, Result};
use crate::linalg::{space_size, Fp, Mat};

/// Search limits shared by every exhaustive procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Largest number of Hom-space (or automorphism) candidates enumerated.
    pub budget: u64,
    pub seed: u64,
    /// Random samples tried when the space exceeds the budget.
    pub trials: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 1 << 20,
            seed: 0,
            trials: 10_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonIsoCertificate {
    DimensionMismatch { left: usize, right: usize },
    /// Generator `generator` acts with different ranks.
    RankMismatch { generator: usize, left: usize, right: usize },
    /// `dim Hom(M, N) != dim End(M)`.
    HomDimension { hom: usize, end: usize },
    /// Every element of the Hom space was checked.
    Exhausted { hom_dim: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult {
    /// `witness` is an invertible intertwiner from the first module to the second.
    Yes { witness: Mat },
    No { certificate: NonIsoCertificate },
    Undecided { hom_dim: usize, trials: usize },
}

impl IsoResult {
    pub fn verdict(&self) -> Verdict {
        match self {
            IsoResult::Yes { .. } => Verdict::Yes,
            IsoResult::No { .. } => Verdict::No,
            IsoResult::Undecided { .. } => Verdict::Undecided,
        }
    }

    pub fn witness(&self) -> Option<&Mat> {
        match self {
            IsoResult::Yes { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict() == Verdict::Yes
    }

    pub fn is_no(&self) -> bool {
        self.verdict() == Verdict::No
    }

    pub fn describe(&self) -> String {
        match self {
            IsoResult::Yes { .. } => "invertible intertwiner found".into(),
            IsoResult::No { certificate } => match certificate {
                NonIsoCertificate::DimensionMismatch { left, right } => {
                    format!("dimensions differ ({left} vs {right})")
                }
                NonIsoCertificate::RankMismatch { generator, left, right } => {
                    format!("generator {generator} acts with rank {left} vs {right}")
                }
                NonIsoCertificate::HomDimension { hom, end } => {
                    format!("dim Hom = {hom} but dim End = {end}")
                }
                NonIsoCertificate::Exhausted { hom_dim } => {
                    format!("no invertible element in the {hom_dim}-dimensional Hom space")
                }
            },
            IsoResult::Undecided { hom_dim, trials } => {
                format!("Hom space of dimension {hom_dim} above budget; {trials} random samples singular")
            }
        }
    }
}

/// Decides `m1 ≅ m2`.
///
/// Cheap invariants first (dimension, action ranks, `dim Hom(m1, m2)` against
/// `dim End(m1)`), each a sound non-isomorphism certificate. Then the Hom space
/// is enumerated when it has at most `budget` elements, giving either a
/// witness or `No` by exhaustion. Larger spaces are sampled with a seeded RNG
/// and end `Undecided` when no sample is invertible.
pub fn is_isomorphic(m1: &Module, m2: &Module, cfg: &SearchConfig) -> Result<IsoResult> {
    if !same_algebra(m1.algebra(), m2.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    if let Some(no) = quick_invariants(m1, m2) {
        return Ok(no);
    }
    if m1.action() == m2.action() {
        return Ok(IsoResult::Yes {
            witness: Mat::identity(m1.field(), m1.dim()),
        });
    }
    let hom = hom_space(m1, m2)?;
    let end_dim = hom_space(m1, m1)?.dim();
    decide_from_hom(&hom, end_dim, m1.field(), cfg)
}

/// Dimension and rank checks.
pub(crate) fn quick_invariants(m1: &Module, m2: &Module) -> Option<IsoResult> {
    if m1.dim() != m2.dim() {
        return Some(IsoResult::No {
            certificate: NonIsoCertificate::DimensionMismatch {
                left: m1.dim(),
                right: m2.dim(),
            },
        });
    }
    for (g, (a, b)) in m1.action().iter().zip(m2.action()).enumerate() {
        let (ra, rb) = (a.rank(), b.rank());
        if ra != rb {
            return Some(IsoResult::No {
                certificate: NonIsoCertificate::RankMismatch {
                    generator: g,
                    left: ra,
                    right: rb,
                },
            });
        }
    }
    None
}

pub(crate) fn decide_from_hom(hom: &HomBasis, end_dim: usize, field: Fp, cfg: &SearchConfig) -> Result<IsoResult> {
    let n = hom.source_dim;
    if n == 0 {
        return Ok(IsoResult::Yes {
            witness: Mat::zeros(field, 0, 0),
        });
    }
    if hom.dim() != end_dim {
        return Ok(IsoResult::No {
            certificate: NonIsoCertificate::HomDimension {
                hom: hom.dim(),
                end: end_dim,
            },
        });
    }
    if hom.dim() == 0 {
        return Ok(IsoResult::No {
            certificate: NonIsoCertificate::Exhausted { hom_dim: 0 },
        });
    }
    // basis elements are the most likely witnesses
    for b in &hom.basis {
        if b.rank() == n {
            return Ok(IsoResult::Yes { witness: b.clone() });
        }
    }
    if space_size(field, hom.dim()) <= cfg.budget as u128 {
        let found = first_in_span(hom, field, |m| m.rank() == n);
        return Ok(match found {
            Some(witness) => IsoResult::Yes { witness },
            None => IsoResult::No {
                certificate: NonIsoCertificate::Exhausted { hom_dim: hom.dim() },
            },
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let p = field.modulus();
    for _ in 0..cfg.trials {
        let coeffs: Vec<u64> = (0..hom.dim()).map(|_| rng.gen_range(0..p)).collect();
        let m = hom.combination(&coeffs);
        if m.rank() == n {
            return Ok(IsoResult::Yes { witness: m });
        }
    }
    Ok(IsoResult::Undecided {
        hom_dim: hom.dim(),
        trials: cfg.trials,
    })
}

/// First element of the span of `hom.basis`, in lexicographic coefficient
/// order, satisfying `pred`. Sums are updated incrementally: bumping digit `i`
/// adds `basis[i]`, and every digit wrapping from `p - 1` to `0` also adds its
/// basis element (since `-(p - 1) = 1`).
pub(crate) fn first_in_span(hom: &HomBasis, field: Fp, mut pred: impl FnMut(&Mat) -> bool) -> Option<Mat> {
    let d = hom.dim();
    let p = field.modulus();
    let mut digits = vec![0u64; d];
    let mut current = Mat::zeros(field, hom.target_dim, hom.source_dim);
    loop {
        if pred(&current) {
            return Some(current);
        }
        let mut i = d;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            current.add_scaled(&hom.basis[i], 1);
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::Algebra;

    fn jordan(f: Fp, lambda: u64, n: usize) -> Mat {
        Mat::from_fn(f, n, n, |i, j| {
            if i == j {
                lambda
            } else {
                u64::from(i == j + 1)
            }
        })
    }

    #[test]
    fn distinct_eigenvalues_are_not_isomorphic() {
        let f = Fp::new(3).unwrap();
        let a = Arc::new(Algebra::free_univariate(f));
        let m0 = Module::new(Arc::clone(&a), 2, vec![jordan(f, 0, 2)]).unwrap();
        let m1 = Module::new(a, 2, vec![jordan(f, 1, 2)]).unwrap();
        let r = is_isomorphic(&m0, &m1, &SearchConfig::default()).unwrap();
        assert!(r.is_no(), "{r:?}");
    }

    #[test]
    fn conjugates_are_isomorphic_with_verified_witness() {
        let f = Fp::new(5).unwrap();
        let a = Arc::new(Algebra::free_univariate(f));
        let m = Module::new(a, 3, vec![jordan(f, 2, 3)]).unwrap();
        let p = Mat::from_rows(f, &[vec![1, 2, 0], vec![0, 1, 3], vec![1, 0, 1]]).unwrap();
        assert!(p.is_invertible().unwrap().0);
        let c = m.conjugate(&p).unwrap();
        let r = is_isomorphic(&m, &c, &SearchConfig::default()).unwrap();
        let w = r.witness().expect("isomorphic");
        assert!(m.intertwines(&c, w));
        assert!(w.is_invertible().unwrap().0);
    }

    #[test]
    fn search_enumerates_lexicographically() {
        let f = Fp::new(3).unwrap();
        let basis = vec![Mat::identity(f, 1), Mat::identity(f, 1)];
        let hom = HomBasis {
            source_dim: 1,
            target_dim: 1,
            basis,
        };
        let mut seen = Vec::new();
        first_in_span(&hom, f, |m| {
            seen.push(m.get(0, 0));
            false
        });
        // coefficient vectors 00,01,02,10,11,12,20,21,22
        assert_eq!(seen, vec![0, 1, 2, 1, 2, 0, 2, 0, 1]);
    }

    #[test]
    fn tiny_budget_without_luck_is_undecided() {
        // End(trivial(2)) has the singular basis e11, e12, e21, e22
        let f = Fp::new(2).unwrap();
        let a = Arc::new(Algebra::rsz(f, 1));
        let t = Module::trivial(a, 2).unwrap();
        let hom = hom_space(&t, &t).unwrap();
        let cfg = SearchConfig {
            budget: 1,
            seed: 7,
            trials: 0,
        };
        let r = decide_from_hom(&hom, 4, f, &cfg).unwrap();
        assert_eq!(r, IsoResult::Undecided { hom_dim: 4, trials: 0 });
        let sampled = decide_from_hom(&hom, 4, f, &SearchConfig { trials: 100, ..cfg }).unwrap();
        assert!(sampled.is_yes());
        assert!(is_isomorphic(&t, &t, &cfg).unwrap().is_yes());
    }
}
