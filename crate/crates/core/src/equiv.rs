//! Restriction (R-), twisted (T-) and restriction-twisted (RT-) equivalence.
//!
//! Every relation is three-valued. Universally quantified relations report
//! `No` at the first failing item in enumeration order and `Undecided` only
//! when nothing failed but some comparison was undecided; existential ones
//! report `Yes` at the first witness.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{enumerate_automorphisms, enumerate_proper_subalgebras, Algebra, AlgebraKind, Automorphism, Scope, Subalgebra};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::modrep::iso::{decide_from_hom, quick_invariants};
use crate::modrep::{
    hom_space, is_indecomposable, is_isomorphic, restrict, same_algebra, twist, twist_unchecked, IsoResult, Module,
    SearchConfig, Verdict,
};

/// An automorphism `f` and an invertible `φ` with `f(g) φ = φ g` on every
/// generator, i.e. an isomorphism from the first module onto the twist of the
/// second.
#[derive(Clone, Debug)]
pub struct TwistWitness {
    /// Position of `f` in the automorphism enumeration.
    pub index: usize,
    pub automorphism: Automorphism,
    pub description: String,
    pub intertwiner: Mat,
}

impl TwistWitness {
    /// Recomputes the twist and checks the intertwiner.
    pub fn verify(&self, m1: &Module, m2: &Module) -> bool {
        match twist(m2, &self.automorphism) {
            Ok(tw) => {
                self.intertwiner.rows() == m1.dim()
                    && self.intertwiner.is_invertible().map(|(inv, _)| inv).unwrap_or(false)
                    && m1.intertwines(&tw, &self.intertwiner)
            }
            Err(_) => false,
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "automorphism_index": self.index,
            "automorphism": self.description,
            "intertwiner": self.intertwiner.to_rows(),
        })
    }
}

#[derive(Clone, Debug)]
pub enum Witness {
    /// The subalgebra at which a universally quantified relation failed.
    Subalgebra {
        index: usize,
        description: String,
        reason: String,
    },
    Twist(TwistWitness),
    /// One twist witness per maximal subalgebra, by subalgebra index.
    Restrictions(Vec<(usize, TwistWitness)>),
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::Subalgebra {
                index,
                description,
                reason,
            } => json!({"subalgebra_index": index, "subalgebra": description, "reason": reason}),
            Witness::Twist(t) => t.to_json(),
            Witness::Restrictions(list) => Value::Array(
                list.iter()
                    .map(|(i, t)| {
                        let mut v = t.to_json();
                        v["subalgebra_index"] = json!(i);
                        v
                    })
                    .collect(),
            ),
        }
    }

    pub fn summary(&self) -> String {
        match self {
            Witness::Subalgebra { description, reason, .. } => format!("at {description}: {reason}"),
            Witness::Twist(t) => format!("twist by {}", t.description),
            Witness::Restrictions(list) => format!("{} restricted twists", list.len()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct EquivVerdict {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Subalgebras or automorphisms examined.
    pub checked: usize,
}

impl EquivVerdict {
    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    pub fn is_no(&self) -> bool {
        self.verdict == Verdict::No
    }

    pub fn twist_witness(&self) -> Option<&TwistWitness> {
        match &self.witness {
            Some(Witness::Twist(t)) => Some(t),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict,
            "witness": self.witness.as_ref().map(Witness::to_json),
        })
    }
}

/// A partition of labeled items into classes; each class lists member
/// indices in increasing order, so its first entry is the representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub labels: Vec<String>,
    pub classes: Vec<Vec<usize>>,
    /// (representative, item) pairs whose comparison was undecided.
    pub undecided: Vec<(usize, usize)>,
}

impl Partition {
    /// Groups items by comparing each with the class representatives in order.
    pub fn build(labels: Vec<String>, mut equivalent: impl FnMut(usize, usize) -> Result<Verdict>) -> Result<Partition> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut undecided = Vec::new();
        for i in 0..labels.len() {
            let mut home = None;
            for (c, class) in classes.iter().enumerate() {
                match equivalent(class[0], i)? {
                    Verdict::Yes => {
                        home = Some(c);
                        break;
                    }
                    Verdict::Undecided => undecided.push((class[0], i)),
                    Verdict::No => {}
                }
            }
            match home {
                Some(c) => classes[c].push(i),
                None => classes.push(vec![i]),
            }
        }
        Ok(Partition {
            labels,
            classes,
            undecided,
        })
    }

    pub fn item_count(&self) -> usize {
        self.labels.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn class_of(&self, item: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&item))
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn is_decided(&self) -> bool {
        self.undecided.is_empty()
    }
}

fn require_rsz(m: &Module) -> Result<()> {
    match m.algebra().kind() {
        AlgebraKind::Rsz { .. } => Ok(()),
        _ => Err(Error::UnsupportedAlgebraKind(m.algebra().kind_name())),
    }
}

fn require_same(m1: &Module, m2: &Module) -> Result<()> {
    if same_algebra(m1.algebra(), m2.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// Runs `test` over the subalgebras in scope; `test` returns `None` on success
/// and a failure reason otherwise.
fn for_every_subalgebra(
    a: &Arc<Algebra>,
    scope: Scope,
    mut test: impl FnMut(&Subalgebra) -> Result<Option<(Verdict, String)>>,
) -> Result<EquivVerdict> {
    let subs = enumerate_proper_subalgebras(a, scope)?;
    let mut first_undecided = None;
    for (i, s) in subs.iter().enumerate() {
        match test(s)? {
            None => {}
            Some((Verdict::No, reason)) => {
                return Ok(EquivVerdict {
                    verdict: Verdict::No,
                    witness: Some(Witness::Subalgebra {
                        index: i,
                        description: s.describe(),
                        reason,
                    }),
                    checked: i + 1,
                })
            }
            Some((_, reason)) => {
                if first_undecided.is_none() {
                    first_undecided = Some(Witness::Subalgebra {
                        index: i,
                        description: s.describe(),
                        reason,
                    });
                }
            }
        }
    }
    Ok(EquivVerdict {
        verdict: if first_undecided.is_some() {
            Verdict::Undecided
        } else {
            Verdict::Yes
        },
        witness: first_undecided,
        checked: subs.len(),
    })
}

/// Restrictions to every proper subalgebra in scope are isomorphic.
pub fn r_isomorphic(m1: &Module, m2: &Module, scope: Scope, cfg: &SearchConfig) -> Result<EquivVerdict> {
    require_rsz(m1)?;
    require_same(m1, m2)?;
    for_every_subalgebra(m1.algebra(), scope, |s| {
        let r = is_isomorphic(&restrict(m1, s)?, &restrict(m2, s)?, cfg)?;
        Ok(match r.verdict() {
            Verdict::Yes => None,
            v => Some((v, r.describe())),
        })
    })
}

/// Restrictions to every proper subalgebra in scope are non-isomorphic.
pub fn r_distinct(m1: &Module, m2: &Module, scope: Scope, cfg: &SearchConfig) -> Result<EquivVerdict> {
    require_rsz(m1)?;
    require_same(m1, m2)?;
    for_every_subalgebra(m1.algebra(), scope, |s| {
        let r = is_isomorphic(&restrict(m1, s)?, &restrict(m2, s)?, cfg)?;
        Ok(match r.verdict() {
            Verdict::No => None,
            Verdict::Yes => Some((Verdict::No, "restrictions are isomorphic".to_string())),
            Verdict::Undecided => Some((Verdict::Undecided, r.describe())),
        })
    })
}

/// Every restriction to a maximal proper subalgebra decomposes.
pub fn r_decomposable(m: &Module, cfg: &SearchConfig) -> Result<EquivVerdict> {
    require_rsz(m)?;
    for_every_subalgebra(m.algebra(), Scope::Maximal, |s| {
        let r = restrict(m, s)?;
        if r.dim() == 0 {
            return Ok(Some((Verdict::No, "zero module".to_string())));
        }
        Ok(match is_indecomposable(&r, cfg.budget)?.verdict() {
            Verdict::No => None,
            Verdict::Yes => Some((Verdict::No, "restriction is indecomposable".to_string())),
            Verdict::Undecided => Some((Verdict::Undecided, "End above budget".to_string())),
        })
    })
}

#[derive(Clone, Debug)]
pub struct RestrictionFunction {
    pub subalgebras: Vec<Subalgebra>,
    /// Subalgebras grouped by the isomorphism class of the restriction.
    /// Restrictions to subalgebras of different dimension are never equal;
    /// equal-dimensional ones are compared through their enumerated bases.
    pub partition: Partition,
}

pub fn restriction_function(m: &Module, scope: Scope, cfg: &SearchConfig) -> Result<RestrictionFunction> {
    require_rsz(m)?;
    let subalgebras = enumerate_proper_subalgebras(m.algebra(), scope)?;
    let restrictions = subalgebras.iter().map(|s| restrict(m, s)).collect::<Result<Vec<_>>>()?;
    let labels = subalgebras.iter().map(Subalgebra::describe).collect();
    let partition = Partition::build(labels, |i, j| {
        if subalgebras[i].dim_w() != subalgebras[j].dim_w() {
            return Ok(Verdict::No);
        }
        Ok(is_isomorphic(&restrictions[i], &restrictions[j], cfg)?.verdict())
    })?;
    Ok(RestrictionFunction { subalgebras, partition })
}

/// T-isomorphism against a precomputed automorphism list. The first
/// automorphism (by index) giving an isomorphism is the witness.
fn t_isomorphic_with(m1: &Module, m2: &Module, auts: &[Automorphism], cfg: &SearchConfig) -> Result<EquivVerdict> {
    require_same(m1, m2)?;
    if m1.dim() != m2.dim() {
        return Ok(EquivVerdict {
            verdict: Verdict::No,
            witness: None,
            checked: 0,
        });
    }
    let end_dim = hom_space(m1, m1)?.dim();
    let saw_undecided = AtomicBool::new(false);
    let found = auts
        .par_iter()
        .enumerate()
        .map(|(i, f)| -> Result<Option<(usize, Mat)>> {
            let tw = twist_unchecked(m2, f);
            if quick_invariants(m1, &tw).is_some() {
                return Ok(None);
            }
            let hom = hom_space(m1, &tw)?;
            match decide_from_hom(&hom, end_dim, m1.field(), cfg)? {
                IsoResult::Yes { witness } => Ok(Some((i, witness))),
                IsoResult::No { .. } => Ok(None),
                IsoResult::Undecided { .. } => {
                    saw_undecided.store(true, Ordering::Relaxed);
                    Ok(None)
                }
            }
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        });
    match found {
        Some(Err(e)) => Err(e),
        Some(Ok(Some((index, intertwiner)))) => {
            let automorphism = auts[index].clone();
            Ok(EquivVerdict {
                verdict: Verdict::Yes,
                witness: Some(Witness::Twist(TwistWitness {
                    index,
                    description: automorphism.describe(m2.algebra()),
                    automorphism,
                    intertwiner,
                })),
                checked: index + 1,
            })
        }
        _ => Ok(EquivVerdict {
            verdict: if saw_undecided.load(Ordering::Relaxed) {
                Verdict::Undecided
            } else {
                Verdict::No
            },
            witness: None,
            checked: auts.len(),
        }),
    }
}

/// `m1 ≅ f(m2)` for some enumerated automorphism `f`.
pub fn t_isomorphic(m1: &Module, m2: &Module, cfg: &SearchConfig) -> Result<EquivVerdict> {
    require_same(m1, m2)?;
    let auts = enumerate_automorphisms(m1.algebra(), cfg.budget)?;
    t_isomorphic_with(m1, m2, &auts, cfg)
}

/// Isomorphism classes of the twists of a module, matched against a list.
#[derive(Clone, Debug)]
pub struct OrbitClosure {
    pub automorphisms: usize,
    /// One twist per isomorphism class, in order of first appearance.
    pub representatives: Vec<Module>,
    /// For each representative, the first listed module isomorphic to it.
    pub matched: Vec<Option<usize>>,
}

impl OrbitClosure {
    /// Every twist is isomorphic to a listed module.
    pub fn is_closed(&self) -> bool {
        self.matched.iter().all(Option::is_some)
    }
}

#[derive(Clone, Debug)]
pub struct TOrbit {
    /// Over `{m} ∪ candidates`, with `m` at index 0.
    pub partition: Partition,
    pub closure: OrbitClosure,
}

/// Groups modules by T-isomorphism, labeled `M0, M1, ...`.
pub fn t_classes(modules: &[Module], cfg: &SearchConfig) -> Result<Partition> {
    let Some(first) = modules.first() else {
        return Partition::build(Vec::new(), |_, _| Ok(Verdict::Yes));
    };
    for m in &modules[1..] {
        require_same(first, m)?;
    }
    let auts = enumerate_automorphisms(first.algebra(), cfg.budget)?;
    t_partition(&modules.iter().collect::<Vec<_>>(), &auts, cfg)
}

fn t_partition(modules: &[&Module], auts: &[Automorphism], cfg: &SearchConfig) -> Result<Partition> {
    let labels = (0..modules.len()).map(|i| format!("M{i}")).collect();
    Partition::build(labels, |i, j| Ok(t_isomorphic_with(modules[i], modules[j], auts, cfg)?.verdict))
}

/// Groups `{m} ∪ candidates` by T-isomorphism and checks that every twist of
/// `m` appears in the list up to isomorphism.
pub fn t_orbit(m: &Module, candidates: &[Module], cfg: &SearchConfig) -> Result<TOrbit> {
    for c in candidates {
        require_same(m, c)?;
    }
    let auts = enumerate_automorphisms(m.algebra(), cfg.budget)?;
    let modules: Vec<&Module> = std::iter::once(m).chain(candidates).collect();
    let partition = t_partition(&modules, &auts, cfg)?;

    let mut representatives: Vec<Module> = Vec::new();
    for f in &auts {
        let tw = twist_unchecked(m, f);
        let mut seen = false;
        for r in &representatives {
            if is_isomorphic(r, &tw, cfg)?.is_yes() {
                seen = true;
                break;
            }
        }
        if !seen {
            representatives.push(tw);
        }
    }
    let mut matched = Vec::with_capacity(representatives.len());
    for r in &representatives {
        let mut hit = None;
        for (i, c) in modules.iter().enumerate() {
            if is_isomorphic(r, c, cfg)?.is_yes() {
                hit = Some(i);
                break;
            }
        }
        matched.push(hit);
    }
    Ok(TOrbit {
        partition,
        closure: OrbitClosure {
            automorphisms: auts.len(),
            representatives,
            matched,
        },
    })
}

/// Restrictions to every maximal proper subalgebra are T-isomorphic, each
/// over the automorphism group of that subalgebra.
pub fn rt_isomorphic(m1: &Module, m2: &Module, cfg: &SearchConfig) -> Result<EquivVerdict> {
    require_rsz(m1)?;
    require_same(m1, m2)?;
    let subs = enumerate_proper_subalgebras(m1.algebra(), Scope::Maximal)?;
    let mut witnesses = Vec::with_capacity(subs.len());
    let mut first_undecided = None;
    for (i, s) in subs.iter().enumerate() {
        let r = t_isomorphic(&restrict(m1, s)?, &restrict(m2, s)?, cfg)?;
        match r.verdict {
            Verdict::Yes => {
                if let Some(Witness::Twist(t)) = r.witness {
                    witnesses.push((i, t));
                }
            }
            Verdict::No => {
                return Ok(EquivVerdict {
                    verdict: Verdict::No,
                    witness: Some(Witness::Subalgebra {
                        index: i,
                        description: s.describe(),
                        reason: format!("restrictions not T-isomorphic after {} automorphisms", r.checked),
                    }),
                    checked: i + 1,
                });
            }
            Verdict::Undecided => {
                if first_undecided.is_none() {
                    first_undecided = Some(Witness::Subalgebra {
                        index: i,
                        description: s.describe(),
                        reason: "undecided".into(),
                    });
                }
            }
        }
    }
    Ok(match first_undecided {
        Some(w) => EquivVerdict {
            verdict: Verdict::Undecided,
            witness: Some(w),
            checked: subs.len(),
        },
        None => EquivVerdict {
            verdict: Verdict::Yes,
            witness: Some(Witness::Restrictions(witnesses)),
            checked: subs.len(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{c2, jordan, k_module, paper_fixture, Lambda};
    use crate::linalg::Fp;
    use crate::modrep::direct_sum;

    fn k(p: u64) -> Fp {
        Fp::new(p).unwrap()
    }

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn wild_pair_is_r_isomorphic_but_not_isomorphic() {
        let (_, ms) = paper_fixture("wild6", k(2)).unwrap();
        assert!(is_isomorphic(&ms[0], &ms[1], &cfg()).unwrap().is_no());
        let r = r_isomorphic(&ms[0], &ms[1], Scope::All, &cfg()).unwrap();
        assert!(r.is_yes());
        assert_eq!(r.checked, 15);
    }

    #[test]
    fn extra_summand_breaks_r_isomorphism_at_the_first_subalgebra() {
        let (_, ms) = paper_fixture("tame3", k(2)).unwrap();
        let t = Module::trivial(Arc::clone(ms[0].algebra()), 1).unwrap();
        let bigger = direct_sum(&ms[0], &t).unwrap();
        for scope in [Scope::All, Scope::Maximal] {
            let r = r_isomorphic(&ms[0], &bigger, scope, &cfg()).unwrap();
            assert!(r.is_no());
            assert!(matches!(r.witness, Some(Witness::Subalgebra { index: 0, .. })));
        }
        assert!(rt_isomorphic(&ms[0], &bigger, &cfg()).unwrap().is_no());
    }

    #[test]
    fn r_distinct_needs_maximal_scope() {
        let (_, ms) = paper_fixture("rdist4", k(2)).unwrap();
        assert!(r_distinct(&ms[0], &ms[1], Scope::Maximal, &cfg()).unwrap().is_yes());
        let all = r_distinct(&ms[0], &ms[1], Scope::All, &cfg()).unwrap();
        assert!(all.is_no());
        let Some(Witness::Subalgebra { index, description, .. }) = all.witness else {
            panic!("subalgebra witness expected");
        };
        assert_eq!((index, description.as_str()), (0, "k*1"));
        assert!(r_distinct(&ms[0], &ms[0], Scope::Maximal, &cfg()).unwrap().is_no());
    }

    #[test]
    fn r_decomposable_cases() {
        // on span(Y, Z) the Z block is invertible and Y is a nilpotent Jordan
        // block relative to it, so that restriction is indecomposable
        let (_, ms) = paper_fixture("rdec4", k(2)).unwrap();
        let r = r_decomposable(&ms[0], &cfg()).unwrap();
        assert!(r.is_no());
        let Some(Witness::Subalgebra { description, .. }) = r.witness else {
            panic!("subalgebra witness expected");
        };
        assert_eq!(description, "span(Y, Z)");
        let t = Module::trivial(Arc::clone(ms[0].algebra()), 2).unwrap();
        assert!(r_decomposable(&t, &cfg()).unwrap().is_yes());
        assert!(r_decomposable(&c2(k(3), 1, 1).unwrap(), &cfg()).unwrap().is_no());
    }

    #[test]
    fn restriction_function_classes() {
        let (_, ms) = paper_fixture("tame3", k(2)).unwrap();
        let rf = restriction_function(&ms[0], Scope::Maximal, &cfg()).unwrap();
        assert_eq!(rf.partition.class_sizes(), vec![3]);
        let t = Module::trivial(Arc::clone(ms[0].algebra()), 2).unwrap();
        let rf = restriction_function(&t, Scope::Maximal, &cfg()).unwrap();
        assert_eq!(rf.partition.classes.len(), 1);
        let (_, d) = paper_fixture("rdist4", k(2)).unwrap();
        let a = restriction_function(&d[0], Scope::Maximal, &cfg()).unwrap();
        let b = restriction_function(&d[1], Scope::Maximal, &cfg()).unwrap();
        assert_ne!(a.partition.classes, b.partition.classes);
    }

    #[test]
    fn c2_family_is_one_t_class() {
        let f = k(3);
        let base = c2(f, 1, 1).unwrap();
        let other = c2(f, 2, 1).unwrap();
        assert!(is_isomorphic(&base, &other, &cfg()).unwrap().is_no());
        let r = t_isomorphic(&other, &base, &cfg()).unwrap();
        assert!(r.is_yes());
        assert!(r.twist_witness().unwrap().verify(&other, &base));
    }

    #[test]
    fn r_iso_does_not_give_t_iso() {
        let (_, ms) = paper_fixture("rnott6", k(2)).unwrap();
        assert!(r_isomorphic(&ms[0], &ms[1], Scope::All, &cfg()).unwrap().is_yes());
        let t = t_isomorphic(&ms[0], &ms[1], &cfg()).unwrap();
        assert!(t.is_no());
        assert_eq!(t.checked, 168);
    }

    #[test]
    fn t_iso_does_not_give_r_iso() {
        let f = k(2);
        let m0 = k_module(f, Lambda::Finite(0), 1).unwrap();
        let minf = k_module(f, Lambda::Infinity, 1).unwrap();
        assert!(t_isomorphic(&m0, &minf, &cfg()).unwrap().is_yes());
        assert!(r_isomorphic(&m0, &minf, Scope::Maximal, &cfg()).unwrap().is_no());
    }

    #[test]
    fn jordan_orbit_is_closed() {
        let f = k(2);
        let js: Vec<Module> = f.elements().map(|l| jordan(f, l, 2).unwrap()).collect();
        let orbit = t_orbit(&js[0], &js[1..], &cfg()).unwrap();
        assert_eq!(orbit.partition.class_sizes(), vec![2]);
        assert!(orbit.closure.is_closed());
        assert!(is_isomorphic(&js[0], &js[1], &cfg()).unwrap().is_no());
    }

    #[test]
    fn tame_t_classes_are_iso_classes() {
        let (_, ms) = paper_fixture("tame3", k(2)).unwrap();
        let orbit = t_orbit(&ms[0], &ms[1..], &cfg()).unwrap();
        assert_eq!(orbit.partition.classes, vec![vec![0], vec![1]]);
        assert!(rt_isomorphic(&ms[0], &ms[1], &cfg()).unwrap().is_yes());
    }

    #[test]
    fn verdict_json_shape() {
        let (_, ms) = paper_fixture("tame3", k(2)).unwrap();
        let v = t_isomorphic(&ms[0], &ms[0], &cfg()).unwrap().to_json();
        assert_eq!(v["verdict"], "yes");
        assert_eq!(v["witness"]["automorphism_index"], 0);
    }

    #[test]
    fn non_rsz_algebras_are_rejected() {
        let j = jordan(k(2), 0, 2).unwrap();
        assert!(matches!(
            r_isomorphic(&j, &j, Scope::All, &cfg()),
            Err(Error::UnsupportedAlgebraKind(_))
        ));
    }
}
