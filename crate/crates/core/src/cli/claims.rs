//! The verification harness: one record per (claim, field).

use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::RunConfig;
use crate::algebra::{enumerate_automorphisms, enumerate_proper_subalgebras, Algebra, AlgebraKind, Automorphism, Scope, Subalgebra};
use crate::equiv::{r_decomposable, r_distinct, r_isomorphic, t_classes, t_isomorphic, t_orbit, Witness};
use crate::error::{Error, Result};
use crate::families::{self, band4, band4_matrices, c2, c3, jordan, k_module, paper_fixture, semidihedral_line, Lambda};
use crate::linalg::{Fp, Mat};
use crate::modrep::{
    decompose, direct_sum, direct_sum_all, end_space, hom_space, is_indecomposable, is_isomorphic, restrict, twist, Module,
    SearchConfig, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Undecided,
    Skipped,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Undecided => "UNDECIDED",
            ClaimStatus::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimRecord {
    pub claim: u8,
    /// `None` when the claim applies to none of the configured fields.
    pub field: Option<u64>,
    pub status: ClaimStatus,
    pub summary: String,
    /// Kept out of the structured report so that it is reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub records: Vec<ClaimRecord>,
}

impl Report {
    /// No record failed.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != ClaimStatus::Fail)
    }

    pub fn status(&self, claim: u8, field: u64) -> Option<ClaimStatus> {
        self.records
            .iter()
            .find(|r| r.claim == claim && r.field == Some(field))
            .map(|r| r.status)
    }

    pub fn to_text(&self) -> String {
        self.records
            .iter()
            .map(|r| {
                let field = r.field.map_or("-".to_string(), |p| p.to_string());
                format!(
                    "claim {:>2}  p={:<2} {:<9} {:>8.2}s  {}",
                    r.claim,
                    field,
                    r.status,
                    r.elapsed.as_secs_f64(),
                    r.summary
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&json!({ "records": self.records })).expect("plain data")
    }
}

pub const CLAIMS: [u8; 11] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11];

/// Fields at which a claim is checked; `None` means every field.
pub fn claim_fields(claim: u8) -> Option<&'static [u64]> {
    match claim {
        1 | 6 => Some(&[2, 3, 5]),
        2 | 3 | 4 | 7 => Some(&[2, 3]),
        5 | 11 => Some(&[2]),
        8 => Some(&[5]),
        10 => Some(&[3]),
        _ => None,
    }
}

/// Runs every claim at every configured field where it is defined. Claims
/// run concurrently; records come back ordered by claim, then field.
pub fn verify_paper(cfg: &RunConfig) -> Report {
    let mut jobs = Vec::new();
    for claim in CLAIMS {
        let fields: Vec<u64> = cfg
            .fields
            .iter()
            .copied()
            .filter(|p| claim_fields(claim).map_or(true, |set| set.contains(p)))
            .collect();
        if fields.is_empty() {
            jobs.push((claim, None));
        }
        jobs.extend(fields.into_iter().map(|p| (claim, Some(p))));
    }
    let records = jobs
        .into_par_iter()
        .map(|(claim, field)| match field {
            None => ClaimRecord {
                claim,
                field: None,
                status: ClaimStatus::Skipped,
                summary: "not defined at the configured fields".into(),
                elapsed: Duration::ZERO,
            },
            Some(p) => run_claim(claim, p, cfg),
        })
        .collect();
    Report { records }
}

pub fn run_claim(claim: u8, p: u64, cfg: &RunConfig) -> ClaimRecord {
    let start = Instant::now();
    let outcome = Fp::new(p).and_then(|field| {
        let search = cfg.search();
        match claim {
            1 => claim_tame(field, &search),
            2 => claim_wild(field, &search),
            3 => claim_r_decomposable(field, &search),
            4 => claim_r_distinct(field, &search),
            5 => claim_r_not_t(field, &search),
            6 => claim_jordan(field, &search),
            7 => claim_k_family(field, &search),
            8 => claim_band(field, &search),
            9 => claim_semidihedral(field, &search),
            10 => claim_c_families(field, &search),
            11 => claim_properties(field, cfg.seed, &search),
            _ => Err(Error::ParameterOutOfDomain(format!("no claim {claim}"))),
        }
    });
    let (status, summary) = match outcome {
        Ok(tally) => tally.finish(),
        Err(e @ Error::BudgetExceeded { .. }) => (ClaimStatus::Skipped, e.to_string()),
        Err(e @ Error::Undecided(_)) => (ClaimStatus::Undecided, e.to_string()),
        Err(e) => (ClaimStatus::Fail, format!("error: {e}")),
    };
    ClaimRecord {
        claim,
        field: Some(p),
        status,
        summary,
        elapsed: start.elapsed(),
    }
}

/// Collects the sub-checks of one claim.
#[derive(Default)]
struct Tally {
    failures: Vec<String>,
    undecided: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn expect(&mut self, what: impl fmt::Display, got: Verdict, want: Verdict) {
        if got == want {
            return;
        }
        if got == Verdict::Undecided {
            self.undecided.push(format!("{what}: undecided"));
        } else {
            self.failures.push(format!("{what}: {got}, expected {want}"));
        }
    }

    fn check(&mut self, what: impl fmt::Display, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn note(&mut self, what: impl fmt::Display) {
        self.notes.push(what.to_string());
    }

    fn finish(self) -> (ClaimStatus, String) {
        let status = if !self.failures.is_empty() {
            ClaimStatus::Fail
        } else if !self.undecided.is_empty() {
            ClaimStatus::Undecided
        } else {
            ClaimStatus::Pass
        };
        // notes describe a passing run
        let notes = if status == ClaimStatus::Pass { self.notes } else { Vec::new() };
        let parts: Vec<String> = self.failures.into_iter().chain(self.undecided).chain(notes).collect();
        (status, parts.join("; "))
    }
}

fn subalgebra_count(field: Fp, g: usize, scope: Scope) -> Result<usize> {
    Ok(enumerate_proper_subalgebras(&Arc::new(Algebra::rsz(field, g)), scope)?.len())
}

fn claim_tame(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let (_, ms) = paper_fixture("tame3", field)?;
    let q = field.modulus() as usize;
    t.expect("M1 vs M2 isomorphic", is_isomorphic(&ms[0], &ms[1], cfg)?.verdict(), Verdict::No);
    let r = r_isomorphic(&ms[0], &ms[1], Scope::All, cfg)?;
    t.expect("R-isomorphic over all proper subalgebras", r.verdict, Verdict::Yes);
    t.check(format!("expected {} proper subalgebras, saw {}", q + 2, r.checked), r.checked == q + 2);
    for (i, m) in ms.iter().enumerate() {
        for s in enumerate_proper_subalgebras(m.algebra(), Scope::Maximal)? {
            let mut parts = decompose(&restrict(m, &s)?, cfg.budget)?;
            parts.sort_by_key(Module::dim);
            let dims: Vec<usize> = parts.iter().map(Module::dim).collect();
            let ok = dims == [1, 2]
                && parts[0].action().iter().all(Mat::is_zero)
                && is_indecomposable(&parts[1], cfg.budget)?.is_indecomposable();
            t.check(format!("M{} on {}: parts {dims:?}", i + 1, s.describe()), ok);
        }
    }
    t.note(format!("{} subalgebras, maximal restrictions = trivial(1) + indecomposable(2)", r.checked));
    Ok(t)
}

fn claim_wild(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let (_, ms) = paper_fixture("wild6", field)?;
    t.expect("M1 vs M2 isomorphic", is_isomorphic(&ms[0], &ms[1], cfg)?.verdict(), Verdict::No);
    let r = r_isomorphic(&ms[0], &ms[1], Scope::All, cfg)?;
    t.expect("R-isomorphic over all proper subalgebras", r.verdict, Verdict::Yes);
    let expected = subalgebra_count(field, 3, Scope::All)?;
    t.check(format!("checked {} of {expected} subalgebras", r.checked), r.checked == expected);
    t.note(format!("{} subalgebras", r.checked));
    Ok(t)
}

fn claim_r_decomposable(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let (_, ms) = paper_fixture("rdec4", field)?;
    let q = field.modulus() as usize;
    t.expect("indecomposable", is_indecomposable(&ms[0], cfg.budget)?.verdict(), Verdict::Yes);
    let r = r_decomposable(&ms[0], cfg)?;
    match (&r.verdict, &r.witness) {
        (Verdict::No, Some(Witness::Subalgebra { description, reason, .. })) => {
            t.failures.push(format!("R-decomposable: NO, restriction to {description}: {reason}"))
        }
        _ => t.expect("R-decomposable", r.verdict, Verdict::Yes),
    }
    if r.verdict == Verdict::Yes {
        t.check(format!("checked {} maximal subalgebras", r.checked), r.checked == q * q + q + 1);
    }
    Ok(t)
}

fn claim_r_distinct(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let (_, ms) = paper_fixture("rdist4", field)?;
    let max = r_distinct(&ms[0], &ms[1], Scope::Maximal, cfg)?;
    t.expect("R-distinct over maximal subalgebras", max.verdict, Verdict::Yes);
    let all = r_distinct(&ms[0], &ms[1], Scope::All, cfg)?;
    t.expect("R-distinct over all proper subalgebras", all.verdict, Verdict::No);
    let at_unit = matches!(&all.witness, Some(Witness::Subalgebra { index: 0, description, .. }) if description == "k*1");
    t.check("scope=all must fail at k*1", at_unit);
    t.note("scope=all fails at k*1 (equal-dimensional restrictions to the scalars coincide)");
    Ok(t)
}

fn claim_r_not_t(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let (a, ms) = paper_fixture("rnott6", field)?;
    t.expect(
        "R-isomorphic over all proper subalgebras",
        r_isomorphic(&ms[0], &ms[1], Scope::All, cfg)?.verdict,
        Verdict::Yes,
    );
    let auts = enumerate_automorphisms(&a, cfg.budget)?.len();
    let r = t_isomorphic(&ms[0], &ms[1], cfg)?;
    t.expect("T-isomorphic", r.verdict, Verdict::No);
    t.check(format!("exhausted {} of {auts} automorphisms", r.checked), r.checked == auts);
    t.note(format!("not T-isomorphic after {auts} automorphisms"));
    Ok(t)
}

fn claim_jordan(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for n in 1..=3 {
        let family: Vec<Module> = field.elements().map(|l| jordan(field, l, n)).collect::<Result<_>>()?;
        let orbit = t_orbit(&family[0], &family[1..], cfg)?;
        t.check(
            format!("n={n}: T-classes {:?}", orbit.partition.classes),
            orbit.partition.classes.len() == 1,
        );
        t.check(format!("n={n}: some twist of J(0,n) is outside the family"), orbit.closure.is_closed());
        if !orbit.partition.is_decided() {
            t.undecided.push(format!("n={n}: undecided pairs"));
        }
    }
    t.note(format!("{} members per n form one closed T-orbit, n <= 3", field.modulus()));
    Ok(t)
}

fn claim_k_family(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let swap = Automorphism::Linear(Mat::from_vec(field, 2, 2, vec![0, 1, 1, 0]));
    for n in 1..=2 {
        let family: Vec<Module> = Lambda::projective_line(field)
            .into_iter()
            .map(|l| k_module(field, l, n))
            .collect::<Result<_>>()?;
        let classes = t_classes(&family, cfg)?;
        t.check(format!("n={n}: T-classes {:?}", classes.classes), classes.classes.len() == 1);
        let zero = &family[0];
        let inf = family.last().expect("nonempty");
        t.expect(
            format!("n={n}: K(0) vs swap twist of K(inf)"),
            is_isomorphic(zero, &twist(inf, &swap)?, cfg)?.verdict(),
            Verdict::Yes,
        );
    }
    let (_, tame) = paper_fixture("tame3", field)?;
    let classes = t_classes(&tame, cfg)?;
    t.check(
        format!("tame3 T-classes {:?}", classes.classes),
        classes.classes == vec![vec![0], vec![1]],
    );
    t.note("K family is one T-class for n <= 2 (swap links 0 and inf); tame3 has two T-classes");
    Ok(t)
}

fn claim_band(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    for lambda in field.units() {
        let m = band4(field, lambda, 1)?;
        for a in field.units() {
            let target = band4(field, field.mul(field.mul(a, a), lambda), 1)?;
            let tw = twist(&m, &Automorphism::scale_y(a))?;
            t.expect(
                format!("f_{a} twist of band({lambda})"),
                is_isomorphic(&tw, &target, cfg)?.verdict(),
                Verdict::Yes,
            );
        }
    }
    let (bx, by) = band4_matrices(field, 1);
    let m2 = families::b_blowup(&families::band4_algebra(field), &bx, &by, 2);
    t.note(match m2 {
        Ok(_) => "m=2 blow-up: valid module".to_string(),
        Err(Error::RelationViolated { relation }) => format!("m=2 blow-up: violates {relation} (not scored)"),
        Err(e) => return Err(e),
    });
    Ok(t)
}

fn claim_semidihedral(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let algebra = Arc::new(Algebra::semidihedral(field)?);
    t.check("table validation", algebra.validate().is_ok());
    let auts = enumerate_automorphisms(&algebra, cfg.budget)?;
    let mut shape_ok = !auts.is_empty();
    for f in &auts {
        if let Automorphism::Table { images, .. } = f {
            // coordinates: 1, x, y, xy, yx, xyx, yxy
            shape_ok &= images[0][2] == 0 && images[0][1] != 0;
        }
    }
    t.check("automorphisms with a2 != 0 or a1 = 0", shape_ok);
    let (_, ms) = paper_fixture("semidih2", field)?;
    for (i, m) in ms.iter().enumerate() {
        t.expect(
            format!("M{} indecomposable", i + 1),
            is_indecomposable(m, cfg.budget)?.verdict(),
            Verdict::Yes,
        );
    }
    let family: Vec<Module> = Lambda::projective_line(field)
        .into_iter()
        .map(|l| semidihedral_line(&algebra, l))
        .collect::<Result<_>>()?;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            t.expect(
                format!("family members {i}, {j} isomorphic"),
                is_isomorphic(&family[i], &family[j], cfg)?.verdict(),
                Verdict::No,
            );
        }
    }
    t.expect("T-isomorphic", t_isomorphic(&ms[0], &ms[1], cfg)?.verdict, Verdict::No);
    t.note(format!("{} automorphisms, all with a2 = 0, a1 != 0", auts.len()));
    Ok(t)
}

fn claim_c_families(field: Fp, cfg: &SearchConfig) -> Result<Tally> {
    let mut t = Tally::default();
    let units: Vec<u64> = field.units().collect();
    let base = c2(field, 1, 1)?;
    let mut c2s = Vec::new();
    for &a in &units {
        for &b in &units {
            let m = c2(field, a, b)?;
            t.expect(
                format!("C({a},{b}) vs C(1,1) T-isomorphic"),
                t_isomorphic(&m, &base, cfg)?.verdict,
                Verdict::Yes,
            );
            c2s.push(m);
        }
    }
    let mut c3s = Vec::new();
    for &a in &units {
        for &b in &units {
            for &c in &units {
                c3s.push(c3(field, a, b, c)?);
            }
        }
    }
    let classes = t_classes(&c3s, cfg)?;
    t.check(format!("c3 T-classes {:?}", classes.classes), classes.classes.len() == 1);
    for family in [&c2s, &c3s] {
        for i in 0..family.len() {
            for j in i + 1..family.len() {
                t.expect(
                    format!("dim {} members {i}, {j} isomorphic", family[i].dim()),
                    is_isomorphic(&family[i], &family[j], cfg)?.verdict(),
                    Verdict::No,
                );
            }
        }
    }
    t.note(format!(
        "{} c2 members T-isomorphic to C(1,1); {} c3 members in one T-class; members pairwise non-isomorphic",
        c2s.len(),
        c3s.len()
    ));
    Ok(t)
}

/// Every fixture module plus small family members.
pub fn fixture_corpus(field: Fp) -> Result<Vec<Module>> {
    let mut corpus = Vec::new();
    for name in families::FIXTURE_NAMES {
        corpus.extend(paper_fixture(name, field)?.1);
    }
    for n in 1..=3 {
        for l in field.elements() {
            corpus.push(jordan(field, l, n)?);
        }
    }
    for n in 1..=2 {
        for l in Lambda::projective_line(field) {
            corpus.push(k_module(field, l, n)?);
        }
    }
    corpus.push(c2(field, 1, 1)?);
    corpus.push(c3(field, 1, 1, 1)?);
    Ok(corpus)
}

pub fn random_invertible(field: Fp, n: usize, rng: &mut impl Rng) -> Mat {
    loop {
        let m = Mat::from_fn(field, n, n, |_, _| rng.gen_range(0..field.modulus()));
        if m.rank() == n {
            return m;
        }
    }
}

fn automorphisms_of(a: &Algebra, cache: &mut Vec<(Arc<Algebra>, Vec<Automorphism>)>, budget: u64) -> Result<Vec<Automorphism>> {
    if let Some((_, auts)) = cache.iter().find(|(b, _)| **b == *a) {
        return Ok(auts.clone());
    }
    let auts = enumerate_automorphisms(a, budget)?;
    cache.push((Arc::new(a.clone()), auts.clone()));
    Ok(auts)
}

/// Randomized invariant checks over the fixture corpus: conjugation
/// soundness, the twist action law, End dimension under twists, Hom
/// additivity, decomposition, rank-nullity and restriction
/// basis-independence. Each property runs `max(trials, corpus size)` times,
/// cycling through the corpus.
fn claim_properties(field: Fp, seed: u64, cfg: &SearchConfig) -> Result<Tally> {
    let trials = 100;
    let mut t = Tally::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corpus = fixture_corpus(field)?;
    let runs = trials.max(corpus.len());
    let mut cache = Vec::new();

    for i in 0..runs {
        let m = &corpus[i % corpus.len()];
        let p = random_invertible(field, m.dim(), &mut rng);
        let c = m.conjugate(&p)?;
        let iso = is_isomorphic(m, &c, cfg)?;
        t.check(
            format!("conjugation: module {} not isomorphic to its conjugate", i % corpus.len()),
            iso.witness().is_some_and(|w| m.intertwines(&c, w)),
        );
        if matches!(m.algebra().kind(), AlgebraKind::Rsz { .. }) {
            t.expect("conjugation: R-isomorphic", r_isomorphic(m, &c, Scope::Maximal, cfg)?.verdict, Verdict::Yes);
        }
        let tr = t_isomorphic(m, &c, cfg)?;
        t.check(
            "conjugation: T-isomorphic with a valid witness",
            tr.twist_witness().is_some_and(|w| w.verify(m, &c)),
        );
    }

    for i in 0..runs {
        let m = &corpus[i % corpus.len()];
        let auts = automorphisms_of(m.algebra(), &mut cache, cfg.budget)?;
        let f = auts.choose(&mut rng).expect("identity");
        let g = auts.choose(&mut rng).expect("identity");
        let lhs = twist(&twist(m, f)?, g)?;
        let rhs = twist(m, &f.compose(g, m.algebra())?)?;
        t.check("twist law: twist(twist(m,f),g) = twist(m, f.g)", lhs == rhs);
        t.check(
            "twist preserves dim End",
            end_space(&twist(m, f)?).dim() == end_space(m).dim(),
        );
    }

    for i in 0..runs {
        let m1 = &corpus[i % corpus.len()];
        let same: Vec<&Module> = corpus.iter().filter(|n| n.algebra() == m1.algebra()).collect();
        let m2 = *same.choose(&mut rng).expect("m1 itself");
        let n = *same.choose(&mut rng).expect("m1 itself");
        let sum = direct_sum(m1, m2)?;
        t.check(
            "Hom additivity in the source",
            hom_space(&sum, n)?.dim() == hom_space(m1, n)?.dim() + hom_space(m2, n)?.dim(),
        );
        t.check(
            "Hom additivity in the target",
            hom_space(n, &sum)?.dim() == hom_space(n, m1)?.dim() + hom_space(n, m2)?.dim(),
        );
    }

    for i in 0..runs {
        let m = &corpus[i % corpus.len()];
        let parts = decompose(m, cfg.budget)?;
        t.check("decompose: dimensions add up", parts.iter().map(Module::dim).sum::<usize>() == m.dim());
        let rebuilt = direct_sum_all(m.algebra(), &parts)?;
        t.expect("decompose: reassembly isomorphic", is_isomorphic(m, &rebuilt, cfg)?.verdict(), Verdict::Yes);
    }

    for _ in 0..runs {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let a = Mat::from_fn(field, rows, cols, |_, _| rng.gen_range(0..field.modulus()));
        t.check("rank-nullity", a.rank() + a.kernel_basis().len() == cols);
    }

    let rsz: Vec<&Module> = corpus
        .iter()
        .filter(|m| matches!(m.algebra().kind(), AlgebraKind::Rsz { .. }))
        .collect();
    for i in 0..runs {
        let m1 = rsz[i % rsz.len()];
        let partners: Vec<&Module> = rsz.iter().copied().filter(|n| n.algebra() == m1.algebra()).collect();
        let m2 = *partners.choose(&mut rng).expect("m1 itself");
        let subs = enumerate_proper_subalgebras(m1.algebra(), Scope::All)?;
        let s = subs.choose(&mut rng).expect("k*1");
        let q = random_invertible(field, s.dim_w(), &mut rng);
        let rebased: Vec<Vec<u64>> = (0..s.dim_w())
            .map(|j| {
                let mut v = vec![0; m1.algebra().generator_count()];
                for (k, w) in s.w_basis().iter().enumerate() {
                    for (x, wx) in v.iter_mut().zip(w) {
                        *x = field.add(*x, field.mul(q.get(k, j), *wx));
                    }
                }
                v
            })
            .collect();
        let s2 = Subalgebra::with_basis(Arc::clone(m1.algebra()), rebased)?;
        let v1 = is_isomorphic(&restrict(m1, s)?, &restrict(m2, s)?, cfg)?.verdict();
        let v2 = is_isomorphic(&restrict(m1, &s2)?, &restrict(m2, &s2)?, cfg)?.verdict();
        t.check("restriction verdict depends on the basis of W", v1 == v2);
    }

    t.failures.dedup();
    t.note(format!("7 properties x {runs} trials over {} corpus modules", corpus.len()));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_sets_and_skips() {
        let cfg = RunConfig {
            fields: vec![7],
            ..RunConfig::default()
        };
        assert_eq!(claim_fields(9), None);
        let report = verify_paper(&RunConfig {
            fields: vec![],
            ..cfg.clone()
        });
        assert_eq!(report.records.len(), 11);
        assert!(report.records.iter().all(|r| r.status == ClaimStatus::Skipped));
    }

    #[test]
    fn tally_precedence() {
        let mut t = Tally::default();
        t.expect("a", Verdict::Undecided, Verdict::Yes);
        assert_eq!(t.finish().0, ClaimStatus::Undecided);
        let mut t = Tally::default();
        t.expect("a", Verdict::Undecided, Verdict::Yes);
        t.expect("b", Verdict::No, Verdict::Yes);
        assert_eq!(t.finish().0, ClaimStatus::Fail);
    }

    #[test]
    fn cheap_claims_pass_at_two() {
        let cfg = RunConfig::default();
        for claim in [1, 2, 4, 6] {
            let r = run_claim(claim, 2, &cfg);
            assert_eq!(r.status, ClaimStatus::Pass, "claim {claim}: {}", r.summary);
        }
    }
}
