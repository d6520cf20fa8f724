use std::sync::Arc;

use modequiv::algebra::{enumerate_automorphisms, enumerate_proper_subalgebras, Scope, Subalgebra};
use modequiv::cli::claims::fixture_corpus;
use modequiv::linalg::{Fp, Mat};
use modequiv::modrep::{
    decompose_with_basis, direct_sum, end_space, hom_space, is_isomorphic, restrict, socle_dim, twist, Module,
    SearchConfig,
};
use proptest::prelude::*;

fn corpus(p: u64) -> Vec<Module> {
    fixture_corpus(Fp::new(p).unwrap()).unwrap()
}

fn invertible(field: Fp, n: usize, entries: &[u64]) -> Option<Mat> {
    let m = Mat::from_fn(field, n, n, |i, j| entries[i * n + j] % field.modulus());
    (m.rank() == n).then_some(m)
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugates_are_isomorphic(p in prop::sample::select(vec![2u64, 3]), pick in any::<prop::sample::Index>(),
                                 entries in prop::collection::vec(any::<u64>(), 36)) {
        let corpus = corpus(p);
        let m = pick.get(&corpus);
        let Some(q) = invertible(m.field(), m.dim(), &entries) else { return Ok(()) };
        let c = m.conjugate(&q).unwrap();
        let r = is_isomorphic(m, &c, &cfg()).unwrap();
        let w = r.witness().expect("conjugates are isomorphic");
        prop_assert!(m.intertwines(&c, w));
        prop_assert_eq!(w.rank(), m.dim());
    }

    #[test]
    fn hom_is_additive(pick in any::<prop::sample::Index>(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let corpus = corpus(2);
        let m = pick.get(&corpus);
        let same: Vec<&Module> = corpus.iter().filter(|n| n.algebra() == m.algebra()).collect();
        let (x, y) = (*a.get(&same), *b.get(&same));
        let sum = direct_sum(x, y).unwrap();
        prop_assert_eq!(hom_space(&sum, m).unwrap().dim(), hom_space(x, m).unwrap().dim() + hom_space(y, m).unwrap().dim());
        prop_assert_eq!(hom_space(m, &sum).unwrap().dim(), hom_space(m, x).unwrap().dim() + hom_space(m, y).unwrap().dim());
        if let Ok(s) = socle_dim(&sum) {
            prop_assert_eq!(s, socle_dim(x).unwrap() + socle_dim(y).unwrap());
        }
    }

    #[test]
    fn twisting_is_a_group_action(p in prop::sample::select(vec![2u64, 3]), pick in any::<prop::sample::Index>(),
                                  f in any::<prop::sample::Index>(), g in any::<prop::sample::Index>()) {
        let corpus = corpus(p);
        let m = pick.get(&corpus);
        let auts = enumerate_automorphisms(m.algebra(), 1 << 20).unwrap();
        let (f, g) = (f.get(&auts), g.get(&auts));
        let lhs = twist(&twist(m, f).unwrap(), g).unwrap();
        let rhs = twist(m, &f.compose(g, m.algebra()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(end_space(&twist(m, f).unwrap()).dim(), end_space(m).dim());
    }

    #[test]
    fn decomposition_reassembles(p in prop::sample::select(vec![2u64, 3]), pick in any::<prop::sample::Index>()) {
        let corpus = corpus(p);
        let m = pick.get(&corpus);
        let d = decompose_with_basis(m, 1 << 20).unwrap();
        prop_assert_eq!(d.parts.iter().map(Module::dim).sum::<usize>(), m.dim());
        let inv = d.basis.inverse().unwrap().unwrap();
        let conj = m.conjugate(&inv).unwrap();
        let sum = d.parts.iter().skip(1).fold(d.parts[0].clone(), |acc, x| direct_sum(&acc, x).unwrap());
        prop_assert_eq!(conj.action(), sum.action());
    }

    #[test]
    fn rank_nullity(p in prop::sample::select(vec![2u64, 3, 5, 7]), rows in 1usize..8, cols in 1usize..8,
                    entries in prop::collection::vec(any::<u64>(), 64)) {
        let field = Fp::new(p).unwrap();
        let a = Mat::from_fn(field, rows, cols, |i, j| entries[i * 8 + j] % p);
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(a.apply(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn restriction_verdicts_ignore_the_basis_of_w(p in prop::sample::select(vec![2u64, 3]), pick in any::<prop::sample::Index>(),
                                                  other in any::<prop::sample::Index>(), sub in any::<prop::sample::Index>(),
                                                  entries in prop::collection::vec(any::<u64>(), 9)) {
        let corpus: Vec<Module> = corpus(p).into_iter().filter(|m| m.algebra().kind_name() == "rsz").collect();
        let m1 = pick.get(&corpus);
        let partners: Vec<&Module> = corpus.iter().filter(|n| n.algebra() == m1.algebra()).collect();
        let m2 = *other.get(&partners);
        let subs = enumerate_proper_subalgebras(m1.algebra(), Scope::All).unwrap();
        let s = sub.get(&subs);
        let field = m1.field();
        let Some(q) = invertible(field, s.dim_w(), &entries) else { return Ok(()) };
        let g = m1.algebra().generator_count();
        let rebased: Vec<Vec<u64>> = (0..s.dim_w())
            .map(|j| (0..g).map(|x| (0..s.dim_w()).fold(0, |acc, t| field.add(acc, field.mul(q.get(t, j), s.w_basis()[t][x])))).collect())
            .collect();
        let s2 = Subalgebra::with_basis(Arc::clone(m1.algebra()), rebased).unwrap();
        let v1 = is_isomorphic(&restrict(m1, s).unwrap(), &restrict(m2, s).unwrap(), &cfg()).unwrap().verdict();
        let v2 = is_isomorphic(&restrict(m1, &s2).unwrap(), &restrict(m2, &s2).unwrap(), &cfg()).unwrap().verdict();
        prop_assert_eq!(v1, v2);
    }
}
