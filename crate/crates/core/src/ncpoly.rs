//! Noncommutative polynomials over `F_p` and monomial word rewriting.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Fp, Mat};

/// A word in the generators, as generator indices. The empty word is the unit.
pub type Word = Vec<usize>;

/// Noncommutative polynomial in normal form: terms sorted by word, no zero
/// coefficients, no repeated words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NcPoly {
    field: Fp,
    terms: Vec<(u64, Word)>,
}

impl NcPoly {
    pub fn zero(field: Fp) -> Self {
        NcPoly {
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: Fp, c: u64) -> Self {
        NcPoly::from_terms(field, [(c, Vec::new())])
    }

    pub fn monomial(field: Fp, c: u64, word: Word) -> Self {
        NcPoly::from_terms(field, [(c, word)])
    }

    pub fn generator(field: Fp, index: usize) -> Self {
        NcPoly::monomial(field, 1, vec![index])
    }

    pub fn from_terms(field: Fp, terms: impl IntoIterator<Item = (u64, Word)>) -> Self {
        let mut acc: BTreeMap<Word, u64> = BTreeMap::new();
        for (c, w) in terms {
            let e = acc.entry(w).or_insert(0);
            *e = field.add(*e, c % field.modulus());
        }
        NcPoly {
            field,
            terms: acc.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (c, w)).collect(),
        }
    }

    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn terms(&self) -> &[(u64, Word)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest generator index appearing in any term.
    pub fn max_generator(&self) -> Option<usize> {
        self.terms.iter().flat_map(|(_, w)| w.iter().copied()).max()
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        NcPoly::from_terms(
            self.field,
            self.terms.iter().chain(&other.terms).cloned(),
        )
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        self.add(&other.scale(self.field.modulus() - 1))
    }

    pub fn scale(&self, c: u64) -> NcPoly {
        let f = self.field;
        NcPoly::from_terms(f, self.terms.iter().map(|(a, w)| (f.mul(*a, c), w.clone())))
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.push((f.mul(*a, *b), w));
            }
        }
        NcPoly::from_terms(f, out)
    }

    pub fn pow(&self, exp: usize) -> NcPoly {
        (0..exp).fold(NcPoly::constant(self.field, 1), |acc, _| acc.mul(self))
    }

    /// Evaluates at square matrices, one per generator. The empty word maps
    /// to the identity of size `dim`.
    pub fn evaluate(&self, assignment: &[Mat], dim: usize) -> Result<Mat> {
        for m in assignment {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator matrix {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != self.field {
                return Err(Error::ModulusMismatch {
                    left: self.field.modulus(),
                    right: m.field().modulus(),
                });
            }
        }
        if let Some(g) = self.max_generator() {
            if g >= assignment.len() {
                return Err(Error::DimensionMismatch(format!(
                    "polynomial uses generator {g} but only {} matrices given",
                    assignment.len()
                )));
            }
        }
        let mut acc = Mat::zeros(self.field, dim, dim);
        for (c, w) in &self.terms {
            acc.add_scaled(&evaluate_word(self.field, w, assignment, dim), *c);
        }
        Ok(acc)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

pub(crate) fn evaluate_word(field: Fp, word: &[usize], assignment: &[Mat], dim: usize) -> Mat {
    match word.split_first() {
        None => Mat::identity(field, dim),
        Some((&first, rest)) => rest
            .iter()
            .fold(assignment[first].clone(), |acc, &g| &acc * &assignment[g]),
    }
}

struct PolyDisplay<'a> {
    poly: &'a NcPoly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, w)) in self.poly.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 || w.is_empty() {
                write!(f, "{c}")?;
            }
            write_word(f, w, self.names)?;
        }
        Ok(())
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[usize], names: &[String]) -> fmt::Result {
    let mut i = 0;
    while i < w.len() {
        let mut run = 1;
        while i + run < w.len() && w[i + run] == w[i] {
            run += 1;
        }
        let name = names.get(w[i]).map_or_else(|| format!("g{}", w[i]), Clone::clone);
        if run > 1 {
            write!(f, "{name}^{run}")?;
        } else {
            write!(f, "{name}")?;
        }
        i += run;
    }
    Ok(())
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly{:?}", self.terms)
    }
}

/// Rewriting rule `lhs -> rhs`; `rhs = None` sends the word to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Option<Word>,
}

/// Monomial rewriting system on words, ordered by weighted length and then
/// lexicographically. Zero is below every word.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    weights: Vec<u64>,
    rules: Vec<Rule>,
}

impl RewriteSystem {
    pub fn new(weights: Vec<u64>) -> Self {
        RewriteSystem {
            weights,
            rules: Vec::new(),
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    fn weight(&self, w: &[usize]) -> u64 {
        w.iter().map(|&g| self.weights[g]).sum()
    }

    fn greater(&self, a: &[usize], b: &[usize]) -> bool {
        (self.weight(a), a) > (self.weight(b), b)
    }

    /// Adds the identity `a = b` (`None` meaning zero), oriented by the order.
    /// Panics if the two sides are equal words.
    pub fn add_equation(&mut self, a: Option<Word>, b: Option<Word>) {
        let rule = match (a, b) {
            (Some(a), None) | (None, Some(a)) => Rule { lhs: a, rhs: None },
            (Some(a), Some(b)) => {
                assert_ne!(a, b, "trivial equation");
                if self.greater(&a, &b) {
                    Rule { lhs: a, rhs: Some(b) }
                } else {
                    Rule { lhs: b, rhs: Some(a) }
                }
            }
            (None, None) => return,
        };
        if !self.rules.contains(&rule) {
            self.rules.push(rule);
        }
    }

    /// Normal form of a word, `None` when it rewrites to zero.
    pub fn normal_form(&self, word: &[usize]) -> Option<Word> {
        let mut w = word.to_vec();
        'outer: loop {
            for rule in &self.rules {
                if let Some(pos) = find(&w, &rule.lhs) {
                    match &rule.rhs {
                        None => return None,
                        Some(rhs) => {
                            let mut next = w[..pos].to_vec();
                            next.extend_from_slice(rhs);
                            next.extend_from_slice(&w[pos + rule.lhs.len()..]);
                            w = next;
                            continue 'outer;
                        }
                    }
                }
            }
            return Some(w);
        }
    }

    fn reduce_opt(&self, w: Option<Word>) -> Option<Word> {
        w.and_then(|w| self.normal_form(&w))
    }

    /// Knuth-Bendix completion on monomial rules. Returns an error if the
    /// rule count grows past `max_rules`.
    pub fn complete(&mut self, max_rules: usize) -> Result<()> {
        loop {
            let mut new_eqs = Vec::new();
            for i in 0..self.rules.len() {
                for j in 0..self.rules.len() {
                    for (a, b) in self.critical_pairs(&self.rules[i], &self.rules[j]) {
                        let (a, b) = (self.reduce_opt(a), self.reduce_opt(b));
                        if a != b && !new_eqs.contains(&(a.clone(), b.clone())) {
                            new_eqs.push((a, b));
                        }
                    }
                }
            }
            if new_eqs.is_empty() {
                self.interreduce();
                return Ok(());
            }
            for (a, b) in new_eqs {
                let (a, b) = (self.reduce_opt(a), self.reduce_opt(b));
                if a != b {
                    self.add_equation(a, b);
                }
            }
            if self.rules.len() > max_rules {
                return Err(Error::TableInconsistent(format!(
                    "rewriting completion exceeded {max_rules} rules"
                )));
            }
        }
    }

    fn critical_pairs(&self, r1: &Rule, r2: &Rule) -> Vec<(Option<Word>, Option<Word>)> {
        let mut out = Vec::new();
        let (l1, l2) = (&r1.lhs, &r2.lhs);
        // suffix of l1 overlapping a prefix of l2
        for k in 1..l1.len().min(l2.len()) {
            if l1[l1.len() - k..] == l2[..k] {
                let left = r1.rhs.clone().map(|mut r| {
                    r.extend_from_slice(&l2[k..]);
                    r
                });
                let right = r2.rhs.clone().map(|r| {
                    let mut w = l1[..l1.len() - k].to_vec();
                    w.extend_from_slice(&r);
                    w
                });
                out.push((left, right));
            }
        }
        // l2 strictly inside l1
        if r1 != r2 && l2.len() <= l1.len() {
            if let Some(pos) = find(l1, l2) {
                let right = r2.rhs.clone().map(|r| {
                    let mut w = l1[..pos].to_vec();
                    w.extend_from_slice(&r);
                    w.extend_from_slice(&l1[pos + l2.len()..]);
                    w
                });
                out.push((r1.rhs.clone(), right));
            }
        }
        out
    }

    /// Drops rules whose left side is reducible by another rule and
    /// normalizes right sides.
    fn interreduce(&mut self) {
        let mut i = 0;
        while i < self.rules.len() {
            let lhs = self.rules[i].lhs.clone();
            let redundant = self
                .rules
                .iter()
                .enumerate()
                .any(|(j, r)| j != i && find(&lhs, &r.lhs).is_some());
            if redundant {
                self.rules.remove(i);
            } else {
                i += 1;
            }
        }
        for i in 0..self.rules.len() {
            let rhs = self.rules[i].rhs.clone();
            self.rules[i].rhs = self.reduce_opt(rhs);
        }
    }

    /// All irreducible words over `generators` letters, sorted by length then
    /// lexicographically. Fails if irreducible words of length `max_len` exist.
    pub fn irreducible_words(&self, generators: usize, max_len: usize) -> Result<Vec<Word>> {
        let mut basis = vec![Vec::new()];
        let mut frontier: Vec<Word> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for g in 0..generators {
                    let mut v = w.clone();
                    v.push(g);
                    if self.normal_form(&v).as_ref() == Some(&v) {
                        next.push(v);
                    }
                }
            }
            if next.is_empty() {
                return Ok(basis);
            }
            basis.extend(next.iter().cloned());
            frontier = next;
        }
        Err(Error::TableInconsistent(format!(
            "irreducible words of length {max_len} remain: quotient not finite at this bound"
        )))
    }
}

fn find(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.is_empty() || needle.len() > hay.len() {
        return None;
    }
    hay.windows(needle.len()).position(|w| w == needle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }

    #[test]
    fn normalization_merges_and_drops_zero_terms() {
        let k = Fp::new(3).unwrap();
        let p = NcPoly::from_terms(k, [(1, vec![0]), (2, vec![0]), (1, vec![1, 0])]);
        assert_eq!(p.terms(), &[(1, vec![1, 0])]);
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let k = f2();
        let x = NcPoly::generator(k, 0);
        let y = NcPoly::generator(k, 1);
        let e21 = Mat::unit(k, 2, 2, 1);
        assert!(x.pow(2).evaluate(&[e21.clone(), Mat::zeros(k, 2, 2)], 2).unwrap().is_zero());

        let rel = y.pow(2).sub(&x.mul(&y).mul(&x));
        assert!(rel.evaluate(&[e21, Mat::zeros(k, 2, 2)], 2).unwrap().is_zero());

        let xm = Mat::from_units(k, 6, &[(4, 1, 1), (5, 2, 1), (6, 3, 1)]);
        let ym = Mat::unit(k, 6, 4, 2);
        assert!(x.mul(&y).evaluate(&[xm, ym], 6).unwrap().is_zero());
    }

    #[test]
    fn empty_word_is_identity() {
        let k = f2();
        let one = NcPoly::constant(k, 1);
        assert!(one.evaluate(&[], 3).unwrap().is_identity());
    }

    #[test]
    fn evaluation_rejects_wrong_sizes() {
        let k = f2();
        let x = NcPoly::generator(k, 0);
        assert!(matches!(
            x.evaluate(&[Mat::zeros(k, 2, 2)], 3),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn display_uses_generator_names() {
        let k = f2();
        let names = vec!["x".to_string(), "y".to_string()];
        let p = NcPoly::monomial(k, 1, vec![1, 1]).add(&NcPoly::monomial(k, 1, vec![0, 1, 0]));
        assert_eq!(p.display_with(&names).to_string(), "xyx + y^2");
    }

    #[test]
    fn completion_of_semidihedral_rules() {
        // x^2 -> 0, y^3 -> 0, y^2 -> xyx
        let mut rs = RewriteSystem::new(vec![1, 3]);
        rs.add_equation(Some(vec![0, 0]), None);
        rs.add_equation(Some(vec![1, 1, 1]), None);
        rs.add_equation(Some(vec![1, 1]), Some(vec![0, 1, 0]));
        rs.complete(64).unwrap();
        assert_eq!(rs.normal_form(&[0, 1, 0, 1]), None);
        assert_eq!(rs.normal_form(&[1, 0, 1, 0]), None);
        assert_eq!(rs.normal_form(&[1, 1]), Some(vec![0, 1, 0]));
        let basis = rs.irreducible_words(2, 10).unwrap();
        assert_eq!(
            basis,
            vec![
                vec![],
                vec![0],
                vec![1],
                vec![0, 1],
                vec![1, 0],
                vec![0, 1, 0],
                vec![1, 0, 1]
            ]
        );
    }

    #[test]
    fn free_algebra_has_no_finite_basis() {
        let rs = RewriteSystem::new(vec![1]);
        assert!(rs.irreducible_words(1, 5).is_err());
    }
}
