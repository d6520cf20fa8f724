use crate::error::{Error, Result};
use crate::linalg::Fp;
use crate::ncpoly::{NcPoly, RewriteSystem, Word};

/// Structure constants of a finite-dimensional algebra. Basis element `i`
/// equals the product of generators along `words[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableAlgebra {
    labels: Vec<String>,
    words: Vec<Word>,
    unit: usize,
    /// `products[i * dim + j]` is the coefficient vector of `e_i * e_j`.
    products: Vec<Vec<u64>>,
    radical: Vec<usize>,
}

impl TableAlgebra {
    /// Raw constructor; nothing is checked until [`super::Algebra::table`].
    pub fn new(
        labels: Vec<String>,
        words: Vec<Word>,
        unit: usize,
        products: Vec<Vec<Vec<u64>>>,
        radical: Vec<usize>,
    ) -> Result<Self> {
        let dim = labels.len();
        if words.len() != dim || products.len() != dim || products.iter().any(|r| r.len() != dim) {
            return Err(Error::Schema(format!(
                "table needs {dim} words and a {dim}x{dim} product array"
            )));
        }
        if products.iter().flatten().any(|v| v.len() != dim) {
            return Err(Error::Schema(format!("product vectors must have length {dim}")));
        }
        Ok(TableAlgebra {
            labels,
            words,
            unit,
            products: products.into_iter().flatten().collect(),
            radical,
        })
    }

    /// Table spanned by the irreducible words of a complete rewriting system.
    pub(crate) fn from_rewriting(
        field: Fp,
        rs: &RewriteSystem,
        names: &[String],
        max_len: usize,
    ) -> Result<Self> {
        let words = rs.irreducible_words(names.len(), max_len)?;
        let dim = words.len();
        let labels = words
            .iter()
            .map(|w| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().map(|&g| names[g].as_str()).collect::<String>()
                }
            })
            .collect();
        let mut products = Vec::with_capacity(dim * dim);
        for a in &words {
            for b in &words {
                let mut ab = a.clone();
                ab.extend_from_slice(b);
                let mut v = vec![0u64; dim];
                if let Some(nf) = rs.normal_form(&ab) {
                    let idx = words.iter().position(|w| *w == nf).ok_or_else(|| {
                        Error::TableInconsistent(format!("normal form {nf:?} is not a basis word"))
                    })?;
                    v[idx] = 1 % field.modulus();
                }
                products.push(v);
            }
        }
        Ok(TableAlgebra {
            labels,
            words,
            unit: 0,
            products,
            radical: (1..dim).collect(),
        })
    }

    /// `k * 1 + span(X_1..X_g)` with all radical products zero.
    pub fn rsz(field: Fp, g: usize) -> Self {
        let dim = g + 1;
        let one = 1 % field.modulus();
        let mut products = vec![vec![0u64; dim]; dim * dim];
        for i in 0..dim {
            products[i][i] = one;
            products[i * dim][i] = one;
        }
        let names = if g <= 3 {
            ["X", "Y", "Z"][..g].iter().map(|s| s.to_string()).collect::<Vec<_>>()
        } else {
            (1..=g).map(|i| format!("X{i}")).collect()
        };
        let mut labels = vec!["1".to_string()];
        labels.extend(names);
        let mut words = vec![Vec::new()];
        words.extend((0..g).map(|i| vec![i]));
        TableAlgebra {
            labels,
            words,
            unit: 0,
            products,
            radical: (1..dim).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn radical(&self) -> &[usize] {
        &self.radical
    }

    pub fn product(&self, i: usize, j: usize) -> &[u64] {
        &self.products[i * self.dim() + j]
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vec<u64>) {
        let d = self.dim();
        assert_eq!(v.len(), d);
        self.products[i * d + j] = v;
    }

    /// Product array as nested `[i][j] -> coefficients`.
    pub fn product_array(&self) -> Vec<Vec<Vec<u64>>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.product(i, j).to_vec()).collect()).collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn generator_basis_index(&self, g: usize) -> Option<usize> {
        self.words.iter().position(|w| w.len() == 1 && w[0] == g)
    }

    /// Product of two elements given as coefficient vectors.
    pub fn mul(&self, field: Fp, a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = self.dim();
        let mut out = vec![0u64; d];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let c = field.mul(ai, bj);
                for (o, &t) in out.iter_mut().zip(self.product(i, j)) {
                    if t != 0 {
                        *o = field.add(*o, field.mul(c, t));
                    }
                }
            }
        }
        out
    }

    /// Evaluates a polynomial with generator `g` replaced by `images[g]`.
    pub fn evaluate(&self, field: Fp, poly: &NcPoly, images: &[Vec<u64>]) -> Vec<u64> {
        let d = self.dim();
        let one = self.basis_vector(self.unit);
        let mut acc = vec![0u64; d];
        for (c, w) in poly.terms() {
            let term = w.iter().fold(one.clone(), |e, &g| self.mul(field, &e, &images[g]));
            for (a, t) in acc.iter_mut().zip(term) {
                *a = field.add(*a, field.mul(*c, t));
            }
        }
        acc
    }

    /// The algebra element denoted by a generator word.
    pub fn word_element(&self, field: Fp, word: &[usize], generator_images: &[Vec<u64>]) -> Vec<u64> {
        word.iter().fold(self.basis_vector(self.unit), |e, &g| {
            self.mul(field, &e, &generator_images[g])
        })
    }

    pub(crate) fn generator_vectors(&self, generators: usize) -> Option<Vec<Vec<u64>>> {
        (0..generators)
            .map(|g| self.generator_basis_index(g).map(|i| self.basis_vector(i)))
            .collect()
    }

    pub(crate) fn validate(&self, field: Fp, generators: usize, relations: &[NcPoly]) -> Result<()> {
        let d = self.dim();
        let p = field.modulus();
        if self.unit >= d {
            return Err(Error::TableInconsistent(format!("unit index {} out of range", self.unit)));
        }
        if self.products.iter().flatten().any(|&c| c >= p) {
            return Err(Error::TableInconsistent("coefficients must be reduced mod p".into()));
        }
        if self.radical.iter().any(|&r| r >= d || r == self.unit) {
            return Err(Error::TableInconsistent("radical indices must be non-unit basis indices".into()));
        }
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.product(self.unit, i) != e.as_slice() || self.product(i, self.unit) != e.as_slice() {
                return Err(Error::TableInconsistent(format!(
                    "{} is not a two-sided unit for {}",
                    self.labels[self.unit], self.labels[i]
                )));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.product(i, j);
                for l in 0..d {
                    let left = self.mul(field, ij, &self.basis_vector(l));
                    let right = self.mul(field, &self.basis_vector(i), self.product(j, l));
                    if left != right {
                        return Err(Error::TableInconsistent(format!(
                            "({} * {}) * {} != {} * ({} * {})",
                            self.labels[i], self.labels[j], self.labels[l],
                            self.labels[i], self.labels[j], self.labels[l]
                        )));
                    }
                }
            }
        }
        let gens = self.generator_vectors(generators).ok_or_else(|| {
            Error::TableInconsistent("every generator needs a basis element with a one-letter word".into())
        })?;
        for (i, w) in self.words.iter().enumerate() {
            if w.iter().any(|&g| g >= generators) {
                return Err(Error::TableInconsistent(format!("word of {} uses unknown generator", self.labels[i])));
            }
            if self.word_element(field, w, &gens) != self.basis_vector(i) {
                return Err(Error::TableInconsistent(format!(
                    "defining word of {} does not multiply to it",
                    self.labels[i]
                )));
            }
        }
        for (r, rel) in relations.iter().enumerate() {
            if rel.max_generator().is_some_and(|g| g >= generators) {
                return Err(Error::TableInconsistent(format!("relation {r} uses unknown generator")));
            }
            if self.evaluate(field, rel, &gens).iter().any(|&c| c != 0) {
                return Err(Error::TableInconsistent(format!("relation {r} does not vanish in the table")));
            }
        }
        Ok(())
    }
}
