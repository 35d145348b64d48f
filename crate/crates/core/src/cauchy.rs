//! Biwords and the free Cauchy identity
//! `⟨Π 1/(1 − x_ij)⟩ = Σ_{std(v) = std(u)⁻¹} u ⊗ v = Σ_σ F_σ ⊗ G_σ = Σ_σ Q_σ ⊗ P_σ`.

use std::fmt;

use crate::bases::{expand, BasisTag};
use crate::error::{Error, Result};
use crate::fqsym::{realize, realize_elem, Basis};
use crate::linear::{LinComb, Tensor};
use crate::perm::{Composition, Permutation, Word};
use crate::qsym::{fundamental_poly, monomial_product, Monomial};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Priority {
    Top,
    Bottom,
}

/// A two-row word, stored column by column as `(top, bottom)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Biword {
    columns: Vec<(u32, u32)>,
}

impl Biword {
    pub fn new(top: &Word, bottom: &Word) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::SizeMismatch {
                left: top.len(),
                right: bottom.len(),
            });
        }
        Ok(Biword {
            columns: top.0.iter().copied().zip(bottom.0.iter().copied()).collect(),
        })
    }

    pub fn from_columns(columns: Vec<(u32, u32)>) -> Self {
        Biword { columns }
    }

    pub fn columns(&self) -> &[(u32, u32)] {
        &self.columns
    }

    pub fn top(&self) -> Word {
        Word(self.columns.iter().map(|c| c.0).collect())
    }

    pub fn bottom(&self) -> Word {
        Word(self.columns.iter().map(|c| c.1).collect())
    }

    /// Columns in lexicographic order, comparing the prioritized row first.
    pub fn sorted(&self, priority: Priority) -> Biword {
        let mut columns = self.columns.clone();
        match priority {
            Priority::Top => columns.sort(),
            Priority::Bottom => columns.sort_by_key(|&(t, b)| (b, t)),
        }
        Biword { columns }
    }

    /// `(u″, v′)`: top row of the bottom-priority sort, bottom row of the top-priority sort.
    pub fn pair(&self) -> (Word, Word) {
        (self.sorted(Priority::Bottom).top(), self.sorted(Priority::Top).bottom())
    }

    /// `std(u″) = std(v′)⁻¹`.
    pub fn bistd_holds(&self) -> bool {
        let (u, v) = self.pair();
        u.standardize() == v.standardize().inverse()
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} / {})", self.top(), self.bottom())
    }
}

/// Multisets of `d` columns over `[p] × [q]`, each as a top-sorted biword.
pub fn column_multisets(d: usize, p: u32, q: u32) -> Vec<Biword> {
    let cells: Vec<(u32, u32)> = (1..=p).flat_map(|i| (1..=q).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(start: usize, d: usize, cells: &[(u32, u32)], cur: &mut Vec<(u32, u32)>, out: &mut Vec<Biword>) {
        if cur.len() == d {
            out.push(Biword::from_columns(cur.clone()));
            return;
        }
        for k in start..cells.len() {
            cur.push(cells[k]);
            rec(k, d, cells, cur, out);
            cur.pop();
        }
    }
    rec(0, d, &cells, &mut cur, &mut out);
    out
}

pub fn pair_from_bimonomial(b: &Biword) -> (Word, Word) {
    b.pair()
}

fn word_tensor(pairs: impl IntoIterator<Item = (Word, Word)>) -> Tensor<Word> {
    let mut t = Tensor::zero(2);
    for (u, v) in pairs {
        t.add_term(vec![u, v], crate::linear::rat(1));
    }
    t
}

/// `⟨Π 1/(1 − x_ij)⟩` in degree `d`: first factor over `p` letters, second over `q`.
pub fn free_cauchy(d: usize, p: u32, q: u32) -> Tensor<Word> {
    word_tensor(column_multisets(d, p, q).iter().map(pair_from_bimonomial))
}

/// `Σ u ⊗ v` over `std(v) = std(u)⁻¹`, by direct enumeration of words.
pub fn free_cauchy_words(d: usize, p: u32, q: u32) -> Tensor<Word> {
    let vs = Word::all(d, q);
    let mut pairs = Vec::new();
    for u in Word::all(d, p) {
        let target = u.standardize().inverse();
        pairs.extend(
            vs.iter()
                .filter(|v| v.standardize() == target)
                .map(|v| (u.clone(), v.clone())),
        );
    }
    word_tensor(pairs)
}

fn realized_tensor(x: &LinComb<Word>, y: &LinComb<Word>, out: &mut Tensor<Word>) {
    for (u, cu) in x.iter() {
        for (v, cv) in y.iter() {
            out.add_term(vec![u.clone(), v.clone()], cu * cv);
        }
    }
}

/// `Σ_σ Q_σ(A') ⊗ P_σ(A'')` for an adjoint pair `(P, Q)` with `P` on the `G` side.
pub fn cauchy_for_pair(p_tag: BasisTag, q_tag: BasisTag, d: usize, p: u32, q: u32) -> Result<Tensor<Word>> {
    let mut out = Tensor::zero(2);
    for s in Permutation::all(d) {
        let qs = realize_elem(&expand(q_tag, &s)?, p as usize);
        let ps = realize_elem(&expand(p_tag, &s)?, q as usize);
        realized_tensor(&qs, &ps, &mut out);
    }
    Ok(out)
}

/// `Σ_σ F_σ ⊗ G_σ`, realized.
pub fn cauchy_fundamental(d: usize, p: u32, q: u32) -> Tensor<Word> {
    let mut out = Tensor::zero(2);
    for s in Permutation::all(d) {
        realized_tensor(
            &realize(&s, Basis::F, p as usize),
            &realize(&s, Basis::G, q as usize),
            &mut out,
        );
    }
    out
}

/// Label-level canonical element `Σ_σ Q_σ ⊗ P_σ`, rewritten in `F ⊗ G`.
pub fn canonical_element(p_tag: BasisTag, q_tag: BasisTag, d: usize) -> Result<Tensor<Permutation>> {
    let mut out = Tensor::zero(2);
    for s in Permutation::all(d) {
        let qs = expand(q_tag, &s)?.in_f();
        let ps = expand(p_tag, &s)?.in_g();
        for (a, ca) in qs.iter() {
            for (b, cb) in ps.iter() {
                out.add_term(vec![a.clone(), b.clone()], ca * cb);
            }
        }
    }
    Ok(out)
}

/// Mixed commutative/noncommutative monomial `x^m · w`.
pub type MixedTerm = (Monomial, Word);

/// `Σ_I F_I(x_1..x_p) R_I(a_1..a_q)` in degree `d`.
pub fn cauchy_commutative_lhs(d: usize, p: usize, q: usize) -> LinComb<MixedTerm> {
    let mut out = LinComb::zero();
    for i in Composition::all(d) {
        let f = fundamental_poly(&i, p);
        let ribbon = crate::splitting::ribbon(&i);
        let r = realize_elem(&ribbon, q);
        for (m, cm) in f.iter() {
            for (w, cw) in r.iter() {
                out.add_term((m.clone(), w.clone()), cm * cw);
            }
        }
    }
    out
}

/// Degree-`d` slice of `Π_{i=1..p} Π_{j=1..q} (1 − x_i a_j)⁻¹`, factors in that order.
pub fn cauchy_commutative_rhs(d: usize, p: usize, q: usize) -> LinComb<MixedTerm> {
    let mut cur: LinComb<MixedTerm> = LinComb::term((Vec::new(), Word::empty()));
    for i in 0..p {
        for j in 1..=q as u32 {
            let mut next = LinComb::zero();
            for ((m, w), c) in cur.iter() {
                for k in 0..=(d - w.len()) {
                    let mut xm = vec![0u32; i + 1];
                    xm[i] = k as u32;
                    let mut letters = w.0.clone();
                    letters.extend(std::iter::repeat_n(j, k));
                    next.add_term((monomial_product(m, &xm), Word(letters)), c.clone());
                }
            }
            cur = next;
        }
    }
    cur.filter(|(_, w)| w.len() == d)
}
