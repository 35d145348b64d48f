//! Quotients of the free algebra that FQSym projects onto: hypoplactic
//! (QSym), plactic (the dual of FSym) and sylvester (the dual of PBT).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::fqsym::{realize, realize_elem, Basis, FqsymElem};
use crate::linear::{rat, LinComb};
use crate::perm::{Composition, Permutation, Word};
use crate::qsym::normalize_monomial;

// ---------------------------------------------------------------- hypoplactic

/// Complete invariant of a hypoplactic class: evaluation and `Des(std(w)⁻¹)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HypoKey {
    pub evaluation: Vec<u32>,
    pub descents: Vec<usize>,
}

pub fn hypoplactic_key(w: &Word) -> HypoKey {
    HypoKey {
        evaluation: normalize_monomial(w.evaluation()),
        descents: w.standardize().inverse().descents(),
    }
}

pub fn hypoplactic_equiv(u: &Word, v: &Word) -> bool {
    hypoplactic_key(u) == hypoplactic_key(v)
}

/// `Σ_{std(v) = std(u)⁻¹} ũ ⊗ v` from the free Cauchy kernel.
pub fn hypoplactic_cauchy(d: usize, p: u32, q: u32) -> LinComb<(HypoKey, Word)> {
    crate::cauchy::free_cauchy(d, p, q)
        .iter()
        .map(|(t, c)| ((hypoplactic_key(&t[0]), t[1].clone()), c.clone()))
        .collect()
}

/// `Σ_I F_I(Ã) ⊗ R_I(A)`, with `F_I(Ã)` the image of `F_α(I)`.
pub fn hypoplactic_cauchy_ribbons(d: usize, p: u32, q: u32) -> LinComb<(HypoKey, Word)> {
    let mut out = LinComb::zero();
    for i in Composition::all(d) {
        let rep = crate::perm::alpha(&i);
        let left = realize(&rep, Basis::F, p as usize).map_labels(hypoplactic_key);
        let right = realize_elem(&crate::splitting::ribbon(&i), q as usize);
        for (a, ca) in left.iter() {
            for (b, cb) in right.iter() {
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
    }
    out
}

/// Label-level collapse `Σ_σ F_{C(σ)} ⊗ G_σ`, grouped as `Σ_I F_I ⊗ R_I`.
pub fn hypoplactic_cauchy_labels(d: usize) -> BTreeMap<Composition, LinComb<Permutation>> {
    let mut out: BTreeMap<Composition, LinComb<Permutation>> = BTreeMap::new();
    for s in Permutation::all(d) {
        out.entry(s.descent_composition()).or_default().add_term(s, rat(1));
    }
    out
}

// -------------------------------------------------------------------- plactic

/// A semistandard tableau, rows top to bottom (English notation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Option<Self> {
        let t = Tableau { rows };
        t.is_semistandard().then_some(t)
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        self.rows
            .iter()
            .all(|r| !r.is_empty() && r.windows(2).all(|p| p[0] <= p[1]))
            && self
                .rows
                .windows(2)
                .all(|p| p[1].len() <= p[0].len() && p[1].iter().zip(&p[0]).all(|(lo, hi)| hi < lo))
    }

    /// Row insertion: bump the leftmost entry strictly greater than `x`.
    pub fn insert(&mut self, mut x: u32) {
        for row in self.rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(k) => x = std::mem::replace(&mut row[k], x),
                None => {
                    row.push(x);
                    return;
                }
            }
        }
        self.rows.push(vec![x]);
    }

    /// Row reading word, bottom row first.
    pub fn reading_word(&self) -> Word {
        Word(self.rows.iter().rev().flatten().copied().collect())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

pub fn rsk_p(w: &Word) -> Tableau {
    let mut t = Tableau::empty();
    for &x in &w.0 {
        t.insert(x);
    }
    t
}

pub fn rsk_p_perm(s: &Permutation) -> Tableau {
    rsk_p(&Word(s.to_u32s()))
}

/// Same evaluation and plactically equivalent standardizations.
pub fn plactic_equiv(u: &Word, v: &Word) -> bool {
    normalize_monomial(u.evaluation()) == normalize_monomial(v.evaluation())
        && rsk_p(&Word(u.standardize().to_u32s())) == rsk_p(&Word(v.standardize().to_u32s()))
}

/// Words reachable by one elementary Knuth move.
pub fn knuth_neighbours(w: &Word) -> Vec<Word> {
    let v = &w.0;
    let mut out = Vec::new();
    for k in 0..v.len().saturating_sub(2) {
        let (a, b, c) = (v[k], v[k + 1], v[k + 2]);
        let mut push = |x: u32, y: u32, z: u32| {
            let mut u = v.clone();
            u[k] = x;
            u[k + 1] = y;
            u[k + 2] = z;
            out.push(Word(u));
        };
        // x z y ≡ z x y for x ≤ y < z
        if a <= c && c < b {
            push(b, a, c);
        }
        if b <= c && c < a {
            push(b, a, c);
        }
        // y x z ≡ y z x for x < y ≤ z
        if b < a && a <= c {
            push(a, c, b);
        }
        if c < a && a <= b {
            push(a, c, b);
        }
    }
    out
}

/// Connected component of `w` under a symmetric elementary-move relation.
pub fn closure(w: &Word, moves: impl Fn(&Word) -> Vec<Word>) -> BTreeSet<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut stack = vec![w.clone()];
    while let Some(x) = stack.pop() {
        if seen.insert(x.clone()) {
            stack.extend(moves(&x).into_iter().filter(|y| !seen.contains(y)));
        }
    }
    seen
}

/// `S_t = Σ_{P(σ) = t} F_σ` for every standard tableau `t` of size `d`.
pub fn plactic_s_t(d: usize) -> BTreeMap<Tableau, FqsymElem> {
    let mut out: BTreeMap<Tableau, LinComb<Permutation>> = BTreeMap::new();
    for s in Permutation::all(d) {
        out.entry(rsk_p_perm(&s)).or_default().add_term(s, rat(1));
    }
    out.into_iter().map(|(t, c)| (t, FqsymElem::new(Basis::F, c))).collect()
}

/// `S_t^*`: the plactic image of `G_σ(A)` for any `σ` with `P(σ) = t`, as a sum of tableaux.
pub fn plactic_s_t_star(t: &Tableau, q: u32) -> LinComb<Tableau> {
    let rep = Permutation::from_u32s(&t.reading_word().0).expect("standard tableau");
    realize(&rep, Basis::G, q as usize).map_labels(rsk_p)
}

/// `Σ u ⊗ v̄` from the free Cauchy kernel.
pub fn plactic_cauchy_right(d: usize, p: u32, q: u32) -> LinComb<(Word, Tableau)> {
    crate::cauchy::free_cauchy(d, p, q)
        .iter()
        .map(|(t, c)| ((t[0].clone(), rsk_p(&t[1])), c.clone()))
        .collect()
}

/// `Σ_t S_t ⊗ S_t^*`.
pub fn plactic_cauchy_tableaux(d: usize, p: u32, q: u32) -> LinComb<(Word, Tableau)> {
    let mut out = LinComb::zero();
    for (t, s_t) in plactic_s_t(d) {
        let left = realize_elem(&s_t, p as usize);
        let right = plactic_s_t_star(&t, q);
        for (a, ca) in left.iter() {
            for (b, cb) in right.iter() {
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
    }
    out
}

/// `Σ ū ⊗ v̄` from the free Cauchy kernel.
pub fn plactic_cauchy_both(d: usize, p: u32, q: u32) -> LinComb<(Tableau, Tableau)> {
    crate::cauchy::free_cauchy(d, p, q)
        .iter()
        .map(|(t, c)| ((rsk_p(&t[0]), rsk_p(&t[1])), c.clone()))
        .collect()
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Semistandard tableaux of the given shape with entries in `1..=k`, filled cell by cell.
pub fn semistandard_tableaux(shape: &[usize], k: u32) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut out = Vec::new();
    fn rec(idx: usize, cells: &[(usize, usize)], k: u32, rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        let Some(&(r, c)) = cells.get(idx) else {
            out.push(Tableau { rows: rows.clone() });
            return;
        };
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for x in left.max(above)..=k {
            rows[r].push(x);
            rec(idx + 1, cells, k, rows, out);
            rows[r].pop();
        }
    }
    rec(0, &cells, k, &mut rows, &mut out);
    out
}

/// `S_λ`: all tableaux of shape `λ` over `k` letters.
pub fn plactic_schur(shape: &[usize], k: u32) -> LinComb<Tableau> {
    LinComb::sum_of(semistandard_tableaux(shape, k))
}

/// `Σ_λ S_λ ⊗ S_λ`.
pub fn plactic_cauchy_symmetric(d: usize, p: u32, q: u32) -> LinComb<(Tableau, Tableau)> {
    let mut out = LinComb::zero();
    for shape in partitions(d) {
        let left = semistandard_tableaux(&shape, p);
        let right = semistandard_tableaux(&shape, q);
        for a in &left {
            for b in &right {
                out.add_term((a.clone(), b.clone()), rat(1));
            }
        }
    }
    out
}

// ------------------------------------------------------------------ sylvester

/// A planar binary tree whose nodes carry letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, u32, Box<BinaryTree>),
}

/// How equal letters descend during binary-search-tree insertion.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TieRule {
    /// letters `≤` the node go left
    Left,
    /// letters `≥` the node go right
    Right,
}

impl BinaryTree {
    pub fn nodes(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, _, r) => 1 + l.nodes() + r.nodes(),
        }
    }

    pub fn insert(&mut self, x: u32, rule: TieRule) {
        match self {
            BinaryTree::Leaf => *self = BinaryTree::Node(Box::new(BinaryTree::Leaf), x, Box::new(BinaryTree::Leaf)),
            BinaryTree::Node(l, y, r) => {
                let left = match rule {
                    TieRule::Left => x <= *y,
                    TieRule::Right => x < *y,
                };
                if left {
                    l.insert(x, rule)
                } else {
                    r.insert(x, rule)
                }
            }
        }
    }

    /// The same tree with labels erased.
    pub fn shape(&self) -> BinaryTree {
        match self {
            BinaryTree::Leaf => BinaryTree::Leaf,
            BinaryTree::Node(l, _, r) => BinaryTree::Node(Box::new(l.shape()), 0, Box::new(r.shape())),
        }
    }

    /// All unlabelled trees with `n` nodes.
    pub fn all(n: usize) -> Vec<BinaryTree> {
        if n == 0 {
            return vec![BinaryTree::Leaf];
        }
        let mut out = Vec::new();
        for k in 0..n {
            for l in BinaryTree::all(k) {
                for r in BinaryTree::all(n - 1 - k) {
                    out.push(BinaryTree::Node(Box::new(l.clone()), 0, Box::new(r)));
                }
            }
        }
        out
    }

    /// In-order reading of the labels.
    pub fn infix(&self) -> Vec<u32> {
        match self {
            BinaryTree::Leaf => Vec::new(),
            BinaryTree::Node(l, x, r) => {
                let mut v = l.infix();
                v.push(*x);
                v.extend(r.infix());
                v
            }
        }
    }

    /// Post-order reading (left, right, root): a word in the class of the tree.
    pub fn postfix(&self) -> Vec<u32> {
        match self {
            BinaryTree::Leaf => Vec::new(),
            BinaryTree::Node(l, x, r) => {
                let mut v = l.postfix();
                v.extend(r.postfix());
                v.push(*x);
                v
            }
        }
    }
}

/// Nested-parenthesis form, e.g. `((. 1 .) 2 (. 3 .))`; unlabelled nodes print as `*`.
impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => write!(f, "."),
            BinaryTree::Node(l, 0, r) => write!(f, "({l} * {r})"),
            BinaryTree::Node(l, x, r) => write!(f, "({l} {x} {r})"),
        }
    }
}

impl Serialize for BinaryTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The shipped insertion convention: letters read right to left, ties descend left.
pub const SYLVESTER_TIE: TieRule = TieRule::Left;

/// Binary search tree obtained by inserting the letters of `w` from right to left.
pub fn sylvester_tree(w: &Word, rule: TieRule) -> BinaryTree {
    let mut t = BinaryTree::Leaf;
    for &x in w.0.iter().rev() {
        t.insert(x, rule);
    }
    t
}

pub fn sylvester_class(w: &Word) -> BinaryTree {
    sylvester_tree(w, SYLVESTER_TIE)
}

/// Words reachable by one sylvester move `ac·v·b ≡ ca·v·b` with `a ≤ b < c`.
pub fn sylvester_neighbours(w: &Word) -> Vec<Word> {
    let v = &w.0;
    let n = v.len();
    let mut out = Vec::new();
    for k in 0..n.saturating_sub(1) {
        let (x, y) = (v[k], v[k + 1]);
        if x == y {
            continue;
        }
        let (a, c) = (x.min(y), x.max(y));
        if v[k + 2..].iter().any(|&b| a <= b && b < c) {
            let mut u = v.clone();
            u.swap(k, k + 1);
            out.push(Word(u));
        }
    }
    out
}

/// Which permutation the tree of a `G` label is read from.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SylvesterSide {
    Direct,
    Inverse,
}

/// Shipped default, selected by the morphism test.
pub const SYLVESTER_SIDE: SylvesterSide = SylvesterSide::Direct;

fn class_of(s: &Permutation, side: SylvesterSide) -> BinaryTree {
    let t = match side {
        SylvesterSide::Direct => s.clone(),
        SylvesterSide::Inverse => s.inverse(),
    };
    sylvester_tree(&Word(t.to_u32s()), SYLVESTER_TIE)
}

/// `π(x)`: the `G`-expansion of `x` with labels grouped by sylvester class.
pub fn pbt_projection_side(x: &FqsymElem, side: SylvesterSide) -> LinComb<BinaryTree> {
    x.in_g().map_labels(|s| class_of(s, side))
}

pub fn pbt_projection(x: &FqsymElem) -> LinComb<BinaryTree> {
    pbt_projection_side(x, SYLVESTER_SIDE)
}

/// `w_T`: the lexicographically least permutation of the class of `T`.
pub fn canonical_permutation(tree: &BinaryTree, n: usize) -> Option<Permutation> {
    Permutation::all(n)
        .into_iter()
        .find(|s| class_of(s, SylvesterSide::Direct) == *tree)
}

/// Checks that `π(G_σ G_τ)` depends only on the classes of `σ` and `τ`, for
/// `|σ| + |τ| ≤ max_degree`. Returns the first offending pair.
pub fn pbt_morphism_failure(max_degree: usize, side: SylvesterSide) -> Option<(Permutation, Permutation)> {
    for m in 0..=max_degree {
        for n in 0..=max_degree - m {
            let mut seen: BTreeMap<(BinaryTree, BinaryTree), (LinComb<BinaryTree>, Permutation, Permutation)> =
                BTreeMap::new();
            for a in Permutation::all(m) {
                for b in Permutation::all(n) {
                    let prod = FqsymElem::g(a.clone()).product(&FqsymElem::g(b.clone()));
                    let img = pbt_projection_side(&prod, side);
                    let key = (class_of(&a, side), class_of(&b, side));
                    match seen.get(&key) {
                        Some((prev, _, _)) if *prev != img => return Some((a, b)),
                        Some(_) => {}
                        None => {
                            seen.insert(key, (img, a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn words_upto(len: usize, k: u32) -> Vec<Word> {
        (0..=len).flat_map(|l| Word::all(l, k)).collect()
    }

    #[test]
    fn hypoplactic_basics() {
        let (u, v) = (Word(vec![1, 2]), Word(vec![2, 1]));
        assert!(hypoplactic_equiv(&u, &u));
        assert!(!hypoplactic_equiv(&u, &v));
        for n in 1..=5 {
            let keys: HashSet<HypoKey> = Permutation::all(n)
                .iter()
                .map(|s| hypoplactic_key(&Word(s.to_u32s())))
                .collect();
            assert_eq!(keys.len(), 1 << (n - 1));
        }
    }

    #[test]
    fn hypoplactic_images_of_fundamentals() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            let g_img = |s: &Permutation| realize(s, Basis::G, n).map_labels(hypoplactic_key);
            let f_img = |s: &Permutation| realize(s, Basis::F, n).map_labels(hypoplactic_key);
            for a in &all {
                for b in &all {
                    let ka = hypoplactic_key(&Word(a.to_u32s()));
                    let kb = hypoplactic_key(&Word(b.to_u32s()));
                    assert_eq!(g_img(a) == g_img(b), ka == kb);
                    assert_eq!(f_img(a) == f_img(b), a.descent_composition() == b.descent_composition());
                }
            }
        }
    }

    #[test]
    fn hypoplactic_collapse() {
        for d in 0..=3 {
            assert_eq!(hypoplactic_cauchy(d, 3, 3), hypoplactic_cauchy_ribbons(d, 3, 3));
        }
        let labels = hypoplactic_cauchy_labels(2);
        assert_eq!(labels.len(), 2);
        let total: usize = hypoplactic_cauchy_labels(4).values().map(|r| r.len()).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn rsk_and_knuth() {
        let mut t = Tableau::empty();
        t.insert(2);
        assert_eq!(t.shape(), vec![1]);
        let counts: Vec<usize> = (1..=5)
            .map(|n| Permutation::all(n).iter().map(rsk_p_perm).collect::<HashSet<_>>().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26]);
        for w in Word::all(3, 3) {
            for x in knuth_neighbours(&w) {
                assert_eq!(rsk_p(&x), rsk_p(&w));
            }
        }
        for w in words_upto(4, 3) {
            let class = closure(&w, knuth_neighbours);
            let rsk: BTreeSet<Word> = Word::all(w.len(), 3)
                .into_iter()
                .filter(|v| rsk_p(v) == rsk_p(&w))
                .collect();
            assert_eq!(class, rsk, "{w}");
            for v in &class {
                assert!(plactic_equiv(&w, v));
            }
        }
    }

    #[test]
    fn plactic_cauchy_small() {
        assert_eq!(plactic_s_t(2).len(), 2);
        assert_eq!(plactic_s_t(3).len(), 4);
        for d in 0..=3 {
            assert_eq!(plactic_cauchy_right(d, 3, 3), plactic_cauchy_tableaux(d, 3, 3), "{d}");
            assert_eq!(plactic_cauchy_both(d, 3, 2), plactic_cauchy_symmetric(d, 3, 2), "{d}");
        }
        for shape in partitions(3) {
            let mut sum = LinComb::zero();
            for t in plactic_s_t(3).keys().filter(|t| t.shape() == shape) {
                sum += &plactic_s_t_star(t, 3);
            }
            assert_eq!(sum, plactic_schur(&shape, 3));
        }
    }

    #[test]
    fn sylvester_convention() {
        for w in words_upto(4, 3) {
            let class = closure(&w, sylvester_neighbours);
            let by_tree: BTreeSet<Word> = Word::all(w.len(), 3)
                .into_iter()
                .filter(|v| sylvester_class(v) == sylvester_class(&w))
                .collect();
            assert_eq!(class, by_tree, "{w}");
        }
        let counts: Vec<usize> = (1..=5)
            .map(|n| {
                Permutation::all(n)
                    .iter()
                    .map(|s| sylvester_class(&Word(s.to_u32s())).shape())
                    .collect::<HashSet<_>>()
                    .len()
            })
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42]);
        assert_eq!(BinaryTree::all(4).len(), 14);
        let t = sylvester_class(&Word(vec![1, 3, 2]));
        assert_eq!(t.to_string(), "((. 1 .) 2 (. 3 .))");
        assert_eq!(t.infix(), vec![1, 2, 3]);
        assert_eq!(sylvester_class(&Word(t.postfix())), t);
    }

    #[test]
    fn pbt_projection_is_a_morphism() {
        assert_eq!(pbt_morphism_failure(4, SYLVESTER_SIDE), None);
        assert!(pbt_morphism_failure(4, SylvesterSide::Inverse).is_some());
    }

    #[test]
    fn congruences_are_compatible_with_concatenation() {
        let short = words_upto(2, 2);
        for u in words_upto(3, 3) {
            for v in closure(&u, sylvester_neighbours) {
                for x in &short {
                    for y in &short {
                        let (xu, xv) = (x.concat(&u).concat(y), x.concat(&v).concat(y));
                        assert_eq!(sylvester_class(&xu), sylvester_class(&xv));
                        assert_eq!(rsk_p(&xu), rsk_p(&xv));
                    }
                }
            }
            for v in Word::all(u.len(), 3).into_iter().filter(|v| hypoplactic_equiv(&u, v)) {
                for x in &short {
                    for y in &short {
                        assert!(hypoplactic_equiv(&x.concat(&u).concat(y), &x.concat(&v).concat(y)));
                    }
                }
            }
        }
    }
}
