//! The Hopf algebra on the fundamental bases `G_σ` and `F_σ = G_{σ⁻¹}`.
//!
//! Products: `F` multiplies by shifted shuffle, `G` by convolution.
//! Coproducts: `ΔF_σ` deconcatenates the one-line word, `ΔG_σ` restricts
//! `σ` to the value intervals `[1, i]` and `[i+1, n]`.
//! The pairing `⟨F_σ, G_τ⟩ = δ_{στ}` is implemented formally; the word
//! realization ([`realize`]) is the independent oracle for all of it.

use std::fmt;

use num::Zero;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::linear::{LinComb, Rational, Tensor};
use crate::perm::{shifted_shuffle, standardize, Composition, Permutation, Word};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    G,
    F,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::G => write!(f, "G"),
            Basis::F => write!(f, "F"),
        }
    }
}

/// An element of FQSym, expanded in `G` or `F`. Terms may mix degrees.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FqsymElem {
    basis: Basis,
    comb: LinComb<Permutation>,
}

impl FqsymElem {
    pub fn new(basis: Basis, comb: LinComb<Permutation>) -> Self {
        FqsymElem { basis, comb }
    }

    pub fn g(sigma: Permutation) -> Self {
        FqsymElem::new(Basis::G, LinComb::term(sigma))
    }

    pub fn f(sigma: Permutation) -> Self {
        FqsymElem::new(Basis::F, LinComb::term(sigma))
    }

    pub fn zero(basis: Basis) -> Self {
        FqsymElem::new(basis, LinComb::zero())
    }

    pub fn one() -> Self {
        FqsymElem::g(Permutation::empty())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn comb(&self) -> &LinComb<Permutation> {
        &self.comb
    }

    pub fn into_comb(self) -> LinComb<Permutation> {
        self.comb
    }

    pub fn is_zero(&self) -> bool {
        self.comb.is_zero()
    }

    /// `G_σ = F_{σ⁻¹}`, so changing basis inverts every label.
    pub fn to_basis(&self, basis: Basis) -> FqsymElem {
        if basis == self.basis {
            return self.clone();
        }
        FqsymElem::new(basis, self.comb.map_labels(|s| s.inverse()))
    }

    pub fn in_g(&self) -> LinComb<Permutation> {
        self.to_basis(Basis::G).comb
    }

    pub fn in_f(&self) -> LinComb<Permutation> {
        self.to_basis(Basis::F).comb
    }

    pub fn add(&self, other: &FqsymElem) -> FqsymElem {
        FqsymElem::new(self.basis, &self.comb + &other.to_basis(self.basis).comb)
    }

    pub fn sub(&self, other: &FqsymElem) -> FqsymElem {
        FqsymElem::new(self.basis, &self.comb - &other.to_basis(self.basis).comb)
    }

    pub fn scale(&self, c: &Rational) -> FqsymElem {
        FqsymElem::new(self.basis, self.comb.scale(c))
    }

    /// Product, expressed in the basis of `self`.
    pub fn product(&self, other: &FqsymElem) -> FqsymElem {
        let rhs = other.to_basis(self.basis);
        let comb = match self.basis {
            Basis::F => crate::linear::bilinear(&self.comb, &rhs.comb, shifted_shuffle),
            Basis::G => crate::linear::bilinear(&self.comb, &rhs.comb, convolution),
        };
        FqsymElem::new(self.basis, comb)
    }

    /// Coproduct in the basis of `self`, as an arity-2 tensor of labels.
    pub fn coproduct(&self) -> Tensor<Permutation> {
        let mut out = Tensor::zero(2);
        for (s, c) in self.comb.iter() {
            let pieces = match self.basis {
                Basis::F => deconcatenate(s),
                Basis::G => split_values(s),
            };
            for (a, b) in pieces {
                out.add_term(vec![a, b], c.clone());
            }
        }
        out
    }

    /// Coefficient of the empty permutation.
    pub fn counit(&self) -> Rational {
        self.comb.coeff(&Permutation::empty())
    }

    pub fn homogeneous_component(&self, n: usize) -> FqsymElem {
        FqsymElem::new(self.basis, self.comb.filter(|s| s.size() == n))
    }
}

/// `G_σ · G_τ`: every `ν` whose first `|σ|` letters standardize to `σ` and
/// whose last `|τ|` letters standardize to `τ`.
pub fn convolution(sigma: &Permutation, tau: &Permutation) -> LinComb<Permutation> {
    let (m, n) = (sigma.size(), tau.size());
    let mut out = LinComb::zero();
    let mut chosen = Vec::with_capacity(m);
    choose_values(1, m + n, m, &mut chosen, &mut |first: &[u8]| {
        let rest: Vec<u8> = (1..=(m + n) as u8).filter(|v| !first.contains(v)).collect();
        let mut w: SmallVec<[u8; 16]> = SmallVec::with_capacity(m + n);
        w.extend(sigma.as_slice().iter().map(|&x| first[x as usize - 1]));
        w.extend(tau.as_slice().iter().map(|&x| rest[x as usize - 1]));
        out.add_term(Permutation::from_vec_unchecked(w), Rational::from_integer(1.into()));
    });
    out
}

fn choose_values(next: usize, max: usize, k: usize, chosen: &mut Vec<u8>, f: &mut impl FnMut(&[u8])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    let need = k - chosen.len();
    for v in next..=max + 1 - need {
        chosen.push(v as u8);
        choose_values(v + 1, max, k, chosen, f);
        chosen.pop();
    }
}

fn deconcatenate(s: &Permutation) -> Vec<(Permutation, Permutation)> {
    let w = s.as_slice();
    (0..=w.len()).map(|i| (std_u8(&w[..i]), std_u8(&w[i..]))).collect()
}

fn split_values(s: &Permutation) -> Vec<(Permutation, Permutation)> {
    let w = s.as_slice();
    (0..=w.len())
        .map(|i| {
            let low: Vec<u8> = w.iter().copied().filter(|&x| x as usize <= i).collect();
            let high: Vec<u8> = w.iter().copied().filter(|&x| x as usize > i).collect();
            (std_u8(&low), std_u8(&high))
        })
        .collect()
}

fn std_u8(w: &[u8]) -> Permutation {
    let v: Vec<u32> = w.iter().map(|&x| x as u32).collect();
    standardize(&v)
}

/// `x * y`, bilinear; on `G` labels of equal size `G_σ * G_τ = G_{τσ}`, zero across sizes.
pub fn internal_product(x: &FqsymElem, y: &FqsymElem) -> FqsymElem {
    let comb = crate::linear::bilinear(&x.in_g(), &y.in_g(), |s, t| {
        if s.size() == t.size() {
            LinComb::term(t.compose(s))
        } else {
            LinComb::zero()
        }
    });
    FqsymElem::new(Basis::G, comb)
}

/// Bilinear extension of `⟨F_σ, G_τ⟩ = δ_{στ}`; `x` is read in `F`, `y` in `G`.
pub fn pairing(x: &FqsymElem, y: &FqsymElem) -> Rational {
    let (xf, yg) = (x.in_f(), y.in_g());
    let mut total = Rational::zero();
    for (s, c) in xf.iter() {
        let d = yg.coeff(s);
        if !d.is_zero() {
            total += c * d;
        }
    }
    total
}

/// Pairing on tensors, slot by slot: labels of `x` read in `F`, labels of `y` in `G`.
pub fn tensor_pairing(x: &Tensor<Permutation>, y: &Tensor<Permutation>) -> Rational {
    let mut total = Rational::zero();
    for (labels, c) in x.iter() {
        let d = y.coeff(labels);
        if !d.is_zero() {
            total += c * d;
        }
    }
    total
}

/// Commutative image in QSym, fundamental basis: `F_σ ↦ F_{C(σ)}`.
pub fn commutative_image(x: &FqsymElem) -> LinComb<Composition> {
    x.in_f().map_labels(|s| s.descent_composition())
}

/// Words `w` on `k` letters with `std(w) = σ` (basis `G`) or `std(w) = σ⁻¹` (basis `F`).
pub fn realize(sigma: &Permutation, basis: Basis, k: usize) -> LinComb<Word> {
    let target = match basis {
        Basis::G => sigma.clone(),
        Basis::F => sigma.inverse(),
    };
    LinComb::sum_of(words_with_standardization(&target, k))
}

pub fn realize_elem(x: &FqsymElem, k: usize) -> LinComb<Word> {
    x.comb.flat_map(|s| realize(s, x.basis, k))
}

/// Letter `v_j` goes to the position holding value `j`; `v` is weakly increasing
/// and strictly increasing across each descent of `σ⁻¹`.
pub(crate) fn words_with_standardization(sigma: &Permutation, k: usize) -> Vec<Word> {
    let n = sigma.size();
    let inv = sigma.inverse();
    let strict: Vec<bool> = (1..n).map(|j| inv.as_slice()[j - 1] > inv.as_slice()[j]).collect();
    let mut out = Vec::new();
    let mut v: Vec<u32> = Vec::with_capacity(n);
    fn rec(j: usize, n: usize, k: u32, strict: &[bool], v: &mut Vec<u32>, sigma: &Permutation, out: &mut Vec<Word>) {
        if j == n {
            out.push(Word(sigma.as_slice().iter().map(|&x| v[x as usize - 1]).collect()));
            return;
        }
        let lo = match j {
            0 => 1,
            _ => v[j - 1] + u32::from(strict[j - 1]),
        };
        for a in lo..=k {
            v.push(a);
            rec(j + 1, n, k, strict, v, sigma, out);
            v.pop();
        }
    }
    rec(0, n, k as u32, &strict, &mut v, sigma, &mut out);
    out
}

/// Concatenation product of word combinations.
pub fn word_product(x: &LinComb<Word>, y: &LinComb<Word>) -> LinComb<Word> {
    crate::linear::bilinear(x, y, |a, b| LinComb::term(a.concat(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rat;
    use crate::perm::convolution_shuffle_set;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn g(s: &str) -> FqsymElem {
        FqsymElem::g(p(s))
    }

    fn f(s: &str) -> FqsymElem {
        FqsymElem::f(p(s))
    }

    fn gs(items: &[&str]) -> FqsymElem {
        FqsymElem::new(Basis::G, LinComb::sum_of(items.iter().map(|s| p(s))))
    }

    /// Brute force: all words of length `n` on `k` letters, filtered by standardization.
    fn realize_oracle(sigma: &Permutation, basis: Basis, k: usize) -> LinComb<Word> {
        let target = match basis {
            Basis::G => sigma.clone(),
            Basis::F => sigma.inverse(),
        };
        LinComb::sum_of(
            Word::all(sigma.size(), k as u32)
                .into_iter()
                .filter(|w| w.standardize() == target),
        )
    }

    #[test]
    fn realization_matches_brute_force() {
        for n in 0..=4 {
            for s in Permutation::all(n) {
                for k in 0..=4 {
                    assert_eq!(realize(&s, Basis::G, k), realize_oracle(&s, Basis::G, k));
                    assert_eq!(realize(&s, Basis::F, k), realize_oracle(&s, Basis::F, k));
                }
            }
        }
    }

    #[test]
    fn realization_examples() {
        let a = Word(vec![1, 2, 3, 1, 3, 2, 1]);
        let fs = realize(&p("1472635"), Basis::F, 3);
        let with_eval: Vec<&Word> = fs.labels().filter(|w| w.evaluation() == [3, 2, 2]).collect();
        assert_eq!(with_eval, vec![&a]);
        assert_eq!(
            realize(&Permutation::empty(), Basis::G, 3),
            LinComb::term(Word::empty())
        );
        assert_eq!(realize(&p("21"), Basis::G, 2), LinComb::term(Word(vec![2, 1])));
    }

    #[test]
    fn products() {
        let s4132 = gs(&["1234", "2134", "3124", "4123", "1243", "2143", "3142", "4132"]);
        assert_eq!(g("1").product(&g("123").add(&g("132"))), s4132);
        assert_eq!(g("21").product(&FqsymElem::one()), g("21"));
        let expected = FqsymElem::new(Basis::F, LinComb::sum_of([p("132"), p("312"), p("321")]));
        assert_eq!(f("1").product(&f("21")), expected);
    }

    #[test]
    fn convolution_via_shuffle_set() {
        for m in 0..=3 {
            for n in 0..=3 {
                for a in Permutation::all(m) {
                    for b in Permutation::all(n) {
                        let ab = a.shifted_concat(&b);
                        let via_set = LinComb::sum_of(convolution_shuffle_set(m, n).iter().map(|al| al.compose(&ab)));
                        assert_eq!(convolution(&a, &b), via_set);
                    }
                }
            }
        }
    }

    #[test]
    fn product_commutes_with_realization() {
        for m in 0..=3 {
            for n in 0..=(5 - m).min(3) {
                for a in Permutation::all(m) {
                    for b in Permutation::all(n) {
                        for basis in [Basis::G, Basis::F] {
                            let (x, y) = (
                                FqsymElem::new(basis, LinComb::term(a.clone())),
                                FqsymElem::new(basis, LinComb::term(b.clone())),
                            );
                            let lhs = realize_elem(&x.product(&y), 4);
                            let rhs = word_product(&realize_elem(&x, 4), &realize_elem(&y, 4));
                            assert_eq!(lhs, rhs, "{basis} {a} {b}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let d = g("1").coproduct();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&[Permutation::empty(), p("1")]), rat(1));
        assert_eq!(d.coeff(&[p("1"), Permutation::empty()]), rat(1));
        for n in 0..=5 {
            let d = FqsymElem::g(Permutation::identity(n)).coproduct();
            let mut expected = Tensor::zero(2);
            for i in 0..=n {
                expected.add_term(vec![Permutation::identity(i), Permutation::identity(n - i)], rat(1));
            }
            assert_eq!(d, expected);
        }
        // coproduct of G_231 restricts values: {1} -> 1 | 23 -> 12, {1,2} -> 21 | 3 -> 1
        let d = g("231").coproduct();
        assert_eq!(d.coeff(&[p("1"), p("12")]), rat(1));
        assert_eq!(d.coeff(&[p("21"), p("1")]), rat(1));
    }

    fn tensor_product_of(x: &Tensor<Permutation>, y: &Tensor<Permutation>, basis: Basis) -> Tensor<Permutation> {
        let mut out = Tensor::zero(2);
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let l = FqsymElem::new(basis, LinComb::term(a[0].clone()))
                    .product(&FqsymElem::new(basis, LinComb::term(b[0].clone())));
                let r = FqsymElem::new(basis, LinComb::term(a[1].clone()))
                    .product(&FqsymElem::new(basis, LinComb::term(b[1].clone())));
                for (u, cu) in l.comb().iter() {
                    for (v, cv) in r.comb().iter() {
                        out.add_term(vec![u.clone(), v.clone()], ca * cb * cu * cv);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn bialgebra_compatibility() {
        let x = g("1").product(&g("1"));
        assert_eq!(
            x.coproduct(),
            tensor_product_of(&g("1").coproduct(), &g("1").coproduct(), Basis::G)
        );
        for basis in [Basis::G, Basis::F] {
            for a in Permutation::all(2) {
                for b in (1..=3).flat_map(Permutation::all) {
                    let (x, y) = (
                        FqsymElem::new(basis, LinComb::term(a.clone())),
                        FqsymElem::new(basis, LinComb::term(b.clone())),
                    );
                    assert_eq!(
                        x.product(&y).coproduct(),
                        tensor_product_of(&x.coproduct(), &y.coproduct(), basis)
                    );
                }
            }
        }
    }

    #[test]
    fn coproduct_is_coassociative_and_counital() {
        for s in Permutation::all(4) {
            for basis in [Basis::G, Basis::F] {
                let x = FqsymElem::new(basis, LinComb::term(s.clone()));
                let d = x.coproduct();
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for (t, c) in d.iter() {
                    for (u, cu) in FqsymElem::new(basis, LinComb::term(t[0].clone())).coproduct().iter() {
                        left.add_term(vec![u[0].clone(), u[1].clone(), t[1].clone()], c * cu);
                    }
                    for (u, cu) in FqsymElem::new(basis, LinComb::term(t[1].clone())).coproduct().iter() {
                        right.add_term(vec![t[0].clone(), u[0].clone(), u[1].clone()], c * cu);
                    }
                }
                assert_eq!(left, right);
                let counit_left: LinComb<Permutation> = LinComb::from_terms(
                    d.iter()
                        .filter(|(t, _)| t[0].is_empty())
                        .map(|(t, c)| (t[1].clone(), c.clone())),
                );
                assert_eq!(counit_left, *x.comb());
            }
        }
    }

    #[test]
    fn coproduct_matches_ordered_alphabet_sum() {
        // ΔG_σ(A' ⊕ A''): words on a_1..a_2 then a_3..a_4, split by alphabet.
        for s in Permutation::all(3) {
            let words = realize(&s, Basis::G, 4);
            let mut split = LinComb::zero();
            for w in words.labels() {
                let low: Vec<u32> = w.0.iter().copied().filter(|&a| a <= 2).collect();
                let high: Vec<u32> = w.0.iter().copied().filter(|&a| a > 2).map(|a| a - 2).collect();
                split.add_term((Word(low), Word(high)), rat(1));
            }
            let mut expected = LinComb::zero();
            for (t, c) in FqsymElem::g(s.clone()).coproduct().iter() {
                for u in realize(&t[0], Basis::G, 2).labels() {
                    for v in realize(&t[1], Basis::G, 2).labels() {
                        expected.add_term((u.clone(), v.clone()), c.clone());
                    }
                }
            }
            assert_eq!(split, expected, "{s}");
        }
    }

    #[test]
    fn internal_products() {
        let s4 = Permutation::all(4);
        for s in &s4 {
            assert_eq!(
                internal_product(&FqsymElem::g(s.clone()), &FqsymElem::g(Permutation::identity(4))),
                FqsymElem::g(s.clone())
            );
        }
        assert_eq!(internal_product(&g("213"), &g("132")), g("312"));
        assert!(internal_product(&g("21"), &g("123")).is_zero());
        for a in &s4 {
            for b in &s4 {
                for c in &s4 {
                    let (x, y, z) = (
                        FqsymElem::g(a.clone()),
                        FqsymElem::g(b.clone()),
                        FqsymElem::g(c.clone()),
                    );
                    assert_eq!(
                        internal_product(&internal_product(&x, &y), &z),
                        internal_product(&x, &internal_product(&y, &z))
                    );
                }
            }
        }
    }

    #[test]
    fn pairing_and_adjointness() {
        use rand::{Rng, SeedableRng};
        for s in Permutation::all(4) {
            assert_eq!(pairing(&FqsymElem::f(s.clone()), &FqsymElem::g(s.clone())), rat(1));
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut random_elem = |basis: Basis, n: usize| {
            let all = Permutation::all(n);
            let comb = (0..3)
                .map(|_| (all[rng.gen_range(0..all.len())].clone(), rat(rng.gen_range(-2..3))))
                .collect();
            FqsymElem::new(basis, comb)
        };
        for round in 0..20 {
            let (m, n) = (round % 3, 1 + round % 2);
            let x = random_elem(Basis::F, m);
            let y = random_elem(Basis::F, n);
            let z = random_elem(Basis::G, m + n);
            let lhs = pairing(&x.product(&y), &z);
            let mut xy = Tensor::zero(2);
            for (a, ca) in x.comb().iter() {
                for (b, cb) in y.comb().iter() {
                    xy.add_term(vec![a.clone(), b.clone()], ca * cb);
                }
            }
            assert_eq!(lhs, tensor_pairing(&xy, &z.coproduct()));
        }
    }

    #[test]
    fn commutative_images() {
        assert_eq!(
            commutative_image(&f("1472635")),
            LinComb::term("3.2.2".parse().unwrap())
        );
        assert_eq!(
            commutative_image(&FqsymElem::f(Permutation::identity(3))),
            LinComb::term("3".parse().unwrap())
        );
        use crate::qsym::{poly_product, qsym_f_poly};
        for m in 0..=3 {
            for n in 0..=(5 - m).min(3) {
                for a in Permutation::all(m) {
                    for b in Permutation::all(n) {
                        let (x, y) = (FqsymElem::f(a.clone()), FqsymElem::f(b.clone()));
                        let lhs = qsym_f_poly(&commutative_image(&x.product(&y)), 5);
                        let rhs = poly_product(
                            &qsym_f_poly(&commutative_image(&x), 5),
                            &qsym_f_poly(&commutative_image(&y), 5),
                        );
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn commutative_image_matches_word_abelianization() {
        use crate::qsym::{commutative_image_word, qsym_f_poly};
        for n in 0..=4 {
            for s in Permutation::all(n) {
                let words = realize(&s, Basis::F, 4);
                let poly = words.map_labels(commutative_image_word);
                assert_eq!(poly, qsym_f_poly(&commutative_image(&FqsymElem::f(s.clone())), 4));
            }
        }
    }
}
