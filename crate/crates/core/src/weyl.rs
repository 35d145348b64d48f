//! The bijection `φ : w ↦ (x^{|w|}, std(w)⁻¹)`, the quasi-symmetrizing
//! `H_n(0)` action lifted to words, and the free Weyl formula
//! `F_σ(A) = π_ω(A_σ)`.

use crate::error::{Error, Result};
use crate::linear::{rat, LinComb};
use crate::perm::{Composition, Permutation, Word};
use crate::qsym::{monomial_composition, normalize_monomial, Monomial, Polynomial};

/// A monomial (as an exponent vector) together with a permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BijectionPair {
    pub monomial: Monomial,
    pub perm: Permutation,
}

impl BijectionPair {
    /// `C(m)` finer than `C(σ)`, with matching degrees.
    pub fn is_admissible(&self) -> bool {
        let weight: u32 = self.monomial.iter().sum();
        weight as usize == self.perm.size()
            && monomial_composition(&self.monomial).is_finer_than(&self.perm.descent_composition())
    }
}

pub fn phi(w: &Word) -> BijectionPair {
    BijectionPair {
        monomial: normalize_monomial(w.evaluation()),
        perm: w.standardize().inverse(),
    }
}

/// The word `w` with `|w| = m` and `std(w) = σ⁻¹`: position `σ(j)` receives the
/// `j`-th smallest letter of the multiset `m`.
pub fn phi_inverse(pair: &BijectionPair) -> Result<Word> {
    if !pair.is_admissible() {
        return Err(Error::InadmissiblePair {
            monomial: format!("{:?}", pair.monomial),
            perm: pair.perm.to_string(),
        });
    }
    let letters: Vec<u32> = pair
        .monomial
        .iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(i as u32 + 1, e as usize))
        .collect();
    let mut w = vec![0u32; letters.len()];
    for (j, &pos) in pair.perm.as_slice().iter().enumerate() {
        w[pos as usize - 1] = letters[j];
    }
    Ok(Word(w))
}

/// `A_σ`: the unique word with standardization `σ⁻¹` and evaluation `C(σ)`.
pub fn a_sigma(sigma: &Permutation) -> Word {
    let pair = BijectionPair {
        monomial: sigma.descent_composition().0,
        perm: sigma.clone(),
    };
    phi_inverse(&pair).expect("C(σ) is finer than itself")
}

/// Raise the last `k` letters `a_i` to `a_{i+1}`.
fn raise_last(w: &Word, i: u32, k: usize) -> Word {
    let mut v = w.0.clone();
    let mut left = k;
    for x in v.iter_mut().rev() {
        if left == 0 {
            break;
        }
        if *x == i {
            *x = i + 1;
            left -= 1;
        }
    }
    Word(v)
}

/// Lower the first `k` letters `a_{i+1}` to `a_i`.
fn lower_first(w: &Word, i: u32, k: usize) -> Word {
    let mut v = w.0.clone();
    let mut left = k;
    for x in v.iter_mut() {
        if left == 0 {
            break;
        }
        if *x == i + 1 {
            *x = i;
            left -= 1;
        }
    }
    Word(v)
}

fn check_generator(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { i, n });
    }
    Ok(())
}

/// `π_i(w)` for the alphabet `a_1..a_n`.
pub fn pi_word(i: usize, n: usize, w: &Word) -> Result<LinComb<Word>> {
    check_generator(i, n)?;
    let li = i as u32;
    let (a, b) = (w.count(li), w.count(li + 1));
    Ok(match (a, b) {
        (0, 0) => LinComb::term(w.clone()),
        (_, 0) => LinComb::sum_of((0..=a).map(|k| raise_last(w, li, k))),
        (0, _) => LinComb::from_terms((1..b).map(|k| (lower_first(w, li, k), rat(-1)))),
        _ => LinComb::term(w.clone()),
    })
}

pub fn pi_comb(i: usize, n: usize, x: &LinComb<Word>) -> Result<LinComb<Word>> {
    check_generator(i, n)?;
    Ok(x.flat_map(|w| pi_word(i, n, w).expect("generator checked")))
}

/// The reduced word `(s_1)(s_2 s_1)(s_3 s_2 s_1)⋯` of `ω_n`.
pub fn reduced_word(n: usize) -> Vec<usize> {
    (1..n).flat_map(|j| (1..=j).rev()).collect()
}

/// `π_ω` along `reduced_word(n)`, rightmost generator applied first.
pub fn pi_omega(x: &LinComb<Word>, n: usize) -> Result<LinComb<Word>> {
    pi_along(x, n, &reduced_word(n))
}

/// `π_{s_{j_1}} ⋯ π_{s_{j_r}}` applied to `x`, rightmost first.
pub fn pi_along(x: &LinComb<Word>, n: usize, word: &[usize]) -> Result<LinComb<Word>> {
    let mut cur = x.clone();
    for &i in word.iter().rev() {
        cur = pi_comb(i, n, &cur)?;
    }
    Ok(cur)
}

/// `π_ω(A_σ)` over the alphabet `a_1..a_n`.
pub fn free_weyl(sigma: &Permutation, n: usize) -> Result<LinComb<Word>> {
    let parts = sigma.descent_composition().len();
    if n < parts {
        return Err(Error::AlphabetTooSmall {
            letters: n,
            needed: parts,
        });
    }
    pi_omega(&LinComb::term(a_sigma(sigma)), n)
}

/// The quasi-symmetrizing action on monomials in `x_1..x_n`.
pub fn pi_monomial(i: usize, n: usize, m: &[u32]) -> Result<Polynomial> {
    check_generator(i, n)?;
    let get = |j: usize| m.get(j).copied().unwrap_or(0);
    let (a, b) = (get(i - 1), get(i));
    let with = |x: u32, y: u32| {
        let mut v: Vec<u32> = (0..n.max(m.len())).map(get).collect();
        v[i - 1] = x;
        v[i] = y;
        normalize_monomial(v)
    };
    Ok(match (a, b) {
        (0, 0) => LinComb::term(normalize_monomial(m.to_vec())),
        (_, 0) => LinComb::sum_of((0..=a).map(|k| with(a - k, k))),
        (0, _) => LinComb::from_terms((1..b).map(|k| (with(k, b - k), rat(-1)))),
        _ => LinComb::term(normalize_monomial(m.to_vec())),
    })
}

pub fn pi_omega_poly(x: &Polynomial, n: usize) -> Result<Polynomial> {
    let mut cur = x.clone();
    for &i in reduced_word(n).iter().rev() {
        cur = cur.flat_map(|m| pi_monomial(i, n, m).expect("generator in range"));
    }
    Ok(cur)
}

/// `x^I` as an exponent vector.
pub fn composition_monomial(i: &Composition) -> Monomial {
    i.0.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fqsym::{realize, Basis};
    use crate::qsym::{commutative_image_word, fundamental_poly, poly_product};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        let w = Word(vec![1, 2, 3, 1, 3, 2, 1]);
        let pair = phi(&w);
        assert_eq!(pair.monomial, vec![3, 2, 2]);
        assert_eq!(pair.perm, p("1472635"));
        assert_eq!(phi_inverse(&pair).unwrap(), w);
        assert_eq!(a_sigma(&p("1472635")), w);
        assert_eq!(a_sigma(&Permutation::identity(3)), Word(vec![1, 1, 1]));
        let bad = BijectionPair {
            monomial: vec![2],
            perm: p("21"),
        };
        assert!(phi_inverse(&bad).is_err());
    }

    #[test]
    fn phi_is_a_bijection() {
        let words = Word::all(4, 3);
        let mut pairs: Vec<BijectionPair> = words.iter().map(phi).collect();
        for (w, pair) in words.iter().zip(&pairs) {
            assert!(pair.is_admissible());
            assert_eq!(&phi_inverse(pair).unwrap(), w);
        }
        pairs.sort();
        pairs.dedup();
        let mut admissible = 0;
        for m in crate::qsym::monomials(4, 3) {
            for s in Permutation::all(4) {
                if (BijectionPair {
                    monomial: m.clone(),
                    perm: s,
                })
                .is_admissible()
                {
                    admissible += 1;
                }
            }
        }
        assert_eq!(pairs.len(), words.len());
        assert_eq!(admissible, words.len());
    }

    #[test]
    fn a_sigma_is_unique() {
        for s in Permutation::all(4) {
            let target = s.inverse();
            let ev = s.descent_composition().0;
            let hits: Vec<Word> = Word::all(4, 4)
                .into_iter()
                .filter(|w| w.standardize() == target && normalize_monomial(w.evaluation()) == ev)
                .collect();
            assert_eq!(hits, vec![a_sigma(&s)]);
        }
    }

    #[test]
    fn pi_cases() {
        let w = Word(vec![1, 1]);
        let expected = LinComb::sum_of([Word(vec![1, 1]), Word(vec![1, 2]), Word(vec![2, 2])]);
        assert_eq!(pi_word(1, 2, &w).unwrap(), expected);
        let both = Word(vec![2, 1]);
        assert_eq!(pi_word(1, 2, &both).unwrap(), LinComb::term(both.clone()));
        assert!(pi_word(2, 2, &w).is_err());
        let high = Word(vec![2, 2, 2]);
        let expected = LinComb::from_terms([(Word(vec![1, 2, 2]), rat(-1)), (Word(vec![1, 1, 2]), rat(-1))]);
        assert_eq!(pi_word(1, 2, &high).unwrap(), expected);
    }

    #[test]
    fn pi_preserves_standardization() {
        for len in 0..=4 {
            for w in Word::all(len, 3) {
                for i in 1..3 {
                    for t in pi_word(i, 3, &w).unwrap().labels() {
                        assert_eq!(t.standardize(), w.standardize());
                    }
                }
            }
        }
    }

    #[test]
    fn hecke_relations_small() {
        for len in 0..=3 {
            for w in Word::all(len, 3) {
                let x = LinComb::term(w.clone());
                for i in 1..3 {
                    let once = pi_comb(i, 3, &x).unwrap();
                    assert_eq!(pi_comb(i, 3, &once).unwrap(), once, "{w} {i}");
                }
                assert_eq!(
                    pi_along(&x, 3, &[1, 2, 1]).unwrap(),
                    pi_along(&x, 3, &[2, 1, 2]).unwrap()
                );
            }
        }
    }

    /// `π_i(f)·(x_i − x_{i+1}) = x_i f − x_{i+1} σ_i(f)` with the quasi-symmetrizing swap.
    #[test]
    fn monomial_action_is_a_divided_difference() {
        for d in 0..=4 {
            for m in crate::qsym::monomials(d, 3) {
                for i in 1..3 {
                    let get = |j: usize| m.get(j).copied().unwrap_or(0);
                    let (a, b) = (get(i - 1), get(i));
                    let swapped = if (a == 0) != (b == 0) {
                        let mut v: Vec<u32> = (0..3).map(get).collect();
                        v.swap(i - 1, i);
                        normalize_monomial(v)
                    } else {
                        m.clone()
                    };
                    let xi: Monomial = normalize_monomial((0..3).map(|j| u32::from(j == i - 1)).collect());
                    let xj: Monomial = normalize_monomial((0..3).map(|j| u32::from(j == i)).collect());
                    let lhs = poly_product(
                        &pi_monomial(i, 3, &m).unwrap(),
                        &LinComb::from_terms([(xi.clone(), rat(1)), (xj.clone(), rat(-1))]),
                    );
                    let rhs = &poly_product(&LinComb::term(xi), &LinComb::term(m.clone()))
                        - &poly_product(&LinComb::term(xj), &LinComb::term(swapped));
                    assert_eq!(lhs, rhs, "{m:?} {i}");
                }
            }
        }
    }

    #[test]
    fn word_action_lifts_monomial_action() {
        for len in 0..=4 {
            for w in Word::all(len, 3) {
                for i in 1..3 {
                    let lifted = pi_word(i, 3, &w).unwrap().map_labels(commutative_image_word);
                    assert_eq!(lifted, pi_monomial(i, 3, &commutative_image_word(&w)).unwrap());
                }
            }
        }
    }

    #[test]
    fn weyl_small() {
        for n in 1..=4 {
            for s in Permutation::all(n) {
                assert_eq!(free_weyl(&s, n).unwrap(), realize(&s, Basis::F, n), "{s}");
            }
        }
        let two = free_weyl(&Permutation::identity(2), 2).unwrap();
        assert_eq!(
            two,
            LinComb::sum_of([Word(vec![1, 1]), Word(vec![1, 2]), Word(vec![2, 2])])
        );
        let s = p("1472635");
        assert_eq!(free_weyl(&s, 3).unwrap(), realize(&s, Basis::F, 3));
        assert!(free_weyl(&s, 2).is_err());
    }

    #[test]
    fn commutative_shadow_is_gessel() {
        for d in 1..=4 {
            for i in Composition::all(d).into_iter().filter(|c| c.len() <= 3) {
                let x = LinComb::term(composition_monomial(&i));
                assert_eq!(pi_omega_poly(&x, 3).unwrap(), fundamental_poly(&i, 3), "{i}");
            }
        }
    }
}
