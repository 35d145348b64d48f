//! Permutations, words and compositions, with the combinatorics the algebra
//! layers consume: standardization, descents, weak orders, shifted
//! concatenations, (anti)connected factorizations and shuffles.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::linear::LinComb;

type Letters = SmallVec<[u8; 16]>;

/// A permutation of `{1..n}` in one-line notation. The empty permutation is legal.
///
/// Permutations are ordered by size first and lexicographically within a size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Letters);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factorization {
    /// maximal factorization under `•`
    Connected,
    /// maximal factorization under `⊼`
    Anticonnected,
}

impl Permutation {
    pub fn new(word: &[u8]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in word {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::parse("permutation", &render(word), "not a bijection on 1..n"));
            }
            seen[x] = true;
        }
        Ok(Permutation(Letters::from_slice(word)))
    }

    pub(crate) fn from_vec_unchecked(word: Letters) -> Self {
        debug_assert!(Permutation::new(&word).is_ok());
        Permutation(word)
    }

    pub fn from_u32s(word: &[u32]) -> Result<Self> {
        let mut w = Letters::new();
        for &x in word {
            w.push(u8::try_from(x).map_err(|_| Error::parse("permutation", &format!("{word:?}"), "entry too large"))?);
        }
        Permutation::new(&w)
    }

    pub fn empty() -> Self {
        Permutation(Letters::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// `ω_n = n…1`, the maximum of the weak orders.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u8).rev().collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn to_u32s(&self) -> Vec<u32> {
        self.0.iter().map(|&x| x as u32).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv: Letters = smallvec::smallvec![0; self.size()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    /// Reverses the one-line word.
    pub fn mirror(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// `(self ∘ other)(i) = self(other(i))`, assuming equal sizes.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.size(), other.size());
        Permutation(other.0.iter().map(|&i| self.0[i as usize - 1]).collect())
    }

    /// Positions `i ∈ [1, n-1]` with `σ(i) > σ(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_descent_set(&self.descents(), self.size())
    }

    pub fn inversion_count(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    /// Left weak order: containment of position-inversion sets.
    pub fn left_leq(&self, other: &Permutation) -> bool {
        let (a, b) = (&self.0, &other.0);
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] > a[j] && b[i] < b[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Right weak order: containment of value-inversion sets.
    pub fn right_leq(&self, other: &Permutation) -> bool {
        self.inverse().left_leq(&other.inverse())
    }

    pub fn weak_leq(&self, other: &Permutation, side: Side) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(match side {
            Side::Left => self.left_leq(other),
            Side::Right => self.right_leq(other),
        })
    }

    /// `σ • τ`: `τ` shifted up by `|σ|`, appended to `σ`.
    pub fn shifted_concat(&self, other: &Permutation) -> Permutation {
        let m = self.size() as u8;
        let mut w = self.0.clone();
        w.extend(other.0.iter().map(|&x| x + m));
        Permutation(w)
    }

    /// `σ ⊼ τ`: `σ` shifted up by `|τ|`, followed by `τ`.
    pub fn left_shifted_concat(&self, other: &Permutation) -> Permutation {
        let m = other.size() as u8;
        let mut w: Letters = self.0.iter().map(|&x| x + m).collect();
        w.extend_from_slice(&other.0);
        Permutation(w)
    }

    fn cut_points(&self, kind: Factorization) -> Vec<usize> {
        let n = self.size();
        let mut cuts = Vec::new();
        let mut extreme = match kind {
            Factorization::Connected => 0u8,
            Factorization::Anticonnected => u8::MAX,
        };
        for (k, &x) in self.0.iter().enumerate() {
            let k = k + 1;
            match kind {
                Factorization::Connected => {
                    extreme = extreme.max(x);
                    if extreme as usize == k {
                        cuts.push(k);
                    }
                }
                Factorization::Anticonnected => {
                    extreme = extreme.min(x);
                    if extreme as usize == n - k + 1 {
                        cuts.push(k);
                    }
                }
            }
        }
        cuts
    }

    /// Maximal factorization into connected (`•`) or anticonnected (`⊼`) factors.
    pub fn decompose(&self, kind: Factorization) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut start = 0;
        for cut in self.cut_points(kind) {
            out.push(standardize_u8(&self.0[start..cut]));
            start = cut;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.size() > 0 && self.cut_points(Factorization::Connected).len() == 1
    }

    pub fn is_anticonnected(&self) -> bool {
        self.size() > 0 && self.cut_points(Factorization::Anticonnected).len() == 1
    }

    /// `J(σ)`: the composition of connected factor sizes.
    pub fn connected_composition(&self) -> Composition {
        let cuts = self.cut_points(Factorization::Connected);
        let mut parts = Vec::with_capacity(cuts.len());
        let mut prev = 0;
        for c in cuts {
            parts.push((c - prev) as u32);
            prev = c;
        }
        Composition(parts)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        let mut out = vec![Permutation(Letters::from_slice(&cur))];
        while next_permutation(&mut cur) {
            out.push(Permutation(Letters::from_slice(&cur)));
        }
        out
    }
}

fn next_permutation(w: &mut [u8]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// `(τσ)(i) = τ(σ(i))`.
pub fn group_mult(tau: &Permutation, sigma: &Permutation) -> Result<Permutation> {
    if tau.size() != sigma.size() {
        return Err(Error::SizeMismatch {
            left: tau.size(),
            right: sigma.size(),
        });
    }
    Ok(tau.compose(sigma))
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn render(w: &[u8]) -> String {
    if w.len() <= 9 && w.iter().all(|&x| x <= 9) {
        w.iter().map(|x| x.to_string()).collect()
    } else {
        w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "{}", render(&self.0))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts `4132`, `4,1,3,2` and `()` (or the empty string) for the empty permutation.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "()" || t == "e" {
            return Ok(Permutation::empty());
        }
        let word: Vec<u8> = if t.contains(',') {
            t.split(',')
                .map(|p| p.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse("permutation", s, "expected comma-separated integers"))?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::parse("permutation", s, "expected digits"))?
        };
        Permutation::new(&word).map_err(|_| Error::parse("permutation", s, "not a bijection on 1..n"))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.as_slice().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Permutation::from_u32s(&v).map_err(serde::de::Error::custom)
    }
}

fn standardize_u8(w: &[u8]) -> Permutation {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out: Letters = smallvec::smallvec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u8 + 1;
    }
    Permutation(out)
}

/// `std(w)`: equal letters are numbered left to right.
pub fn standardize(w: &[u32]) -> Permutation {
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out: Letters = smallvec::smallvec![0; w.len()];
    for (rank, &i) in idx.iter().enumerate() {
        out[i] = rank as u8 + 1;
    }
    Permutation(out)
}

/// A word over the ordered alphabet `a_1 < a_2 < …`, letter `i` standing for `a_i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::parse(
                "word",
                &format!("{letters:?}"),
                "letters must be positive",
            ));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|w|_i` for `i = 1..max letter`.
    pub fn evaluation(&self) -> Vec<u32> {
        let max = self.0.iter().copied().max().unwrap_or(0) as usize;
        let mut ev = vec![0; max];
        for &a in &self.0 {
            ev[a as usize - 1] += 1;
        }
        ev
    }

    pub fn count(&self, letter: u32) -> usize {
        self.0.iter().filter(|&&a| a == letter).count()
    }

    pub fn standardize(&self) -> Permutation {
        standardize(&self.0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// All words of the given length over `{1..letters}`, lexicographically.
    pub fn all(len: usize, letters: u32) -> Vec<Word> {
        let mut out = vec![Word(Vec::new())];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=letters).map(move |a| {
                        let mut v = w.0.clone();
                        v.push(a);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w({self})")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Word::empty());
        }
        let v = t
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse("word", s, "expected comma-separated positive integers"))?;
        Word::new(v)
    }
}

/// A sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::parse(
                "composition",
                &format!("{parts:?}"),
                "parts must be positive",
            ));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    /// Partial sums, excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`Composition::descent_set`]; `set` must lie in `[1, n-1]`.
    pub fn from_descent_set(set: &[usize], n: usize) -> Composition {
        if n == 0 {
            return Composition(Vec::new());
        }
        let mut s: Vec<usize> = set.iter().copied().filter(|&d| d > 0 && d < n).collect();
        s.sort_unstable();
        s.dedup();
        let mut parts = Vec::with_capacity(s.len() + 1);
        let mut prev = 0;
        for d in s {
            parts.push((d - prev) as u32);
            prev = d;
        }
        parts.push((n - prev) as u32);
        Composition(parts)
    }

    /// `I^c`: the composition whose descent set is the complement of `Des(I)` in `[1, n-1]`.
    pub fn complement(&self) -> Composition {
        let n = self.weight();
        let des = self.descent_set();
        let comp: Vec<usize> = (1..n).filter(|d| !des.contains(d)).collect();
        Composition::from_descent_set(&comp, n)
    }

    /// `Ī`: the parts in reverse order.
    pub fn reverse(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `I~`, the ribbon conjugate: reverse of the complement.
    pub fn conjugate(&self) -> Composition {
        self.complement().reverse()
    }

    /// `self` refines `other` (same weight, `Des(other) ⊆ Des(self)`).
    pub fn is_finer_than(&self, other: &Composition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let mine = self.descent_set();
        other.descent_set().iter().all(|d| mine.contains(d))
    }

    /// All compositions of `n`, sorted.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(Vec::new())];
        }
        let mut out: Vec<Composition> = (0u32..1 << (n - 1))
            .map(|mask| {
                let set: Vec<usize> = (1..n).filter(|&d| mask & (1 << (d - 1)) != 0).collect();
                Composition::from_descent_set(&set, n)
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("."))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Accepts `3.2.2` (also `3,2,2`) and `()` for the empty composition.
impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "()" {
            return Ok(Composition(Vec::new()));
        }
        let v = t
            .split(['.', ','])
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse("composition", s, "expected dot-separated positive integers"))?;
        Composition::new(v)
    }
}

/// `(α(I), ω(I))`: the minimum and maximum of the descent class of `I` in the left weak order.
pub fn alpha_omega(i: &Composition) -> (Permutation, Permutation) {
    (alpha(i), omega(i))
}

/// Consecutive positions joined by descents carry consecutive decreasing values.
pub fn alpha(i: &Composition) -> Permutation {
    let n = i.weight();
    let des = i.descent_set();
    let mut w: Letters = Letters::with_capacity(n);
    let mut start = 0usize;
    while start < n {
        let mut end = start + 1;
        while end < n && des.contains(&end) {
            end += 1;
        }
        for v in (start + 1..=end).rev() {
            w.push(v as u8);
        }
        start = end;
    }
    Permutation(w)
}

/// Increasing blocks, each block above every later one.
pub fn omega(i: &Composition) -> Permutation {
    let n = i.weight() as u32;
    let mut w: Letters = Letters::with_capacity(n as usize);
    let mut top = n;
    for &p in &i.0 {
        let lo = top - p + 1;
        w.extend((lo..=top).map(|v| v as u8));
        top -= p;
    }
    Permutation(w)
}

fn shuffle_into<T: Clone>(u: &[T], v: &[T], prefix: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
    if u.is_empty() || v.is_empty() {
        let mut w = prefix.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        out.push(w);
        return;
    }
    prefix.push(u[0].clone());
    shuffle_into(&u[1..], v, prefix, out);
    prefix.pop();
    prefix.push(v[0].clone());
    shuffle_into(u, &v[1..], prefix, out);
    prefix.pop();
}

/// All interleavings of `u` and `v`, with repetition (`binomial(|u|+|v|, |u|)` entries).
pub fn interleavings<T: Clone>(u: &[T], v: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    shuffle_into(u, v, &mut Vec::with_capacity(u.len() + v.len()), &mut out);
    out
}

pub fn shuffle(u: &Word, v: &Word) -> LinComb<Word> {
    LinComb::sum_of(interleavings(&u.0, &v.0).into_iter().map(Word))
}

/// `σ ⧢ τ[|σ|]`.
pub fn shifted_shuffle(sigma: &Permutation, tau: &Permutation) -> LinComb<Permutation> {
    let m = sigma.size() as u8;
    let shifted: Vec<u8> = tau.0.iter().map(|&x| x + m).collect();
    LinComb::sum_of(
        interleavings(&sigma.0, &shifted)
            .into_iter()
            .map(|w| Permutation(Letters::from_vec(w))),
    )
}

/// `𝔖_{m,n}`: inverses of the permutations in `(1..m) ⧢ (m+1..m+n)`, sorted.
pub fn convolution_shuffle_set(m: usize, n: usize) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = shifted_shuffle(&Permutation::identity(m), &Permutation::identity(n))
        .labels()
        .map(|p| p.inverse())
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn letters(s: &str) -> Word {
        Word(s.bytes().map(|b| (b - b'a' + 1) as u32).collect())
    }

    #[test]
    fn standardize_worked_example() {
        assert_eq!(letters("abbcabcac").standardize(), p("145726839"));
        assert_eq!(standardize(&[2, 5, 7, 9]), p("1234"));
        assert_eq!(standardize(&[]), Permutation::empty());
    }

    #[test]
    fn standardize_is_idempotent_on_permutations() {
        for s in Permutation::all(4) {
            assert_eq!(standardize(&s.to_u32s()), s);
        }
    }

    #[test]
    fn descent_compositions() {
        assert_eq!(p("1472635").descent_composition(), c("3.2.2"));
        assert_eq!(Permutation::identity(5).descent_composition(), c("5"));
        assert_eq!(Permutation::longest(4).descent_composition(), c("1.1.1.1"));
        assert_eq!(Permutation::empty().descent_composition(), Composition(vec![]));
    }

    #[test]
    fn alpha_omega_examples() {
        assert_eq!(alpha(&c("3.2.1")), p("124365"));
        assert_eq!(omega(&c("1.2.1")), p("4231"));
        assert_eq!(alpha(&c("1.2.1")), p("2143"));
        assert_eq!(alpha_omega(&c("4")), (p("1234"), p("1234")));
        assert_eq!(alpha_omega(&c("()")), (Permutation::empty(), Permutation::empty()));
    }

    #[test]
    fn left_weak_down_sets() {
        let below = |top: &str| -> Vec<Permutation> {
            Permutation::all(4)
                .into_iter()
                .filter(|t| t.left_leq(&p(top)))
                .collect()
        };
        let mut expected: Vec<Permutation> = ["1234", "2134", "3124", "4123", "1243", "2143", "3142", "4132"]
            .iter()
            .map(|s| p(s))
            .collect();
        expected.sort();
        assert_eq!(below("4132"), expected);
        assert_eq!(below("4231").len(), 12);
        for s in Permutation::all(4) {
            assert!(s.weak_leq(&s, Side::Left).unwrap());
            assert!(s.weak_leq(&s, Side::Right).unwrap());
        }
        assert!(p("12").weak_leq(&p("123"), Side::Left).is_err());
    }

    #[test]
    fn concatenations() {
        assert_eq!(p("1").left_shifted_concat(&p("132")), p("4132"));
        assert_eq!(p("12").shifted_concat(&p("1")), p("123"));
        let small: Vec<Permutation> = (0..=2).flat_map(Permutation::all).collect();
        for a in &small {
            for b in &small {
                for d in &small {
                    assert_eq!(
                        a.shifted_concat(b).shifted_concat(d),
                        a.shifted_concat(&b.shifted_concat(d))
                    );
                    assert_eq!(
                        a.left_shifted_concat(b).left_shifted_concat(d),
                        a.left_shifted_concat(&b.left_shifted_concat(d))
                    );
                }
            }
            assert_eq!(a.shifted_concat(&Permutation::empty()), *a);
            assert_eq!(Permutation::empty().left_shifted_concat(a), *a);
        }
    }

    #[test]
    fn factorizations() {
        let fac = |s: &str, k| p(s).decompose(k).iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(fac("124365", Factorization::Connected), ["1", "1", "21", "21"]);
        assert_eq!(fac("3421", Factorization::Anticonnected), ["12", "1", "1"]);
        assert_eq!(p("124365").connected_composition(), c("1.1.2.2"));
        assert!(p("").decompose(Factorization::Connected).is_empty());
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| Permutation::all(n).iter().filter(|s| s.is_connected()).count())
            .collect();
        assert_eq!(counts, [1, 1, 3, 13, 71]);
    }

    #[test]
    fn factorization_round_trips() {
        for n in 0..=6 {
            for s in Permutation::all(n) {
                let back = s
                    .decompose(Factorization::Connected)
                    .iter()
                    .fold(Permutation::empty(), |acc, f| acc.shifted_concat(f));
                assert_eq!(back, s);
                let back = s
                    .decompose(Factorization::Anticonnected)
                    .iter()
                    .fold(Permutation::empty(), |acc, f| acc.left_shifted_concat(f));
                assert_eq!(back, s);
                assert!(s.decompose(Factorization::Connected).iter().all(|f| f.is_connected()));
                assert!(s
                    .decompose(Factorization::Anticonnected)
                    .iter()
                    .all(|f| f.is_anticonnected()));
                assert_eq!(s.is_connected(), s.mirror().is_anticonnected());
            }
        }
    }

    #[test]
    fn descent_classes_are_weak_intervals() {
        for n in 1..=6 {
            let all = Permutation::all(n);
            let comps = Composition::all(n);
            assert_eq!(comps.len(), 1 << (n - 1));
            let mut covered = 0;
            for i in &comps {
                let (lo, hi) = alpha_omega(i);
                let class: Vec<_> = all.iter().filter(|s| s.descent_composition() == *i).collect();
                let interval: Vec<_> = all.iter().filter(|s| lo.left_leq(s) && s.left_leq(&hi)).collect();
                assert_eq!(class, interval, "I = {i}");
                covered += class.len();
            }
            assert_eq!(covered, all.len());
        }
    }

    #[test]
    fn raising_letters_preserves_standardization() {
        // std(w(a_i ↑ k)) = std(w) whenever a_{i+1} does not occur in w
        for len in 0..=5 {
            for w in Word::all(len, 4) {
                for i in 1..=4u32 {
                    if w.count(i + 1) != 0 {
                        continue;
                    }
                    let occ: Vec<usize> = (0..w.len()).filter(|&j| w.0[j] == i).collect();
                    for k in 0..=occ.len() {
                        let mut v = w.clone();
                        for &j in &occ[occ.len() - k..] {
                            v.0[j] = i + 1;
                        }
                        assert_eq!(v.standardize(), w.standardize());
                    }
                }
            }
        }
    }

    #[test]
    fn composition_round_trips() {
        for n in 0..=6 {
            for i in Composition::all(n) {
                assert_eq!(Composition::from_descent_set(&i.descent_set(), n), i);
                assert_eq!(i.conjugate().conjugate(), i);
                assert_eq!(i.complement().complement(), i);
                assert!(i.descent_set().iter().all(|&d| d >= 1 && d < n));
            }
        }
        assert_eq!(c("1.1.2.2").complement(), c("3.2.1"));
    }

    #[test]
    fn shuffles() {
        let s = shifted_shuffle(&p("21"), &p("1"));
        assert_eq!(s, LinComb::sum_of([p("213"), p("231"), p("321")]));
        let u = Word(vec![1, 2]);
        assert_eq!(shuffle(&u, &Word::empty()), LinComb::term(u.clone()));
        let t: LinComb<Permutation> = shifted_shuffle(&p("1"), &p("12")).flat_map(|x| shifted_shuffle(x, &p("1")));
        assert_eq!(t.len(), 12);
        assert_eq!(
            shuffle(&Word(vec![1, 1]), &Word(vec![1])).coeff(&Word(vec![1, 1, 1])),
            crate::linear::rat(3)
        );
    }

    #[test]
    fn convolution_sets() {
        assert_eq!(convolution_shuffle_set(1, 1), vec![p("12"), p("21")]);
        assert_eq!(convolution_shuffle_set(1, 2).len(), 3);
        assert_eq!(convolution_shuffle_set(2, 2).len(), 6);
    }

    #[test]
    fn group_product() {
        let s = p("1472635");
        assert_eq!(s.inverse(), p("1462753"));
        assert_eq!(group_mult(&s, &Permutation::identity(7)).unwrap(), s);
        assert!(group_mult(&p("12"), &p("1")).is_err());
        let s3 = Permutation::all(3);
        for a in &s3 {
            for b in &s3 {
                for d in &s3 {
                    assert_eq!(a.compose(b).compose(d), a.compose(&b.compose(d)));
                }
            }
        }
        assert_eq!(p("132").compose(&p("213")), p("312"));
    }

    #[test]
    fn text_forms() {
        assert_eq!(p("4,1,3,2"), p("4132"));
        assert_eq!(p("10,1,2,3,4,5,6,7,8,9").to_string(), "10,1,2,3,4,5,6,7,8,9");
        assert!("4133".parse::<Permutation>().is_err());
        assert!("4a".parse::<Permutation>().is_err());
        assert_eq!("1,2,3,1,3,2,1".parse::<Word>().unwrap().evaluation(), vec![3, 2, 2]);
        assert_eq!(c("3.2.2").parts(), &[3, 2, 2]);
        assert!("3.0".parse::<Composition>().is_err());
    }
}
