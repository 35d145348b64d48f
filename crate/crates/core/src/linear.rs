//! Sparse exact linear combinations and tensors over arbitrary label types.
//!
//! A [`LinComb`] is a finite map from labels to nonzero rational coefficients,
//! kept in canonical form: zero coefficients are never stored, so structural
//! equality is mathematical equality.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders as `"n"` or `"n/d"`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = |r: &str| Error::parse("rational", s, r);
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err("bad numerator"))?;
            let d: BigInt = d.trim().parse().map_err(|_| err("bad denominator"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| err("not an integer"))?;
            Ok(Rational::from_integer(n))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<L: Ord> {
    terms: BTreeMap<L, Rational>,
}

impl<L: Ord> Default for LinComb<L> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<L: Ord + Clone> LinComb<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(label: L) -> Self {
        Self::monomial(label, Rational::one())
    }

    pub fn monomial(label: L, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(label, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (L, Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (l, c) in terms {
            out.add_term(l, c);
        }
        out
    }

    /// Sum of the labels, each with coefficient one (repeats accumulate).
    pub fn sum_of<I: IntoIterator<Item = L>>(labels: I) -> Self {
        let mut out = Self::zero();
        for l in labels {
            out.add_term(l, Rational::one());
        }
        out
    }

    pub fn add_term(&mut self, label: L, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<L>, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c * scale);
        }
    }

    pub fn coeff(&self, label: &L) -> Rational {
        self.terms.get(label).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, &Rational)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    pub fn contains(&self, label: &L) -> bool {
        self.terms.contains_key(label)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * s)).collect(),
        }
    }

    /// Applies `f` to every label; colliding images accumulate.
    pub fn map_labels<M: Ord + Clone, F: FnMut(&L) -> M>(&self, mut f: F) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (l, c) in &self.terms {
            out.add_term(f(l), c.clone());
        }
        out
    }

    /// Linear extension of `f: L -> LinComb<M>`.
    pub fn flat_map<M: Ord + Clone, F: FnMut(&L) -> LinComb<M>>(&self, mut f: F) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (l, c) in &self.terms {
            out.add_scaled(&f(l), c);
        }
        out
    }

    /// Keeps the terms whose label satisfies `pred`.
    pub fn filter<F: FnMut(&L) -> bool>(&self, mut pred: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| pred(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<L, Rational> {
        self.terms
    }
}

/// Bilinear extension of `f` over two linear combinations.
pub fn bilinear<A, B, M, F>(x: &LinComb<A>, y: &LinComb<B>, mut f: F) -> LinComb<M>
where
    A: Ord + Clone,
    B: Ord + Clone,
    M: Ord + Clone,
    F: FnMut(&A, &B) -> LinComb<M>,
{
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&f(a, b), &(ca * cb));
        }
    }
    out
}

impl<L: Ord + Clone> AddAssign<&LinComb<L>> for LinComb<L> {
    fn add_assign(&mut self, rhs: &LinComb<L>) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl<L: Ord + Clone> SubAssign<&LinComb<L>> for LinComb<L> {
    fn sub_assign(&mut self, rhs: &LinComb<L>) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), -c.clone());
        }
    }
}

impl<L: Ord + Clone> Add for LinComb<L> {
    type Output = LinComb<L>;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<L: Ord + Clone> Add<&LinComb<L>> for &LinComb<L> {
    type Output = LinComb<L>;
    fn add(self, rhs: &LinComb<L>) -> LinComb<L> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<L: Ord + Clone> Sub for LinComb<L> {
    type Output = LinComb<L>;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<L: Ord + Clone> Sub<&LinComb<L>> for &LinComb<L> {
    type Output = LinComb<L>;
    fn sub(self, rhs: &LinComb<L>) -> LinComb<L> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<L: Ord + Clone> Neg for LinComb<L> {
    type Output = LinComb<L>;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(l, c)| (l, -c)).collect(),
        }
    }
}

impl<L: Ord + Clone> Mul<&Rational> for &LinComb<L> {
    type Output = LinComb<L>;
    fn mul(self, rhs: &Rational) -> LinComb<L> {
        self.scale(rhs)
    }
}

impl<L: Ord + Clone> FromIterator<(L, Rational)> for LinComb<L> {
    fn from_iter<I: IntoIterator<Item = (L, Rational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<L: Ord + fmt::Display> fmt::Display for LinComb<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{}*", format_rational(&abs))?;
            }
            write!(f, "[{l}]")?;
        }
        Ok(())
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for LinComb<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(l, c)| (l, format_rational(c))))
            .finish()
    }
}

/// A linear combination of fixed-arity tuples of labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor<L: Ord> {
    arity: usize,
    comb: LinComb<Vec<L>>,
}

impl<L: Ord + Clone> Tensor<L> {
    pub fn zero(arity: usize) -> Self {
        Tensor {
            arity,
            comb: LinComb::zero(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add_term(&mut self, factors: Vec<L>, coeff: Rational) {
        assert_eq!(factors.len(), self.arity, "tensor factor count must equal the arity");
        self.comb.add_term(factors, coeff);
    }

    pub fn from_comb(arity: usize, comb: LinComb<Vec<L>>) -> Result<Self> {
        if let Some(bad) = comb.labels().find(|t| t.len() != arity) {
            return Err(Error::ArityMismatch {
                left: arity,
                right: bad.len(),
            });
        }
        Ok(Tensor { arity, comb })
    }

    /// `x ⊗ y` for two linear combinations.
    pub fn outer(x: &LinComb<L>, y: &LinComb<L>) -> Self {
        let mut out = Tensor::zero(2);
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_term(vec![a.clone(), b.clone()], ca * cb);
            }
        }
        out
    }

    pub fn comb(&self) -> &LinComb<Vec<L>> {
        &self.comb
    }

    pub fn into_comb(self) -> LinComb<Vec<L>> {
        self.comb
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<L>, &Rational)> {
        self.comb.iter()
    }

    pub fn len(&self) -> usize {
        self.comb.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comb.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.comb.is_zero()
    }

    pub fn coeff(&self, factors: &[L]) -> Rational {
        self.comb.coeff(&factors.to_vec())
    }

    pub fn add(&self, other: &Tensor<L>) -> Result<Tensor<L>> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(Tensor {
            arity: self.arity,
            comb: &self.comb + &other.comb,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_comb() -> impl Strategy<Value = LinComb<u8>> {
        prop::collection::vec((0u8..6, -4i64..5), 0..8).prop_map(|v| v.into_iter().map(|(l, c)| (l, rat(c))).collect())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut x = LinComb::term(3u8);
        x.add_term(3, rat(-1));
        assert!(x.is_zero());
        assert_eq!(x, LinComb::zero());
        x.add_term(1, rat(0));
        assert_eq!(x.len(), 0);
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "-3", "7/2", "-1/6"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn tensor_rejects_wrong_arity() {
        let c = LinComb::term(vec![1u8, 2, 3]);
        assert!(Tensor::from_comb(2, c.clone()).is_err());
        assert!(Tensor::from_comb(3, c).is_ok());
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_comb(), y in arb_comb(), z in arb_comb(), a in -3i64..4, b in -3i64..4) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert!((&x - &x).is_zero());
            let (a, b) = (rat(a), rat(b));
            prop_assert_eq!((&x + &y).scale(&a), &x.scale(&a) + &y.scale(&a));
            prop_assert_eq!(x.scale(&(&a + &b)), &x.scale(&a) + &x.scale(&b));
            prop_assert!(x.iter().all(|(_, c)| !c.is_zero()));
        }
    }
}
