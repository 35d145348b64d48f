//! The catenohedron order: `σ ≺_F τ` iff `F_τ` occurs in `F^σ`, the product of
//! the `F`'s of the connected factors of `σ`. Its `G` twin is
//! `σ ≺_G τ ⇔ σ⁻¹ ≺_F τ⁻¹`.

use crate::error::{Error, Result};
use crate::perm::{Factorization, Permutation};
use crate::poset::FinitePoset;

/// `σ ≺_F τ`: `τ` is a shifted shuffle of the connected factors of `σ`.
///
/// Equivalently, for each block of values carried by a factor, the subword of
/// `τ` on those values is the shifted factor itself.
pub fn leq_f(sigma: &Permutation, tau: &Permutation) -> bool {
    if sigma.size() != tau.size() {
        return false;
    }
    let mut offset = 0u8;
    for factor in sigma.decompose(Factorization::Connected) {
        let k = factor.size() as u8;
        let sub = tau
            .as_slice()
            .iter()
            .filter(|&&x| x > offset && x <= offset + k)
            .map(|&x| x - offset);
        if !sub.eq(factor.as_slice().iter().copied()) {
            return false;
        }
        offset += k;
    }
    true
}

pub fn leq_g(sigma: &Permutation, tau: &Permutation) -> bool {
    leq_f(&sigma.inverse(), &tau.inverse())
}

/// `deg(σ) = n − ℓ(J(σ))`, strictly increasing along `≺_F`.
pub fn degree(sigma: &Permutation) -> usize {
    sigma.size() - sigma.connected_composition().len()
}

/// `p̃_T(τ)`: concatenate the subwords of `τ` on the value intervals cut at `T`.
pub fn p_tilde(t: &[usize], tau: &Permutation) -> Result<Permutation> {
    let n = tau.size();
    let mut cuts: Vec<usize> = t.to_vec();
    cuts.sort_unstable();
    cuts.dedup();
    if cuts.iter().any(|&c| c == 0 || c >= n) {
        return Err(Error::NotInInterval(format!(
            "cut set {t:?} is not a subset of [1, {}]",
            n.saturating_sub(1)
        )));
    }
    cuts.push(n);
    let mut word = Vec::with_capacity(n);
    let mut lo = 0usize;
    for &hi in &cuts {
        word.extend(
            tau.as_slice()
                .iter()
                .copied()
                .filter(|&x| (x as usize) > lo && (x as usize) <= hi),
        );
        lo = hi;
    }
    Permutation::new(&word)
}

/// `≺_F` on `S_n`, tabulated.
#[derive(Clone, Debug)]
pub struct Catenohedron {
    n: usize,
    poset: FinitePoset<Permutation>,
}

impl Catenohedron {
    /// Builds the order and checks reflexivity, antisymmetry and transitivity.
    pub fn new(n: usize) -> Result<Self> {
        let poset = FinitePoset::new(Permutation::all(n), leq_f)?;
        Ok(Catenohedron { n, poset })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poset(&self) -> &FinitePoset<Permutation> {
        &self.poset
    }

    pub fn leq(&self, sigma: &Permutation, tau: &Permutation) -> Result<bool> {
        self.poset.leq(sigma, tau)
    }

    /// `M_{στ}`: the minimal elements of `]σ, τ]`.
    pub fn minimal_successors(&self, sigma: &Permutation, tau: &Permutation) -> Result<Vec<Permutation>> {
        if !self.leq(sigma, tau)? {
            return Err(Error::NotInInterval(format!("{sigma} is not below {tau}")));
        }
        let open: Vec<Permutation> = self
            .poset
            .interval(sigma, tau)?
            .into_iter()
            .filter(|x| x != sigma)
            .collect();
        let mut out: Vec<Permutation> = open
            .iter()
            .filter(|x| !open.iter().any(|y| y != *x && self.poset.leq(y, x).unwrap_or(false)))
            .cloned()
            .collect();
        out.sort();
        Ok(out)
    }

    /// Least upper bound of `elems` inside `[lo, hi]`; the bound of the empty set is `lo`.
    pub fn sup_in_interval(&self, elems: &[Permutation], lo: &Permutation, hi: &Permutation) -> Result<Permutation> {
        let interval = self.poset.interval(lo, hi)?;
        for e in elems {
            if !interval.contains(e) {
                return Err(Error::NotInInterval(format!("{e} is not in [{lo}, {hi}]")));
            }
        }
        let upper: Vec<&Permutation> = interval
            .iter()
            .filter(|z| elems.iter().all(|e| self.poset.leq(e, z).unwrap_or(false)))
            .collect();
        upper
            .iter()
            .find(|z| upper.iter().all(|w| self.poset.leq(z, w).unwrap_or(false)))
            .map(|z| (*z).clone())
            .ok_or_else(|| {
                let names: Vec<String> = elems.iter().map(|e| e.to_string()).collect();
                Error::NoSupremum(format!("{{{}}} in [{lo}, {hi}]", names.join(", ")))
            })
    }

    /// `(−1)^{#M}` if `τ = sup(M_{στ})`, else 0; and 0 off the order.
    pub fn moebius_closed_form(&self, sigma: &Permutation, tau: &Permutation) -> Result<i64> {
        if !self.leq(sigma, tau)? {
            return Ok(0);
        }
        let m = self.minimal_successors(sigma, tau)?;
        let sup = self.sup_in_interval(&m, sigma, tau)?;
        Ok(if &sup == tau {
            if m.len() % 2 == 0 {
                1
            } else {
                -1
            }
        } else {
            0
        })
    }

    /// Möbius value by the generic recursion.
    pub fn moebius(&self, sigma: &Permutation, tau: &Permutation) -> Result<i64> {
        self.poset.moebius(sigma, tau)
    }

    pub fn to_dot(&self) -> String {
        self.poset.to_dot(&format!("catenohedron{}", self.n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn p_tilde_table_for_4231() {
        let tau = p("4231");
        let table: [(&[usize], &str); 8] = [
            (&[], "4231"),
            (&[1], "1423"),
            (&[2], "2143"),
            (&[3], "2314"),
            (&[1, 2], "1243"),
            (&[1, 3], "1234"),
            (&[2, 3], "2134"),
            (&[1, 2, 3], "1234"),
        ];
        for (t, expected) in table {
            assert_eq!(p_tilde(t, &tau).unwrap(), p(expected), "{t:?}");
        }
        assert!(p_tilde(&[4], &tau).is_err());
    }

    fn subsets(n: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n.saturating_sub(1))
            .map(|mask| (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn p_tilde_cuts_are_connected_descents() {
        for n in 1..=5 {
            for tau in Permutation::all(n) {
                let mut equal = Vec::new();
                for t in subsets(n) {
                    let img = p_tilde(&t, &tau).unwrap();
                    let des = img.connected_composition().descent_set();
                    assert!(t.iter().all(|x| des.contains(x)));
                    if des == t {
                        equal.push(t);
                    }
                }
                for a in &equal {
                    for b in &equal {
                        let meet: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
                        assert!(equal.contains(&meet), "{tau} {a:?} {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn s3_order() {
        let c = Catenohedron::new(3).unwrap();
        for t in Permutation::all(3) {
            assert!(c.leq(&p("123"), &t).unwrap());
        }
        assert_eq!(
            c.minimal_successors(&p("123"), &p("321")).unwrap(),
            vec![p("132"), p("213")]
        );
        assert_eq!(
            c.sup_in_interval(&[p("132"), p("213")], &p("123"), &p("321")).unwrap(),
            p("321")
        );
        assert_eq!(c.moebius_closed_form(&p("123"), &p("321")).unwrap(), 1);
        assert!(c.minimal_successors(&p("321"), &p("321")).unwrap().is_empty());
        assert_eq!(c.moebius_closed_form(&p("321"), &p("321")).unwrap(), 1);
        assert!(leq_g(&p("123"), &p("231")));
    }

    #[test]
    fn closed_form_matches_recursion_small() {
        for n in 1..=3 {
            let c = Catenohedron::new(n).unwrap();
            for a in c.poset().elements() {
                for b in c.poset().elements() {
                    assert_eq!(c.moebius_closed_form(a, b).unwrap(), c.moebius(a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn degree_is_strictly_increasing() {
        for n in 1..=4 {
            for a in Permutation::all(n) {
                for b in Permutation::all(n) {
                    if a != b && leq_f(&a, &b) {
                        assert!(degree(&a) < degree(&b));
                    }
                }
            }
        }
    }
}
