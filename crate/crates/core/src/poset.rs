//! Finite posets given by an explicit ground set and an order oracle.

use std::collections::HashMap;
use std::fmt::{Display, Write as _};
use std::hash::Hash;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FinitePoset<L> {
    elements: Vec<L>,
    index: HashMap<L, usize>,
    leq: Vec<Vec<bool>>,
    /// a linear extension of the order, as indices into `elements`
    linear: Vec<usize>,
}

impl<L: Clone + Eq + Hash + Display> FinitePoset<L> {
    /// Tabulates `leq` on `elements` and checks the partial-order axioms.
    pub fn new<F: Fn(&L, &L) -> bool>(elements: Vec<L>, leq: F) -> Result<Self> {
        let poset = Self::new_unchecked(elements, leq);
        poset.check_axioms()?;
        Ok(poset)
    }

    pub fn new_unchecked<F: Fn(&L, &L) -> bool>(elements: Vec<L>, leq: F) -> Self {
        let n = elements.len();
        let table: Vec<Vec<bool>> = elements
            .iter()
            .map(|x| elements.iter().map(|y| leq(x, y)).collect())
            .collect();
        let index = elements.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let mut linear: Vec<usize> = (0..n).collect();
        let below: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| table[i][j]).count()).collect();
        linear.sort_by_key(|&i| (below[i], i));
        FinitePoset {
            elements,
            index,
            leq: table,
            linear,
        }
    }

    /// Reflexivity, antisymmetry and transitivity, checked exhaustively.
    pub fn check_axioms(&self) -> Result<()> {
        let n = self.elements.len();
        let fail = |what: &str, i: usize, j: usize| {
            Err(Error::NotInInterval(format!(
                "order relation is not {what} at ({}, {})",
                self.elements[i], self.elements[j]
            )))
        };
        for i in 0..n {
            if !self.leq[i][i] {
                return fail("reflexive", i, i);
            }
            for j in 0..n {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return fail("antisymmetric", i, j);
                }
                if self.leq[i][j] {
                    for k in 0..n {
                        if self.leq[j][k] && !self.leq[i][k] {
                            return fail("transitive", i, k);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn elements(&self) -> &[L] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &L) -> Result<usize> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| Error::NotInPoset(x.to_string()))
    }

    pub fn leq(&self, x: &L, y: &L) -> Result<bool> {
        Ok(self.leq[self.index_of(x)?][self.index_of(y)?])
    }

    #[cfg(test)]
    pub(crate) fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Elements `z` with `x ≤ z ≤ y`, in a linear-extension order.
    pub fn interval(&self, x: &L, y: &L) -> Result<Vec<L>> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        Ok(self
            .linear
            .iter()
            .filter(|&&k| self.leq[i][k] && self.leq[k][j])
            .map(|&k| self.elements[k].clone())
            .collect())
    }

    /// Hasse diagram edges `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> Vec<(L, L)> {
        let n = self.elements.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || !self.leq[i][j] {
                    continue;
                }
                let between = (0..n).any(|k| k != i && k != j && self.leq[i][k] && self.leq[k][j]);
                if !between {
                    out.push((self.elements[i].clone(), self.elements[j].clone()));
                }
            }
        }
        out
    }

    /// `μ(x, ·)` for every element, by the recursion `μ(x,y) = -Σ_{x≤z<y} μ(x,z)`.
    fn moebius_row(&self, i: usize) -> Vec<i64> {
        let n = self.elements.len();
        let mut mu = vec![0i64; n];
        for &j in &self.linear {
            if !self.leq[i][j] {
                continue;
            }
            mu[j] = if i == j {
                1
            } else {
                -(0..n)
                    .filter(|&k| k != j && self.leq[i][k] && self.leq[k][j])
                    .map(|k| mu[k])
                    .sum::<i64>()
            };
        }
        mu
    }

    pub fn moebius(&self, x: &L, y: &L) -> Result<i64> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        Ok(self.moebius_row(i)[j])
    }

    /// `μ(elements[i], elements[j])` for all `i, j`.
    pub fn moebius_table(&self) -> Vec<Vec<i64>> {
        (0..self.elements.len()).map(|i| self.moebius_row(i)).collect()
    }

    /// Number of chains `x = x_0 < x_1 < … < x_len = y`.
    pub fn chains(&self, x: &L, y: &L, len: usize) -> Result<u64> {
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        if !self.leq[i][j] {
            return Ok(0);
        }
        let members: Vec<usize> = self
            .linear
            .iter()
            .copied()
            .filter(|&k| self.leq[i][k] && self.leq[k][j])
            .collect();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(p, &k)| (k, p)).collect();
        let mut ways = vec![0u64; members.len()];
        ways[pos[&i]] = 1;
        for _ in 0..len {
            let mut next = vec![0u64; members.len()];
            for (a, &ka) in members.iter().enumerate() {
                if ways[a] == 0 {
                    continue;
                }
                for (b, &kb) in members.iter().enumerate() {
                    if ka != kb && self.leq[ka][kb] {
                        next[b] += ways[a];
                    }
                }
            }
            ways = next;
        }
        Ok(ways[pos[&j]])
    }

    /// Graphviz rendering of the Hasse diagram.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        let _ = writeln!(s, "  rankdir=BT;");
        for x in &self.elements {
            let _ = writeln!(s, "  \"{x}\";");
        }
        for (x, y) in self.covers() {
            let _ = writeln!(s, "  \"{x}\" -> \"{y}\";");
        }
        s.push_str("}\n");
        s
    }
}
