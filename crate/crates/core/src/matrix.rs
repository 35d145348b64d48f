//! Dense exact-rational matrices with labelled rows and columns.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::str::FromStr;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{format_rational, parse_rational, LinComb, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix<L> {
    pub rows: Vec<L>,
    pub cols: Vec<L>,
    pub entries: Vec<Vec<Rational>>,
}

/// Wire form: `{ "rows": [...], "cols": [...], "entries": [["1", "-1/2", ...], ...] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl<L: Clone + Ord> TransitionMatrix<L> {
    pub fn identity(labels: Vec<L>) -> Self {
        let n = labels.len();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        TransitionMatrix {
            rows: labels.clone(),
            cols: labels,
            entries,
        }
    }

    /// Column `j` holds the coefficients of `columns[j]` on `rows`.
    pub fn from_columns(rows: Vec<L>, cols: Vec<L>, columns: &[LinComb<L>]) -> Self {
        let index: BTreeMap<&L, usize> = rows.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let mut entries = vec![vec![Rational::zero(); cols.len()]; rows.len()];
        for (j, col) in columns.iter().enumerate() {
            for (l, c) in col.iter() {
                if let Some(&i) = index.get(l) {
                    entries[i][j] = c.clone();
                }
            }
        }
        TransitionMatrix { rows, cols, entries }
    }

    pub fn column(&self, j: usize) -> LinComb<L> {
        LinComb::from_terms(
            self.rows
                .iter()
                .zip(&self.entries)
                .map(|(l, row)| (l.clone(), row[j].clone())),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
            })
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.ncols())
            .map(|j| self.entries.iter().map(|row| row[j].clone()).collect())
            .collect();
        TransitionMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries,
        }
    }

    /// `self · other`; requires `self.cols == other.rows`.
    pub fn mul(&self, other: &TransitionMatrix<L>) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                left: self.ncols(),
                right: other.nrows(),
            });
        }
        let mut entries = vec![vec![Rational::zero(); other.ncols()]; self.nrows()];
        for (i, row) in self.entries.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.entries[k].iter().enumerate() {
                    if !b.is_zero() {
                        entries[i][j] += a * b;
                    }
                }
            }
        }
        Ok(TransitionMatrix {
            rows: self.rows.clone(),
            cols: other.cols.clone(),
            entries,
        })
    }

    /// Exact inverse by Gauss–Jordan elimination; row and column labels swap.
    pub fn invert(&self) -> Result<Self> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(Error::NotSquare {
                rows: n,
                cols: self.ncols(),
            });
        }
        let mut a = self.entries.clone();
        let mut inv: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            if !p.is_one() {
                let pinv = p.recip();
                for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                    if !x.is_zero() {
                        *x *= &pinv;
                    }
                }
            }
            let pivot_a: Vec<(usize, Rational)> = nonzero(&a[col]);
            let pivot_inv: Vec<(usize, Rational)> = nonzero(&inv[col]);
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for (j, x) in &pivot_a {
                    a[r][*j] -= &f * x;
                }
                for (j, x) in &pivot_inv {
                    inv[r][*j] -= &f * x;
                }
            }
        }
        Ok(TransitionMatrix {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            entries: inv,
        })
    }
}

fn nonzero(row: &[Rational]) -> Vec<(usize, Rational)> {
    row.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

impl<L: Clone + Ord + Display> TransitionMatrix<L> {
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows.iter().map(|l| l.to_string()).collect(),
            cols: self.cols.iter().map(|l| l.to_string()).collect(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }

    /// Rows of space-separated entries, `.` for zero.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!(
            "cols: {}\n",
            self.cols.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
        ));
        for (l, row) in self.rows.iter().zip(&self.entries) {
            let cells: Vec<String> = row
                .iter()
                .map(|x| {
                    if x.is_zero() {
                        ".".to_string()
                    } else {
                        format_rational(x)
                    }
                })
                .collect();
            s.push_str(&format!("{l}: {}\n", cells.join(" ")));
        }
        s
    }
}

impl<L: Clone + Ord + FromStr<Err = Error>> TransitionMatrix<L> {
    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        let rows = json.rows.iter().map(|s| s.parse()).collect::<Result<Vec<L>>>()?;
        let cols = json.cols.iter().map(|s| s.parse()).collect::<Result<Vec<L>>>()?;
        if json.entries.len() != rows.len() || json.entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::SizeMismatch {
                left: rows.len(),
                right: json.entries.len(),
            });
        }
        let entries = json
            .entries
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(TransitionMatrix { rows, cols, entries })
    }
}

/// Coefficients `c` with `Σ c_k spanning[k] = target`, if `target` lies in the span.
pub fn express_in_span<L: Ord + Clone>(spanning: &[LinComb<L>], target: &LinComb<L>) -> Option<Vec<Rational>> {
    let mut labels: Vec<L> = spanning.iter().flat_map(|v| v.labels().cloned()).collect();
    labels.extend(target.labels().cloned());
    labels.sort();
    labels.dedup();
    let k = spanning.len();
    // augmented system: one row per label, columns = spanning vectors + target
    let mut rows: Vec<Vec<Rational>> = labels
        .iter()
        .map(|l| {
            let mut r: Vec<Rational> = spanning.iter().map(|v| v.coeff(l)).collect();
            r.push(target.coeff(l));
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for col in 0..k {
        let Some(p) = (r0..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(r0, p);
        let inv = rows[r0][col].recip();
        for x in rows[r0].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r0].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != r0 && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r0 += 1;
    }
    if rows[r0..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut coeffs = vec![Rational::zero(); k];
    for (r, &col) in pivots.iter().enumerate() {
        coeffs[col] = rows[r][k].clone();
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rat;

    fn m(entries: &[&[i64]]) -> TransitionMatrix<u8> {
        let n = entries.len() as u8;
        TransitionMatrix {
            rows: (0..n).collect(),
            cols: (0..n).collect(),
            entries: entries.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        }
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = TransitionMatrix::identity(vec![1u8, 2, 3]);
        assert!(id.invert().unwrap().is_identity());
    }

    #[test]
    fn singular_is_reported() {
        assert!(matches!(m(&[&[1, 2], &[2, 4]]).invert(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn random_unitriangular_has_integer_inverse() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(1..9);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                1
                            } else if j < i {
                                rng.gen_range(0..2)
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let a = m(&refs);
            let inv = a.invert().unwrap();
            assert!(a.mul(&inv).unwrap().is_identity());
            assert!(inv.entries.iter().flatten().all(|x| x.is_integer()));
        }
    }

    #[test]
    fn non_integer_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.invert().unwrap();
        assert!(inv.mul(&a).unwrap().is_identity());
        let b = m(&[&[2, 0], &[0, 4]]).invert().unwrap();
        assert_eq!(b.entries[1][1], Rational::new(1.into(), 4.into()));
    }

    #[test]
    fn span_membership() {
        let v1 = LinComb::from_terms([(1u8, rat(1)), (2, rat(1))]);
        let v2 = LinComb::from_terms([(2u8, rat(1)), (3, rat(-1))]);
        let t = &v1.scale(&rat(3)) - &v2;
        let c = express_in_span(&[v1.clone(), v2.clone(), &v1 + &v2], &t).unwrap();
        let back = &(&v1.scale(&c[0]) + &v2.scale(&c[1])) + &(&v1 + &v2).scale(&c[2]);
        assert_eq!(back, t);
        assert!(express_in_span(&[v1, v2], &LinComb::term(4)).is_none());
    }

    #[test]
    fn json_round_trip() {
        let a = m(&[&[1, 0], &[-1, 1]]);
        let j = a.to_json();
        assert_eq!(j.entries[1], vec!["-1".to_string(), "1".to_string()]);
    }
}
