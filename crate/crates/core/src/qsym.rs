//! Commutative shadows: polynomials in `x_1..x_k`, quasi-symmetric functions
//! in the fundamental (`F_I`) and monomial (`M_I`) bases.

use num::One;

use crate::linear::{LinComb, Rational};
use crate::perm::{Composition, Word};

/// Exponent vector of a commutative monomial; trailing zeros are trimmed.
pub type Monomial = Vec<u32>;

pub type Polynomial = LinComb<Monomial>;

pub fn normalize_monomial(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

/// `x^{|w|}`.
pub fn commutative_image_word(w: &Word) -> Monomial {
    normalize_monomial(w.evaluation())
}

/// `C(m)`: the exponent vector with zeros removed.
pub fn monomial_composition(m: &[u32]) -> Composition {
    Composition(m.iter().copied().filter(|&e| e > 0).collect())
}

pub fn monomial_product(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    normalize_monomial(
        (0..n)
            .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
            .collect(),
    )
}

pub fn poly_product(x: &Polynomial, y: &Polynomial) -> Polynomial {
    crate::linear::bilinear(x, y, |a, b| LinComb::term(monomial_product(a, b)))
}

/// All exponent vectors of total degree `d` over `k` variables.
pub fn monomials(d: usize, k: usize) -> Vec<Monomial> {
    fn rec(d: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() + 1 == k {
            cur.push(d);
            out.push(normalize_monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=d {
            cur.push(e);
            rec(d - e, k, cur, out);
            cur.pop();
        }
    }
    if k == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(d as u32, k, &mut Vec::new(), &mut out);
    out
}

/// `F_I(x_1..x_k) = Σ_{C(m) finer than I} m`.
pub fn fundamental_poly(i: &Composition, k: usize) -> Polynomial {
    LinComb::sum_of(
        monomials(i.weight(), k)
            .into_iter()
            .filter(|m| monomial_composition(m).is_finer_than(i)),
    )
}

/// `M_I(x_1..x_k) = Σ_{C(m) = I} m`.
pub fn monomial_poly(i: &Composition, k: usize) -> Polynomial {
    LinComb::sum_of(
        monomials(i.weight(), k)
            .into_iter()
            .filter(|m| monomial_composition(m) == *i),
    )
}

/// Polynomial realization of a QSym element given in the `F_I` basis.
pub fn qsym_f_poly(x: &LinComb<Composition>, k: usize) -> Polynomial {
    x.flat_map(|i| fundamental_poly(i, k))
}

/// Polynomial realization of a QSym element given in the `M_I` basis.
pub fn qsym_m_poly(x: &LinComb<Composition>, k: usize) -> Polynomial {
    x.flat_map(|i| monomial_poly(i, k))
}

/// `F_I = Σ_{J finer than I} M_J`.
pub fn f_to_m(x: &LinComb<Composition>) -> LinComb<Composition> {
    x.flat_map(|i| LinComb::sum_of(Composition::all(i.weight()).into_iter().filter(|j| j.is_finer_than(i))))
}

/// `M_I = Σ_{J finer than I} (-1)^{ℓ(J)-ℓ(I)} F_J`.
pub fn m_to_f(x: &LinComb<Composition>) -> LinComb<Composition> {
    x.flat_map(|i| {
        LinComb::from_terms(
            Composition::all(i.weight())
                .into_iter()
                .filter(|j| j.is_finer_than(i))
                .map(|j| {
                    let sign = if (j.len() - i.len()) % 2 == 0 {
                        Rational::one()
                    } else {
                        -Rational::one()
                    };
                    (j, sign)
                }),
        )
    })
}
