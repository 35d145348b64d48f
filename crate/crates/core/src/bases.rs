//! Multiplicative bases of FQSym and their duals.
//!
//! | tag      | definition                                   | native basis |
//! |----------|----------------------------------------------|--------------|
//! | `S`      | `Σ_{τ ≤ σ} G_τ` (left weak order)            | `G`          |
//! | `Lambda` | `Σ_{τ ≥ σ} G_τ`                              | `G`          |
//! | `Ghat`   | product of `G` over connected factors        | `G`          |
//! | `Fhat`   | product of `F` over connected factors        | `F`          |
//! | `H`      | product of `G` over anticonnected factors    | `G`          |
//! | `M`      | dual of `S`                                  | `F`          |
//! | `W`      | dual of `Lambda`                             | `F`          |
//! | `V`      | dual of `Ghat`                               | `F`          |
//! | `U`      | dual of `H`                                  | `F`          |
//!
//! Duals are computed by inverting the partner's transition matrix; the
//! Möbius-function formulas are exposed separately as a second route.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::catenohedron;
use crate::error::{Error, Result};
use crate::fqsym::{commutative_image, convolution, Basis, FqsymElem};
use crate::linear::{rat, LinComb, Rational, Tensor};
use crate::matrix::TransitionMatrix;
use crate::perm::{alpha, interleavings, shifted_shuffle, standardize, Composition, Factorization, Permutation};
use crate::poset::FinitePoset;
use crate::qsym::f_to_m;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisTag {
    G,
    F,
    S,
    M,
    Lambda,
    W,
    Ghat,
    Fhat,
    V,
    H,
    U,
}

impl BasisTag {
    pub const ALL: [BasisTag; 11] = [
        BasisTag::G,
        BasisTag::F,
        BasisTag::S,
        BasisTag::M,
        BasisTag::Lambda,
        BasisTag::W,
        BasisTag::Ghat,
        BasisTag::Fhat,
        BasisTag::V,
        BasisTag::H,
        BasisTag::U,
    ];

    /// The fundamental basis expansions of this family are written in.
    pub fn native(self) -> Basis {
        match self {
            BasisTag::G | BasisTag::S | BasisTag::Lambda | BasisTag::Ghat | BasisTag::H => Basis::G,
            _ => Basis::F,
        }
    }

    /// For a multiplicative basis, its dual; and conversely.
    pub fn dual(self) -> BasisTag {
        match self {
            BasisTag::G => BasisTag::F,
            BasisTag::F => BasisTag::G,
            BasisTag::S => BasisTag::M,
            BasisTag::M => BasisTag::S,
            BasisTag::Lambda => BasisTag::W,
            BasisTag::W => BasisTag::Lambda,
            BasisTag::Ghat => BasisTag::V,
            BasisTag::V => BasisTag::Ghat,
            BasisTag::H => BasisTag::U,
            BasisTag::U => BasisTag::H,
            BasisTag::Fhat => BasisTag::Fhat,
        }
    }

    /// The fundamental pair and the four adjoint pairs `(P, Q)`, `P` expanded in `G` and `Q` in `F`.
    pub const ADJOINT_PAIRS: [(BasisTag, BasisTag); 5] = [
        (BasisTag::G, BasisTag::F),
        (BasisTag::S, BasisTag::M),
        (BasisTag::Lambda, BasisTag::W),
        (BasisTag::Ghat, BasisTag::V),
        (BasisTag::H, BasisTag::U),
    ];
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisTag::G => "G",
            BasisTag::F => "F",
            BasisTag::S => "S",
            BasisTag::M => "M",
            BasisTag::Lambda => "Lambda",
            BasisTag::W => "W",
            BasisTag::Ghat => "Ghat",
            BasisTag::Fhat => "Fhat",
            BasisTag::V => "V",
            BasisTag::H => "H",
            BasisTag::U => "U",
        };
        f.write_str(s)
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisTag::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownBasis(s.to_string()))
    }
}

impl From<Basis> for BasisTag {
    fn from(b: Basis) -> Self {
        match b {
            Basis::G => BasisTag::G,
            Basis::F => BasisTag::F,
        }
    }
}

fn product_of(basis: Basis, factors: &[Permutation]) -> FqsymElem {
    let mut comb = LinComb::term(Permutation::empty());
    for f in factors {
        comb = crate::linear::bilinear(&comb, &LinComb::term(f.clone()), |a, b| match basis {
            Basis::G => convolution(a, b),
            Basis::F => shifted_shuffle(a, b),
        });
    }
    FqsymElem::new(basis, comb)
}

/// `S^σ` in `G`.
pub fn expand_s(sigma: &Permutation) -> FqsymElem {
    let comb = LinComb::sum_of(Permutation::all(sigma.size()).into_iter().filter(|t| t.left_leq(sigma)));
    FqsymElem::new(Basis::G, comb)
}

/// `Λ^σ` in `G`.
pub fn expand_lambda(sigma: &Permutation) -> FqsymElem {
    let comb = LinComb::sum_of(Permutation::all(sigma.size()).into_iter().filter(|t| sigma.left_leq(t)));
    FqsymElem::new(Basis::G, comb)
}

/// `G^σ = G_{σ_1} ⋯ G_{σ_r}` over the connected factors.
pub fn expand_ghat(sigma: &Permutation) -> FqsymElem {
    product_of(Basis::G, &sigma.decompose(Factorization::Connected))
}

/// `F^σ = F_{σ_1} ⋯ F_{σ_r}` over the connected factors.
pub fn expand_fhat(sigma: &Permutation) -> FqsymElem {
    product_of(Basis::F, &sigma.decompose(Factorization::Connected))
}

/// `H^σ = G_{σ_1} ⋯ G_{σ_r}` over the anticonnected factors.
pub fn expand_h(sigma: &Permutation) -> FqsymElem {
    product_of(Basis::G, &sigma.decompose(Factorization::Anticonnected))
}

/// `H^σ` through the mirror identity: expand `G^{σ̄}` and mirror every label.
pub fn expand_h_via_mirror(sigma: &Permutation) -> FqsymElem {
    let g = expand_ghat(&sigma.mirror());
    FqsymElem::new(Basis::G, g.comb().map_labels(|t| t.mirror()))
}

/// Expansion of a single basis element in its native fundamental basis.
pub fn expand(tag: BasisTag, sigma: &Permutation) -> Result<FqsymElem> {
    Ok(match tag {
        BasisTag::G => FqsymElem::g(sigma.clone()),
        BasisTag::F => FqsymElem::f(sigma.clone()),
        BasisTag::S => expand_s(sigma),
        BasisTag::Lambda => expand_lambda(sigma),
        BasisTag::Ghat => expand_ghat(sigma),
        BasisTag::Fhat => expand_fhat(sigma),
        BasisTag::H => expand_h(sigma),
        BasisTag::M | BasisTag::W | BasisTag::V | BasisTag::U => {
            let data = basis_data(tag, sigma.size())?;
            let j = data
                .to_g
                .cols
                .binary_search(sigma)
                .expect("all permutations are labels");
            let in_g = data.to_g.column(j);
            FqsymElem::new(Basis::G, in_g).to_basis(Basis::F)
        }
    })
}

/// Expansion of a linear combination of basis elements of `tag`, in `G` or `F`.
pub fn expand_comb(tag: BasisTag, x: &LinComb<Permutation>) -> Result<FqsymElem> {
    let mut out = FqsymElem::zero(tag.native());
    for (s, c) in x.iter() {
        out = out.add(&expand(tag, s)?.scale(c));
    }
    Ok(out)
}

/// Coefficients of `x` in the basis `tag`, for any `x`.
pub fn to_basis(x: &FqsymElem, tag: BasisTag) -> Result<LinComb<Permutation>> {
    match tag {
        BasisTag::G => return Ok(x.in_g()),
        BasisTag::F => return Ok(x.in_f()),
        _ => {}
    }
    let in_g = x.in_g();
    let mut by_degree: HashMap<usize, Vec<(&Permutation, &Rational)>> = HashMap::new();
    for (s, c) in in_g.iter() {
        by_degree.entry(s.size()).or_default().push((s, c));
    }
    let mut out = LinComb::zero();
    for (n, terms) in by_degree {
        let data = basis_data(tag, n)?;
        let inv = data.from_g()?;
        for (s, c) in terms {
            let j = inv.cols.binary_search(s).expect("all permutations are labels");
            out.add_scaled(&inv.column(j), c);
        }
    }
    Ok(out)
}

/// Per-degree data of a basis: the matrix of its expansion on `G`.
#[derive(Debug)]
pub struct BasisData {
    /// rows: `G` labels, cols: basis labels
    pub to_g: TransitionMatrix<Permutation>,
    from_g: OnceLock<TransitionMatrix<Permutation>>,
}

impl BasisData {
    fn new(to_g: TransitionMatrix<Permutation>) -> Self {
        BasisData {
            to_g,
            from_g: OnceLock::new(),
        }
    }

    /// rows: basis labels, cols: `G` labels.
    pub fn from_g(&self) -> Result<&TransitionMatrix<Permutation>> {
        if let Some(m) = self.from_g.get() {
            return Ok(m);
        }
        let inv = self.to_g.invert()?;
        Ok(self.from_g.get_or_init(|| inv))
    }
}

type Cache = RwLock<HashMap<(BasisTag, usize), Arc<BasisData>>>;

static CACHE: LazyLock<Cache> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// Matrix of `tag` on `G` in degree `n`; computed once per process.
pub fn basis_data(tag: BasisTag, n: usize) -> Result<Arc<BasisData>> {
    if let Some(d) = CACHE.read().expect("cache lock").get(&(tag, n)) {
        return Ok(d.clone());
    }
    let data = Arc::new(compute_basis_data(tag, n)?);
    let mut w = CACHE.write().expect("cache lock");
    Ok(w.entry((tag, n)).or_insert(data).clone())
}

fn compute_basis_data(tag: BasisTag, n: usize) -> Result<BasisData> {
    let labels = Permutation::all(n);
    let to_g = match tag {
        BasisTag::M | BasisTag::W | BasisTag::V | BasisTag::U => {
            // D = (E⁻¹)ᵀ gives F-coefficients; relabel rows ρ ↦ ρ⁻¹ for G.
            let partner = basis_data(tag.dual(), n)?;
            let d = partner.from_g()?.transpose();
            let columns: Vec<LinComb<Permutation>> = (0..d.ncols())
                .map(|j| d.column(j).map_labels(|r| r.inverse()))
                .collect();
            TransitionMatrix::from_columns(labels.clone(), labels, &columns)
        }
        _ => {
            let columns: Vec<LinComb<Permutation>> = labels
                .iter()
                .map(|s| expand(tag, s).map(|e| e.in_g()))
                .collect::<Result<_>>()?;
            TransitionMatrix::from_columns(labels.clone(), labels, &columns)
        }
    };
    Ok(BasisData::new(to_g))
}

/// Column `σ` holds the coefficients of `from_σ` on the `to` basis; labels in lexicographic order.
pub fn transition_matrix(from: BasisTag, to: BasisTag, n: usize) -> Result<TransitionMatrix<Permutation>> {
    let labels = Permutation::all(n);
    let columns: Vec<LinComb<Permutation>> = labels
        .iter()
        .map(|s| expand(from, s).and_then(|e| to_basis(&e, to)))
        .collect::<Result<_>>()?;
    Ok(TransitionMatrix::from_columns(labels.clone(), labels, &columns))
}

/// The left weak order on `S_n` as a poset.
pub fn permutohedron(n: usize) -> FinitePoset<Permutation> {
    FinitePoset::new_unchecked(Permutation::all(n), |a, b| a.left_leq(b))
}

/// `M_σ = Σ_{τ ≥ σ} μ(σ, τ) F_τ`.
pub fn expand_m_moebius(sigma: &Permutation, weak: &FinitePoset<Permutation>) -> Result<FqsymElem> {
    let mut comb = LinComb::zero();
    for t in weak.elements() {
        let mu = weak.moebius(sigma, t)?;
        if mu != 0 {
            comb.add_term(t.clone(), rat(mu));
        }
    }
    Ok(FqsymElem::new(Basis::F, comb))
}

/// `W_τ = Σ_{σ ≤ τ} μ(σ, τ) F_σ`.
pub fn expand_w_moebius(tau: &Permutation, weak: &FinitePoset<Permutation>) -> Result<FqsymElem> {
    let mut comb = LinComb::zero();
    for s in weak.elements() {
        let mu = weak.moebius(s, tau)?;
        if mu != 0 {
            comb.add_term(s.clone(), rat(mu));
        }
    }
    Ok(FqsymElem::new(Basis::F, comb))
}

/// `V_τ = Σ_{σ ≺_G τ} μ_G(σ, τ) F_σ`, with `μ_G(σ, τ) = μ_F(σ⁻¹, τ⁻¹)`.
pub fn expand_v_moebius(tau: &Permutation, cat: &catenohedron::Catenohedron) -> Result<FqsymElem> {
    let ti = tau.inverse();
    let mut comb = LinComb::zero();
    for s in cat.poset().elements() {
        let mu = cat.moebius(s, &ti)?;
        if mu != 0 {
            comb.add_term(s.inverse(), rat(mu));
        }
    }
    Ok(FqsymElem::new(Basis::F, comb))
}

/// `U_τ = Σ μ_G(σ̄, τ̄) F_σ` over `σ̄ ≺_G τ̄`.
pub fn expand_u_moebius(tau: &Permutation, cat: &catenohedron::Catenohedron) -> Result<FqsymElem> {
    let v = expand_v_moebius(&tau.mirror(), cat)?;
    Ok(FqsymElem::new(Basis::F, v.comb().map_labels(|s| s.mirror())))
}

/// Commutative image of `M_σ`, in the monomial basis of QSym.
pub fn commutative_m(sigma: &Permutation) -> Result<LinComb<Composition>> {
    Ok(f_to_m(&commutative_image(&expand(BasisTag::M, sigma)?)))
}

/// Commutative image of `W_σ`, in the fundamental basis of QSym.
pub fn commutative_w(sigma: &Permutation) -> Result<LinComb<Composition>> {
    Ok(commutative_image(&expand(BasisTag::W, sigma)?))
}

/// Index of `Λ^I` in the `Λ` basis, computed three ways:
/// `α(I^c)`, `α` of the conjugate of the reversed composition, and `ω_{i_1} • ⋯ • ω_{i_r}`.
pub fn lambda_index(i: &Composition) -> LambdaIndex {
    let via_complement = alpha(&i.complement());
    let via_conjugate = alpha(&i.reverse().conjugate());
    let via_product = i.parts().iter().fold(Permutation::empty(), |acc, &k| {
        acc.shifted_concat(&Permutation::longest(k as usize))
    });
    LambdaIndex {
        via_complement,
        via_conjugate,
        via_product,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaIndex {
    pub via_complement: Permutation,
    pub via_conjugate: Permutation,
    pub via_product: Permutation,
}

impl LambdaIndex {
    pub fn agree(&self) -> bool {
        self.via_complement == self.via_conjugate && self.via_complement == self.via_product
    }
}

/// Pairs `(u, v)` of complementary subwords of `σ` with `u·v ≤ σ` in the right weak order.
pub fn subword_pairs(sigma: &Permutation) -> Vec<(Vec<u8>, Vec<u8>)> {
    let w = sigma.as_slice();
    let n = w.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let u: Vec<u8> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| w[i]).collect();
        let v: Vec<u8> = (0..n).filter(|&i| mask >> i & 1 == 0).map(|i| w[i]).collect();
        let uv: Vec<u8> = u.iter().chain(&v).copied().collect();
        let uv = Permutation::new(&uv).expect("rearrangement of a permutation");
        if uv.right_leq(sigma) {
            out.push((u, v));
        }
    }
    out.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    out
}

/// `ΔŠ^σ` with `Š^σ = S^{σ⁻¹}`, as a tensor of `Š` indices.
pub fn coproduct_scheck(sigma: &Permutation) -> Tensor<Permutation> {
    let mut out = Tensor::zero(2);
    for (u, v) in subword_pairs(sigma) {
        let multiplicity = interleavings(&u, &v)
            .into_iter()
            .filter(|x| x.as_slice() == sigma.as_slice())
            .count();
        let to_u32 = |x: &[u8]| x.iter().map(|&a| a as u32).collect::<Vec<u32>>();
        out.add_term(
            vec![standardize(&to_u32(&u)), standardize(&to_u32(&v))],
            rat(multiplicity as i64),
        );
    }
    out
}

/// `ΔS^σ` in `S ⊗ S`, from the subword formula.
pub fn coproduct_s(sigma: &Permutation) -> Tensor<Permutation> {
    let mut out = Tensor::zero(2);
    for (t, c) in coproduct_scheck(&sigma.inverse()).iter() {
        out.add_term(vec![t[0].inverse(), t[1].inverse()], c.clone());
    }
    out
}

/// `Δ` of an element of `tag` rewritten in `tag ⊗ tag`, through the fundamental coproduct.
pub fn coproduct_in(tag: BasisTag, sigma: &Permutation) -> Result<Tensor<Permutation>> {
    let x = expand(tag, sigma)?;
    let d = x.coproduct();
    let native = x.basis();
    let mut out = Tensor::zero(2);
    let mut memo: HashMap<Permutation, LinComb<Permutation>> = HashMap::new();
    let mut rewrite = |p: &Permutation| -> Result<LinComb<Permutation>> {
        if let Some(c) = memo.get(p) {
            return Ok(c.clone());
        }
        let c = to_basis(&FqsymElem::new(native, LinComb::term(p.clone())), tag)?;
        memo.insert(p.clone(), c.clone());
        Ok(c)
    };
    for (t, c) in d.iter() {
        let (a, b) = (rewrite(&t[0])?, rewrite(&t[1])?);
        for (x, cx) in a.iter() {
            for (y, cy) in b.iter() {
                out.add_term(vec![x.clone(), y.clone()], c * cx * cy);
            }
        }
    }
    Ok(out)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrimitiveKind {
    /// `M_σ` over anticonnected `σ`
    M,
    /// `W_σ` over connected `σ`
    W,
}

/// The primitive families, in `F`.
pub fn primitive_basis(n: usize, kind: PrimitiveKind) -> Result<Vec<(Permutation, FqsymElem)>> {
    Permutation::all(n)
        .into_iter()
        .filter(|s| match kind {
            PrimitiveKind::M => s.is_anticonnected(),
            PrimitiveKind::W => s.is_connected(),
        })
        .map(|s| {
            let tag = match kind {
                PrimitiveKind::M => BasisTag::M,
                PrimitiveKind::W => BasisTag::W,
            };
            let e = expand(tag, &s)?;
            Ok((s, e))
        })
        .collect()
}

/// `Δe = e ⊗ 1 + 1 ⊗ e`.
pub fn is_primitive(e: &FqsymElem) -> bool {
    let mut expected = Tensor::zero(2);
    for (s, c) in e.comb().iter() {
        expected.add_term(vec![s.clone(), Permutation::empty()], c.clone());
        expected.add_term(vec![Permutation::empty(), s.clone()], c.clone());
    }
    e.coproduct() == expected
}

/// `Σ_ρ P[ρ][σ] Q[ρ][τ]` for `P` expanded in `G` and `Q` in `F`: the pairing matrix.
pub fn pairing_matrix(p: BasisTag, q: BasisTag, n: usize) -> Result<TransitionMatrix<Permutation>> {
    let labels = Permutation::all(n);
    let ps: Vec<FqsymElem> = labels.iter().map(|s| expand(p, s)).collect::<Result<_>>()?;
    let qs: Vec<FqsymElem> = labels.iter().map(|s| expand(q, s)).collect::<Result<_>>()?;
    let entries = qs
        .iter()
        .map(|qe| ps.iter().map(|pe| crate::fqsym::pairing(qe, pe)).collect())
        .collect();
    Ok(TransitionMatrix {
        rows: labels.clone(),
        cols: labels,
        entries,
    })
}

/// True iff `pairing_matrix(p, q, n)` is the identity.
pub fn is_adjoint(p: BasisTag, q: BasisTag, n: usize) -> Result<bool> {
    Ok(pairing_matrix(p, q, n)?.is_identity())
}
