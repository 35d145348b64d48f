//! Noncommutative symmetric functions inside FQSym, Lie elements, and the
//! splitting formula `(F_1⋯F_r) * H = μ_r[(F_1 ⊗ ⋯ ⊗ F_r) *_r Δ^r H]`.

use crate::error::{Error, Result};
use crate::fqsym::{internal_product, Basis, FqsymElem};
use crate::linear::{rat, LinComb, Rational, Tensor};
use crate::matrix::express_in_span;
use crate::perm::{Composition, Permutation};

/// `S^I = G_{12…i_1} ⋯ G_{12…i_r}`.
pub fn ncsf_s(i: &Composition) -> FqsymElem {
    i.parts().iter().fold(FqsymElem::one(), |acc, &k| {
        acc.product(&FqsymElem::g(Permutation::identity(k as usize)))
    })
}

/// `Λ^I = G_{i_1…1} ⋯ G_{i_r…1}`.
pub fn ncsf_lambda(i: &Composition) -> FqsymElem {
    i.parts().iter().fold(FqsymElem::one(), |acc, &k| {
        acc.product(&FqsymElem::g(Permutation::longest(k as usize)))
    })
}

/// `R_I = Σ_{C(σ) = I} G_σ`.
pub fn ribbon(i: &Composition) -> FqsymElem {
    let comb = LinComb::sum_of(
        Permutation::all(i.weight())
            .into_iter()
            .filter(|s| s.descent_composition() == *i),
    );
    FqsymElem::new(Basis::G, comb)
}

/// `S^I = Σ_{J coarser than I} R_J`.
pub fn ncsf_s_from_ribbons(i: &Composition) -> FqsymElem {
    Composition::all(i.weight())
        .into_iter()
        .filter(|j| i.is_finer_than(j))
        .fold(FqsymElem::zero(Basis::G), |acc, j| acc.add(&ribbon(&j)))
}

/// `[x, y] = xy − yx` on words, read back as `G` labels.
fn bracket(x: &LinComb<Vec<u8>>, y: &LinComb<Vec<u8>>) -> LinComb<Vec<u8>> {
    let cat = |a: &Vec<u8>, b: &Vec<u8>| {
        let mut w = a.clone();
        w.extend_from_slice(b);
        LinComb::term(w)
    };
    &crate::linear::bilinear(x, y, cat) - &crate::linear::bilinear(y, x, cat)
}

fn left_normed(letters: &[u8]) -> FqsymElem {
    let mut acc: LinComb<Vec<u8>> = LinComb::term(vec![letters[0]]);
    for &a in &letters[1..] {
        acc = bracket(&acc, &LinComb::term(vec![a]));
    }
    FqsymElem::new(
        Basis::G,
        acc.map_labels(|w| Permutation::new(w).expect("letters are 1..n")),
    )
}

/// The Dynkin element `[…[[1, 2], 3], …, n]`.
pub fn dynkin_lie(n: usize) -> FqsymElem {
    assert!(n >= 1, "Dynkin elements start in degree 1");
    let letters: Vec<u8> = (1..=n as u8).collect();
    left_normed(&letters)
}

/// A basis of `Lie_n`: left-normed brackets `[…[1, a_2], …, a_n]`.
pub fn lie_basis(n: usize) -> Vec<FqsymElem> {
    if n == 0 {
        return Vec::new();
    }
    Permutation::all(n - 1)
        .into_iter()
        .map(|s| {
            let mut letters = vec![1u8];
            letters.extend(s.as_slice().iter().map(|&x| x + 1));
            left_normed(&letters)
        })
        .collect()
}

/// `dynkin(j_1) ⋯ dynkin(j_s)`.
pub fn lie_product_sample(j: &Composition) -> FqsymElem {
    j.parts()
        .iter()
        .fold(FqsymElem::one(), |acc, &k| acc.product(&dynkin_lie(k as usize)))
}

/// Products of Dynkin elements over all compositions of `n`.
pub fn dynkin_span(n: usize) -> Vec<FqsymElem> {
    Composition::all(n).iter().map(lie_product_sample).collect()
}

/// Products of elements of `lie_basis` over all compositions of `n`: a spanning set of `𝒜_n`.
pub fn pr_span(n: usize) -> Vec<FqsymElem> {
    let mut out = Vec::new();
    for j in Composition::all(n) {
        let mut partial = vec![FqsymElem::one()];
        for &k in j.parts() {
            let basis = lie_basis(k as usize);
            partial = partial
                .iter()
                .flat_map(|x| basis.iter().map(move |l| x.product(l)))
                .collect();
        }
        out.extend(partial);
    }
    out
}

/// Rank of a family of elements.
pub fn rank(elems: &[FqsymElem]) -> usize {
    let mut kept: Vec<LinComb<Permutation>> = Vec::new();
    for e in elems {
        let g = e.in_g();
        if express_in_span(&kept, &g).is_none() {
            kept.push(g);
        }
    }
    kept.len()
}

pub fn in_span(span: &[FqsymElem], x: &FqsymElem) -> bool {
    let vs: Vec<LinComb<Permutation>> = span.iter().map(|e| e.in_g()).collect();
    express_in_span(&vs, &x.in_g()).is_some()
}

/// `Δ^r x` in `G^{⊗r}`; `r = 1` returns `x` as an arity-1 tensor.
pub fn iterated_coproduct(x: &FqsymElem, r: usize) -> Result<Tensor<Permutation>> {
    if r == 0 {
        return Err(Error::ArityMismatch { left: 0, right: 1 });
    }
    let g = FqsymElem::new(Basis::G, x.in_g());
    let mut cur = Tensor::zero(1);
    for (s, c) in g.comb().iter() {
        cur.add_term(vec![s.clone()], c.clone());
    }
    for _ in 1..r {
        let mut next = Tensor::zero(cur.arity() + 1);
        for (labels, c) in cur.iter() {
            let (last, head) = labels.split_last().expect("arity ≥ 1");
            for (pair, d) in FqsymElem::g(last.clone()).coproduct().iter() {
                let mut v = head.to_vec();
                v.extend(pair.iter().cloned());
                next.add_term(v, c * d);
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// `Δ^r` computed by always splitting the first factor instead of the last.
pub fn iterated_coproduct_left(x: &FqsymElem, r: usize) -> Result<Tensor<Permutation>> {
    if r == 0 {
        return Err(Error::ArityMismatch { left: 0, right: 1 });
    }
    let mut cur = Tensor::zero(1);
    for (s, c) in x.in_g().iter() {
        cur.add_term(vec![s.clone()], c.clone());
    }
    for _ in 1..r {
        let mut next = Tensor::zero(cur.arity() + 1);
        for (labels, c) in cur.iter() {
            for (pair, d) in FqsymElem::g(labels[0].clone()).coproduct().iter() {
                let mut v = pair.clone();
                v.extend(labels[1..].iter().cloned());
                next.add_term(v, c * d);
            }
        }
        cur = next;
    }
    Ok(cur)
}

/// Componentwise internal product of `G`-labelled tensors.
pub fn tensor_internal(xs: &Tensor<Permutation>, ys: &Tensor<Permutation>) -> Result<Tensor<Permutation>> {
    if xs.arity() != ys.arity() {
        return Err(Error::ArityMismatch {
            left: xs.arity(),
            right: ys.arity(),
        });
    }
    let mut out = Tensor::zero(xs.arity());
    for (a, ca) in xs.iter() {
        for (b, cb) in ys.iter() {
            if a.iter().zip(b).any(|(s, t)| s.size() != t.size()) {
                continue;
            }
            let labels = a.iter().zip(b).map(|(s, t)| t.compose(s)).collect();
            out.add_term(labels, ca * cb);
        }
    }
    Ok(out)
}

/// `μ_r`: multiply the factors of each term in `G`.
pub fn multiply_out(t: &Tensor<Permutation>) -> FqsymElem {
    let mut out = FqsymElem::zero(Basis::G);
    for (labels, c) in t.iter() {
        let prod = labels
            .iter()
            .fold(FqsymElem::one(), |acc, s| acc.product(&FqsymElem::g(s.clone())));
        out = out.add(&prod.scale(c));
    }
    out
}

/// `F_1 ⊗ ⋯ ⊗ F_r` in `G^{⊗r}`.
pub fn tensor_of(fs: &[FqsymElem]) -> Tensor<Permutation> {
    let mut cur = Tensor::zero(0);
    cur.add_term(Vec::new(), rat(1));
    for f in fs {
        let mut next = Tensor::zero(cur.arity() + 1);
        for (labels, c) in cur.iter() {
            for (s, d) in f.in_g().iter() {
                let mut v = labels.clone();
                v.push(s.clone());
                next.add_term(v, c * d);
            }
        }
        cur = next;
    }
    cur
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitReport {
    pub holds: bool,
    pub lhs: FqsymElem,
    pub rhs: FqsymElem,
}

/// Both sides of the splitting formula, given a precomputed `Δ^r H`.
pub fn splitting_sides(fs: &[FqsymElem], h: &FqsymElem, delta_h: &Tensor<Permutation>) -> Result<SplitReport> {
    let prod = fs.iter().fold(FqsymElem::one(), |acc, f| acc.product(f));
    let lhs = internal_product(&prod, h);
    let rhs = multiply_out(&tensor_internal(&tensor_of(fs), delta_h)?);
    let holds = lhs.in_g() == rhs.in_g();
    Ok(SplitReport { holds, lhs, rhs })
}

pub fn splitting_check(fs: &[FqsymElem], h: &FqsymElem) -> Result<SplitReport> {
    let delta_h = iterated_coproduct(h, fs.len())?;
    splitting_sides(fs, h, &delta_h)
}

/// `G_{α_1} ⋯ G_{α_r}` against `G_{α_1 • ⋯ • α_r} * S^I`.
pub fn prod_gsi_sides(alphas: &[Permutation]) -> (FqsymElem, FqsymElem) {
    let lhs = alphas
        .iter()
        .fold(FqsymElem::one(), |acc, a| acc.product(&FqsymElem::g(a.clone())));
    let cat = alphas.iter().fold(Permutation::empty(), |acc, a| acc.shifted_concat(a));
    let i = Composition(alphas.iter().map(|a| a.size() as u32).collect());
    let rhs = internal_product(&FqsymElem::g(cat), &ncsf_s(&i));
    (lhs, rhs)
}

/// A failure of the splitting formula for `H = G_τ` outside `𝒜`.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub tau: Permutation,
    pub factors: Vec<Permutation>,
    pub report: SplitReport,
    pub outside_pr: bool,
}

/// First `H = G_τ` (lexicographic in `S_n`) and first pair of `G` factors for which the formula fails.
pub fn find_counterexample(n: usize) -> Result<Option<Counterexample>> {
    let span = pr_span(n);
    for tau in Permutation::all(n) {
        let h = FqsymElem::g(tau.clone());
        let delta = iterated_coproduct(&h, 2)?;
        for j in Composition::all(n).into_iter().filter(|j| j.len() == 2) {
            for a in Permutation::all(j.parts()[0] as usize) {
                for b in Permutation::all(j.parts()[1] as usize) {
                    let fs = [FqsymElem::g(a.clone()), FqsymElem::g(b.clone())];
                    let report = splitting_sides(&fs, &h, &delta)?;
                    if !report.holds {
                        return Ok(Some(Counterexample {
                            outside_pr: !in_span(&span, &h),
                            tau,
                            factors: vec![a, b],
                            report,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Every pairwise internal product of `span` lies in the span of `span`.
pub fn closed_under_internal(span: &[FqsymElem]) -> bool {
    let vs: Vec<LinComb<Permutation>> = span.iter().map(|e| e.in_g()).collect();
    span.iter().all(|x| {
        span.iter()
            .all(|y| express_in_span(&vs, &internal_product(x, y).in_g()).is_some())
    })
}

/// Coefficient vector helper for reports.
pub fn coefficients(x: &FqsymElem) -> Vec<(Permutation, Rational)> {
    x.in_g().iter().map(|(s, c)| (s.clone(), c.clone())).collect()
}
