//! Machine-checkable identity suites with JSON reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bases::{
    commutative_m, commutative_w, expand, expand_m_moebius, expand_u_moebius, expand_v_moebius, expand_w_moebius,
    is_adjoint, is_primitive, pairing_matrix, permutohedron, primitive_basis, transition_matrix, BasisTag,
    PrimitiveKind,
};
use crate::catenohedron::{degree, Catenohedron};
use crate::cauchy::{
    cauchy_commutative_lhs, cauchy_commutative_rhs, cauchy_for_pair, cauchy_fundamental, free_cauchy, free_cauchy_words,
};
use crate::error::{Error, Result};
use crate::fqsym::{pairing, realize, tensor_pairing, Basis, FqsymElem};
use crate::linear::{rat, LinComb, Tensor};
use crate::perm::{alpha, omega, Composition, Permutation, Word};
use crate::quotients::{
    hypoplactic_cauchy, hypoplactic_cauchy_ribbons, pbt_morphism_failure, plactic_cauchy_both, plactic_cauchy_right,
    plactic_cauchy_symmetric, plactic_cauchy_tableaux, sylvester_class, SYLVESTER_SIDE,
};
use crate::splitting::{
    closed_under_internal, dynkin_span, find_counterexample, iterated_coproduct, lie_product_sample, ncsf_s,
    prod_gsi_sides, splitting_sides,
};
use crate::weyl::{free_weyl, pi_along, pi_comb};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail: None,
            counterexample: None,
        }
    }

    pub fn fail(name: impl Into<String>, counterexample: Value) -> Self {
        Check {
            name: name.into(),
            passed: false,
            detail: None,
            counterexample: Some(counterexample),
        }
    }

    /// `pass` when `failure` is `None`.
    pub fn from_failure(name: impl Into<String>, failure: Option<Value>) -> Self {
        match failure {
            None => Check::pass(name),
            Some(c) => Check::fail(name, c),
        }
    }

    pub fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> Self {
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport {
            suite: suite.into(),
            passed,
            checks,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}: {}\n", self.suite, if self.passed { "pass" } else { "FAIL" });
        for c in &self.checks {
            s.push_str(&format!("  [{}] {}\n", if c.passed { "pass" } else { "FAIL" }, c.name));
            if let Some(x) = &c.counterexample {
                s.push_str(&format!("    counterexample: {x}\n"));
            }
        }
        s
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Weyl,
    Cauchy,
    Duality,
    Splitting,
    Moebius,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Weyl,
        Suite::Cauchy,
        Suite::Duality,
        Suite::Splitting,
        Suite::Moebius,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Weyl => "weyl",
            Suite::Cauchy => "cauchy",
            Suite::Duality => "duality",
            Suite::Splitting => "splitting",
            Suite::Moebius => "moebius",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "weyl" => Ok(Suite::Weyl),
            "cauchy" => Ok(Suite::Cauchy),
            "duality" => Ok(Suite::Duality),
            "splitting" => Ok(Suite::Splitting),
            "moebius" | "mobius" | "möbius" => Ok(Suite::Moebius),
            "all" => Ok(Suite::All),
            _ => Err(Error::parse(
                "suite",
                s,
                "expected weyl|cauchy|duality|splitting|moebius|all",
            )),
        }
    }
}

/// Size bounds shared by the suites.
#[derive(Copy, Clone, Debug, Serialize)]
pub struct Bounds {
    /// permutation size for weyl, duality and splitting
    pub max_n: usize,
    /// degree for cauchy
    pub degree: usize,
    /// alphabet sizes `(p, q)` for cauchy
    pub letters: (u32, u32),
    /// size for moebius
    pub moebius_n: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_n: 4,
            degree: 3,
            letters: (3, 3),
            moebius_n: 3,
            seed: 0,
        }
    }
}

pub fn run_suite(suite: Suite, b: &Bounds) -> Result<Vec<SuiteReport>> {
    Ok(match suite {
        Suite::Weyl => vec![weyl_suite(b.max_n)?],
        Suite::Cauchy => vec![cauchy_suite(b.degree, b.letters.0, b.letters.1)?],
        Suite::Duality => vec![duality_suite(b.max_n, b.seed)?],
        Suite::Splitting => vec![splitting_suite(b.max_n)?],
        Suite::Moebius => vec![moebius_suite(b.moebius_n)?],
        Suite::All => Suite::EACH
            .iter()
            .map(|&s| run_suite(s, b).map(|mut r| r.remove(0)))
            .collect::<Result<_>>()?,
    })
}

fn perm_json(s: &Permutation) -> Value {
    json!(s.to_u32s())
}

fn words_json<'a>(ws: impl IntoIterator<Item = &'a Word>) -> Value {
    json!(ws.into_iter().map(|w| w.0.clone()).collect::<Vec<_>>())
}

// ----------------------------------------------------------------------- weyl

/// `π_ω(A_σ) = F_σ(A)` for every `σ ∈ S_n`, over `n` letters.
pub fn free_weyl_check(n: usize) -> Result<Check> {
    let failure = Permutation::all(n)
        .into_par_iter()
        .map(|s| free_weyl(&s, n).map(|lhs| (lhs != realize(&s, Basis::F, n)).then_some(s)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(Check::from_failure(
        format!("free Weyl formula, n = {n}"),
        failure.map(|s| json!({ "sigma": perm_json(&s) })),
    ))
}

/// `π_i² = π_i`, braid and commutation relations on all words of length `≤ max_len` over `letters` letters.
pub fn hecke_laws_check(max_len: usize, letters: usize) -> Result<Check> {
    let name = format!("Hecke relations, words of length <= {max_len} over {letters} letters");
    let gens: Vec<usize> = (1..letters).collect();
    let mut tested = 0usize;
    for len in 0..=max_len {
        for w in Word::all(len, letters as u32) {
            let x = LinComb::term(w.clone());
            for &i in &gens {
                let once = pi_comb(i, letters, &x)?;
                tested += 1;
                if pi_comb(i, letters, &once)? != once {
                    return Ok(Check::fail(
                        name,
                        json!({ "relation": "idempotence", "i": i, "word": w.0 }),
                    ));
                }
                for &j in &gens {
                    let rel = if j == i + 1 {
                        pi_along(&x, letters, &[i, j, i])? == pi_along(&x, letters, &[j, i, j])?
                    } else if j > i + 1 {
                        pi_along(&x, letters, &[i, j])? == pi_along(&x, letters, &[j, i])?
                    } else {
                        true
                    };
                    if !rel {
                        return Ok(Check::fail(
                            name,
                            json!({ "relation": if j == i + 1 { "braid" } else { "commutation" }, "i": i, "j": j, "word": w.0 }),
                        ));
                    }
                }
            }
        }
    }
    Ok(Check::pass(name).with_detail(json!({ "words_times_generators": tested })))
}

pub fn weyl_suite(max_n: usize) -> Result<SuiteReport> {
    let mut checks: Vec<Check> = (1..=max_n).map(free_weyl_check).collect::<Result<_>>()?;
    let k = max_n.clamp(1, 4);
    checks.push(hecke_laws_check(k, k)?);
    Ok(SuiteReport::new("weyl", checks))
}

// --------------------------------------------------------------------- cauchy

fn tensor_diff_json(a: &Tensor<Word>, b: &Tensor<Word>) -> Value {
    let only = |x: &Tensor<Word>, y: &Tensor<Word>| -> Vec<Value> {
        x.iter()
            .filter(|(t, c)| y.coeff(t) != **c)
            .take(3)
            .map(|(t, _)| words_json(t.iter()))
            .collect()
    };
    json!({ "left_only": only(a, b), "right_only": only(b, a) })
}

/// Biword pairs against `Σ F_σ ⊗ G_σ`, direct enumeration, and every adjoint pair.
pub fn free_cauchy_check(d: usize, p: u32, q: u32) -> Result<Check> {
    let name = format!("free Cauchy identity, degree {d}, letters ({p}, {q})");
    let kernel = free_cauchy(d, p, q);
    let words = free_cauchy_words(d, p, q);
    if kernel != words {
        return Ok(Check::fail(
            name,
            json!({ "against": "words", "diff": tensor_diff_json(&kernel, &words) }),
        ));
    }
    let fg = cauchy_fundamental(d, p, q);
    if kernel != fg {
        return Ok(Check::fail(
            name,
            json!({ "against": "F⊗G", "diff": tensor_diff_json(&kernel, &fg) }),
        ));
    }
    for (pt, qt) in BasisTag::ADJOINT_PAIRS.into_iter().skip(1) {
        let t = cauchy_for_pair(pt, qt, d, p, q)?;
        if t != kernel {
            return Ok(Check::fail(
                name,
                json!({ "against": format!("{pt}/{qt}"), "diff": tensor_diff_json(&kernel, &t) }),
            ));
        }
    }
    Ok(Check::pass(name).with_detail(json!({ "terms": kernel.len() })))
}

pub fn hypoplactic_check(d: usize, p: u32, q: u32) -> Check {
    let lhs = hypoplactic_cauchy(d, p, q);
    let rhs = hypoplactic_cauchy_ribbons(d, p, q);
    let name = format!("hypoplactic collapse = Σ F_I ⊗ R_I, degree {d}");
    if lhs == rhs {
        Check::pass(name).with_detail(json!({ "terms": lhs.len() }))
    } else {
        Check::fail(name, json!({ "lhs_terms": lhs.len(), "rhs_terms": rhs.len() }))
    }
}

pub fn plactic_check(d: usize, p: u32, q: u32) -> Check {
    let name = format!("plactic collapse = Σ S_t ⊗ S_t* = Σ S_λ ⊗ S_λ, degree {d}");
    let right = plactic_cauchy_right(d, p, q);
    let tabs = plactic_cauchy_tableaux(d, p, q);
    if right != tabs {
        return Check::fail(
            name,
            json!({ "stage": "S_t ⊗ S_t*", "lhs_terms": right.len(), "rhs_terms": tabs.len() }),
        );
    }
    let both = plactic_cauchy_both(d, p, q);
    let sym = plactic_cauchy_symmetric(d, p, q);
    if both != sym {
        return Check::fail(
            name,
            json!({ "stage": "S_λ ⊗ S_λ", "lhs_terms": both.len(), "rhs_terms": sym.len() }),
        );
    }
    Check::pass(name).with_detail(json!({ "terms": both.len() }))
}

pub fn catalan(n: usize) -> usize {
    (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Catalan class counts and the PBT projection morphism up to `max_degree`.
pub fn sylvester_check(max_degree: usize) -> Check {
    let name = format!("sylvester classes and PBT morphism, degree <= {max_degree}");
    let counts: Vec<usize> = (1..=max_degree)
        .map(|n| {
            Permutation::all(n)
                .iter()
                .map(|s| sylvester_class(&Word(s.to_u32s())))
                .collect::<BTreeSet<_>>()
                .len()
        })
        .collect();
    let expected: Vec<usize> = (1..=max_degree).map(catalan).collect();
    if counts != expected {
        return Check::fail(name, json!({ "counts": counts, "catalan": expected }));
    }
    match pbt_morphism_failure(max_degree, SYLVESTER_SIDE) {
        Some((a, b)) => Check::fail(name, json!({ "sigma": perm_json(&a), "tau": perm_json(&b) })),
        None => Check::pass(name).with_detail(json!({ "counts": counts })),
    }
}

pub fn commutative_cauchy_check(d: usize, p: usize, q: usize) -> Check {
    let lhs = cauchy_commutative_lhs(d, p, q);
    let rhs = cauchy_commutative_rhs(d, p, q);
    let name = format!("commutative Cauchy identity, degree {d}");
    if lhs == rhs {
        Check::pass(name).with_detail(json!({ "terms": lhs.len() }))
    } else {
        Check::fail(name, json!({ "lhs_terms": lhs.len(), "rhs_terms": rhs.len() }))
    }
}

pub fn cauchy_suite(degree: usize, p: u32, q: u32) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for d in 0..=degree {
        checks.push(free_cauchy_check(d, p, q)?);
        checks.push(hypoplactic_check(d, p, q));
        checks.push(plactic_check(d, p, q));
        checks.push(commutative_cauchy_check(d, p as usize, q as usize));
    }
    checks.push(sylvester_check(degree.max(1)));
    Ok(SuiteReport::new("cauchy", checks))
}

// ------------------------------------------------------------------- duality

/// `⟨Q_σ, P_τ⟩ = δ_{στ}` for every adjoint pair, as an exact matrix identity.
pub fn duality_check(n: usize) -> Result<Check> {
    let name = format!("adjoint pairs, n = {n}");
    for (pt, qt) in BasisTag::ADJOINT_PAIRS {
        if !is_adjoint(pt, qt, n)? {
            let m = pairing_matrix(pt, qt, n)?;
            return Ok(Check::fail(
                name,
                json!({ "pair": format!("{pt}/{qt}"), "pairing": m.to_json() }),
            ));
        }
    }
    Ok(Check::pass(name))
}

/// `M_σ(X) = M_I` iff `σ = ω(I)`, else 0; `W_σ(X) = 0` unless `σ = α(I)`.
pub fn commutative_lemmas_check(n: usize) -> Result<Check> {
    let name = format!("commutative images of M and W, n = {n}");
    for s in Permutation::all(n) {
        let c = s.descent_composition();
        let m = commutative_m(&s)?;
        let expected = if s == omega(&c) {
            LinComb::term(c.clone())
        } else {
            LinComb::zero()
        };
        if m != expected {
            return Ok(Check::fail(
                name,
                json!({ "basis": "M", "sigma": perm_json(&s), "image": m.to_string() }),
            ));
        }
        let w = commutative_w(&s)?;
        if s != alpha(&c) && !w.is_zero() {
            return Ok(Check::fail(
                name,
                json!({ "basis": "W", "sigma": perm_json(&s), "image": w.to_string() }),
            ));
        }
    }
    Ok(Check::pass(name))
}

pub fn primitives_check(n: usize) -> Result<Check> {
    let name = format!("primitive families, n = {n}");
    let mut count = BTreeMap::new();
    for kind in [PrimitiveKind::M, PrimitiveKind::W] {
        let family = primitive_basis(n, kind)?;
        count.insert(format!("{kind:?}"), family.len());
        if let Some((s, _)) = family.iter().find(|(_, e)| !is_primitive(e)) {
            return Ok(Check::fail(
                name,
                json!({ "kind": format!("{kind:?}"), "sigma": perm_json(s) }),
            ));
        }
    }
    Ok(Check::pass(name).with_detail(json!(count)))
}

pub fn connected_counts(max_n: usize) -> Vec<usize> {
    (1..=max_n)
        .map(|n| Permutation::all(n).iter().filter(|s| s.is_connected()).count())
        .collect()
}

fn random_elem(rng: &mut ChaCha8Rng, n: usize) -> FqsymElem {
    let perms = Permutation::all(n);
    let mut comb = LinComb::zero();
    for _ in 0..3 {
        let s = perms[rng.gen_range(0..perms.len())].clone();
        comb.add_term(s, rat(rng.gen_range(-3..=3)));
    }
    FqsymElem::new(Basis::G, comb)
}

/// Sampled self-duality: `⟨xy, z⟩ = ⟨x ⊗ y, Δz⟩`.
pub fn sampled_hopf_duality(max_n: usize, seed: u64, samples: usize) -> Check {
    let name = format!("sampled ⟨xy, z⟩ = ⟨x ⊗ y, Δz⟩, seed {seed}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = rng.gen_range(0..=max_n);
        let b = rng.gen_range(0..=max_n - a);
        let (x, y) = (random_elem(&mut rng, a), random_elem(&mut rng, b));
        let z = random_elem(&mut rng, a + b).to_basis(Basis::F);
        let lhs = pairing(&z, &x.product(&y));
        let rhs = tensor_pairing(&z.coproduct(), &Tensor::outer(&x.in_g(), &y.in_g()));
        if lhs != rhs {
            return Check::fail(
                name,
                json!({ "x": x.comb().to_string(), "y": y.comb().to_string(), "z": z.comb().to_string() }),
            );
        }
    }
    Check::pass(name).with_detail(json!({ "samples": samples }))
}

pub fn duality_suite(max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut checks: Vec<Check> = (1..=max_n).map(duality_check).collect::<Result<_>>()?;
    for n in 1..=max_n.min(4) {
        checks.push(commutative_lemmas_check(n)?);
        checks.push(primitives_check(n)?);
    }
    let counts = connected_counts(max_n.min(5));
    let expected = [1usize, 1, 3, 13, 71];
    let name = "connected permutation counts";
    checks.push(if counts[..] == expected[..counts.len()] {
        Check::pass(name).with_detail(json!(counts))
    } else {
        Check::fail(name, json!({ "counts": counts }))
    });
    checks.push(sampled_hopf_duality(max_n, seed, 32));
    Ok(SuiteReport::new("duality", checks))
}

// ------------------------------------------------------------------ splitting

fn tuples_of_sizes(parts: &[u32]) -> Vec<Vec<Permutation>> {
    parts.iter().fold(vec![Vec::new()], |acc, &k| {
        let perms = Permutation::all(k as usize);
        acc.into_iter()
            .flat_map(|t| {
                perms.iter().map(move |s| {
                    let mut v = t.clone();
                    v.push(s.clone());
                    v
                })
            })
            .collect()
    })
}

/// Splitting formula for every `H` of `family(n)` and every tuple of `G`-basis factors, `n ≤ max_degree`.
pub fn splitting_sweep(
    name: &str,
    max_degree: usize,
    family: impl Fn(&Composition) -> FqsymElem + Sync,
) -> Result<Check> {
    let name = format!("{name}, degree <= {max_degree}");
    let jobs: Vec<(Composition, Composition)> = (1..=max_degree)
        .flat_map(|n| {
            let hs = Composition::all(n);
            Composition::all(n)
                .into_iter()
                .flat_map(move |j| hs.clone().into_iter().map(move |h| (h, j.clone())))
        })
        .collect();
    let results: Vec<(usize, Option<Value>)> = jobs
        .par_iter()
        .map(|(hi, j)| -> Result<(usize, Option<Value>)> {
            let h = family(hi);
            let delta = iterated_coproduct(&h, j.len())?;
            let mut count = 0;
            for fs in tuples_of_sizes(j.parts()) {
                let factors: Vec<FqsymElem> = fs.iter().cloned().map(FqsymElem::g).collect();
                count += 1;
                if !splitting_sides(&factors, &h, &delta)?.holds {
                    let ce = json!({ "H": hi.to_string(), "factors": fs.iter().map(perm_json).collect::<Vec<_>>() });
                    return Ok((count, Some(ce)));
                }
            }
            Ok((count, None))
        })
        .collect::<Result<_>>()?;
    let total: usize = results.iter().map(|r| r.0).sum();
    let failure = results.into_iter().find_map(|r| r.1);
    Ok(Check::from_failure(name, failure).with_detail(json!({ "instances": total })))
}

pub fn prod_gsi_check(max_degree: usize) -> Check {
    let name = format!("G_α1⋯G_αr = (G_α1•⋯•G_αr) * S^I, degree <= {max_degree}");
    for n in 1..=max_degree {
        for j in Composition::all(n) {
            for alphas in tuples_of_sizes(j.parts()) {
                let (l, r) = prod_gsi_sides(&alphas);
                if l != r {
                    return Check::fail(
                        name,
                        json!({ "alphas": alphas.iter().map(perm_json).collect::<Vec<_>>() }),
                    );
                }
            }
        }
    }
    Check::pass(name)
}

/// The first degree-3 failure for `H = G_τ`, which must lie outside `𝒜`.
pub fn counterexample_check() -> Result<Check> {
    let name = "counterexample for H outside the Patras-Reutenauer algebra, degree 3";
    Ok(match find_counterexample(3)? {
        Some(ce) => {
            let payload = json!({
                "H": format!("G{}", ce.tau),
                "factors": ce.factors.iter().map(|s| format!("G{s}")).collect::<Vec<_>>(),
                "lhs": ce.report.lhs.comb().to_string(),
                "rhs": ce.report.rhs.comb().to_string(),
                "outside_span": ce.outside_pr,
            });
            if ce.outside_pr {
                Check::pass(name).with_detail(payload)
            } else {
                Check::fail(name, payload)
            }
        }
        None => Check::fail(name, json!("no failure found")),
    })
}

pub fn closure_check(max_n: usize) -> Check {
    let name = format!("sampled span of Dynkin products closed under *, n <= {max_n}");
    match (1..=max_n).find(|&n| !closed_under_internal(&dynkin_span(n))) {
        Some(n) => Check::fail(name, json!({ "n": n })),
        None => Check::pass(name),
    }
}

pub fn splitting_suite(max_degree: usize) -> Result<SuiteReport> {
    let mut checks = vec![
        splitting_sweep("splitting formula, H = S^I", max_degree, ncsf_s)?,
        splitting_sweep(
            "splitting formula, H = products of Dynkin elements",
            max_degree,
            lie_product_sample,
        )?,
        prod_gsi_check(max_degree),
    ];
    if max_degree >= 3 {
        checks.push(counterexample_check()?);
    }
    checks.push(closure_check(max_degree.min(4)));
    Ok(SuiteReport::new("splitting", checks))
}

// -------------------------------------------------------------------- moebius

/// Fhat/F transition matrices, mutually inverse, echoed in the report.
pub fn transition_check(n: usize) -> Result<Check> {
    let name = format!("M_{n}(Fhat, F) and M_{n}(F, Fhat) are mutually inverse");
    let a = transition_matrix(BasisTag::Fhat, BasisTag::F, n)?;
    let b = transition_matrix(BasisTag::F, BasisTag::Fhat, n)?;
    let detail = json!({ "fhat_to_f": a.to_json(), "f_to_fhat": b.to_json() });
    Ok(if a.mul(&b)?.is_identity() && b.mul(&a)?.is_identity() {
        Check::pass(name).with_detail(detail)
    } else {
        Check::fail(name, detail)
    })
}

/// Order axioms, strict growth of `deg`, interval suprema and closed-form Möbius.
pub fn catenohedron_check(n: usize) -> Result<Check> {
    let name = format!("catenohedron, n = {n}");
    let cat = match Catenohedron::new(n) {
        Ok(c) => c,
        Err(e) => return Ok(Check::fail(name, json!({ "order": e.to_string() }))),
    };
    let els = cat.poset().elements().to_vec();
    let mut intervals = 0usize;
    for s in &els {
        for t in &els {
            if !cat.leq(s, t)? {
                continue;
            }
            intervals += 1;
            if s != t && degree(s) >= degree(t) {
                return Ok(Check::fail(
                    name,
                    json!({ "degree_not_increasing": [perm_json(s), perm_json(t)] }),
                ));
            }
            if s != t {
                let m = cat.minimal_successors(s, t)?;
                for mask in 0u32..1 << m.len() {
                    let subset: Vec<Permutation> = m
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask >> k & 1 == 1)
                        .map(|(_, x)| x.clone())
                        .collect();
                    if cat.sup_in_interval(&subset, s, t).is_err() {
                        return Ok(Check::fail(
                            name,
                            json!({ "no_supremum": subset.iter().map(perm_json).collect::<Vec<_>>(), "interval": [perm_json(s), perm_json(t)] }),
                        ));
                    }
                }
            }
            let (closed, rec) = (cat.moebius_closed_form(s, t)?, cat.moebius(s, t)?);
            if closed != rec {
                return Ok(Check::fail(
                    name,
                    json!({ "interval": [perm_json(s), perm_json(t)], "closed_form": closed, "recursive": rec }),
                ));
            }
        }
    }
    Ok(Check::pass(name).with_detail(json!({ "intervals": intervals })))
}

/// Möbius expansions of `M`, `W`, `V`, `U` against the dual-basis inversion.
pub fn moebius_routes_check(n: usize) -> Result<Check> {
    let name = format!("Möbius expansions of dual bases, n = {n}");
    let weak = permutohedron(n);
    let cat = Catenohedron::new(n)?;
    for s in Permutation::all(n) {
        let routes = [
            (BasisTag::M, expand_m_moebius(&s, &weak)?),
            (BasisTag::W, expand_w_moebius(&s, &weak)?),
            (BasisTag::V, expand_v_moebius(&s, &cat)?),
            (BasisTag::U, expand_u_moebius(&s, &cat)?),
        ];
        for (tag, via_moebius) in routes {
            if via_moebius.in_g() != expand(tag, &s)?.in_g() {
                return Ok(Check::fail(
                    name,
                    json!({ "basis": tag.to_string(), "sigma": perm_json(&s) }),
                ));
            }
        }
    }
    Ok(Check::pass(name))
}

pub fn moebius_suite(n: usize) -> Result<SuiteReport> {
    let mut checks = vec![transition_check(n)?];
    for k in 1..=n {
        checks.push(catenohedron_check(k)?);
        checks.push(moebius_routes_check(k)?);
    }
    Ok(SuiteReport::new("moebius", checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_bounds() {
        let b = Bounds {
            max_n: 3,
            degree: 2,
            letters: (2, 2),
            moebius_n: 3,
            seed: 7,
        };
        for r in run_suite(Suite::All, &b).unwrap() {
            assert!(r.passed, "{}", r.to_text());
        }
    }

    #[test]
    fn trivial_cauchy_degree() {
        let r = cauchy_suite(1, 3, 3).unwrap();
        assert!(r.passed);
        assert!(serde_json::to_value(&r).unwrap()["checks"].is_array());
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!((0..6).map(catalan).collect::<Vec<_>>(), [1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
