//! Command-line front end: expansions, basis conversion, transition matrices,
//! verification suites, poset export, and the Weyl, Cauchy and splitting identities.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use fqsym::bases::{expand, permutohedron, BasisTag};
use fqsym::cache::MatrixCache;
use fqsym::catenohedron::Catenohedron;
use fqsym::cauchy::{cauchy_commutative_lhs, free_cauchy};
use fqsym::error::{Error, Result};
use fqsym::fqsym::FqsymElem;
use fqsym::json::TaggedElem;
use fqsym::linear::{format_rational, LinComb};
use fqsym::perm::{Permutation, Word};
use fqsym::poset::FinitePoset;
use fqsym::quotients::{hypoplactic_cauchy, plactic_cauchy_both};
use fqsym::splitting::{dynkin_span, in_span, pr_span, splitting_check};
use fqsym::verify::{self, Bounds, Check, Suite};
use fqsym::weyl::free_weyl;

#[derive(Parser)]
#[command(
    name = "fqsym",
    version,
    about = "Exact computations in the Hopf algebra of free quasi-symmetric functions"
)]
struct Cli {
    /// Largest permutation size or degree any verb may compute with.
    #[arg(long, global = true, default_value_t = 6)]
    max_n: usize,

    /// Output format; defaults to json, or dot for `poset`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Never read or write the matrix cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Matrix cache directory (overrides FQSYM_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Seed for sampled property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Copy, Clone, ValueEnum)]
enum PosetKind {
    Catenohedron,
    Permutohedron,
}

#[derive(Copy, Clone, ValueEnum)]
enum CauchyMode {
    Free,
    Hypoplactic,
    Plactic,
    Commutative,
}

#[derive(Copy, Clone, ValueEnum)]
enum HClass {
    Ncsf,
    Pr,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand one basis element in another basis.
    Expand {
        #[arg(long)]
        basis: String,
        #[arg(long)]
        index: String,
        /// Target basis; defaults to G or F, whichever the source is written in.
        #[arg(long)]
        to: Option<String>,
    },
    /// Rewrite an element (JSON or `2*S[4132] - S[21]`) in another basis.
    Convert {
        #[arg(long)]
        elem: String,
        #[arg(long)]
        to: String,
    },
    /// Transition matrix: column σ holds the coefficients of `from_σ` on `to`.
    Matrix {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        n: usize,
        /// Recompute and compare against the cached copy.
        #[arg(long)]
        check_cache: bool,
    },
    /// Run an identity suite: weyl, cauchy, duality, splitting, moebius or all.
    Verify {
        suite: String,
        /// Size for the suite; defaults to min(max-n, 4), or 3 for moebius.
        #[arg(long)]
        n: Option<usize>,
        /// Degree for the cauchy suite.
        #[arg(long)]
        degree: Option<usize>,
        /// Alphabet sizes `p,q` for the cauchy suite.
        #[arg(long)]
        letters: Option<String>,
    },
    /// Export a poset on S_n.
    Poset {
        #[arg(value_enum)]
        kind: PosetKind,
        #[arg(long)]
        n: usize,
    },
    /// `π_ω(A_σ)` as a sum of words, by evaluation then lexicographically.
    Weyl {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        letters: usize,
    },
    /// Degree-d slice of a Cauchy kernel.
    Cauchy {
        #[arg(long)]
        degree: usize,
        /// Alphabet sizes `p,q`.
        #[arg(long, default_value = "2,2")]
        letters: String,
        #[arg(long, value_enum, default_value = "free")]
        mode: CauchyMode,
    },
    /// Both sides of `(F_1⋯F_r) * H = μ_r[(F_1 ⊗ ⋯ ⊗ F_r) *_r Δ^r H]`.
    Split {
        #[arg(long, num_args = 1.., required = true)]
        factors: Vec<String>,
        #[arg(long = "H")]
        h: String,
        #[arg(long, value_enum, default_value = "ncsf")]
        class: HClass,
    },
}

/// Rendered output plus whether every reported identity held.
struct Outcome {
    body: String,
    ok: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{}", out.body.trim_end()) {
                // a closed pipe downstream is not an error of ours
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn bound(cli: &Cli, n: usize) -> Result<()> {
    if n > cli.max_n {
        return Err(Error::BoundExceeded { n, max: cli.max_n });
    }
    Ok(())
}

fn format(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = cli.format.unwrap_or(default);
    if !allowed.contains(&f) {
        let name = f
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        return Err(Error::parse("format", &name, "not available for this verb"));
    }
    Ok(f)
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("output is serializable")
}

fn cache(cli: &Cli) -> MatrixCache {
    if cli.no_cache {
        MatrixCache::disabled()
    } else {
        MatrixCache::resolve(cli.cache_dir.as_deref())
    }
}

fn parse_letters(s: &str) -> Result<(u32, u32)> {
    let err = || Error::parse("alphabet sizes", s, "expected p,q");
    let (p, q) = s.split_once(',').ok_or_else(err)?;
    Ok((
        p.trim().parse().map_err(|_| err())?,
        q.trim().parse().map_err(|_| err())?,
    ))
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.cmd {
        Cmd::Expand { basis, index, to } => {
            let tag: BasisTag = basis.parse()?;
            let sigma: Permutation = index.parse()?;
            bound(cli, sigma.size())?;
            let target = match to {
                Some(t) => t.parse()?,
                None => BasisTag::from(tag.native()),
            };
            let x = expand(tag, &sigma)?;
            emit_element(cli, &convert(cli, &x, target, sigma.size())?)
        }
        Cmd::Convert { elem, to } => {
            let x = TaggedElem::parse(elem)?;
            bound(cli, x.max_size())?;
            let target: BasisTag = to.parse()?;
            let y = convert(cli, &x.to_fqsym()?, target, x.max_size())?;
            emit_element(cli, &y)
        }
        Cmd::Matrix {
            from,
            to,
            n,
            check_cache,
        } => {
            let (from, to): (BasisTag, BasisTag) = (from.parse()?, to.parse()?);
            bound(cli, *n)?;
            let f = format(cli, Format::Json, &[Format::Json, Format::Text])?;
            let c = cache(cli);
            let m = c.matrix(from, to, *n)?;
            let mut ok = true;
            if *check_cache {
                ok = MatrixCache::disabled().matrix(from, to, *n)? == m;
            }
            let body = match f {
                Format::Text => m.to_text(),
                _ => to_json(&m.to_json()),
            };
            if !ok {
                eprintln!("cached matrix differs from recomputation");
            }
            Ok(Outcome { body, ok })
        }
        Cmd::Verify {
            suite,
            n,
            degree,
            letters,
        } => {
            let suite: Suite = suite.parse()?;
            let size = n.unwrap_or(cli.max_n.min(4));
            let moebius_n = n.unwrap_or(3);
            let degree = degree.unwrap_or(size.min(3));
            let letters = letters.as_deref().map(parse_letters).transpose()?.unwrap_or((3, 3));
            for k in [size, moebius_n, degree] {
                bound(cli, k)?;
            }
            let f = format(cli, Format::Json, &[Format::Json, Format::Text])?;
            let b = Bounds {
                max_n: size,
                degree,
                letters,
                moebius_n,
                seed: cli.seed,
            };
            let reports = verify::run_suite(suite, &b)?;
            let ok = reports.iter().all(|r| r.passed);
            let body = match f {
                Format::Text => reports.iter().map(|r| r.to_text()).collect(),
                _ => to_json(&json!({ "passed": ok, "bounds": b, "suites": reports })),
            };
            Ok(Outcome { body, ok })
        }
        Cmd::Poset { kind, n } => {
            bound(cli, *n)?;
            let f = format(cli, Format::Dot, &[Format::Dot, Format::Json, Format::Text])?;
            let (name, poset): (String, FinitePoset<Permutation>) = match kind {
                PosetKind::Catenohedron => (format!("catenohedron{n}"), Catenohedron::new(*n)?.poset().clone()),
                PosetKind::Permutohedron => (format!("permutohedron{n}"), permutohedron(*n)),
            };
            let body = match f {
                Format::Dot => poset.to_dot(&name),
                Format::Text => poset.covers().iter().map(|(a, b)| format!("{a} < {b}\n")).collect(),
                Format::Json => to_json(&json!({
                    "name": name,
                    "elements": poset.elements().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "covers": poset.covers().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                })),
            };
            Ok(Outcome::ok(body))
        }
        Cmd::Weyl { perm, letters } => {
            let sigma: Permutation = perm.parse()?;
            bound(cli, sigma.size())?;
            bound(cli, *letters)?;
            let f = format(cli, Format::Json, &[Format::Json, Format::Text])?;
            let x = free_weyl(&sigma, *letters)?;
            let terms = weyl_order(&x, *letters);
            let body = match f {
                Format::Text => terms.iter().map(|(w, c)| format!("{c} {w}\n")).collect(),
                _ => to_json(&json!({
                    "perm": sigma.to_u32s(),
                    "letters": letters,
                    "terms": terms.iter().map(|(w, c)| json!({ "coeff": c, "word": w.0 })).collect::<Vec<_>>(),
                })),
            };
            Ok(Outcome::ok(body))
        }
        Cmd::Cauchy { degree, letters, mode } => {
            let (p, q) = parse_letters(letters)?;
            bound(cli, *degree)?;
            bound(cli, p.max(q) as usize)?;
            format(cli, Format::Json, &[Format::Json])?;
            let (d, pu, qu) = (*degree, p as usize, q as usize);
            let (check, terms): (Check, Vec<Value>) = match mode {
                CauchyMode::Free => (
                    verify::free_cauchy_check(d, p, q)?,
                    free_cauchy(d, p, q)
                        .iter()
                        .map(|(t, c)| json!({ "coeff": format_rational(c), "left": t[0].0, "right": t[1].0 }))
                        .collect(),
                ),
                CauchyMode::Hypoplactic => (
                    verify::hypoplactic_check(d, p, q),
                    hypoplactic_cauchy(d, p, q)
                        .iter()
                        .map(|((k, w), c)| json!({ "coeff": format_rational(c), "left": k, "right": w.0 }))
                        .collect(),
                ),
                CauchyMode::Plactic => (
                    verify::plactic_check(d, p, q),
                    plactic_cauchy_both(d, p, q)
                        .iter()
                        .map(|((a, b), c)| json!({ "coeff": format_rational(c), "left": a, "right": b }))
                        .collect(),
                ),
                CauchyMode::Commutative => (
                    verify::commutative_cauchy_check(d, pu, qu),
                    cauchy_commutative_lhs(d, pu, qu)
                        .iter()
                        .map(|((m, w), c)| json!({ "coeff": format_rational(c), "x": m, "word": w.0 }))
                        .collect(),
                ),
            };
            let ok = check.passed;
            let body = to_json(&json!({
                "degree": d,
                "letters": [p, q],
                "identity": check,
                "terms": terms,
            }));
            Ok(Outcome { body, ok })
        }
        Cmd::Split { factors, h, class } => {
            let fs: Vec<TaggedElem> = factors.iter().map(|s| TaggedElem::parse(s)).collect::<Result<_>>()?;
            let h = TaggedElem::parse(h)?;
            let total: usize = fs.iter().map(TaggedElem::max_size).sum();
            bound(cli, total.max(h.max_size()))?;
            format(cli, Format::Json, &[Format::Json])?;
            let fqs: Vec<FqsymElem> = fs.iter().map(TaggedElem::to_fqsym).collect::<Result<_>>()?;
            let hx = h.to_fqsym()?;
            let report = splitting_check(&fqs, &hx)?;
            let n = h.max_size();
            let (class_name, span) = match class {
                HClass::Ncsf => ("ncsf", dynkin_span(n)),
                HClass::Pr => ("pr", pr_span(n)),
            };
            let homogeneous = hx.in_g().labels().all(|s| s.size() == n);
            let lhs = TaggedElem::from_fqsym(&report.lhs, BasisTag::G)?;
            let rhs = TaggedElem::from_fqsym(&report.rhs, BasisTag::G)?;
            let body = to_json(&json!({
                "class": class_name,
                "in_declared_class": homogeneous && in_span(&span, &hx),
                "holds": report.holds,
                "lhs": lhs.to_json(),
                "rhs": rhs.to_json(),
            }));
            Ok(Outcome { body, ok: report.holds })
        }
    }
}

/// `x` on `target`, using cached `G → target` matrices for each degree.
fn convert(cli: &Cli, x: &FqsymElem, target: BasisTag, max_size: usize) -> Result<TaggedElem> {
    let g = x.in_g();
    let comb = match target {
        BasisTag::G => g,
        BasisTag::F => x.in_f(),
        _ => {
            let c = cache(cli);
            let mut out = LinComb::zero();
            for n in 0..=max_size {
                let part: Vec<_> = g.iter().filter(|(s, _)| s.size() == n).collect();
                if part.is_empty() {
                    continue;
                }
                let m = c.matrix(BasisTag::G, target, n)?;
                for (s, coeff) in part {
                    let j = m.cols.binary_search(s).expect("all permutations are labels");
                    out.add_scaled(&m.column(j), coeff);
                }
            }
            out
        }
    };
    Ok(TaggedElem::new(target, comb))
}

fn emit_element(cli: &Cli, x: &TaggedElem) -> Result<Outcome> {
    let f = format(cli, Format::Json, &[Format::Json, Format::Text])?;
    Ok(Outcome::ok(match f {
        Format::Text => x.to_text(),
        _ => to_json(&x.to_json()),
    }))
}

/// Terms sorted by evaluation, heaviest on small letters first, then lexicographically.
fn weyl_order(x: &LinComb<Word>, letters: usize) -> Vec<(Word, String)> {
    let mut terms: Vec<(Vec<u32>, Word, String)> = x
        .iter()
        .map(|(w, c)| {
            let mut ev = w.evaluation();
            ev.resize(letters, 0);
            (ev, w.clone(), format_rational(c))
        })
        .collect();
    terms.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    terms.into_iter().map(|(_, w, c)| (w, c)).collect()
}
