//! Named verification suites over the default instance set, and the JSON
//! documents produced from them.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::combinatorics::{enumerate_gt_patterns, enumerate_ssyt, enumerate_trapezium, pattern_to_ssyt, ssyt_to_pattern, weyl_dim, SkewDiagram};
use crate::error::{Error, Result};
use crate::gtrep::{self, build_rep, Which};
use crate::olshanski::{self, TauRep};
use crate::qminor::{self, subsets};
use crate::report::{Check, Report, Status};
use crate::rmatrix;
use crate::scalar::{embed_rational, QMode, QParam, RatFuncQ, Rational, Scalar};
use crate::skewrep::{self, build_skew_module, SkewModule};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 8] = ["rmatrix", "relations", "minors", "sylvester", "complementary", "skew", "olshanski", "all"];

/// Version of every JSON document written by this crate.
pub const SCHEMA: u64 = 1;

pub fn default_lambdas() -> Vec<Vec<i64>> {
    vec![vec![1, 0], vec![2, 0], vec![1, 1, 0], vec![2, 1, 0], vec![1, 0, 0]]
}

/// `(λ, μ)` pairs; `n = len(λ) - len(μ)`.
pub fn default_skew_instances() -> Vec<(Vec<i64>, Vec<i64>)> {
    vec![(vec![3, 2, 0], vec![1]), (vec![2, 1, 0], vec![1]), (vec![2, 2, 1, 0], vec![1, 1])]
}

/// Skew instances run by the skew suite: the defaults, then `m = 0` for every default `λ`.
pub fn skew_suite_instances() -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut v = default_skew_instances();
    v.extend(default_lambdas().into_iter().map(|l| (l, Vec::new())));
    v
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub qmode: QMode,
    /// Number of rational values of `q` per check; the first is the one in `qmode`.
    pub trials: usize,
    pub seed: u64,
    /// Also run instances of rank at most two with symbolic `q`.
    pub symbolic_small: bool,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            qmode: QMode::Rational(Rational::new(5.into(), 2.into())),
            trials: 3,
            seed: 0,
            symbolic_small: true,
            timings: false,
        }
    }
}

/// A value of `q` in one of the two coefficient fields.
#[derive(Clone, Debug)]
pub enum QInstance {
    Rat(QParam<Rational>),
    Sym(QParam<RatFuncQ>),
}

impl QInstance {
    pub fn label(&self) -> &str {
        match self {
            QInstance::Rat(q) => q.label(),
            QInstance::Sym(q) => q.label(),
        }
    }

    pub fn from_mode(mode: &QMode) -> Result<Self> {
        Ok(match mode {
            QMode::Symbolic => QInstance::Sym(QParam::symbolic()),
            QMode::Rational(q0) => QInstance::Rat(QParam::rational(q0)?),
        })
    }
}

/// Run `$body` with `$q` bound to the `QParam` inside a [`QInstance`].
#[macro_export]
macro_rules! with_q {
    ($qi:expr, $q:ident => $body:expr) => {
        match $qi {
            $crate::suites::QInstance::Rat($q) => $body,
            $crate::suites::QInstance::Sym($q) => $body,
        }
    };
}

/// Independent deterministic stream for one purpose.
pub fn rng_for(seed: u64, purpose: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(purpose);
    rng
}

fn random_point(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-12..=12);
        let den: i64 = rng.gen_range(1..=7);
        if num != 0 {
            return Rational::new(num.into(), den.into());
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Invalid("trials must be at least 1".into()));
        }
        Ok(())
    }

    /// Values of `q` for an instance of rank `n`.
    pub fn q_values(&self, n: usize) -> Result<Vec<QInstance>> {
        let mut out = Vec::new();
        match &self.qmode {
            QMode::Symbolic => return Ok(vec![QInstance::Sym(QParam::symbolic())]),
            QMode::Rational(q0) => {
                let mut seen = vec![q0.clone()];
                let mut rng = rng_for(self.seed, 1);
                while seen.len() < self.trials {
                    let num: i64 = rng.gen_range(2..=9);
                    let den: i64 = rng.gen_range(1..=7);
                    let c = Rational::new(num.into(), den.into());
                    if QParam::rational(&c).is_ok() && !seen.contains(&c) {
                        seen.push(c);
                    }
                }
                for c in &seen {
                    out.push(QInstance::Rat(QParam::rational(c)?));
                }
            }
        }
        if self.symbolic_small && n <= 2 {
            out.push(QInstance::Sym(QParam::symbolic()));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "qmode": self.qmode.to_string(),
            "trials": self.trials,
            "seed": self.seed,
            "symbolic_small": self.symbolic_small,
        })
    }
}

fn fmt_tuple(v: &[i64]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Record `checks` under `prefix`, each carrying the wall time of the whole group.
fn record(report: &mut Report, prefix: &str, start: Instant, checks: Vec<Check>) {
    let ms = start.elapsed().as_millis();
    for mut c in checks {
        c.name = format!("{prefix} {}", c.name);
        c.elapsed_ms = ms;
        report.push(c);
    }
}

fn rmatrix_checks<F: Scalar>(q: &QParam<F>, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in [2usize, 3] {
        out.push(Check::new(format!("ybe constant n={n}"), rmatrix::ybe_constant_holds(n, q), ""));
        let mut ok = true;
        for _ in 0..3 {
            let [u, v, w] = [0; 3].map(|_| random_point(rng));
            ok &= rmatrix::ybe_trig_holds::<F, F>(n, &embed_rational(&u)?, &embed_rational(&v)?, &embed_rational(&w)?, q);
        }
        out.push(Check::new(format!("ybe trigonometric n={n} at 3 points"), ok, ""));
        if n == 2 {
            out.push(Check::new(format!("ybe trigonometric n={n} in u,v,w"), rmatrix::ybe_trig_symbolic_holds(n, q), ""));
        }
        for r in 2..=3 {
            out.push(Check::new(format!("fusion R(1,..,q^-{}) = c A n={n} r={r}", 2 * r - 2), rmatrix::fusion_holds(n, r, q), ""));
            out.push(Check::new(format!("P^q_σ independent of reduced word n={n} r={r}"), rmatrix::reduced_word_independence(n, r, q), ""));
            if r <= n {
                out.push(Check::new(format!("P^q_σ action n={n} r={r}"), rmatrix::p_sigma_action_holds(n, r, q), ""));
                out.push(Check::new(
                    format!("A^q squares to a multiple n={n} r={r}"),
                    rmatrix::antisymmetrizer_square_constant(n, r, q).is_some(),
                    "",
                ));
                out.push(Check::new(format!("A^q sign factors n={n} r={r}"), rmatrix::antisymmetrizer_signs_hold(n, r, q), ""));
            } else {
                out.push(Check::new(format!("A^q = 0 n={n} r={r}"), rmatrix::antisymmetrizer(n, r, q).matrix().is_zero(), ""));
            }
        }
    }
    Ok(out)
}

fn relation_checks<F: Scalar>(lambda: &[i64], q: &QParam<F>) -> Result<Vec<Check>> {
    let rep = build_rep(lambda, q)?;
    let mut out = gtrep::verify_relations(&rep);
    out.extend(gtrep::verify_rtt_evaluation(rep.generators(), q));
    out.push(Check::new("gl:middle index independence", gtrep::middle_index_independent(&rep)?, ""));
    out.extend(skewrep::gt_minor_action_checks(&rep));
    out.extend(olshanski::tau_relation_checks(&TauRep::new(rep)));
    Ok(out)
}

fn minor_checks<F: Scalar>(lambda: &[i64], q: &QParam<F>, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let rep = build_rep(lambda, q)?;
    let g = rep.generators();
    let n = g.n();
    let mut out = qminor::qdet_checks(g, q);
    for which in [Which::T, Which::TBar] {
        let tag = if which == Which::T { "T" } else { "T̄" };
        let t = gtrep::evaluation_series(g, which, false).entries;
        let (ok, detail) = qminor::expansions_agree(&t, q);
        out.push(Check::new(format!("minors:{tag}:row = column = antisymmetrizer"), ok, detail));
        for r in 1..=n {
            let (ok, detail) = qminor::symmetry_factors_hold(&t, q, r);
            out.push(Check::new(format!("minors:{tag}:symmetry factors S_{r}"), ok, detail));
        }
        let alpha: F = embed_rational(&random_point(rng))?;
        out.push(Check::new(format!("minors:{tag}:scaling u -> αu"), qminor::scaling_check(&t, q, &alpha)?, format!("α = {alpha}")));
    }
    out.extend(qminor::h_checks(&rep));
    Ok(out)
}

fn complementary_checks<F: Scalar>(lambda: &[i64], q: &QParam<F>, rng: &mut ChaCha8Rng) -> Result<Vec<Check>> {
    let rep = build_rep(lambda, q)?;
    let n = rep.n();
    let mut out = Vec::new();
    for which in [Which::T, Which::TBar] {
        let tag = if which == Which::T { "T" } else { "T̄" };
        let t = gtrep::evaluation_series(rep.generators(), which, false).entries;
        for size in 1..=2.min(n) {
            let mut ok = true;
            let mut pairs = 0;
            let mut skipped = 0;
            for p in subsets(n, size) {
                for qs in subsets(n, size) {
                    let mut done = 0;
                    let mut tries = 0;
                    while done < 3 && tries < 20 {
                        tries += 1;
                        let u0: F = embed_rational(&random_point(rng))?;
                        match qminor::complementary_minor_sides(&t, q, &p, &qs, &u0) {
                            Ok((l, r)) => {
                                ok &= l == r;
                                done += 1;
                            }
                            Err(Error::Singular(_)) => skipped += 1,
                            Err(e) => return Err(e),
                        }
                    }
                    ok &= done == 3;
                    pairs += 1;
                }
            }
            out.push(Check::new(
                format!("complementary:{tag}:|P|={size}"),
                ok,
                format!("{pairs} (P,Q) pairs x 3 points, {skipped} singular points redrawn"),
            ));
        }
    }
    Ok(out)
}

fn sylvester_checks_for<F: Scalar>(lambda: &[i64], q: &QParam<F>) -> Result<Vec<Check>> {
    let rep = build_rep(lambda, q)?;
    let n = rep.n();
    let t = gtrep::evaluation_series(rep.generators(), Which::T, false).entries;
    let mut out = Vec::new();
    for m in 1..=n {
        out.extend(qminor::sylvester_checks(&t, q, m, false, &format!("m={m}")));
    }
    for m in 0..n {
        out.extend(qminor::sylvester_checks(&t, q, m, true, &format!("m={m}")));
    }
    Ok(out)
}

fn skew_count_checks(lambda: &[i64], mu: &[i64]) -> Result<Vec<Check>> {
    let n = lambda.len() - mu.len();
    let traps = enumerate_trapezium(lambda, mu, n)?;
    let d = SkewDiagram::new(lambda, mu)?;
    let tabs = enumerate_ssyt(&d, n);
    let mut round_trip = true;
    for p in &traps {
        round_trip &= pattern_to_ssyt(p).and_then(|t| ssyt_to_pattern(&t, n)).is_ok_and(|b| b == *p);
    }
    for t in &tabs {
        round_trip &= ssyt_to_pattern(t, n).and_then(|p| pattern_to_ssyt(&p)).is_ok_and(|b| b.entries() == t.entries());
    }
    Ok(vec![
        Check::new("count:#trapezium = #SSYT", traps.len() == tabs.len(), format!("{} patterns", traps.len())),
        Check::new("count:pattern/tableau bijection round trip", round_trip, ""),
    ])
}

fn olshanski_checks_for<F: Scalar>(lambda: &[i64], q: &QParam<F>) -> Result<Vec<Check>> {
    let tr = TauRep::new(build_rep(lambda, q)?);
    let mut out = olshanski::d_checks(&tr);
    out.push(Check::new(
        "olshanski:d on L(λ)",
        olshanski::d_scalar(&tr) == Some(olshanski::d_expected(lambda, q)),
        "scalar ∏ (1 - q^{-2λ_i+2i-2} u^-1)",
    ));
    for m in 1..tr.n() {
        out.extend(olshanski::phi_checks(&tr, m));
    }
    Ok(out)
}

/// Checks over every `q` in the configuration for one instance.
fn for_each_q(
    report: &mut Report,
    cfg: &RunConfig,
    inst: &str,
    n: usize,
    mut f: impl FnMut(&QInstance) -> Result<Vec<Check>>,
) -> Result<()> {
    for qi in cfg.q_values(n)? {
        let start = Instant::now();
        let prefix = format!("[{inst} q={}]", qi.label());
        match f(&qi) {
            Ok(cs) => record(report, &prefix, start, cs),
            Err(e) => record(report, &prefix, start, vec![Check::new("error", false, e.to_string())]),
        }
    }
    Ok(())
}

/// Run one named suite; `all` runs every suite in registry order.
pub fn run_suite(cfg: &RunConfig, name: &str) -> Result<Vec<Report>> {
    cfg.validate()?;
    if name == "all" {
        let mut out = Vec::new();
        for s in &SUITES[..SUITES.len() - 1] {
            out.extend(run_suite(cfg, s)?);
        }
        return Ok(out);
    }
    let mut report = Report::new(name);
    match name {
        "rmatrix" => {
            let mut rng = rng_for(cfg.seed, 2);
            for_each_q(&mut report, cfg, "R", 2, |qi| with_q!(qi, q => rmatrix_checks(q, &mut rng)))?;
        }
        "relations" => {
            for lambda in default_lambdas() {
                let inst = format!("λ={}", fmt_tuple(&lambda));
                let start = Instant::now();
                let count = enumerate_gt_patterns(&lambda)?.len() as i64;
                record(
                    &mut report,
                    &format!("[{inst}]"),
                    start,
                    vec![Check::new("count:#GT patterns = Weyl dimension", count == weyl_dim(&lambda), format!("{count}"))],
                );
                for_each_q(&mut report, cfg, &inst, lambda.len(), |qi| with_q!(qi, q => relation_checks(&lambda, q)))?;
            }
        }
        "minors" => {
            let mut rng = rng_for(cfg.seed, 3);
            for lambda in default_lambdas() {
                let inst = format!("λ={}", fmt_tuple(&lambda));
                for_each_q(&mut report, cfg, &inst, lambda.len(), |qi| with_q!(qi, q => minor_checks(&lambda, q, &mut rng)))?;
            }
        }
        "complementary" => {
            let mut rng = rng_for(cfg.seed, 4);
            for lambda in default_lambdas() {
                let inst = format!("λ={}", fmt_tuple(&lambda));
                for_each_q(&mut report, cfg, &inst, lambda.len(), |qi| with_q!(qi, q => complementary_checks(&lambda, q, &mut rng)))?;
            }
        }
        "sylvester" => {
            for lambda in default_lambdas() {
                let inst = format!("λ={}", fmt_tuple(&lambda));
                for_each_q(&mut report, cfg, &inst, lambda.len(), |qi| with_q!(qi, q => sylvester_checks_for(&lambda, q)))?;
            }
        }
        "skew" => {
            for (lambda, mu) in skew_suite_instances() {
                let n = lambda.len() - mu.len();
                let inst = format!("λ/μ={}/{}", fmt_tuple(&lambda), fmt_tuple(&mu));
                let start = Instant::now();
                record(&mut report, &format!("[{inst}]"), start, skew_count_checks(&lambda, &mu)?);
                for_each_q(&mut report, cfg, &inst, n, |qi| {
                    with_q!(qi, q => build_skew_module(&lambda, &mu, q).map(|sm| skewrep::skew_checks(&sm, "")))
                })?;
            }
        }
        "olshanski" => {
            for lambda in default_lambdas() {
                let inst = format!("λ={}", fmt_tuple(&lambda));
                for_each_q(&mut report, cfg, &inst, lambda.len(), |qi| with_q!(qi, q => olshanski_checks_for(&lambda, q)))?;
            }
            let start = Instant::now();
            record(&mut report, "[lemmas]", start, olshanski::lemma_checks(cfg.seed, 50));
        }
        other => {
            return Err(Error::Invalid(format!("unknown suite {other:?}; expected one of {}", SUITES.join(", "))));
        }
    }
    Ok(vec![report])
}

/// The JSON document for a list of suite reports.
pub fn reports_json(cfg: &RunConfig, reports: &[Report]) -> Value {
    let count = |s: Status| reports.iter().map(|r| r.count(s)).sum::<usize>();
    json!({
        "schema": SCHEMA,
        "config": cfg.to_json(),
        "suites": reports.iter().map(|r| r.to_json(cfg.timings)).collect::<Vec<_>>(),
        "summary": {
            "pass": count(Status::Pass),
            "fail": count(Status::Fail),
            "skipped": count(Status::Skipped),
        },
    })
}

/// Parts of a skew module that can be emitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Facet {
    Dim,
    Patterns,
    HighestWeight,
    Drinfeld,
    Character,
    Irreducibility,
}

impl std::str::FromStr for Facet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "dim" => Facet::Dim,
            "patterns" => Facet::Patterns,
            "hw" | "weight" => Facet::HighestWeight,
            "drinfeld" => Facet::Drinfeld,
            "character" => Facet::Character,
            "irred" | "irreducibility" => Facet::Irreducibility,
            other => {
                return Err(Error::Parse(format!(
                    "unknown facet {other:?}; expected dim, patterns, hw, drinfeld, character, irred"
                )))
            }
        })
    }
}

pub const ALL_FACETS: [Facet; 6] =
    [Facet::Dim, Facet::Patterns, Facet::HighestWeight, Facet::Drinfeld, Facet::Character, Facet::Irreducibility];

fn strings<T: std::fmt::Display>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// The requested facets of `L(λ)^+_μ`. Drinfeld polynomials come from the
/// closed exponent formula; the other routes are compared in the skew suite.
pub fn skew_facets<F: Scalar>(lambda: &[i64], mu: &[i64], q: &QParam<F>, facets: &[Facet]) -> Result<Value> {
    let n = lambda.len().checked_sub(mu.len()).filter(|&n| n > 0).ok_or_else(|| {
        Error::Invalid(format!("need len(lambda) > len(mu), got {} and {}", lambda.len(), mu.len()))
    })?;
    let mut out = serde_json::Map::new();
    out.insert("schema".into(), json!(SCHEMA));
    let needs_module = facets.iter().any(|f| matches!(f, Facet::Character | Facet::Irreducibility));
    let module: Option<SkewModule<F>> = if needs_module { Some(build_skew_module(lambda, mu, q)?) } else { None };
    let admissible = crate::combinatorics::is_admissible(lambda, mu, n);
    for f in facets {
        match f {
            Facet::Dim => {
                out.insert("dim".into(), json!(enumerate_trapezium(lambda, mu, n)?.len()));
            }
            Facet::Patterns => {
                let ps = enumerate_trapezium(lambda, mu, n)?;
                out.insert("patterns".into(), json!(ps.iter().map(|p| p.rows_top_first()).collect::<Vec<_>>()));
            }
            Facet::HighestWeight => {
                if admissible {
                    let hw = skewrep::highest_weight_formula(lambda, mu, q)?;
                    out.insert("nu".into(), json!(strings(&hw.nu)));
                    out.insert("nubar".into(), json!(strings(&hw.nubar)));
                    out.insert("nu_exponents".into(), json!(hw.exponents));
                }
            }
            Facet::Drinfeld => {
                if admissible {
                    let ex = skewrep::nu_exponents(lambda, mu)?;
                    out.insert("P".into(), json!(strings(&skewrep::drinfeld_from_exponents(&ex, q))));
                }
            }
            Facet::Character => {
                let sm = module.as_ref().expect("built");
                if sm.dim() > 0 {
                    let ms = skewrep::character_multiset(&skewrep::character_from_h(sm)?);
                    out.insert("character".into(), skewrep::character_json(&ms));
                }
            }
            Facet::Irreducibility => {
                let sm = module.as_ref().expect("built");
                let c = skewrep::irreducibility_certificate(sm)?;
                out.insert(
                    "irreducibility".into(),
                    json!({
                        "strongly_connected": c.strongly_connected,
                        "edges": c.edges.len(),
                        "coefficient_products_match": c.product_failures.is_empty() && c.shape_failures.is_empty(),
                    }),
                );
            }
        }
    }
    Ok(Value::Object(out))
}

/// Golden document for one skew instance: every facet except the certificate.
pub fn golden_json<F: Scalar>(lambda: &[i64], mu: &[i64], q: &QParam<F>) -> Result<Value> {
    let facets = [Facet::Dim, Facet::Patterns, Facet::HighestWeight, Facet::Drinfeld, Facet::Character];
    let mut v = skew_facets(lambda, mu, q, &facets)?;
    v["lambda"] = json!(lambda);
    v["mu"] = json!(mu);
    v["n"] = json!(lambda.len() - mu.len());
    v["qmode"] = json!(q.label());
    Ok(v)
}

pub fn golden_file_name(lambda: &[i64], mu: &[i64]) -> String {
    let part = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_");
    format!("skew_{}__{}.json", part(lambda), part(mu))
}

/// Canonical text of a JSON document: pretty printed, newline terminated.
pub fn canonical_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Write golden files for the default skew instances into `dir`.
pub fn emit_golden(cfg: &RunConfig, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Invalid(format!("cannot create {}: {e}", dir.display())))?;
    let qi = QInstance::from_mode(&cfg.qmode)?;
    let mut out = Vec::new();
    for (lambda, mu) in default_skew_instances() {
        let v = with_q!(&qi, q => golden_json(&lambda, &mu, q))?;
        let path = dir.join(golden_file_name(&lambda, &mu));
        std::fs::write(&path, canonical_text(&v)).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", path.display())))?;
        out.push(path);
    }
    Ok(out)
}
