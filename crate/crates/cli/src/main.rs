use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use qal_core::gtrep::{self, build_rep, Which};
use qal_core::olshanski::{self, TauRep};
use qal_core::qminor;
use qal_core::report::{Check, Report, Status};
use qal_core::scalar::{embed_rational, QMode, QParam, Rational, Scalar};
use qal_core::suites::{self, canonical_text, rng_for, Facet, QInstance, RunConfig, ALL_FACETS, SCHEMA};
use qal_core::with_q;
use rand::Rng;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "qal", version, about = "Exact checks for quantum affine algebras of type A")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Common {
    /// `symbolic` or `rational:P/Q`.
    #[arg(long, global = true, env = "QAL_DEFAULT_QMODE", value_parser = parse_qmode)]
    qmode: Option<QMode>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Rational values of q per check (verify), or sample points (complementary).
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    /// Output file; stdout when absent. For `golden`, the output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include wall times in reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        /// Skip the extra symbolic-q pass on rank-two instances.
        #[arg(long)]
        no_symbolic: bool,
    },
    /// Generator matrices of L(λ) in the Gelfand-Tsetlin basis.
    Rep {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        check_relations: bool,
    },
    /// Quantum Sylvester map (or its dual) on L(λ).
    Sylvester {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        dual: bool,
    },
    /// Complementary minor identity for row set P and column set Q (1-based).
    Complementary {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        p: String,
        #[arg(long = "q")]
        qs: String,
    },
    /// Invariants of the skew module L(λ)^+_μ.
    Skew {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// May be empty, meaning m = 0.
        #[arg(long, num_args = 0..=1, default_missing_value = "", default_value = "")]
        mu: String,
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated: dim, patterns, hw, drinfeld, character, irred.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Central polynomial d_n, centralizer map and the two lemmas.
    Olshanski {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        m: Option<usize>,
        /// Comma-separated: d, phi, lemmas.
        #[arg(long, default_value = "d,phi,lemmas")]
        checks: String,
    },
    /// Write golden JSON files for the default skew instances.
    Golden,
}

/// Errors caused by the invocation rather than by a failing check.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    Usage(e.to_string()).into()
}

fn parse_qmode(s: &str) -> Result<QMode, String> {
    s.parse().map_err(|e: qal_core::Error| e.to_string())
}

fn parse_tuple(s: &str) -> anyhow::Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| usage(format!("bad integer {x:?} in {s:?}: {e}"))))
        .collect()
}

fn parse_indices(s: &str, n: usize) -> anyhow::Result<Vec<usize>> {
    let v = parse_tuple(s)?;
    let mut out = Vec::new();
    for x in v {
        if x < 1 || x as usize > n {
            return Err(usage(format!("index {x} out of range 1..={n}")));
        }
        out.push(x as usize - 1);
    }
    if out.windows(2).any(|w| w[0] >= w[1]) {
        return Err(usage(format!("indices {s:?} must be strictly increasing")));
    }
    Ok(out)
}

fn config(c: &Common, symbolic_small: bool) -> anyhow::Result<RunConfig> {
    let mut cfg = RunConfig { seed: c.seed, trials: c.trials, timings: c.timings, symbolic_small, ..RunConfig::default() };
    if let Some(m) = &c.qmode {
        cfg.qmode = m.clone();
    }
    cfg.validate().map_err(usage)?;
    Ok(cfg)
}

fn write_output(out: Option<&Path>, v: &Value) -> anyhow::Result<()> {
    let text = canonical_text(v);
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Input errors from the core library count as usage errors.
fn core_usage<T>(r: qal_core::Result<T>) -> anyhow::Result<T> {
    r.map_err(|e| match e {
        qal_core::Error::Parse(_) | qal_core::Error::Invalid(_) | qal_core::Error::InvalidQ(_) => usage(e),
        other => other.into(),
    })
}

fn checks_json(checks: &[Check]) -> Value {
    json!({
        "schema": SCHEMA,
        "checks": checks.iter().map(|c| json!({
            "check": c.name,
            "status": c.status,
            "witness": if c.status == Status::Fail { json!(c.detail) } else { Value::Null },
        })).collect::<Vec<_>>(),
    })
}

fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

fn complementary_run<F: Scalar>(
    lambda: &[i64],
    q: &QParam<F>,
    p: &[usize],
    qs: &[usize],
    cfg: &RunConfig,
) -> anyhow::Result<Vec<Check>> {
    let rep = core_usage(build_rep(lambda, q))?;
    let mut rng = rng_for(cfg.seed, 4);
    let mut out = Vec::new();
    for which in [Which::T, Which::TBar] {
        let tag = if which == Which::T { "T" } else { "T̄" };
        let t = gtrep::evaluation_series(rep.generators(), which, false).entries;
        let mut done = 0;
        let mut tries = 0;
        let mut witness = None;
        let mut singular = 0;
        while done < cfg.trials && tries < 20 * cfg.trials {
            tries += 1;
            let num: i64 = rng.gen_range(-12..=12);
            let den: i64 = rng.gen_range(1..=7);
            if num == 0 {
                continue;
            }
            let u0: F = embed_rational(&Rational::new(num.into(), den.into()))?;
            match qminor::complementary_minor_sides(&t, q, p, qs, &u0) {
                Ok((l, r)) => {
                    if l != r && witness.is_none() {
                        witness = Some(format!("u0 = {u0}"));
                    }
                    done += 1;
                }
                Err(qal_core::Error::Singular(_)) => singular += 1,
                Err(e) => return Err(e.into()),
            }
        }
        let ok = witness.is_none() && done == cfg.trials;
        let detail = witness.unwrap_or_else(|| format!("{done} points, {singular} singular points redrawn"));
        out.push(Check::new(format!("complementary:{tag}"), ok, detail));
    }
    Ok(out)
}

fn olshanski_run<F: Scalar>(lambda: &[i64], q: &QParam<F>, m: Option<usize>, which: &[&str], seed: u64) -> anyhow::Result<Report> {
    let tr = TauRep::new(core_usage(build_rep(lambda, q))?);
    let n = tr.n();
    let mut report = Report::new("olshanski");
    for w in which {
        match *w {
            "d" => {
                for c in olshanski::d_checks(&tr) {
                    report.push(c);
                }
                report.push(Check::new(
                    "olshanski:d on L(λ)",
                    olshanski::d_scalar(&tr) == Some(olshanski::d_expected(lambda, q)),
                    "",
                ));
            }
            "phi" => {
                let ms: Vec<usize> = match m {
                    Some(m) if m == 0 || m >= n => return Err(usage(format!("--m must satisfy 0 < m < {n}"))),
                    Some(m) => vec![m],
                    None => (1..n).collect(),
                };
                for m in ms {
                    for c in olshanski::phi_checks(&tr, m) {
                        report.push(c);
                    }
                }
            }
            "lemmas" => {
                for c in olshanski::lemma_checks(seed, 50) {
                    report.push(c);
                }
            }
            other => return Err(usage(format!("unknown check {other:?}; expected d, phi, lemmas"))),
        }
    }
    Ok(report)
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let c = &cli.common;
    let out = c.out.as_deref();
    match &cli.cmd {
        Cmd::Verify { suite, no_symbolic } => {
            let cfg = config(c, !no_symbolic)?;
            let reports = core_usage(suites::run_suite(&cfg, suite))?;
            write_output(out, &suites::reports_json(&cfg, &reports))?;
            Ok(reports.iter().all(Report::passed))
        }
        Cmd::Rep { lambda, check_relations } => {
            let cfg = config(c, false)?;
            let lambda = parse_tuple(lambda)?;
            let qi = QInstance::from_mode(&cfg.qmode)?;
            with_q!(&qi, q => {
                let rep = core_usage(build_rep(&lambda, q))?;
                let mut v = rep.to_json();
                v["schema"] = json!(SCHEMA);
                v["qmode"] = json!(q.label());
                let mut ok = true;
                if *check_relations {
                    let mut checks = gtrep::verify_relations(&rep);
                    checks.extend(gtrep::verify_rtt_evaluation(rep.generators(), q));
                    ok = all_passed(&checks);
                    v["checks"] = checks_json(&checks)["checks"].clone();
                }
                write_output(out, &v)?;
                Ok(ok)
            })
        }
        Cmd::Sylvester { lambda, m, dual } => {
            let cfg = config(c, false)?;
            let lambda = parse_tuple(lambda)?;
            let n = lambda.len();
            let valid = if *dual { *m < n } else { *m >= 1 && *m <= n };
            if !valid {
                return Err(usage(format!("--m {m} out of range for n = {n}{}", if *dual { " (dual: 0 <= m < n)" } else { " (1 <= m <= n)" })));
            }
            let qi = QInstance::from_mode(&cfg.qmode)?;
            let checks = with_q!(&qi, q => {
                let rep = core_usage(build_rep(&lambda, q))?;
                let t = gtrep::evaluation_series(rep.generators(), Which::T, false).entries;
                qminor::sylvester_checks(&t, q, *m, *dual, &format!("m={m}"))
            });
            write_output(out, &checks_json(&checks))?;
            Ok(all_passed(&checks))
        }
        Cmd::Complementary { lambda, p, qs } => {
            let cfg = config(c, false)?;
            let lambda = parse_tuple(lambda)?;
            let n = lambda.len();
            let (p, qs) = (parse_indices(p, n)?, parse_indices(qs, n)?);
            if p.len() != qs.len() || p.is_empty() {
                return Err(usage("--p and --q must be nonempty and of equal size"));
            }
            let qi = QInstance::from_mode(&cfg.qmode)?;
            let checks = with_q!(&qi, q => complementary_run(&lambda, q, &p, &qs, &cfg))?;
            write_output(out, &checks_json(&checks))?;
            Ok(all_passed(&checks))
        }
        Cmd::Skew { lambda, mu, m, emit } => {
            let cfg = config(c, false)?;
            let lambda = parse_tuple(lambda)?;
            let mu = parse_tuple(mu)?;
            if let Some(m) = m {
                if *m != mu.len() {
                    return Err(usage(format!("--m {m} does not match len(mu) = {}", mu.len())));
                }
            }
            let facets: Vec<Facet> = match emit {
                Some(s) => s.split(',').filter(|x| !x.trim().is_empty()).map(|x| core_usage(x.parse())).collect::<anyhow::Result<_>>()?,
                None => ALL_FACETS.to_vec(),
            };
            let qi = QInstance::from_mode(&cfg.qmode)?;
            let v = with_q!(&qi, q => core_usage(suites::skew_facets(&lambda, &mu, q, &facets)))?;
            let ok = v.get("irreducibility").is_none_or(|c| {
                c["strongly_connected"] == json!(true) && c["coefficient_products_match"] == json!(true)
            });
            write_output(out, &v)?;
            Ok(ok)
        }
        Cmd::Olshanski { lambda, m, checks } => {
            let cfg = config(c, false)?;
            let lambda = parse_tuple(lambda)?;
            let which: Vec<&str> = checks.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
            let qi = QInstance::from_mode(&cfg.qmode)?;
            let report = with_q!(&qi, q => olshanski_run(&lambda, q, *m, &which, cfg.seed))?;
            write_output(out, &suites::reports_json(&cfg, std::slice::from_ref(&report)))?;
            Ok(report.passed())
        }
        Cmd::Golden => {
            let cfg = config(c, false)?;
            let dir = out.ok_or_else(|| usage("golden needs --out DIR"))?;
            for p in suites::emit_golden(&cfg, dir)? {
                eprintln!("wrote {}", p.display());
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
