//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use qal_core::report::{Check, Report, Status};
use qal_core::scalar::{QParam, RatFuncQ};
use qal_core::skewrep::drinfeld_evaluation_module;
use qal_core::suites::{canonical_text, reports_json, run_suite, RunConfig};

const SEED: u64 = 7;

fn strip(name: &str) -> &str {
    match name.find("] ") {
        Some(i) if name.starts_with('[') => &name[i + 2..],
        _ => name,
    }
}

struct Criterion<'a> {
    checks: Vec<&'a Check>,
    extra: Vec<(bool, String)>,
}

impl<'a> Criterion<'a> {
    fn select(reports: &'a [Report], suite: &str, keep: impl Fn(&str) -> bool) -> Self {
        let checks = reports
            .iter()
            .filter(|r| r.suite == suite)
            .flat_map(|r| &r.checks)
            .filter(|c| keep(strip(&c.name)))
            .collect();
        Criterion { checks, extra: Vec::new() }
    }

    fn and(mut self, other: Criterion<'a>) -> Self {
        self.checks.extend(other.checks);
        self.extra.extend(other.extra);
        self
    }

    fn with(mut self, ok: bool, what: impl Into<String>) -> Self {
        self.extra.push((ok, what.into()));
        self
    }

    fn line(&self, k: usize, title: &str) -> bool {
        let fails: Vec<&str> = self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect();
        let skipped = self.checks.iter().filter(|c| c.status == Status::Skipped).count();
        let extra_fail: Vec<&str> = self.extra.iter().filter(|(ok, _)| !ok).map(|(_, w)| w.as_str()).collect();
        let ok = !(self.checks.is_empty() && self.extra.is_empty()) && fails.is_empty() && extra_fail.is_empty();
        let mut detail = if self.checks.is_empty() {
            String::new()
        } else {
            format!("{} checks, {} skipped", self.checks.len(), skipped)
        };
        for (_, w) in &self.extra {
            if !detail.is_empty() {
                detail.push_str("; ");
            }
            detail.push_str(w);
        }
        if !fails.is_empty() {
            detail.push_str(&format!("; failing: {}", fails.join(", ")));
        }
        println!("criterion {k:>2} {}: {title} ({detail})", if ok { "PASS" } else { "FAIL" });
        ok
    }
}

fn main() -> ExitCode {
    let cfg = RunConfig { seed: SEED, ..RunConfig::default() };
    let mut reports = Vec::new();
    let mut relations_secs = 0.0;
    for suite in ["rmatrix", "relations", "minors", "sylvester", "complementary", "skew", "olshanski"] {
        let start = Instant::now();
        match run_suite(&cfg, suite) {
            Ok(r) => reports.extend(r),
            Err(e) => {
                println!("suite {suite} did not run: {e}");
                return ExitCode::FAILURE;
            }
        }
        if suite == "relations" {
            relations_secs = start.elapsed().as_secs_f64();
        }
    }

    let sym = QParam::<RatFuncQ>::symbolic();
    let p: Vec<String> = drinfeld_evaluation_module(&[2, 1, 0], &sym).iter().map(|p| p.to_string()).collect();
    let eval_example = p == ["1 - (1*q^2)*u", "1 - u"];

    let again = run_suite(&cfg, "all").expect("suite runs");
    let first = canonical_text(&reports_json(&cfg, &reports));
    let second = canonical_text(&reports_json(&cfg, &again));

    let criteria = [
        (
            "relation suite on L(λ), n in {2,3}",
            Criterion::select(&reports, "relations", |n| {
                n.starts_with("gl:") || n.starts_with("sl:") || n.starts_with("rtt")
            })
            .with(relations_secs < 60.0, format!("{relations_secs:.1}s")),
        ),
        ("R-matrix suite: Yang-Baxter and fusion", Criterion::select(&reports, "rmatrix", |_| true)),
        (
            "quantum determinant: centrality, d0 d̄0 = 1, expansions, symmetry factors",
            Criterion::select(&reports, "minors", |n| n.starts_with("qdet:") || n.starts_with("minors:")),
        ),
        ("complementary minors, T and T̄, |P| in {1,2}", Criterion::select(&reports, "complementary", |_| true)),
        ("quantum Sylvester map and its dual", Criterion::select(&reports, "sylvester", |_| true)),
        (
            "skew highest weight: closed formula = action; m=0 collapse",
            Criterion::select(&reports, "skew", |n| n.contains("highest weight") || n.contains("m=0 collapse")),
        ),
        (
            "Drinfeld polynomials: three routes agree; evaluation modules",
            Criterion::select(&reports, "skew", |n| n.contains("drinfeld"))
                .with(eval_example, format!("λ=(2,1,0) gives {p:?}")),
        ),
        (
            "GT character and qdet = h_1 ... h_n",
            Criterion::select(&reports, "skew", |n| n.contains("character"))
                .and(Criterion::select(&reports, "minors", |n| n.starts_with("h:"))),
        ),
        ("irreducibility certificate", Criterion::select(&reports, "skew", |n| n.contains("irreducible"))),
        (
            "central polynomial, centralizer map, lemmas",
            Criterion::select(&reports, "olshanski", |n| n.starts_with("olshanski:")),
        ),
        (
            "combinatorial counts and bijection",
            Criterion::select(&reports, "relations", |n| n.starts_with("count:"))
                .and(Criterion::select(&reports, "skew", |n| n.starts_with("count:"))),
        ),
        (
            "determinism: identical config and seed give identical JSON",
            Criterion { checks: Vec::new(), extra: Vec::new() }.with(first == second, format!("{} bytes", first.len())),
        ),
    ];

    let mut all = true;
    for (k, (title, c)) in criteria.iter().enumerate() {
        all &= c.line(k + 1, title);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
