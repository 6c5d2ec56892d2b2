use qal_core::scalar::{QMode, QParam, RatFuncQ, Rational};
use qal_core::suites::{
    canonical_text, default_skew_instances, emit_golden, golden_file_name, golden_json, reports_json, run_suite,
    skew_facets, Facet, RunConfig, SUITES,
};
use serde_json::{json, Value};

fn rq(n: i64, d: i64) -> QParam<Rational> {
    QParam::rational(&Rational::new(n.into(), d.into())).unwrap()
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(run_suite(&RunConfig::default(), "bogus").is_err());
}

#[test]
fn zero_trials_rejected() {
    let cfg = RunConfig { trials: 0, ..RunConfig::default() };
    assert!(run_suite(&cfg, "rmatrix").is_err());
}

#[test]
fn suite_registry_ends_with_all() {
    assert_eq!(SUITES.last(), Some(&"all"));
}

#[test]
fn q_values_follow_trial_policy() {
    let cfg = RunConfig::default();
    let labels = |n| cfg.q_values(n).unwrap().iter().map(|q| q.label().to_string()).collect::<Vec<_>>();
    let two = labels(2);
    assert_eq!(two.len(), 4);
    assert_eq!(two[0], "rational:5/2");
    assert_eq!(two[3], "symbolic");
    let three = labels(3);
    assert_eq!(three, two[..3]);
    let sym = RunConfig { qmode: QMode::Symbolic, ..RunConfig::default() };
    assert_eq!(sym.q_values(3).unwrap().len(), 1);
}

#[test]
fn olshanski_suite_passes_and_is_reproducible() {
    let cfg = RunConfig { trials: 1, symbolic_small: false, seed: 3, ..RunConfig::default() };
    let a = run_suite(&cfg, "olshanski").unwrap();
    let b = run_suite(&cfg, "olshanski").unwrap();
    assert!(a.iter().all(|r| r.passed()));
    assert_eq!(canonical_text(&reports_json(&cfg, &a)), canonical_text(&reports_json(&cfg, &b)));
}

#[test]
fn report_json_shape() {
    let cfg = RunConfig { trials: 1, symbolic_small: false, ..RunConfig::default() };
    let reports = run_suite(&cfg, "sylvester").unwrap();
    let v = reports_json(&cfg, &reports);
    assert_eq!(v["schema"], json!(1));
    assert_eq!(v["summary"]["fail"], json!(0));
    let c = &v["suites"][0]["checks"][0];
    assert!(c["check_name"].is_string());
    assert_eq!(c["status"], json!("pass"));
    assert!(c.get("elapsed_ms").is_none());
    let timed = RunConfig { timings: true, ..cfg.clone() };
    assert!(reports_json(&timed, &reports)["suites"][0]["checks"][0]["elapsed_ms"].is_u64());
}

#[test]
fn golden_320_1_has_dim_4() {
    let v = golden_json(&[3, 2, 0], &[1], &rq(5, 2)).unwrap();
    assert_eq!(v["dim"], json!(4));
    assert_eq!(v["schema"], json!(1));
    assert_eq!(v["patterns"].as_array().unwrap().len(), 4);
}

#[test]
fn golden_regeneration_is_idempotent() {
    let dir = std::env::temp_dir().join(format!("qal-golden-{}", std::process::id()));
    let cfg = RunConfig::default();
    let first = emit_golden(&cfg, &dir).unwrap();
    let texts: Vec<String> = first.iter().map(|p| std::fs::read_to_string(p).unwrap()).collect();
    let second = emit_golden(&cfg, &dir).unwrap();
    assert_eq!(first, second);
    for (p, t) in second.iter().zip(&texts) {
        assert_eq!(&std::fs::read_to_string(p).unwrap(), t);
    }
    assert_eq!(first.len(), default_skew_instances().len());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn changing_q_changes_only_q_dependent_fields() {
    let q_fields = ["P", "character", "nu", "nubar", "qmode"];
    for (lambda, mu) in default_skew_instances() {
        let a = golden_json(&lambda, &mu, &rq(5, 2)).unwrap();
        let b = golden_json(&lambda, &mu, &rq(7, 3)).unwrap();
        let (a, b) = (a.as_object().unwrap(), b.as_object().unwrap());
        assert_eq!(a.keys().collect::<Vec<_>>(), b.keys().collect::<Vec<_>>());
        for (k, v) in a {
            if !q_fields.contains(&k.as_str()) {
                assert_eq!(v, &b[k], "{k} changed for {lambda:?}/{mu:?}");
            }
        }
        assert_eq!(a["character"].as_array().unwrap().len(), b["character"].as_array().unwrap().len());
    }
}

#[test]
fn golden_file_names() {
    assert_eq!(golden_file_name(&[2, 2, 1, 0], &[1, 1]), "skew_2_2_1_0__1_1.json");
}

#[test]
fn skew_facets_evaluation_module() {
    let v = skew_facets(&[1, 0], &[], &rq(5, 2), &[Facet::Drinfeld]).unwrap();
    assert_eq!(v["P"], json!(["1 - u"]));
    let sym = QParam::<RatFuncQ>::symbolic();
    let v = skew_facets(&[2, 1, 0], &[], &sym, &[Facet::Drinfeld]).unwrap();
    assert_eq!(v["P"], json!(["1 - (1*q^2)*u", "1 - u"]));
}

#[test]
fn skew_facets_inadmissible_is_empty() {
    // (2,1,1)/(0) with n = 2: μ_1 = 0 lies below λ_3 = 1, so no trapezium pattern exists.
    let v = skew_facets(&[2, 1, 1], &[0], &rq(5, 2), &[Facet::Dim, Facet::Drinfeld, Facet::Character]).unwrap();
    assert_eq!(v["dim"], json!(0));
    assert!(v.get("P").is_none());
    assert!(v.get("character").is_none());
}

#[test]
fn skew_facets_irreducibility() {
    let v = skew_facets(&[2, 1, 0], &[1], &rq(5, 2), &[Facet::Irreducibility]).unwrap();
    assert_eq!(v["irreducibility"]["strongly_connected"], json!(true));
    assert_eq!(v["irreducibility"]["coefficient_products_match"], json!(true));
}

#[test]
fn facet_names_parse() {
    for (s, f) in [("dim", Facet::Dim), ("hw", Facet::HighestWeight), ("irred", Facet::Irreducibility)] {
        assert_eq!(s.parse::<Facet>().unwrap(), f);
    }
    assert!("nope".parse::<Facet>().is_err());
}

#[test]
fn characters_have_dim_many_entries() {
    for (lambda, mu) in default_skew_instances() {
        let v = golden_json(&lambda, &mu, &rq(5, 2)).unwrap();
        let total: u64 = v["character"].as_array().unwrap().iter().map(|e| e["multiplicity"].as_u64().unwrap()).sum();
        assert_eq!(Value::from(total), v["dim"]);
    }
}
