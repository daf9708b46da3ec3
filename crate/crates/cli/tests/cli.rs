use jsonschema::{Draft, JSONSchema};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn zeros_file() -> PathBuf {
    root().join("data/zeros1e5.txt")
}

/// Runs `slb` from a scratch directory so the default zeros path does not resolve.
fn slb(args: &[&str]) -> Output {
    let dir = tempfile::tempdir().unwrap();
    Command::new(env!("CARGO_BIN_EXE_slb"))
        .args(args)
        .current_dir(dir.path())
        .env_remove("SLB_ZEROS_PATH")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn schema() -> JSONSchema {
    let text = std::fs::read_to_string(root().join("docs/run_report.schema.json")).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    JSONSchema::options().with_draft(Draft::Draft7).compile(&v).expect("schema compiles")
}

/// Parses stdout, validates it against the schema and checks a text round trip.
fn report(o: &Output) -> Value {
    let text = String::from_utf8(o.stdout.clone()).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    let s = schema();
    if let Err(errs) = s.validate(&v) {
        let msgs: Vec<String> = errs.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}");
    }
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    v
}

#[test]
fn bound_cor9_example_value_and_exit() {
    let o = slb(&["bound", "--lfun", "zeta", "--sigma", "0.75", "--t", "1e6", "--alpha", "1.278", "--format", "json"]);
    let v = report(&o);
    let r = &v["results"][0];
    assert_eq!(r["case"], "cor9");
    assert!((r["value"].as_f64().unwrap() - 36.5).abs() < 0.05);
    // σ = 0.75 lies below 1/2 + 1/loglog t at t = 10⁶, so the σ-range condition fails
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("σ = 0.75"));
    assert_eq!(v["pass"], false);
}

#[test]
fn bound_certified_exit_zero() {
    let o = slb(&["bound", "--sigma", "0.9", "--t", "1e6", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = report(&o);
    assert_eq!(v["pass"], true);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["certified"] == true));
    assert_eq!(v["inputsEcho"]["sigma"], 0.9);
}

#[test]
fn bound_sigma_out_of_range_names_condition() {
    let o = slb(&["bound", "--lfun", "zeta", "--sigma", "0.4", "--t", "1e6"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("σ-range"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&slb(&["bound", "--sigma", "abc", "--t", "1e6"])), 1);
    assert_eq!(code(&slb(&["bound", "--sigma", "0.9"])), 1);
    assert_eq!(code(&slb(&["bound", "--sigma", "0.9", "--t", "1e6", "--logtau", "20"])), 1);
    assert_eq!(code(&slb(&["bound", "--lfun", "nosuch", "--sigma", "0.9", "--t", "1e6"])), 1);
    assert_eq!(code(&slb(&["verify", "no-such-suite"])), 1);
    assert_eq!(code(&slb(&["frobnicate"])), 1);
    assert_eq!(code(&slb(&["--help"])), 0);
    assert_eq!(code(&slb(&["--version"])), 0);
}

#[test]
fn descriptor_file_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeta.json");
    std::fs::write(&path, r#"{"builtin":"zeta"}"#).unwrap();
    let args = |lfun: &[&str]| {
        let mut a = vec!["bound", "--case", "cor10", "--sigma", "0.75", "--loglogtau", "13.5", "--format", "json"];
        a.extend_from_slice(lfun);
        slb(&a)
    };
    let a = args(&["--descriptor", path.to_str().unwrap()]);
    let b = args(&["--lfun", "zeta"]);
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(report(&a)["results"], report(&b)["results"]);

    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(code(&args(&["--descriptor", path.to_str().unwrap()])), 1);
}

#[test]
fn verify_zero_sum_with_file_and_env() {
    let z = zeros_file();
    let o = slb(&["verify", "zero-sum", "--zeros", z.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = report(&o);
    assert_eq!(v["results"][0]["suite"], "zero-sum");

    let dir = tempfile::tempdir().unwrap();
    let via_env = Command::new(env!("CARGO_BIN_EXE_slb"))
        .args(["verify", "zero-sum"])
        .current_dir(dir.path())
        .env("SLB_ZEROS_PATH", &z)
        .output()
        .unwrap();
    assert_eq!(code(&via_env), 0);
}

#[test]
fn missing_zero_data_exits_three() {
    assert_eq!(code(&slb(&["verify", "zero-sum"])), 3);
    assert_eq!(code(&slb(&["verify", "selberg-identity", "--zeros", "/nonexistent/zeros.txt"])), 3);
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_slb"))
        .args(["verify", "gw-residual"])
        .current_dir(dir.path())
        .env("SLB_ZEROS_PATH", dir.path().join("absent.txt"))
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn verify_suites_without_zeros() {
    for suite in ["cor9-empirical", "dominance", "majorant", "prime-sums"] {
        let o = slb(&["verify", suite, "--grid", "small", "--format", "json"]);
        assert_eq!(code(&o), 0, "{suite}: {}", stderr(&o));
        assert_eq!(report(&o)["pass"], true);
    }
}

#[test]
fn verify_selberg_small_grid() {
    let z = zeros_file();
    let o = slb(&["verify", "selberg-identity", "--zeros", z.to_str().unwrap(), "--grid", "small", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    // a tolerance no residual can meet fails the suite
    let o = slb(&["verify", "selberg-identity", "--zeros", z.to_str().unwrap(), "--grid", "small", "--tolerance", "1e-30"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn reproduce_targets() {
    for t in ["alpha0", "nu-cor9", "nu-cor10", "cor10-constants", "trigamma", "dedekind-example"] {
        let o = slb(&["reproduce", t, "--format", "json"]);
        assert_eq!(code(&o), 0, "{t}: {}", stderr(&o));
        let v = report(&o);
        assert!(v["results"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    }
    let o = slb(&["reproduce", "alpha0"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("1.27846"));
}

#[test]
fn optimize_nu_pairs() {
    let o = slb(&["optimize", "--free", "nu", "--variant", "cor9"]);
    assert_eq!(code(&o), 0);
    let v = report(&o);
    let opt = &v["results"][0]["optimum"];
    assert!((opt[0].as_f64().unwrap() - 3.378).abs() < 1e-2);
    assert!((opt[1].as_f64().unwrap() - 1.182).abs() < 1e-2);
}

#[test]
fn optimize_alpha_and_infeasible_boxes() {
    let base = ["optimize", "--free", "alpha", "--sigma", "0.75", "--loglogtau", "13", "--loglogtau0", "13", "--t0", "2001"];
    let o = slb(&base);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let a = report(&o)["results"][0]["optimum"][0].as_f64().unwrap();
    assert!((std::f64::consts::LN_2..=2.0).contains(&a));

    let mut empty = base.to_vec();
    empty.extend(["--box", "2,1"]);
    assert_eq!(code(&slb(&empty)), 2);

    // log τ ≈ 13.8 is far below the range where the bounds certify
    let o = slb(&["optimize", "--free", "alpha", "--box", "log2,2", "--lfun", "zeta", "--sigma", "0.75", "--logtau", "13.8155"]);
    assert_eq!(code(&o), 2);

    let mut bad = base.to_vec();
    bad.extend(["--box", "1;2"]);
    assert_eq!(code(&slb(&bad)), 1);
}

#[test]
fn eval_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("z.csv");
    let o = slb(&[
        "eval", "--sigma", "0.5,2", "--t", "14.134725141734693", "--quantity", "value", "--csv",
        csv.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = report(&o);
    assert!(v["results"][0]["abs"].as_f64().unwrap() < 1e-9);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("sigma,t,re,im,abs"));
    assert_eq!(lines.count(), 2);

    assert_eq!(code(&slb(&["eval", "--lfun", "dirichlet(5,2)", "--sigma", "0.7", "--t", "10", "--quantity", "log"])), 2);
}

#[test]
fn stats_and_gen_zeros() {
    let o = slb(&["stats", "--limit", "1e5", "--expect-mean", "1.2071", "--rel-tol", "0.01", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v = report(&o);
    assert_eq!(v["results"].as_array().unwrap().len(), 4);
    let o = slb(&["stats", "--limit", "1e5", "--expect-mean", "1.5"]);
    assert_eq!(code(&o), 2);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z.txt");
    let o = slb(&["gen-zeros", "--count", "50", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let ds = slb_core::lfunc::load_zeros(&out).unwrap();
    let reference = slb_core::lfunc::load_zeros(zeros_file()).unwrap().truncated(50);
    for (a, b) in ds.ordinates.iter().zip(&reference.ordinates) {
        assert!((a - b).abs() < 1e-9);
    }
}

#[test]
fn descriptor_schema_accepts_what_the_parser_accepts() {
    let text = std::fs::read_to_string(root().join("docs/descriptor.schema.json")).unwrap();
    let s = JSONSchema::options().with_draft(Draft::Draft7).compile(&serde_json::from_str(&text).unwrap()).unwrap();
    let good = [
        r#"{"builtin":"zeta"}"#,
        r#"{"builtin":"dirichlet(4,3)","theta":0}"#,
        r#"{"gamma_factors":[{"lambda":0.5,"mu":[0,0]}],"Q":0.5641895835477563,"pole_order":1,"euler_order":1,"theta":0,"c_e":1}"#,
    ];
    for g in good {
        let v: Value = serde_json::from_str(g).unwrap();
        assert!(s.is_valid(&v), "{g}");
        slb_core::selberg::DescriptorConfig::from_json(g).unwrap().into_descriptor().unwrap();
    }
    for b in [r#"{"bogus":1}"#, r#"{"builtin":"zeta","gamma_factors":[{"mu":[0,0]}]}"#] {
        let v: Value = serde_json::from_str(b).unwrap();
        assert!(!s.is_valid(&v), "{b}");
        assert!(slb_core::selberg::DescriptorConfig::from_json(b).is_err());
    }
}
