use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_submod"))
}

fn specs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs")
}

fn spec(name: &str) -> String {
    specs().join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn submod")
}

/// Parsed report of a successful run.
fn report(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    serde_json::from_str(&text).unwrap()
}

fn results(args: &[&str]) -> Value {
    report(args)["results"].clone()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn temp_spec(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

fn as_f64s(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn check_reports_properties_and_witnesses() {
    let r = results(&["check", &spec("f_or.json")]);
    assert_eq!(r["submodular"]["holds"], true);
    assert_eq!(r["monotone"]["holds"], true);

    let dir = tempfile::tempdir().unwrap();
    let sq = temp_spec(&dir, "sq.json", r#"{"kind":"explicit","values":[0,1,1,4]}"#);
    let r = results(&["check", &sq]);
    assert_eq!(r["submodular"]["holds"], false);
    assert_eq!(r["submodular"]["witness"]["a"], serde_json::json!([]));
    assert_eq!(r["submodular"]["witness"]["other"]["pair"], serde_json::json!([0, 1]));

    assert_eq!(results(&["check", &spec("cut2.json")])["symmetric"]["holds"], true);
}

#[test]
fn minimize_examples() {
    let r = results(&["minimize", &spec("f_or.json")]);
    assert_eq!(r["min_value"].as_f64().unwrap(), 0.0);
    assert_eq!(r["minimal_minimizer"], serde_json::json!([]));
    assert_eq!(r["maximal_minimizer"], serde_json::json!([]));

    let r = results(&["minimize", &spec("cut2.json")]);
    assert_eq!(r["minimal_minimizer"], serde_json::json!([]));
    assert_eq!(r["maximal_minimizer"], serde_json::json!([0, 1]));

    // F − z over ∅, {0}, {1}, V is (0, −1, 1, −2)
    let r = results(&["minimize", &spec("cut2_shifted.json")]);
    assert!((r["min_value"].as_f64().unwrap() + 2.0).abs() < 1e-9);
    assert_eq!(r["maximal_minimizer"], serde_json::json!([0, 1]));
}

#[test]
fn vector_commands() {
    let or = spec("f_or.json");
    assert_eq!(results(&["eval", &or, "--w", "3,1"])["lovasz"], 3.0);
    assert_eq!(results(&["eval", &or, "--set", "0"])["value"], 1.0);

    let r = results(&["prox", &or, "--weights", "1,1", "--centers", "0,0", "--alpha", "-0.6,-0.5,0"]);
    let u = as_f64s(&r["u"]);
    assert!(u.iter().all(|v| (v + 0.5).abs() < 1e-9), "{u:?}");
    let t = r["thresholds"].as_array().unwrap();
    assert_eq!(t[0]["minimal"], serde_json::json!([0, 1]));
    assert_eq!(t[2]["maximal"], serde_json::json!([]));

    for algo in ["decomposition", "homotopy"] {
        let r = results(&["prox", &or, "--centers", "0,0", "--algo", algo]);
        assert!(as_f64s(&r["u"]).iter().all(|v| (v + 0.5).abs() < 1e-9), "{algo}");
        assert!(r["gap"].as_f64().unwrap().abs() < 1e-9);
    }

    let lambda = results(&["linesearch", &or, "--direction", "1,1"])["lambda"].as_f64().unwrap();
    assert!((lambda - 0.5).abs() < 1e-9);

    let r = results(&["greedy", &spec("cut2.json"), "--w", "0,1"]);
    assert_eq!(as_f64s(&r["base"]), vec![-1.0, 1.0]);
    let r = results(&["greedy", &or, "--w", "3,-1", "--truncated"]);
    assert_eq!(as_f64s(&r["base"]), vec![1.0, 0.0]);

    let r = results(&["conjugate", &or, "--s", "2,0"]);
    assert_eq!(r["value"], 1.0);
    assert_eq!(r["argmax"], serde_json::json!([0]));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let args = ["prox", &spec("chain_tv.json"), "--centers", "1,-1,0.5,0,2,-0.5", "--alpha", "0"];
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing");
        v.to_string()
    };
    let a = strip(report(&args));
    let b = strip(report(&args));
    assert_eq!(a, b);
    let full = report(&args);
    assert_eq!(full["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(full["inputs_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn explicit_dump_gives_identical_results() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["chain_tv.json", "cover.json", "bottleneck.json", "concave_shifted.json"] {
        let out = run(&["dump", &spec(name)]);
        assert!(out.status.success());
        let dumped = temp_spec(&dir, name, &String::from_utf8(out.stdout).unwrap());
        let p = results(&["check", &dumped])["p"].as_u64().unwrap() as usize;
        let w: Vec<String> = (0..p).map(|k| format!("{}", k as f64 * 0.7 - 1.0)).collect();
        let w = w.join(",");
        for cmd in [
            vec!["minimize"],
            vec!["minimize", "--algo", "brute"],
            vec!["eval", "--w", &w],
            vec!["greedy", "--w", &w],
            vec!["prox", "--centers", &w],
        ] {
            let with = |path: &str| {
                let mut args = vec![cmd[0], path];
                args.extend(&cmd[1..]);
                results(&args)
            };
            assert_eq!(with(&spec(name)), with(&dumped), "{name} {cmd:?}");
        }
    }
}

#[test]
fn minnorm_and_brute_agree_on_bundled_specs() {
    let mut names: Vec<String> = std::fs::read_dir(specs())
        .unwrap()
        .map(|e| e.unwrap().path().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert!(names.len() >= 5);
    for path in names {
        let a = results(&["minimize", &path, "--algo", "minnorm"]);
        let b = results(&["minimize", &path, "--algo", "brute"]);
        let (va, vb) = (a["min_value"].as_f64().unwrap(), b["min_value"].as_f64().unwrap());
        assert!((va - vb).abs() <= 1e-9, "{path}: {va} vs {vb}");
        assert_eq!(a["minimal_minimizer"], b["minimal_minimizer"], "{path}");
        assert_eq!(a["maximal_minimizer"], b["maximal_minimizer"], "{path}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let or = spec("f_or.json");
    // input errors
    assert_eq!(code(&["check", "/no/such/spec.json"]), 1);
    let garbled = temp_spec(&dir, "bad.json", r#"{"kind":"explicit","values":"#);
    assert_eq!(code(&["check", &garbled]), 1);
    let nonzero = temp_spec(&dir, "nz.json", r#"{"kind":"explicit","values":[1,2]}"#);
    assert_eq!(code(&["check", &nonzero]), 1);
    assert_eq!(code(&["eval", &or, "--w", "1,2,3"]), 1);
    assert_eq!(code(&["minimize", &or, "--bogus"]), 1);
    // limits
    assert_eq!(code(&["check", &or, "--max-exhaustive", "1"]), 2);
    assert_eq!(code(&["linesearch", &or, "--direction", "-1,-1"]), 2);
    // preconditions
    let sq = temp_spec(&dir, "sq.json", r#"{"kind":"explicit","values":[0,1,1,4]}"#);
    assert_eq!(code(&["minimize", &sq, "--verify"]), 3);
    assert_eq!(code(&["minimize", &sq]), 0);
    assert_eq!(code(&["greedy", &spec("cut2.json"), "--w", "1,1", "--truncated", "--verify"]), 3);
    assert_eq!(code(&["linesearch", &or, "--direction", "1,1", "--s0", "2,0"]), 3);
}

#[test]
fn generator_is_seeded() {
    let a = run(&["gen", "--family", "logdet+modular", "--p", "4", "--seed", "7"]);
    let b = run(&["gen", "--family", "logdet+modular", "--p", "4", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let path = temp_spec(&dir, "g.json", &String::from_utf8(a.stdout).unwrap());
    assert_eq!(results(&["check", &path])["submodular"]["holds"], true);
    assert_eq!(code(&["gen", "--family", "wavelet", "--p", "4"]), 1);
}
