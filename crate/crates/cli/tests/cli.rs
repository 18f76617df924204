use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_offsetsing"))
}

fn data(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core").join(rel)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn compute_writes_report_and_plot() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let svg = dir.path().join("p.svg");
    let curve = data("corpus/cardioid.json");
    let out = bin()
        .arg("compute")
        .arg("--curve")
        .arg(&curve)
        .arg("--report")
        .arg(&report)
        .arg("--svg")
        .arg(&svg)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&report);
    assert_eq!(v["n_p"], 4);
    assert_eq!(v["delta_t"], 12);
    assert!(v.get("wall_time_ms").is_none());
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<?xml"));
}

#[test]
fn report_goes_to_stdout_and_distance_overrides() {
    let curve = data("corpus/parabola.json");
    let out = run(&["compute", "--curve", curve.to_str().unwrap(), "--distance", "1/2", "--timing"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["d"], "1/2");
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn mobius_is_recorded() {
    let curve = data("corpus/parabola.json");
    let out = run(&["compute", "--curve", curve.to_str().unwrap(), "--mobius", "1,-1,1,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["mobius"], serde_json::json!([1, -1, 1, 1]));
    assert_eq!(v["n_p"], 4);
}

#[test]
fn reducible_input_exits_with_2() {
    let out = run(&["compute", "--curve", data("testdata/circle.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["flags"]["reducible_rejected"], true);
    assert_eq!(v["roots"], serde_json::json!([]));
}

#[test]
fn input_errors_exit_with_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"X": [], "Y": [1], "W": [1], "d": "1"}"#).unwrap();
    let card = data("corpus/cardioid.json");
    let card = card.to_str().unwrap();
    let cases: Vec<Vec<&str>> = vec![
        vec!["compute", "--curve", bad.to_str().unwrap()],
        vec!["compute", "--curve", "/does/not/exist.json"],
        vec!["compute", "--curve", card, "--distance", "0"],
        vec!["compute", "--curve", card, "--distance", "x"],
        vec!["compute", "--curve", card, "--mobius", "1,2,3"],
        vec!["compute", "--curve", card, "--mobius", "1,2,2,4"],
        vec!["compute", "--curve", card, "--window", "0,0,0,1"],
        vec!["compute", "--curve", card, "--precision", "0"],
        vec!["compute"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(3), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_passes_on_parabola() {
    let out = run(&["verify", "--curve", data("corpus/parabola.json").to_str().unwrap()]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 4, "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn bench_is_sorted_and_repeatable() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    std::fs::create_dir(&corpus).unwrap();
    for name in ["parabola", "cardioid", "c7"] {
        std::fs::copy(data(&format!("corpus/{name}.json")), corpus.join(format!("{name}.json"))).unwrap();
    }
    std::fs::copy(data("testdata/circle.json"), corpus.join("circle.json")).unwrap();
    let bench = |out: &str| {
        let o =
            bin().arg("bench").arg("--corpus").arg(&corpus).arg("--out").arg(dir.path().join(out)).output().unwrap();
        assert_eq!(o.status.code(), Some(0));
        String::from_utf8(o.stdout).unwrap()
    };
    let a = bench("a");
    assert_eq!(a, bench("b"));
    let rows: Vec<&str> = a.lines().skip(1).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(rows, ["c7", "cardioid", "circle", "parabola"]);
    for f in ["c7", "cardioid", "circle", "parabola"] {
        let name = format!("{f}.json");
        assert_eq!(
            std::fs::read(dir.path().join("a").join(&name)).unwrap(),
            std::fs::read(dir.path().join("b").join(&name)).unwrap()
        );
    }
    assert_eq!(json(&dir.path().join("a/circle.json"))["flags"]["reducible_rejected"], true);
}
