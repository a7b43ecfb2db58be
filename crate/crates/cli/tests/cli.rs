use std::path::Path;
use std::process::{Command, Output};

use smoothgraph_core::graph_core::io::read_edge_list;
use smoothgraph_core::graph_core::{generate_base, BaseKind};
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smoothgraph"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_writes_a_readable_edge_list() {
    let d = TempDir::new().unwrap();
    let o = run(d.path(), &["gen", "path", "5", "-o", "g.el"]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(d.path().join("g.el")).unwrap();
    assert_eq!(text.lines().count(), 5);
    let g = read_edge_list(&text).unwrap();
    assert_eq!(g, generate_base(BaseKind::Path, 5, None).unwrap());
}

#[test]
fn perturb_is_deterministic() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "cycle", "200", "-o", "g.el"]);
    for out in ["a.json", "b.json"] {
        let o = run(d.path(), &["perturb", "g.el", "--eps", "0.5", "--seed", "7", "-o", out]);
        assert_eq!(code(&o), 0);
    }
    let a = std::fs::read(d.path().join("a.json")).unwrap();
    assert_eq!(a, std::fs::read(d.path().join("b.json")).unwrap());
    let o = run(d.path(), &["perturb", "g.el", "--eps", "0.5", "--seed", "8", "-o", "c.json"]);
    assert_eq!(code(&o), 0);
    assert_ne!(a, std::fs::read(d.path().join("c.json")).unwrap());
}

#[test]
fn enum_prints_two_codes_on_path5() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "path", "5", "-o", "g.el"]);
    let o = run(d.path(), &["enum", "g.el", "--v", "2", "--a", "2", "--b", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = run(d.path(), &["enum", "g.el", "--v", "2", "--decode", "100"]);
    assert_eq!(stdout(&o).trim(), "[1, 2]");
}

#[test]
fn json_mix_output_has_the_documented_fields() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "complete", "2", "-o", "k2.el"]);
    let o = run(d.path(), &["--json", "mix", "k2.el", "--exact"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["t_mix"], 1);
    assert_eq!(v["fr_sum"], 1.0);
    assert!((v["js_value"].as_f64().unwrap() - 2f64.ln()).abs() < 1e-12);
    assert!(v["flags"].is_object());
}

#[test]
fn exit_codes_by_error_family() {
    let d = TempDir::new().unwrap();
    // Domain: disconnected graph.
    std::fs::write(d.path().join("split.el"), "4 2\n0 1\n2 3\n").unwrap();
    let o = run(d.path(), &["mix", "split.el"]);
    assert_eq!(code(&o), 1);
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 1);
    // Parameter: bad kind, bad flag.
    assert_eq!(code(&run(d.path(), &["gen", "blob", "5", "-o", "x.el"])), 1);
    assert_eq!(code(&run(d.path(), &["gen", "path", "5", "--frob"])), 1);
    // Decode error on malformed input file.
    std::fs::write(d.path().join("bad.el"), "3 1\n2 1\n").unwrap();
    assert_eq!(code(&run(d.path(), &["stats", "bad.el"])), 1);
    // Capability: dense limit.
    run(d.path(), &["gen", "path", "5000", "-o", "big.el"]);
    assert_eq!(code(&run(d.path(), &["mix", "big.el", "--no-bounds"])), 2);
    assert_eq!(code(&run(d.path(), &["longpath", "big.el", "--exact"])), 2);
    // Help is not an error.
    assert_eq!(code(&run(d.path(), &["--help"])), 0);
}

#[test]
fn sweep_is_byte_identical_and_band_failures_exit_3() {
    let d = TempDir::new().unwrap();
    let ok = "base = \"path\"\nn = [64, 128]\neps = 0.5\nseeds = 3\nroot_seed = 5\nmetrics = [\"longpath\", \"blob_check\"]\nk = 4\n";
    std::fs::write(d.path().join("ok.toml"), ok).unwrap();
    for prefix in ["r1", "r2"] {
        let o = run(d.path(), &["sweep", "ok.toml", "-o", prefix]);
        assert!(d.path().join(format!("{prefix}.timings.csv")).exists());
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    for ext in ["csv", "json"] {
        assert_eq!(
            std::fs::read(d.path().join(format!("r1.{ext}"))).unwrap(),
            std::fs::read(d.path().join(format!("r2.{ext}"))).unwrap()
        );
    }
    let csv = std::fs::read_to_string(d.path().join("r1.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 2 * 3 * 2);

    // Unperturbed path: diameter grows linearly, so the log-scaling trend breaks.
    let bad = "base = \"path\"\nn = [64, 256, 1024]\neps = 0.0\nseeds = 1\nmetrics = [\"diameter\"]\n";
    std::fs::write(d.path().join("bad.toml"), bad).unwrap();
    assert_eq!(code(&run(d.path(), &["sweep", "bad.toml", "-o", "b"])), 3);
    // Linear diameter also overshoots the frozen ceiling; band status wins over trend.
    let o = run(d.path(), &["--json", "report", "b.json", "--theorem", "T1_4"]);
    assert_eq!(code(&o), 3);
    let out = stdout(&o);
    assert!(out.contains("band_violated"), "{out}");
    assert!(out.contains("\"trend_ok\": false") || out.contains("\"trend_ok\":false"), "{out}");
    assert_eq!(code(&run(d.path(), &["report", "b.json", "--theorem", "T1_5"])), 1);

    std::fs::write(d.path().join("unknown.toml"), ok.replace("blob_check", "wat")).unwrap();
    assert_eq!(code(&run(d.path(), &["sweep", "unknown.toml", "-o", "u"])), 1);
}

#[test]
fn thread_count_from_environment() {
    let d = TempDir::new().unwrap();
    run(d.path(), &["gen", "binary_tree", "15", "-o", "t.el"]);
    let one = Command::new(env!("CARGO_BIN_EXE_smoothgraph"))
        .current_dir(d.path())
        .env("SMOOTHGRAPH_THREADS", "1")
        .args(["--json", "expansion", "t.el"])
        .output()
        .unwrap();
    let two = run(d.path(), &["--threads", "2", "--json", "expansion", "t.el"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, two.stdout);
}
