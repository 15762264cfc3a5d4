//! End-to-end runs of the `qmc` binary.

use std::path::Path;
use std::process::{Command, Output};

use multinet::{latency_timed, CommMethod, DistAdder, TimingParams, TopologyKind};

fn qmc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("../adders/tests/golden").join(name);
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn verify_small_widths_passes() {
    let o = qmc(&["verify", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("QCLA"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_rejects_wide_exhaustive_runs() {
    let o = qmc(&["verify", "--n-max", "30"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n_max"), "{}", stderr(&o));
}

#[test]
fn verify_accepts_untouched_golden_circuit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cdkm_3.txt");
    std::fs::write(&path, golden("cdkm_3.txt")).unwrap();
    let o = qmc(&["verify", "--circuit", path.to_str().unwrap(), "--kind", "cdkm", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn corrupted_circuit_reports_first_failing_input() {
    let text = golden("cdkm_3.txt").replacen("CNOT 3 7", "CNOT 2 7", 1);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.txt");
    std::fs::write(&path, text).unwrap();
    let o = qmc(&["verify", "--circuit", path.to_str().unwrap(), "--kind", "cdkm", "--n", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("first failing input a="), "{err}");
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn unknown_table_lists_the_valid_names() {
    let o = qmc(&["table", "nonesuch"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    for name in cli::commands::tables::TABLE_NAMES {
        assert!(err.contains(name), "{err}");
    }
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "# comment\nepr_ns = 10\nepr_nss = 20\n").unwrap();
    let o = qmc(&["--config", path.to_str().unwrap(), "sweep"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown key `epr_nss`"), "{}", stderr(&o));
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "format = csv\nn = 16\nepr_ns = 10\nadder = vbe\ntopology = line\n").unwrap();
    let o = qmc(&["--config", path.to_str().unwrap(), "sweep", "--epr-ns", "160"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 2, "{out}");
    assert!(out.lines().nth(1).unwrap().starts_with("VBE,teledata,line,16,160,"));
}

#[test]
fn csv_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = qmc(&["--format", "csv", "--out", p.to_str().unwrap(), "table", "calls"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("n,adder_calls,published_calls,"));
    // large counts come out in scientific notation
    assert!(text.contains("2.097152e6"), "{text}");
}

#[test]
fn sweep_cell_equals_direct_model_call() {
    let o = qmc(&["--format", "csv", "sweep", "--n", "256", "--epr-ns", "160", "--adder", "cdkm", "--topology", "line"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    let got: f64 = row[5].parse().unwrap();
    let timing = TimingParams { epr_ns: 160.0, ..TimingParams::default() };
    let want = latency_timed(DistAdder::Cdkm, TopologyKind::Line, 256, CommMethod::Teledata, &timing).unwrap();
    assert!((got / want.ns - 1.0).abs() < 1e-9, "{got} vs {}", want.ns);
}

#[test]
fn lookahead_wins_every_width_at_fast_epr() {
    let o = qmc(&["--format", "csv", "sweep", "--epr-ns", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.ends_with(",carry-lookahead")), "{out}");
}

#[test]
fn empty_sweep_grid_is_an_error() {
    let o = qmc(&["sweep", "--adder", "qcla", "--n", "100"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_table_renders() {
    for name in cli::commands::tables::TABLE_NAMES {
        let o = qmc(&["--format", "csv", "table", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        let out = stdout(&o);
        assert!(out.lines().count() > 1, "{name}");
        let cols = out.lines().next().unwrap().split(',').count();
        assert!(out.lines().all(|l| !l.is_empty()));
        assert!(cols >= 4, "{name}");
    }
}

#[test]
fn reliability_reports_bound_and_exact_rate() {
    let o = qmc(&["--format", "csv", "reliability", "--code", "23", "--t", "1e8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let rec = rdr.records().next().unwrap().unwrap();
    let row: Vec<&str> = rec.iter().collect();
    assert_eq!(&row[..4], ["[[23,1,7]]", "23", "1e8", "0.1"]);
    let p: f64 = row[4].parse().unwrap();
    assert!((p - 5.797e-4).abs() < 1e-7);
}

#[test]
fn simulate_breaks_latency_down() {
    let o = qmc(&["--format", "csv", "simulate", "--adder", "cdkm", "--topology", "line", "--n", "1024", "--epr-ns", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let row: Vec<f64> = out.lines().nth(1).unwrap().split(',').skip(4).filter_map(|x| x.parse().ok()).collect();
    // epr, comm, local, total, calls, seconds
    assert!((row[1] + row[2] - row[3]).abs() < 1e-6 * row[3]);
    assert!((row[5] / 260.0 - 1.0).abs() < 0.25);
}

#[test]
fn bad_values_exit_with_usage_code() {
    assert_eq!(qmc(&["simulate", "--epr-ns", "-3"]).status.code(), Some(2));
    assert_eq!(qmc(&["simulate", "--topology", "ring"]).status.code(), Some(2));
    assert_eq!(qmc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qmc(&["--help"]).status.code(), Some(0));
}
