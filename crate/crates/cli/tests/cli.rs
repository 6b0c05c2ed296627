use std::process::{Command, Output};

use fano_core::verify::{self, Status, Suite, SuiteRun, DEFAULT_SEED};

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano"))
        .args(args)
        .output()
        .expect("run fano")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn strip_elapsed(mut run: SuiteRun) -> SuiteRun {
    for r in &mut run.reports {
        r.elapsed_ms = 0;
    }
    run
}

#[test]
fn verify_ns_fermat_passes() {
    let o = fano(&["verify", "--suite", "ns-fermat"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rank = out.lines().find(|l| l.contains("ns.rank ")).unwrap();
    assert!(rank.starts_with("PASS"));
    assert!(rank.split_whitespace().any(|c| c == "25"));
    assert!(out.contains("3^18 (387420489)"));
}

#[test]
fn json_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = fano(&["verify", "--suite", "period-lattice", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let parsed: SuiteRun = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed.suite, "period-lattice");
    assert_eq!(parsed.seed, DEFAULT_SEED);
    let selected = parsed.reports.iter().find(|r| r.claim_id == "h1.selected").unwrap();
    assert_eq!(selected.expected, "Λ_{α²}");
    assert_eq!(selected.status, Status::Pass);
    let direct = verify::run_suite(Suite::PeriodLattice, DEFAULT_SEED);
    assert_eq!(strip_elapsed(parsed), strip_elapsed(direct));
}

#[test]
fn json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<SuiteRun> = (0..2)
        .map(|k| {
            let path = dir.path().join(format!("r{k}.json"));
            let o = fano(&["verify", "--suite", "twelve-family", "--json", path.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0));
            serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
        })
        .collect();
    let a = serde_json::to_string(&strip_elapsed(runs[0].clone())).unwrap();
    let b = serde_json::to_string(&strip_elapsed(runs[1].clone())).unwrap();
    assert_eq!(a, b);
}

#[test]
fn unwritable_json_is_usage_error() {
    let o = fano(&["verify", "--suite", "arith", "--json", "/nonexistent-dir/x.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fano(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(fano(&["form", "--eval", "x1 + x7"]).status.code(), Some(2));
    assert_eq!(fano(&["form", "--eval", "x1"]).status.code(), Some(2));
    assert_eq!(fano(&["lattice", "--candidate", "L9"]).status.code(), Some(2));
    assert_eq!(fano(&[]).status.code(), Some(2));
    let err = String::from_utf8(fano(&["form", "--eval", "x1 + x7"]).stderr).unwrap();
    assert!(err.contains("position 6"), "{err}");
}

#[test]
fn form_example_fibration() {
    let o = fano(&["form", "--eval", "(1-w)*x1", "--pair", "x1 - x2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("member       true"));
    assert!(out.contains("genus        10"));
    assert!(out.contains("pair degree  3"));
}

#[test]
fn form_pair_example() {
    let out = stdout(&fano(&["form", "--eval", "x4 - w^2*x5", "--pair", "x4 - w*x5"]));
    assert!(out.contains("form         x4 + (1+w)*x5"));
    assert!(out.contains("genus        7"));
    assert!(out.contains("pair degree  3"));
}

#[test]
fn lattice_candidates() {
    let out = stdout(&fano(&["lattice", "--candidate", "Lw2"]));
    assert!(out.contains("pfaffian     1"));
    assert!(out.contains("integral     true"));
    let out = stdout(&fano(&["lattice", "--candidate", "L0"]));
    assert!(out.contains("det          9"));
    let o = fano(&["lattice", "--candidate", "L"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("integral     false"));
}

#[test]
fn group_order_and_orbit() {
    let out = stdout(&fano(&["group", "--order", "--orbit"]));
    assert!(out.contains("order        9720"));
    assert!(out.contains("orbit        30 lines"));
}
