use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use perioband::band::io::read_dense;
use perioband::fixtures::example1;
use perioband::oracle::oracle_invert;
use perioband::Rational;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_perioband"));
    cmd.args(args).env_remove("PERIOBAND_MODE");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const SINGULAR: &str = "PKB 1\nn 6 k 3 mode exact\ncorner_1n 1\ncorner_n1 1\ndiag -1 1 1 1 1 1\ndiag 0 1 1 1 1 1 1\ndiag 1 1 1 1 1 1\n";
const FLOAT_ZERO_SUPER: &str = "PKB 1\nn 6 k 3 mode float\ncorner_1n 1\ncorner_n1 2\ndiag -1 1 2 -1 2 1\ndiag 0 2 -1 -2 1 -3 5\ndiag 1 1 0 3 1 -2\n";

#[test]
fn det_of_examples() {
    let o = run(&["det", fixture("ex1.pkb").to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "153\n");
    let o = run(&["det", fixture("ex2.pkb").to_str().unwrap()], &[]);
    assert_eq!(stdout(&o), "1888\n");
}

#[test]
fn invert_matches_oracle_and_fixture() {
    let o = run(&["invert", fixture("ex1.pkb").to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(0));
    let inv = read_dense::<Rational>(&stdout(&o)).unwrap();
    assert_eq!(inv, oracle_invert(&example1().to_dense()).unwrap());
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("ex1.inverse.dense")).unwrap());

    let o = run(&["invert-anti", fixture("ex2.apkb").to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("ex2.anti-inverse.dense")).unwrap());
}

#[test]
fn solve_writes_solution_and_checks() {
    let o = run(&["solve", fixture("ex3.pkb").to_str().unwrap(), "--rhs", fixture("ex3.vec").to_str().unwrap(), "--check"], &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), std::fs::read_to_string(fixture("ex3.solution.vec")).unwrap());
    assert!(stderr(&o).contains("residual 0 PASS"));
}

#[test]
fn singular_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "s.pkb", SINGULAR);
    let o = run(&["det", p.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "0\n");
    let o = run(&["invert", p.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    let o = run(&["check", p.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn parse_and_usage_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "bad.pkb", "PKB 1\nn 6 k 4 mode exact\n");
    let o = run(&["det", p.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line"));
    assert_eq!(run(&["det", "/nonexistent/file.pkb"], &[]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"], &[]).status.code(), Some(3));
    let o = run(&["invert", fixture("ex1.apkb").to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn float_zero_pivot_exits_four_and_exact_recovers() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "z.pkb", FLOAT_ZERO_SUPER);
    let o = run(&["invert", p.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["invert", p.to_str().unwrap(), "--mode", "exact"], &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn mode_flag_overrides_environment() {
    let ex1 = fixture("ex1.pkb");
    let float = run(&["det", ex1.to_str().unwrap()], &[("PERIOBAND_MODE", "float")]);
    assert_eq!(float.status.code(), Some(0));
    let value: f64 = stdout(&float).trim().parse().unwrap();
    assert!((value - 153.0).abs() < 1e-9);
    let exact = run(&["det", ex1.to_str().unwrap(), "--mode", "exact"], &[("PERIOBAND_MODE", "float")]);
    assert_eq!(stdout(&exact), "153\n");
}

#[test]
fn check_passes_on_examples() {
    for name in ["ex1.pkb", "ex2.pkb", "ex1.apkb", "ex2.apkb"] {
        let o = run(&["check", fixture(name).to_str().unwrap()], &[]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    }
}

#[test]
fn gen_is_deterministic_and_readable() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.pkb");
    let args = ["gen", "--n", "12", "--k", "5", "--seed", "9", "--zero-probability", "0.1"];
    let a = run(&args, &[]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&run(&args, &[])));
    let mut with_output = args.to_vec();
    with_output.extend(["-o", out.to_str().unwrap()]);
    assert_eq!(run(&with_output, &[]).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), stdout(&a));
    let c = run(&["check", out.to_str().unwrap()], &[]);
    assert!(matches!(c.status.code(), Some(0 | 2)), "{}", stdout(&c));
}

#[test]
fn bench_prints_a_table() {
    let o = run(&["bench", "--n-list", "50,200", "--k", "5", "--reps", "1", "--exact-max-n", "50"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("50 5 ") && lines[1].ends_with("PASS"));
}
