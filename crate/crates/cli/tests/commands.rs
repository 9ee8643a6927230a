use std::path::PathBuf;
use std::process::Command as Process;

use hochlift_cli::{load, run, Command, Report};

fn problem(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems").join(name)
}

fn run_file(cmd: Command, name: &str) -> Report {
    run(&cmd, Some(&load(&problem(name)).unwrap())).unwrap()
}

#[test]
fn example_paper_reports_the_worked_values() {
    let report = run(&Command::ExamplePaper, None).unwrap();
    assert!(report.passed());
    let text = report.render(false);
    for needle in ["e2 -> 2·e2", "psi_{f⊗g}(e1⊗e2') = x·e0⊗e1' + e1⊗e0'·y", "= 2·y", "= -2·x"] {
        assert!(text.contains(needle), "missing {needle} in\n{text}");
    }
}

#[test]
fn untwisted_iso_to_degree_four() {
    let report = run_file(Command::VerifyIso { max_degree: 4, twist: None }, "dual_numbers.txt");
    assert!(report.passed());
    assert!(report.render(false).contains("36 pairs, 0 failed"));
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let cmd = Command::VerifyIso { max_degree: 3, twist: Some("-1".into()) };
    let outputs: Vec<String> = [1, 3]
        .iter()
        .map(|&n| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
            pool.install(|| run_file(cmd.clone(), "dual_numbers.txt").render(true))
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn bracket_task_gives_minus_two_h() {
    let text = run_file(Command::Bracket, "dual_numbers.txt").render(false);
    assert!(text.contains("[f, h] class coordinates: -2"), "{text}");
}

#[test]
fn oracle_and_twist_build() {
    assert!(run_file(Command::OracleCheck { max_degree: 3 }, "cubic.txt").passed());
    assert!(run_file(Command::TwistBuild { twist: None }, "quantum.txt").passed());
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_hochlift")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_codes() {
    let (code, out, _) = binary(&["example-paper"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS [f⊗f', h⊗h'](e2⊗e3') = 2·y"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "field Q\nalgebra A\n  basis 1 [0]\n  basis x [1]\n  mul x x -> x\nend\n").unwrap();
    let (code, _, err) = binary(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 5, column 15"), "{err}");

    // x·x = 1 is not graded
    let fail = dir.path().join("fail.txt");
    std::fs::write(&fail, "field Q\nalgebra A\n  basis 1 [0]\n  basis x [1]\n  mul x x -> 1 1\nend\n").unwrap();
    let (code, out, _) = binary(&["validate", fail.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL algebra A"));
}

#[test]
fn output_is_byte_stable() {
    let path = problem("quantum.txt");
    let args = ["verify-iso", path.to_str().unwrap(), "--max-degree", "3", "--emit", "records"];
    let a = binary(&args);
    let b = binary(&args);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
}
