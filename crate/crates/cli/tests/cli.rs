use std::process::{Command, Output};

fn spray(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spray"))
        .args(args)
        .env_remove("SPRAY_BACKEND")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn assert_ok(args: &[&str], expected: &str) {
    let out = spray(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout(&out).trim_end(), expected, "{args:?}");
}

fn assert_exit(args: &[&str], code: i32) {
    let out = spray(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(!out.stderr.is_empty());
}

#[test]
fn eval_subcommand() {
    assert_ok(
        &[
            "eval",
            "--expr",
            "x*y^3 + 2*x^2*y^2 + 3*x^3*y",
            "--arity",
            "2",
            "--at",
            "1,2",
        ],
        "22",
    );
    assert_ok(
        &["eval", "--expr", "1", "--arity", "3", "--at", "9,9,9"],
        "1",
    );
    assert_ok(
        &[
            "eval",
            "--expr",
            "-x*y^(-2)",
            "--arity",
            "2",
            "--at",
            "-3,2",
        ],
        "0.75",
    );
    assert_exit(&["eval", "--expr", "x^-1", "--arity", "1", "--at", "0"], 3);
    assert_exit(
        &["eval", "--expr", "x +* y", "--arity", "2", "--at", "1,1"],
        4,
    );
    assert_exit(
        &["eval", "--expr", "x + q", "--arity", "2", "--at", "1,1"],
        4,
    );
    assert_exit(&["eval", "--expr", "x", "--arity", "2", "--at", "1"], 3);
    assert_exit(&["eval", "--expr", "x", "--arity", "1", "--at", "one"], 2);
}

#[test]
fn knight_subcommand() {
    assert_ok(&["knight", "--dim", "2", "--moves", "6"], "5840");
    assert_ok(&["knight", "--dim", "4", "--moves", "6"], "10117920");
    assert_ok(
        &["knight", "--dim", "4", "--moves", "6", "--pause"],
        "10306561",
    );
    assert_exit(&["knight", "--dim", "1", "--moves", "6"], 3);
    assert_exit(&["knight", "--dim", "2", "--moves", "20", "--pause"], 5);
    assert_exit(&["knight", "--dim", "2"], 2);
}

#[test]
fn knight_output_is_backend_independent() {
    let a = spray(&[
        "knight",
        "--dim",
        "3",
        "--moves",
        "4",
        "--backend",
        "ordered",
    ]);
    let b = spray(&[
        "knight",
        "--dim",
        "3",
        "--moves",
        "4",
        "--backend",
        "hashed",
    ]);
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_spray"))
        .args(["knight", "--dim", "3", "--moves", "4"])
        .env("SPRAY_BACKEND", "ordered")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&env.stderr).contains("ordered"));
    assert_eq!(env.stdout, a.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_spray"))
        .args(["knight", "--dim", "3", "--moves", "4"])
        .env("SPRAY_BACKEND", "vector")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn walk_subcommand() {
    let standard = [
        "walk",
        "--dim",
        "2",
        "--side",
        "17",
        "--steps",
        "100",
        "--initial",
        "10,10",
        "--traps",
        "2,3;3,5",
    ];
    assert_ok(&standard, "0.9006642");
    assert_ok(&["walk"], "0.9006642");
    assert_ok(&["walk", "--steps", "0"], "1.000000");
    assert_ok(&["walk", "--traps", "", "--steps", "50"], "1.000000");
    let ordered = spray(&["walk", "--backend", "ordered"]);
    let hashed = spray(&["walk", "--backend", "hashed"]);
    assert_eq!(ordered.stdout, hashed.stdout);
    assert_exit(&["walk", "--traps", "17,0"], 3);
    assert_exit(&["walk", "--initial", "1,2,3"], 3);
    assert_exit(&["walk", "--traps", "1;x"], 2);
}

#[test]
fn bench_subcommand() {
    let out = spray(&[
        "bench", "--op", "power", "--dim", "2", "--moves", "6", "--repeat", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "backend,op,size,median_seconds");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("ordered,power,"));
    assert!(lines[2].starts_with("hashed,power,"));

    let out = spray(&[
        "bench",
        "--op",
        "mul",
        "--dim",
        "3",
        "--moves",
        "4",
        "--repeat",
        "3",
        "--backend",
        "hashed",
    ]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().nth(1).unwrap().starts_with("hashed,mul,"));
    assert_exit(&["bench", "--repeat", "0"], 2);
}

#[test]
fn bench_backend_timings_are_comparable() {
    let out = spray(&[
        "bench", "--op", "power", "--dim", "4", "--moves", "6", "--repeat", "1",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("10117920"));
    let secs: Vec<f64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    let (ordered, hashed) = (secs[0], secs[1]);
    assert!(
        hashed <= 5.0 * ordered,
        "hashed {hashed}s vs ordered {ordered}s"
    );
}
