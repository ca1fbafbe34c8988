use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lti-bounded"))
}

fn write(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lti-bounded-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decide_zero_matrix_continuous() {
    let f = write("zero.txt", "2 2 1\n0 0\n0 0\n");
    let o = run(&["decide", "--mode", "continuous", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "YES\n");
}

#[test]
fn decide_jordan_block_discrete() {
    let f = write("jordan.txt", "# shear\n2 2 1\n1 1\n0 1\n");
    let o = run(&["decide", "--mode", "discrete", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NO\n");
}

#[test]
fn decide_uses_denominator_in_discrete_mode() {
    let f = write("half.txt", "1 1 2\n1\n");
    let disc = run(&["decide", "--mode", "discrete", f.to_str().unwrap()]);
    assert_eq!(disc.status.code(), Some(0));
    let f = write("three_halves.txt", "1 1 2\n3\n");
    let disc = run(&["decide", "--mode", "discrete", f.to_str().unwrap()]);
    assert_eq!(disc.status.code(), Some(1));
}

#[test]
fn trace_is_deterministic_and_timings_are_opt_in() {
    let f = write("rot.txt", "3 3 1\n0 1 0\n-1 0 0\n0 0 -2\n");
    let args = ["decide", "--mode", "continuous", f.to_str().unwrap(), "--trace"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    assert!(a.starts_with("YES\nverdict: YES\nmode: continuous\n"));
    assert!(a.contains("minimal_polynomial.degree: 3\n"));
    assert!(a.contains("bits.kernel_minors: "));
    assert!(!a.contains("time."));
    let t = stdout(&run(&[
        "decide",
        "--mode",
        "continuous",
        f.to_str().unwrap(),
        "--trace",
        "--timings",
    ]));
    assert!(t.contains("time.total_us: "));
    let keys = |s: &str| -> Vec<String> {
        s.lines()
            .filter_map(|l| l.split_once(':').map(|(k, _)| k.to_string()))
            .filter(|k| !k.starts_with("time."))
            .collect()
    };
    assert_eq!(keys(&a), keys(&t));
}

#[test]
fn check_poly_examples() {
    for (coeffs, discrete, expected) in [
        (&["1", "0", "1"][..], false, "YES"),
        (&["1", "2", "2"][..], false, "YES"),
        (&["1", "0", "2", "0", "1"][..], false, "NO"),
        (&["1", "-1"][..], false, "NO"),
        (&["1", "-1"][..], true, "YES"),
        (&["1", "-2", "1"][..], true, "NO"),
        (&["1", "0", "-1"][..], true, "YES"),
    ] {
        let mut args = vec!["check-poly"];
        args.extend(coeffs);
        if discrete {
            args.push("--discrete");
        }
        let o = run(&args);
        assert_eq!(stdout(&o).trim(), expected, "{args:?}");
        assert_eq!(o.status.code(), Some(if expected == "YES" { 0 } else { 1 }));
    }
}

#[test]
fn det_and_minpoly() {
    let f = write("m.txt", "3 3 5\n2 0 1\n1 3 2\n1 1 2\n");
    let o = run(&["det", f.to_str().unwrap()]);
    assert_eq!(stdout(&o), "6\n");
    let f = write("shear.txt", "2 2 1\n1 1\n0 1\n");
    let o = run(&["minpoly", f.to_str().unwrap()]);
    assert_eq!(stdout(&o), "1 -2 1\n");
}

#[test]
fn malformed_input_exits_two_with_position() {
    let f = write("bad.txt", "2 2 1\n1 x\n0 0\n");
    let o = run(&["decide", "--mode", "continuous", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":2:3:"), "{err}");

    let f = write("rect.txt", "1 2 1\n1 2\n");
    for sub in [&["decide", "--mode", "discrete"][..], &["minpoly"][..], &["det"][..]] {
        let mut args = sub.to_vec();
        args.push(f.to_str().unwrap());
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["decide", "x.txt"]).status.code(), Some(2));
    assert_eq!(run(&["check-poly"]).status.code(), Some(2));
    assert_eq!(run(&["check-poly", "0"]).status.code(), Some(2));
    assert_eq!(run(&["check-poly", "1", "q"]).status.code(), Some(2));
    assert_eq!(
        run(&["decide", "--mode", "sideways", "x.txt"]).status.code(),
        Some(2)
    );
}
