use std::path::PathBuf;

use pclie::cli::run;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn pclie(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pclie").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn word_commands() {
    let (code, out, _) = pclie(&["alsw", "--alphabet", "x > y", "--max-deg", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "y\nx\nxy\nxyy\nxxy\n");
    let (code, out, _) = pclie(&["factorize", "--alphabet", "x > y", "yxxy"]);
    assert_eq!((code, out.as_str()), (0, "y xxy\n"));
    let (code, out, _) = pclie(&["bracket", "--alphabet", "x > y > z", "xyz"]);
    assert_eq!((code, out.as_str()), (0, "(x (y z))\n"));
}

#[test]
fn verify_reports_ok() {
    let (code, out, _) = pclie(&[
        "verify",
        "--theta",
        &data("abelian2.theta"),
        "--max-deg",
        "5",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("ok\n"), "{out}");
    assert!(out.contains("bounded"));
    let (code, _, _) = pclie(&["verify", "--theta", &data("path4.theta"), "--max-deg", "6"]);
    assert_eq!(code, 0);
}

#[test]
fn basis_dims_and_cross_check() {
    let star = data("star3.theta");
    let (code, out, _) = pclie(&["basis", "--theta", &star, "--max-deg", "3", "--dims-only"]);
    assert_eq!((code, out.as_str()), (0, "1:3 2:1 3:2\n"));
    let (code, out, _) = pclie(&[
        "basis",
        "--theta",
        &star,
        "--max-deg",
        "6",
        "--dims-only",
        "--cross-check",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "1:3 2:1 3:2 4:3 5:6 6:9\ncross-check: ok\n");
}

#[test]
fn normal_form() {
    let (code, out, _) = pclie(&["nf", "--theta", &data("xz.theta"), "--expr", "((x y) z)"]);
    assert_eq!((code, out.as_str()), (0, "[xyz]\n"));
    let (code, out, _) = pclie(&[
        "nf",
        "--theta",
        &data("chain3.theta"),
        "--expr",
        "((x z) y)",
    ]);
    assert_eq!((code, out.as_str()), (0, "0\n"));
}

#[test]
fn completion() {
    let (code, out, _) = pclie(&[
        "complete",
        "--rules",
        &data("overlap.rules"),
        "--max-deg",
        "4",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(&lines[..3], &["[xy]", "[yz]", "[xzy]"]);
}

#[test]
fn json_output() {
    let (code, out, _) = pclie(&[
        "--format",
        "json",
        "basis",
        "--theta",
        &data("star3.theta"),
        "--max-deg",
        "2",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["degrees"][1]["dimension"], 1);
    assert_eq!(v["degrees"][1]["basis"][0], "(y z)");

    let (_, out, _) = pclie(&[
        "nf",
        "--format",
        "json",
        "--theta",
        &data("xz.theta"),
        "--expr",
        "((x y) z)",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rendered"], "[xyz]");
    assert_eq!(v["terms"][0]["coefficient"], "1");
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = pclie(&["verify", "--theta", "/nonexistent.theta", "--max-deg", "3"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
    let (code, _, _) = pclie(&["verify", "--max-deg", "3"]);
    assert_eq!(code, 2);
    let (code, _, _) = pclie(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, err) = pclie(&["bracket", "--alphabet", "x > y", "yx"]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
    let (code, _, _) = pclie(&["nf", "--theta", &data("xz.theta"), "--expr", "((x y)"]);
    assert_eq!(code, 2);
    let (code, out, _) = pclie(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("leftmost"));
}

#[test]
fn malformed_theta_is_a_usage_error() {
    let dir = std::env::temp_dir().join(format!("pclie-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.theta");
    std::fs::write(&bad, "x > y\nx q\n").unwrap();
    let (code, _, err) = pclie(&["verify", "--theta", bad.to_str().unwrap(), "--max-deg", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("q"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}
