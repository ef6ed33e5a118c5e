use std::path::PathBuf;
use std::process::Command;

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", &format!("{name}.txt")]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn invoke(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_difftangent"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const CASES: &[(&str, &[&str], i32)] = &[
    ("tangent_torus_internal", &["tangent", "--space", "torus:sqrt(2)", "--functor", "internal"], 0),
    ("tangent_orbit_right", &["tangent", "--space", "orbit:3", "--functor", "right"], 0),
    ("tangent_orbit_y_right", &["tangent", "--space", "orbit:2", "--functor", "y-right", "--test", "orbit:3"], 0),
    (
        "tangent_orbit_y_right_json",
        &["tangent", "--space", "orbit:2", "--functor", "y-right", "--test", "orbit:3", "--json"],
        0,
    ),
    (
        "tangent_torus_y_internal_json",
        &["tangent", "--space", "torus:1+sqrt(2)", "--functor", "y-internal", "--test", "torus:sqrt(2)", "--json"],
        0,
    ),
    ("tangent_undetermined", &["tangent", "--space", "orbit:2", "--functor", "y-right", "--test", "R^2"], 3),
    ("table_orbit", &["table", "orbit", "--max", "3"], 0),
    ("table_torus", &["table", "torus", "--slopes", "sqrt(2),1+sqrt(2),sqrt(3)"], 0),
    ("table_classical", &["table", "classical"], 0),
    ("witness_diffeo", &["witness", "diffeo", "--alpha", "sqrt(2)", "--beta", "1+sqrt(2)"], 0),
    ("witness_mobius_none", &["witness", "mobius", "--alpha", "sqrt(3)", "--beta", "sqrt(2)"], 1),
    ("witness_mobius", &["witness", "mobius", "--alpha", "(3-2*sqrt(7))/5", "--beta", "1+sqrt(7)"], 0),
    ("witness_embed", &["witness", "embed", "--m", "2", "--n", "3"], 0),
    ("witness_lift", &["witness", "lift", "--map", "x1^2+x2^2; 0"], 0),
];

#[test]
fn golden_outputs() {
    for (name, args, code) in CASES {
        let (got_code, stdout, stderr) = invoke(args);
        assert_eq!(got_code, *code, "{name}: {stderr}");
        assert_eq!(stdout, golden(name), "{name}");
        assert!(stderr.is_empty(), "{name}: {stderr}");
    }
}

#[test]
fn binary_matches_library() {
    for (_, args, _) in CASES {
        let (code, stdout, stderr) = invoke(args);
        let lib = difftangent_cli::run(args);
        assert_eq!((code, stdout, stderr), (lib.code, lib.stdout, lib.stderr));
    }
}

#[test]
fn spec_examples() {
    let (_, out, _) = invoke(&["tangent", "--space", "torus:sqrt(2)", "--functor", "internal"]);
    assert!(out.contains("dimension:     1\n") && out.contains("[π_α, ∂/∂t]"));
    let (_, out, _) = invoke(&["witness", "embed", "--m", "2", "--n", "3"]);
    assert!(out.contains("(x1; x2; 0)") && out.contains("pushforward: 1\n"));
    let (code, out, _) = invoke(&["witness", "mobius", "--alpha", "sqrt(3)", "--beta", "sqrt(2)"]);
    assert_eq!(code, 1);
    assert!(out.contains("none"));
    let (_, out, _) = invoke(&["witness", "diffeo", "--alpha", "sqrt(2)", "--beta", "1+sqrt(2)"]);
    assert!(out.contains("[1; (2)]") && out.contains("[2; (2)]") && out.contains("det = 1"));
}

#[test]
fn rational_slopes_are_input_errors() {
    for args in [
        &["tangent", "--space", "torus:sqrt(9)", "--functor", "internal"][..],
        &["witness", "mobius", "--alpha", "3/2", "--beta", "sqrt(2)"],
        &["witness", "diffeo", "--alpha", "sqrt(2)", "--beta", "(1+sqrt(4))/3"],
        &["table", "torus", "--slopes", "sqrt(2),sqrt(16)"],
    ] {
        let (code, stdout, stderr) = invoke(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(stdout.is_empty());
        assert!(stderr.contains("torus slope must be irrational") || stderr.contains("expected"), "{stderr}");
    }
    let (_, _, stderr) = invoke(&["tangent", "--space", "torus:sqrt(9)", "--functor", "internal"]);
    assert_eq!(stderr, "error: --space: at position 6: torus slope must be irrational\n");
}

#[test]
fn unknown_flags_are_rejected() {
    let (code, _, stderr) = invoke(&["tangent", "--space", "R^1", "--functor", "internal", "--bogus"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--bogus"));
}

#[test]
fn help_and_version_succeed() {
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("tangent") && out.contains("Exit codes"));
    let (code, out, _) = invoke(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
}
