use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_clubcomb")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn json_is_deterministic_and_well_formed() {
    let args = ["compile", "x, y, z |- z (x y) x", "--json"];
    let (c1, o1, _) = run(&args);
    let (c2, o2, _) = run(&args);
    assert_eq!((c1, &o1), (c2, &o2));
    let v: serde_json::Value = serde_json::from_str(&o1).unwrap();
    assert_eq!(v["command"], "compile");
    assert_eq!(v["verified"], true);
    assert_eq!(v["minimal_club"], "Srj");
    assert!(v.get("error").is_none());
}

#[test]
fn json_error_record() {
    let (code, out, _) = run(&["compile", "x, y |- y x", "--club", "id", "--json"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["error"].is_string());
    assert!(v.get("term").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "x |- x"]).0, 0);
    assert_eq!(run(&["analyze", "x |- y"]).0, 1);
    assert_eq!(run(&["compile", "|- x"]).0, 1);
    assert_eq!(run(&["frobnicate", "x |- x"]).0, 1);
    assert_eq!(run(&["compile", "x, y |- x", "--club", "bij"]).0, 2);
    assert_eq!(run(&["eval", "W W W", "--fuel", "50"]).0, 3);
    assert_eq!(run(&["eval", "B a b c"]).0, 0);
}

#[test]
fn eval_reports_steps() {
    let (code, out, _) = run(&["eval", "C K a b"]);
    assert_eq!(code, 0);
    assert_eq!(out, "b\nsteps: 2\n");
}
