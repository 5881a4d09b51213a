//! The installed binary: exit codes and output formats.

use std::process::Command;

fn hilbfan(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hilbfan")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn success_and_usage_codes() {
    let (code, out, _) = hilbfan(&["ideal", "I(1,2)"]);
    assert_eq!(code, 0);
    let j: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(j["colength"], 4);
    let (code, _, err) = hilbfan(&["ideal", "I(1,"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 4"), "{err}");
    assert_eq!(hilbfan(&["no-such-command"]).0, 2);
}

#[test]
fn verification_failure_code() {
    let (code, out, _) = hilbfan(&["verify", "--claims", "claim2,figure2", "--n", "4"]);
    assert_eq!(code, 0, "{out}");
    // the limit statements of the first family include one that does not hold
    let (code, out, _) = hilbfan(&["verify", "--claims", "prop33", "--format", "text"]);
    assert_eq!(code, 1);
    assert!(out.contains("fail  prop33"), "{out}");
}

#[test]
fn golden_override_from_the_environment() {
    let dir = std::env::temp_dir().join(format!("hilbfan-bin-golden-{}", std::process::id()));
    std::fs::create_dir_all(dir.join("figure2")).unwrap();
    std::fs::write(
        dir.join("figure2/n1.json"),
        r#"{"schema_version":1,"entries":[{"ideal":[2,0]},{"ray":[1,2]}]}"#,
    )
    .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hilbfan"))
        .args(["verify", "--claims", "figure2", "--n", "1"])
        .env("HILBFAN_GOLDEN", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let j: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["reports"][0]["witness"]["what"].as_str().unwrap().split(';').next(), Some("entry 0"));
    std::fs::remove_dir_all(dir).unwrap();
}
