use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn kerind(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kerind")).args(args).output().expect("binary runs")
}

fn json_report(scenario: &str, command: &str) -> serde_json::Value {
    let path = fixture(scenario);
    let out = kerind(&["--scenario", path.to_str().unwrap(), "--command", command, "--json", "-"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn passing_scenario_exits_zero_with_table() {
    let path = fixture("dual-f3-sign.toml");
    let out = kerind(&["--scenario", path.to_str().unwrap(), "--command", "h1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.contains("all checks passed"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("elapsed"));
}

#[test]
fn reports_are_deterministic() {
    let a = json_report("mixed-f3-dual.toml", "verify-theorem");
    let b = json_report("mixed-f3-dual.toml", "verify-theorem");
    assert_eq!(a, b);
    assert_eq!(a["schema"], "kerind-report/1");
    assert_eq!(a["digest"].as_str().unwrap().len(), 64);
}

#[test]
fn sign_lattice_has_trivial_pic() {
    let r = json_report("lattice-sign-z.toml", "pic");
    assert_eq!(r["tasks"][0]["result"]["pic"]["display"], "()");
    assert_eq!(r["tasks"][0]["result"]["h1"]["display"], "(2)");
}

#[test]
fn bad_input_exits_two() {
    let path = fixture("dual-f3-sign.toml");
    let p = path.to_str().unwrap();
    assert_eq!(kerind(&["--scenario", "/nonexistent.toml"]).status.code(), Some(2));
    assert_eq!(kerind(&["--scenario", p, "--command", "frobnicate"]).status.code(), Some(2));
    assert_eq!(kerind(&["--scenario", p, "--n", "0"]).status.code(), Some(2));
    assert_eq!(kerind(&["--scenario", p, "--cap", "0"]).status.code(), Some(2));

    let dir = std::env::temp_dir().join(format!("kerind-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.toml");
    std::fs::write(&broken, "schema = \"kerind-scenario/1\"\nname = [\n").unwrap();
    let out = kerind(&["--scenario", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn task_errors_exit_one() {
    // a lattice command on a ring scenario fails as a task, not as input
    let path = fixture("dual-f3-sign.toml");
    let out = kerind(&["--scenario", path.to_str().unwrap(), "--command", "pic"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("ERROR"));
}
