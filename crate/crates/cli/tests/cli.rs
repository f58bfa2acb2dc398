use std::process::{Command, Output};

fn reglab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reglab")).args(args).output().expect("spawn reglab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn monomial_regularity_of_a_complete_intersection() {
    let o = reglab(&["reg", "--mono", "x^3,y^3", "--char", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "5");
    let o = reglab(&["--json", "reg", "--mono", "x^2,y^4,z"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reg"], 5);
}

#[test]
fn delta_of_the_lattice_point_family() {
    let o = reglab(&["delta", "--family", "mprimary-counter", "--N", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(&format!("per-n delta: {}", ["5"; 12].join(" "))), "{text}");
    assert!(text.contains("inf delta (n <= 12): 5"));
    assert!(text.contains("extrapolated delta: 3"));
}

#[test]
fn verify_emits_a_passing_json_report() {
    let o = reglab(&["--json", "paper", "verify", "--thm", "gb2powers", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["preset"], "gb2powers");
    assert_eq!(v["artifacts"]["witness"], "x^8*y^17*a^7*b^7");
    assert!(v["assertions"].as_array().unwrap().iter().all(|a| a["verdict"] != "fail"));
    assert!(v["content_hash"].is_string());
}

#[test]
fn exit_codes() {
    assert_eq!(reglab(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(reglab(&["paper", "verify", "--thm", "gb2powers", "--n", "7"]).status.code(), Some(2));
    assert_eq!(reglab(&["paper", "verify", "--thm", "no-such", "--n", "8"]).status.code(), Some(2));
    assert_eq!(reglab(&["gb", "x^2 +* y"]).status.code(), Some(2));
    let o = reglab(&["gb", "x^3, y^3, x*y*a + x^2*b + y^2*b", "--char", "2", "--budget-degree", "4"]);
    assert_eq!(o.status.code(), Some(3));
    // x^3 is not in the socle of (x^3, y^3): it lies in the ideal.
    assert_eq!(reglab(&["socle", "x^3, y^3", "--witness", "x^3"]).status.code(), Some(1));
}

#[test]
fn ideal_operations() {
    let o = reglab(&["gb", "x^2 - y, x*y - 1"]);
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["x^2 - y", "x*y - 1", "y^2 - x"]);
    assert_eq!(stdout(&reglab(&["nf", "x^3", "--ideal", "x^2 - y, x*y - 1"])).trim(), "1");
    assert_eq!(stdout(&reglab(&["colon", "x^2, x*y", "--var", "y"])).trim(), "x");
    assert_eq!(stdout(&reglab(&["intersect", "x", "y"])).trim(), "x*y");
    assert_eq!(stdout(&reglab(&["socle", "x^3, y^3", "--witness", "x^2*y^2"])).trim(), "witness: pass");
    assert_eq!(stdout(&reglab(&["socle", "x^3, y^3"])).trim(), "top socle degree: 4");
    assert!(stdout(&reglab(&["np", "x^5, x^3*y, y^4"])).contains("delta: 5"));
    let o = reglab(&["reg-bracket", "x^3, y^3, x*y*a + x^2*b + y^2*b", "--char", "2"]);
    assert!(stdout(&o).starts_with("[5, 5]"), "{}", stdout(&o));
}

#[test]
fn symbolic_and_char0_runs() {
    let o = reglab(&["--json", "paper", "symbolic", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["artifacts"]["reg_symbolic_power"]["lower"], 11);
    let o = reglab(&["paper", "conj-char0", "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("EVIDENCE"));
}

#[test]
fn family_subcommands_and_cache() {
    let o = reglab(&["family", "check-graded", "--family", "mprimary-counter", "--N", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = reglab(&["--json", "family", "report", "--family", "q-powers", "--N", "3", "--char", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["records"][2]["reg"], 11);
    let o = reglab(&["family", "stabilize", "--family", "q-powers", "--N", "4"]);
    assert!(stdout(&o).contains("stabilizes at c = 1"), "{}", stdout(&o));

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    reglab(&["gb", "x^2 - y, x*y - 1", "--cache-dir", d]);
    let o = reglab(&["--json", "cache", "ls", "--cache-dir", d]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["elements"], 3);
    assert!(stdout(&reglab(&["cache", "clear", "--cache-dir", d])).contains("removed 1"));
}
