//! End-to-end tests of the `braess` binary: exit codes, output formats and
//! determinism.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braess"))
}

fn write_fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("braess-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

const REFERENCE: &str = r#"{"four_node": {"alpha": [2,36,6,40,2], "beta": [30,32,3,8,19]}}"#;
const ZERO_DELAY: &str = r#"{"four_node": {"alpha": [0,15,7.5,15,0], "beta": [0.01,0,0,0,0.01]}}"#;
const TWIN_ROUTE: &str = r#"{"four_node": {"alpha": [1,2,5,1,2], "beta": [3,4,9,3,4]}}"#;

/// Two-link paths for the outer roles, three-link bridge, external traffic
/// on the two BD links.
const GENERALIZED: &str = r#"{
  "nodes": ["a","p","b","q","d","r","c","s","m","n"],
  "links": [
    {"from":"a","to":"p","alpha":1,"beta":1,"role":"AB"},
    {"from":"p","to":"b","alpha":1,"beta":1,"role":"AB"},
    {"from":"b","to":"q","alpha":1,"beta":1,"external_flow":2,"role":"BD"},
    {"from":"q","to":"d","alpha":1,"beta":1,"external_flow":2,"role":"BD"},
    {"from":"a","to":"r","alpha":1,"beta":1,"role":"AC"},
    {"from":"r","to":"c","alpha":1,"beta":1,"role":"AC"},
    {"from":"c","to":"s","alpha":1,"beta":1,"role":"CD"},
    {"from":"s","to":"d","alpha":1,"beta":1,"role":"CD"},
    {"from":"b","to":"m","alpha":1,"beta":1,"role":"BC"},
    {"from":"m","to":"n","alpha":1,"beta":1,"role":"BC"},
    {"from":"n","to":"c","alpha":1,"beta":1,"role":"BC"}
  ],
  "origin": "a",
  "destination": "d"
}"#;

#[test]
fn reduce_echoes_a_four_node_document() {
    let path = write_fixture("ref.json", REFERENCE);
    let out = bin().arg("reduce").arg(&path).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["alpha"], serde_json::json!([2.0, 36.0, 6.0, 40.0, 2.0]));
    assert_eq!(v["beta"], serde_json::json!([30.0, 32.0, 3.0, 8.0, 19.0]));
    assert_eq!(v["has_bc"], serde_json::json!(true));
}

#[test]
fn reduce_contracts_a_generalized_network() {
    let path = write_fixture("general.json", GENERALIZED);
    let out = bin().arg("reduce").arg(&path).output().unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    // BD links each absorb beta * external = 2 into their free-flow time.
    assert_eq!(v["alpha"], serde_json::json!([2.0, 6.0, 3.0, 2.0, 2.0]));
    assert_eq!(v["beta"], serde_json::json!([2.0, 2.0, 3.0, 2.0, 2.0]));
}

#[test]
fn reduce_reports_missing_role_with_topology_exit_code() {
    let doc = GENERALIZED.replace(r#""role":"CD""#, r#""role":"AC""#);
    let path = write_fixture("missing-cd.json", &doc);
    let out = bin().arg("reduce").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_str(&out).contains("CD"),
        "stderr: {}",
        stderr_str(&out)
    );
}

#[test]
fn malformed_json_exits_one() {
    let path = write_fixture("broken.json", "{ not json");
    let out = bin().arg("paradox").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_role_exits_one() {
    let doc = GENERALIZED.replace(r#""role":"BC""#, r#""role":"XY""#);
    let path = write_fixture("bad-role.json", &doc);
    let out = bin().arg("reduce").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_str(&out).contains("XY"));
}

#[test]
fn paradox_prints_rounded_region() {
    let path = write_fixture("ref-paradox.json", REFERENCE);
    let out = bin().arg("paradox").arg(&path).output().unwrap();
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("paradox region: (0.93, 8.59)"), "{text}");
    assert!(text.contains("[8.59, inf)"), "{text}");
    assert!(text.contains("(0.93, 0.97]"), "{text}");
    assert!(text.contains("(0.97, 1.31]"), "{text}");
    assert!(text.contains("(1.31, 8.59)"), "{text}");
}

#[test]
fn paradox_json_round_trips() {
    let path = write_fixture("ref-json.json", REFERENCE);
    let out = bin()
        .arg("paradox")
        .arg("--json")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let first = stdout_str(&out);

    // The emitted JSON is itself a valid input document.
    let mut child = bin()
        .arg("paradox")
        .arg("--json")
        .arg("-")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(first.as_bytes())
        .unwrap();
    let second = child.wait_with_output().unwrap();
    assert!(second.status.success());
    assert_eq!(first, stdout_str(&second));

    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["derived"]["braess"][0], serde_json::json!(314.0));
    let lo = v["paradox_region"][0]["lo"].as_f64().unwrap();
    assert!((lo - 2740.0 / 2954.0).abs() < 1e-12);
}

#[test]
fn zero_delays_require_relaxed_mode() {
    let path = write_fixture("zero-delay.json", ZERO_DELAY);
    let strict = bin().arg("paradox").arg(&path).output().unwrap();
    assert_eq!(strict.status.code(), Some(3));

    let relaxed = bin()
        .arg("paradox")
        .arg("--relaxed")
        .arg(&path)
        .output()
        .unwrap();
    assert!(relaxed.status.success());
    let text = stdout_str(&relaxed);
    assert!(text.contains("paradox region: (500.00, 1500.00)"), "{text}");
}

#[test]
fn twin_route_networks_report_pseudo_paradox_everywhere() {
    let path = write_fixture("twin.json", TWIN_ROUTE);
    let out = bin().arg("paradox").arg(&path).output().unwrap();
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("no paradox for any Q > 0"), "{text}");
    assert!(text.contains("pseudo-paradox for all Q > 0"), "{text}");
}

#[test]
fn eq_reports_both_networks() {
    let path = write_fixture("ref-eq.json", REFERENCE);
    let out = bin()
        .args(["eq", "--Q", "5", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["base"]["case"], serde_json::json!("c"));
    assert_eq!(v["bridged"]["case"], serde_json::json!("g"));
    let t_base = v["base"]["travel_time"].as_f64().unwrap();
    let t_bridged = v["bridged"]["travel_time"].as_f64().unwrap();
    assert!((t_base - (3630.0 + 1674.0 * 5.0) / 89.0).abs() < 1e-9);
    assert!(t_bridged > t_base);
    let g = v["bridged"]["route_flows"]["bridge"].as_f64().unwrap();
    assert!((g - (2696.0 - 314.0 * 5.0) / 2205.0).abs() < 1e-9);
}

#[test]
fn eq_no_bc_flag_drops_the_bridge() {
    let path = write_fixture("ref-eq-nobc.json", REFERENCE);
    let out = bin()
        .args(["eq", "--Q", "5", "--no-bc", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert!(v["bridged"].is_null());
}

#[test]
fn sweep_rows_classify_improvement_paradox_equal() {
    let path = write_fixture("ref-sweep.json", REFERENCE);
    let csv_path = std::env::temp_dir().join(format!("braess-sweep-{}.csv", std::process::id()));
    let out = bin()
        .args([
            "sweep", "--qmin", "0.5", "--qmax", "20", "--steps", "40", "--out",
        ])
        .arg(&csv_path)
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let text = std::fs::read_to_string(&csv_path).unwrap();
    assert!(!text.contains('\r'), "CSV must use plain newlines");
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "Q,T_N,case_N,T_Nplus,case_Nplus,delta,classification"
    );
    assert_eq!(lines.len(), 41);

    let row = |q_prefix: &str| {
        lines
            .iter()
            .find(|l| l.starts_with(q_prefix))
            .unwrap_or_else(|| panic!("no row for {q_prefix}"))
            .split(',')
            .map(str::to_string)
            .collect::<Vec<_>>()
    };
    let first = row("5.00000000e-1");
    assert_eq!(first[2], "c");
    assert_eq!(first[4], "a");
    assert_eq!(first[6], "improvement");

    let mid = row("5.00000000e0");
    let t_n: f64 = mid[1].parse().unwrap();
    let t_np: f64 = mid[3].parse().unwrap();
    assert!((t_n - 134.831).abs() < 1e-2);
    assert!((t_np - 136.633).abs() < 1e-2);
    assert_eq!(mid[6], "paradox");

    let last = row("2.00000000e1");
    assert_eq!(last[5], "0.00000000e0");
    assert_eq!(last[6], "equal");

    // Byte-stable across runs.
    let rerun = bin()
        .args([
            "sweep", "--qmin", "0.5", "--qmax", "20", "--steps", "40", "--out", "-",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(stdout_str(&rerun).as_bytes(), text.as_bytes());
}

#[test]
fn sweep_rejects_bad_ranges() {
    let path = write_fixture("ref-bad-sweep.json", REFERENCE);
    let out = bin()
        .args([
            "sweep", "--qmin", "5", "--qmax", "1", "--steps", "10", "--out", "-",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_requires_a_bridge() {
    let path = write_fixture(
        "nobridge.json",
        r#"{"four_node": {"alpha": [1,2,3,4], "beta": [1,1,1,1]}}"#,
    );
    let out = bin()
        .args([
            "sweep", "--qmin", "1", "--qmax", "2", "--steps", "2", "--out", "-",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_on_reference_network() {
    let path = write_fixture("ref-verify.json", REFERENCE);
    let out = bin()
        .args(["verify", "--samples", "200", "--seed", "7"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let text = stdout_str(&out);
    assert!(text.contains("max relative residual"), "{text}");
    assert!(text.contains("verification passed"), "{text}");
}

#[test]
fn verify_passes_on_a_perturbed_network() {
    let path = write_fixture(
        "perturbed-verify.json",
        r#"{"four_node": {"alpha": [2.13, 35.8, 6.04, 40.45, 1.9], "beta": [29.7, 32.2, 3.11, 8.04, 18.9]}}"#,
    );
    let out = bin()
        .args(["verify", "--samples", "200", "--seed", "11"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    assert!(stdout_str(&out).contains("verification passed"));
}

#[test]
fn verify_fault_injection_trips_failure_exit_code() {
    let path = write_fixture("ref-verify-fault.json", REFERENCE);
    let out = bin()
        .args(["verify", "--samples", "50", "--seed", "7"])
        .arg(&path)
        .env("BRAESS_VERIFY_FAULT", "1e-3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let text = stderr_str(&out);
    assert!(text.contains("disagree"), "{text}");
}

#[test]
fn verify_handles_bridgeless_documents() {
    let path = write_fixture(
        "nobridge-verify.json",
        r#"{"four_node": {"alpha": [2,36,40,2], "beta": [30,32,8,19]}}"#,
    );
    let out = bin()
        .args(["verify", "--samples", "50", "--seed", "3"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    assert!(stdout_str(&out).contains("verification passed"));
}

#[test]
fn braess_log_writes_diagnostics_to_stderr_only() {
    let path = write_fixture("ref-log.json", REFERENCE);
    let quiet = bin().arg("reduce").arg(&path).output().unwrap();
    let chatty = bin()
        .arg("reduce")
        .arg(&path)
        .env("BRAESS_LOG", "info")
        .output()
        .unwrap();
    // stdout is unchanged; diagnostics go to stderr.
    assert_eq!(stdout_str(&quiet), stdout_str(&chatty));
    assert!(stderr_str(&quiet).is_empty());
    assert!(
        stderr_str(&chatty).contains("info:"),
        "{}",
        stderr_str(&chatty)
    );
}

#[test]
fn stdin_dash_reads_the_document() {
    let mut child = bin()
        .arg("paradox")
        .arg("-")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(REFERENCE.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout_str(&out).contains("(0.93, 8.59)"));
}

#[test]
fn reduced_bridgeless_network_round_trips_as_four_entries() {
    let doc = {
        // Strip the bridge path from the generalized fixture.
        let v: serde_json::Value = serde_json::from_str(GENERALIZED).unwrap();
        let mut v = v;
        let links = v["links"].as_array().unwrap().clone();
        v["links"] =
            serde_json::Value::Array(links.into_iter().filter(|l| l["role"] != "BC").collect());
        v.to_string()
    };
    let path = write_fixture("general-nobridge.json", &doc);
    let out = bin().arg("reduce").arg(&path).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["has_bc"], serde_json::json!(false));
    assert_eq!(v["alpha"].as_array().unwrap().len(), 4);

    // The emitted document feeds back into eq as a bridgeless network.
    let reduced = write_fixture(
        "reduced-nobridge.json",
        &format!("{{\"four_node\": {}}}", {
            let mut slim = serde_json::Map::new();
            slim.insert("alpha".into(), v["alpha"].clone());
            slim.insert("beta".into(), v["beta"].clone());
            serde_json::Value::Object(slim)
        }),
    );
    let out = bin()
        .args(["eq", "--Q", "2", "--json"])
        .arg(&reduced)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr_str(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert!(v["bridged"].is_null());
    assert_eq!(v["base"]["case"], serde_json::json!("c"));
}
