use std::process::{Command, Output};

fn berger(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_berger"))
        .args(args)
        .env_remove("BERGER_PRECISION")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn records(text: &str) -> Vec<Vec<String>> {
    text.split("\r\n")
        .filter(|l| !l.is_empty())
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

#[test]
fn spectrum_of_round_s3() {
    let out = stdout(&berger(&["spectrum", "--family", "u", "--n", "1", "--t", "1", "--cutoff", "9"]));
    let rows = records(&out);
    assert_eq!(rows[0], ["t", "k", "j", "value", "status", "multiplicity"]);
    let mut values: Vec<f64> = rows[1..].iter().map(|r| r[3].parse().unwrap()).collect();
    values.dedup();
    assert_eq!(values, [0.0, 3.0, 8.0]);
}

#[test]
fn spectrum_contains_base_branch() {
    let out = stdout(&berger(&[
        "spectrum", "--family", "sp", "--n", "1", "--t", "0.3", "--cutoff", "20",
    ]));
    let row = records(&out)
        .into_iter()
        .find(|r| r[1] == "2" && r[2] == "0")
        .expect("branch (2,0)");
    assert_eq!(row[3].parse::<f64>().unwrap(), 16.0);
    assert_eq!(row[4], "certain");
    assert_eq!(row[5], "5");
}

#[test]
fn spin9_rejects_n() {
    let out = berger(&["spectrum", "--family", "spin9", "--n", "1", "--t", "1", "--cutoff", "9"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("spin9 takes no n"));
}

#[test]
fn exactly_one_scale() {
    let both = berger(&["lambda1", "--family", "u", "--n", "1", "--t", "1", "--t-range", "0.5:1:0.1"]);
    assert!(!both.status.success());
    let neither = berger(&["lambda1", "--family", "u", "--n", "1"]);
    assert!(!neither.status.success());
}

#[test]
fn bad_inputs_fail_cleanly() {
    for args in [
        &["lambda1", "--family", "u", "--n", "1", "--t", "0"][..],
        &["lambda1", "--family", "u", "--n", "1", "--t", "-1"],
        &["lambda1", "--family", "sp", "--t", "1"],
        &["degeneracies", "--family", "sp", "--n", "1", "--precision", "0"],
        &["diagram", "--family", "sp", "--n", "1", "--t-range", "1:0.5:0.1"],
    ] {
        let out = berger(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn degeneracy_table() {
    let rows = records(&stdout(&berger(&["degeneracies", "--family", "sp", "--n", "1", "--qmax", "2"])));
    let ts: Vec<f64> = rows[1..].iter().map(|r| r[1].parse().unwrap()).collect();
    assert_eq!(ts[0], 1.0);
    assert!((ts[1] - 0.348311).abs() < 1e-6);
    assert!((ts[2] - 0.176604).abs() < 1e-6);
    assert_eq!(rows[2][4], "-2+3/2√2");
}

#[test]
fn morse_and_lambda1() {
    let rows = records(&stdout(&berger(&["morse", "--family", "sp", "--n", "1", "--t", "0.3"])));
    assert_eq!(rows[1][1], "5");
    let rows = records(&stdout(&berger(&["lambda1", "--family", "spin9", "--t", "1"])));
    assert_eq!(rows[1][1].parse::<f64>().unwrap(), 15.0);
    assert_eq!(rows[1][2], "?");
}

#[test]
fn morse_profile_without_t() {
    let rows = records(&stdout(&berger(&["morse", "--family", "spin9", "--qmax", "2"])));
    let idx: Vec<&str> = rows[1..].iter().map(|r| r[4].as_str()).collect();
    assert_eq!(idx, ["0", "9", "53"]);
    assert_eq!(rows[1][3], "inf");
}

#[test]
fn classification_rows() {
    let rows = records(&stdout(&berger(&[
        "classify", "--family", "u", "--n", "3", "--t-range", "0.7:1:0.3",
    ])));
    assert_eq!(rows[1][1], "locally_rigid");
    assert_eq!(rows[2][1], "trivial_bifurcation");
    let rows = records(&stdout(&berger(&[
        "classify", "--family", "sp", "--n", "1", "--t", "0.3483107", "--tolerance", "1e-6",
    ])));
    assert_eq!(rows[1][1..], ["bifurcation", "1", "5", "true"]);
}

#[test]
fn diagram_columns_and_block() {
    let text = stdout(&berger(&[
        "diagram", "--family", "spin9", "--t-range", "0.3:1.2:0.1", "--k-limit", "2",
    ]));
    let rows = records(&text);
    assert_eq!(rows[0], ["t", "threshold", "l_0_0", "l_1_1", "l_2_0", "l_2_2"]);
    assert_eq!(rows.len(), 1 + 10 + 3);
    assert_eq!(rows[11], ["#degeneracy", "q", "t"]);
    assert_eq!(rows[12][..2], ["#degeneracy", "0"]);
    assert!((rows[13][2].parse::<f64>().unwrap() - 0.423615).abs() < 1e-6);
}

#[test]
fn output_is_deterministic() {
    let args = ["diagram", "--family", "sp", "--n", "2", "--t-range", "0.1:1:0.05"];
    assert_eq!(stdout(&berger(&args)), stdout(&berger(&args)));
}

#[test]
fn json_is_versioned_and_symbolic() {
    let text = stdout(&berger(&[
        "degeneracies", "--family", "spin9", "--qmax", "1", "--format", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "degeneracies");
    assert_eq!(v["values"][1]["s"]["symbolic"], "-2+1/2√19");
}

#[test]
fn precision_from_env_and_output_file() {
    let path = std::env::temp_dir().join(format!("berger-cli-test-{}.csv", std::process::id()));
    let out = Command::new(env!("CARGO_BIN_EXE_berger"))
        .args(["degeneracies", "--family", "sp", "--n", "1", "--qmax", "1", "--output"])
        .arg(&path)
        .env("BERGER_PRECISION", "1e-8")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let rows = records(&text);
    assert_eq!(rows[2][1], "0.34831070");
}
