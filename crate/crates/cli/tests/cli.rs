use std::process::{Command, Output};

fn zetabound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetabound"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .skip(2)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn eval_reports_modulus() {
    let out = zetabound(&["eval", "--t", "1", "--r", "1e-8", "--format", "csv"]);
    assert!(out.status.success());
    let row = &csv_rows(&stdout(&out))[0];
    let modulus: f64 = row[3].parse().unwrap();
    assert!((modulus - 1.094_511_885_6).abs() < 1e-8);

    let out = zetabound(&["eval", "--t", "17.7477", "--r", "1e-8", "--format", "csv"]);
    let ratio: f64 = csv_rows(&stdout(&out))[0][6].parse().unwrap();
    assert_eq!(format!("{ratio:.4}"), "0.6443");
}

#[test]
fn eval_rejects_zero_radius() {
    assert_eq!(
        zetabound(&["eval", "--t", "1", "--r", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn table1_default_matches_reference_rows() {
    let text = stdout(&zetabound(&["table1"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 23);
    assert!(lines[2]
        .split_whitespace()
        .eq(["1e6", "0.1796", "0.7421", "1.0295"]));
    assert!(lines[22]
        .split_whitespace()
        .eq(["1e300", "0.2116", "0.5046", "1.2456"]));
}

#[test]
fn table1_rejects_small_t0() {
    let out = zetabound(&["table1", "--t0", "1000"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1000"));
}

#[test]
fn table2_and_table3_rows() {
    let text = stdout(&zetabound(&["table2", "--t0", "1e1", "--t0", "1e9"]));
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .split_whitespace()
        .eq(["1e1", "2.4868"]));
    assert!(text
        .lines()
        .nth(2)
        .unwrap()
        .split_whitespace()
        .eq(["1e9", "0.6584"]));
    let text = stdout(&zetabound(&["table3", "--t0", "1e15"]));
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .split_whitespace()
        .eq(["1e15", "0.5912", "0.5192"]));
}

#[test]
fn machine_and_table_modes_agree() {
    let table = stdout(&zetabound(&["table1"]));
    let csv = stdout(&zetabound(&["table1", "--format", "csv"]));
    for (t_line, row) in table.lines().skip(1).zip(csv_rows(&csv)) {
        let rounded: Vec<String> = row[1..]
            .iter()
            .map(|x| format!("{:.4}", x.parse::<f64>().unwrap()))
            .collect();
        let shown: Vec<&str> = t_line.split_whitespace().skip(1).collect();
        assert_eq!(shown, rounded);
    }
}

#[test]
fn json_output_parses() {
    let text = stdout(&zetabound(&["table2", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "table2");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert_eq!(format!("{:.4}", rows[5]["C"].as_f64().unwrap()), "0.6633");
}

#[test]
fn scan_exit_status_follows_bound() {
    let out = zetabound(&[
        "scan",
        "--lo",
        "2.72",
        "--hi",
        "100",
        "--bound",
        "vlog:0.6443",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&stdout(&out));
    let (t, margin) = rows
        .iter()
        .map(|r| (r[0].parse::<f64>().unwrap(), r[4].parse::<f64>().unwrap()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    assert!((0.0..1e-3).contains(&margin) && (t - 17.75).abs() < 0.05);

    let out = zetabound(&[
        "scan",
        "--lo",
        "2.72",
        "--hi",
        "2000",
        "--bound",
        "affine:0.5,0.6633",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = zetabound(&["scan", "--lo", "2.72", "--hi", "100", "--bound", "vlog:0.5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_budget_is_a_resource_error() {
    let out = zetabound(&["scan", "--lo", "2.72", "--hi", "100", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn scan_rejects_bad_bound_spec() {
    let out = zetabound(&["scan", "--lo", "2.72", "--hi", "3", "--bound", "cubic:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn figure_datasets() {
    let rows = csv_rows(&stdout(&zetabound(&["figures", "c0"])));
    assert_eq!(rows.len(), 1001);
    let last = rows.last().unwrap();
    assert_eq!(last[0].parse::<f64>().unwrap(), 1.0);
    assert!((last[1].parse::<f64>().unwrap() - 0.5).abs() < 1e-12);

    let rows = csv_rows(&stdout(&zetabound(&["figures", "c1-sigma1"])));
    assert_eq!(
        format!("{:.4}", rows.last().unwrap()[1].parse::<f64>().unwrap()),
        "0.0932"
    );

    let rows = csv_rows(&stdout(&zetabound(&["figures", "ratio", "--hi", "20"])));
    assert!(rows
        .windows(2)
        .all(|w| w[0][0].parse::<f64>().unwrap() < w[1][0].parse::<f64>().unwrap()));

    assert_eq!(zetabound(&["figures", "nope"]).status.code(), Some(2));
}

#[test]
fn constants_listing() {
    let text = stdout(&zetabound(&["constants"]));
    let find = |name: &str| {
        text.lines()
            .find(|l| l.split_whitespace().next() == Some(name))
            .and_then(|l| l.split_whitespace().nth(1))
            .unwrap()
            .to_string()
    };
    assert_eq!(find("lambda1"), "4.9443");
    assert_eq!(find("gamma_minus_half_log_2pi"), "-0.3417");
    assert_eq!(find("b0"), "0.5000");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("zetabound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t2.csv");
    let out = zetabound(&["table2", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("# {"));
    std::fs::remove_dir_all(&dir).unwrap();
}
