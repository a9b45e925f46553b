use std::path::PathBuf;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_uq21");

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).env_remove("QU21_PRECISION").output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against a stored file; `UPDATE_GOLDEN=1` rewrites it.
fn check_golden(name: &str, args: &[&str]) {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out, want, "output of {args:?} drifted from {name}");
}

fn json_rows(text: &str) -> Vec<serde_json::Map<String, serde_json::Value>> {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["rows"].as_array().unwrap().iter().map(|r| r.as_object().unwrap().clone()).collect()
}

fn qn(n: i64, q: f64) -> f64 {
    (q.powi(n as i32) - q.powi(-n as i32)) / (q - 1.0 / q)
}

fn half(s: &str) -> f64 {
    match s.split_once('/') {
        Some((a, b)) => a.parse::<f64>().unwrap() / b.parse::<f64>().unwrap(),
        None => s.parse().unwrap(),
    }
}

#[test]
fn golden_basis_csv() {
    check_golden("basis_u_lmax1.csv", &["basis", "--sig", "4,2,-2", "--basis", "u", "--lmax", "1", "--format", "csv"]);
}

#[test]
fn golden_matrix_json() {
    check_golden(
        "matrix_a23_t.json",
        &["matrix", "--gen", "A23", "--basis", "t", "--smax", "1", "--depth", "1", "--precision", "20"],
    );
}

#[test]
fn golden_racah_json() {
    check_golden("racah.json", &["racah", "--args", "1,1,1,1,1,1", "--q", "3/2"]);
}

#[test]
fn golden_verify_csv() {
    check_golden(
        "verify_small.csv",
        &["verify", "--sig", "3,1,-1", "--q", "9/10", "--lmax", "2", "--smax", "2", "--depth", "2", "--format", "csv"],
    );
}

#[test]
fn a23_rows_are_su11_ladder_values() {
    let (code, out, _) = run(&["matrix", "--gen", "A23", "--basis", "t", "--smax", "2", "--depth", "2"]);
    assert_eq!(code, 0);
    let rows = json_rows(&out);
    assert!(!rows.is_empty());
    for r in rows {
        let t = half(r["src_T"].as_str().unwrap());
        let m = half(r["src_M"].as_str().unwrap());
        let want = (qn((m - t) as i64, 1.3) * qn((t + m + 1.0) as i64, 1.3)).sqrt();
        let got: f64 = r["value"].as_str().unwrap().parse().unwrap();
        assert!((got - want).abs() < 1e-12, "{r:?}");
        assert_eq!(r["src_M"].as_str().map(half).unwrap() + 1.0, half(r["dst_M"].as_str().unwrap()));
    }
}

#[test]
fn json_and_csv_carry_identical_values() {
    for cmd in [
        vec!["basis", "--basis", "t", "--smax", "2", "--depth", "2"],
        vec!["matrix", "--gen", "A13", "--lmax", "2"],
        vec!["weyl", "--lmax", "2", "--smax", "2", "--depth", "2", "--via-racah"],
    ] {
        let (_, json, _) = run(&[cmd.as_slice(), &["--format", "json"]].concat());
        let (_, csv_text, _) = run(&[cmd.as_slice(), &["--format", "csv"]].concat());
        let mut rdr = csv::Reader::from_reader(csv_text.as_bytes());
        let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
        let rows = json_rows(&json);
        let records: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), records.len(), "{cmd:?}");
        for (j, c) in rows.iter().zip(&records) {
            let keys: Vec<&String> = j.keys().collect();
            assert_eq!(keys.len(), header.len());
            for (h, cell) in header.iter().zip(c.iter()) {
                assert_eq!(j[h].as_str().unwrap(), cell, "{cmd:?} column {h}");
            }
        }
    }
}

#[test]
fn basis_row_count() {
    let (code, out, _) = run(&["basis", "--sig", "4,2,-2", "--basis", "u", "--lmax", "1", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count() - 1, 15);
}

#[test]
fn invalid_signature_exits_with_config_error() {
    let (code, out, err) = run(&["basis", "--sig", "2,0,2"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("f1 - f3 >= 1"), "{err}");
}

#[test]
fn bad_generator_and_empty_weight_exit_2() {
    assert_eq!(run(&["matrix", "--gen", "A4"]).0, 2);
    assert_eq!(run(&["weyl", "--weight", "0,0,0"]).0, 2);
    assert_eq!(run(&["racah", "--args", "1,2"]).0, 2);
    assert_eq!(run(&["basis", "--q", "-1/2"]).0, 2);
    assert_eq!(run(&["basis", "--format", "xml"]).0, 2);
}

#[test]
fn verify_passes_and_is_byte_identical() {
    let args = ["verify", "--sig", "5,2,-1", "--q", "1/2", "--format", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.0, 0, "{}", a.1);
    assert_eq!(a, b);
}

#[test]
fn corrupted_table_sign_is_reported() {
    let (code, out, err) = run(&["verify", "--inject-fault", "t.A31(p+1)", "--lmax", "3", "--smax", "3", "--depth", "3"]);
    assert_eq!(code, 1, "{err}");
    let rows = json_rows(&out);
    let w = rows.iter().find(|r| r["check"].as_str().unwrap().starts_with("W^T")).unwrap();
    assert_eq!(w["status"], "FAIL");
    assert!(w["location"].as_str().unwrap().contains("t.A31(p+1)"), "{w:?}");
    assert!(err.contains("checks failed"));
}

#[test]
fn unknown_fault_entry_is_a_config_error() {
    assert_eq!(run(&["verify", "--inject-fault", "t.A99"]).0, 2);
}

#[test]
fn via_racah_differences_are_small() {
    let (code, out, _) = run(&["weyl", "--sig", "5,2,-1", "--q", "2", "--via-racah"]);
    assert_eq!(code, 0);
    for r in json_rows(&out) {
        let d: f64 = r["difference"].as_str().unwrap().parse().unwrap();
        assert!(d < 1e-10, "{r:?}");
    }
}

#[test]
fn precision_from_environment() {
    let out = Command::new(BIN)
        .args(["racah", "--args", "1,1,1,1,1,1", "--q", "1.5", "--format", "csv"])
        .env("QU21_PRECISION", "12")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let value = text.lines().nth(1).unwrap().rsplit(',').next().unwrap();
    let digits = value.trim_start_matches('-').chars().filter(|c| c.is_ascii_digit()).count();
    assert!(digits <= 14, "{value}");
    let explicit = run(&["racah", "--args", "1,1,1,1,1,1", "--q", "1.5", "--format", "csv", "--precision", "12"]);
    assert_eq!(explicit.1, text);
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.csv");
    let (code, out, _) = run(&["basis", "--lmax", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap().lines().count(), 16);
}

#[test]
fn extra_relations_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rel.txt");
    std::fs::write(&path, "# diagonal generators commute\nA11 A33: A11*A33 - A33*A11\nbroken: A12*A21 - A21*A12\n").unwrap();
    let (code, out, _) = run(&["verify", "--lmax", "2", "--smax", "2", "--depth", "2", "--relations", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let rows = json_rows(&out);
    let status = |name: &str| rows.iter().filter(|r| r["check"].as_str().unwrap().starts_with(name)).map(|r| r["status"].as_str().unwrap().to_string()).collect::<Vec<_>>();
    assert!(status("A11 A33").iter().all(|s| s == "PASS"));
    assert!(status("broken").iter().all(|s| s == "FAIL"));
}
