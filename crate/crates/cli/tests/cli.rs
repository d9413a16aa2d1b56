use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn rotary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rotary"))
        .args(args)
        .env_remove("ROTARY_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

#[test]
fn classify_json_counts() {
    let o = rotary(&["classify", "--q", "8", "--t", "2", "--format", "json"]);
    assert!(o.status.success());
    let records: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records.as_array().unwrap().len(), 4);
    assert_eq!(records[0]["type"]["n"], 14);
}

#[test]
fn classify_empty_cases_exit_zero() {
    for (q, t) in [("6", "1"), ("5", "2")] {
        let o = rotary(&["classify", "--q", q, "--t", t]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), "[]");
    }
}

#[test]
fn classify_csv_and_markdown() {
    let csv = stdout(&rotary(&["classify", "--q", "5", "--t", "3", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 3);
    assert!(csv.starts_with("q,t,poly,variant,ell,a,b,c,m,n,genus,chiral,self_dual,balanced_cayley,wilson_orbit\n"));
    let md = stdout(&rotary(&["classify", "--q", "5", "--t", "3", "--format", "md"]));
    assert_eq!(md.lines().count(), 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["classify", "--q", "9", "--t", "3", "--format", "json"];
    assert_eq!(rotary(&args).stdout, rotary(&args).stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(rotary(&["classify", "--q", "3"]).status.code(), Some(2));
    assert_eq!(rotary(&["classify", "--q", "1", "--t", "1"]).status.code(), Some(2));
    assert_eq!(rotary(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_passes() {
    let o = rotary(&["verify", "--q", "9", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = rotary(&["verify", "--q", "4", "--t", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("G'=Q_8"));
    let o = rotary(&["verify", "--q", "10", "--t", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not a prime power"));
}

#[test]
fn census_check() {
    for (r, t, count) in [("2", "8", 4), ("3", "2", 0), ("5", "1", 2)] {
        let o = rotary(&["census", "--r", r, "--t", t, "--check"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains(&format!("count={count}")));
    }
}

#[test]
fn census_limits_exit_three() {
    let o = rotary(&["census", "--r", "4", "--t", "2", "--max-leaves", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let o = rotary(&["census", "--r", "9", "--t", "9"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn census_representatives_parse() {
    let o = rotary(&["census", "--r", "3", "--t", "3", "--show", "--jobs", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let body = text.split_once('\n').unwrap().1;
    let rs: rotary::oracle::RotationSystem = body.trim().parse().unwrap();
    assert_eq!(rs.darts(), 18);
}

#[test]
fn wilson_orbits() {
    let o = rotary(&["wilson", "--q", "4", "--t", "4"]);
    assert!(stdout(&o).starts_with("4 maps in 3 orbits"));
    let o = rotary(&["wilson", "--q", "4", "--t", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["orbits"].as_array().unwrap().len(), 3);
}

#[test]
fn polys() {
    let o = rotary(&["polys", "--p", "2", "--k", "4"]);
    assert_eq!(stdout(&o).lines().count(), 2);
    assert_eq!(rotary(&["polys", "--p", "4", "--k", "1"]).status.code(), Some(1));
}

#[test]
fn presentation_then_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let o = rotary(&["presentation", "--q", "7", "--t", "3"]);
    fs::write(&path, &o.stdout).unwrap();
    let o = rotary(&["order", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("order 126\n"));

    fs::write(&path, "x y x^-1 y^-1\n").unwrap();
    let o = rotary(&["order", path.to_str().unwrap(), "--limit", "500"]);
    assert_eq!(o.status.code(), Some(3));

    fs::write(&path, "x^2\nz\n").unwrap();
    assert_eq!(rotary(&["order", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn presentation_index_out_of_range() {
    assert_eq!(rotary(&["presentation", "--q", "5", "--t", "1", "--index", "9"]).status.code(), Some(1));
    let o = rotary(&["presentation", "--q", "5", "--t", "1", "--list"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

/// The q ≤ 16, t ≤ 6 atlas is committed; set `ROTARY_BLESS=1` after an
/// intended change to rewrite it.
#[test]
fn atlas_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let o = rotary(&["atlas", "--q-max", "16", "--t-max", "6", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for name in ["atlas.csv", "atlas.md", "tables.txt"] {
        let produced = fs::read_to_string(dir.path().join(name)).unwrap();
        let path = golden(&format!("q16_t6_{name}"));
        if std::env::var_os("ROTARY_BLESS").is_some() {
            fs::write(&path, &produced).unwrap();
        }
        let expected = fs::read_to_string(&path).unwrap();
        assert_eq!(produced, expected, "{name} differs from {}", path.display());
    }
}
