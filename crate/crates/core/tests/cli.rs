use std::process::{Command, Output};

fn nichols(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nichols"))
        .args(args)
        .env("NICHOLS_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(&["classify", "--p", "5", "--a", "0", "--b", "0", "--t", "2"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""result":{"kind":"L","r":2,"nu":1}"#), "{}", stdout(&o));
}

#[test]
fn fusion_example_and_shape() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(&["fusion", "--p", "2", "--format", "json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#"{"r1":2,"nu1":0,"r2":2,"nu2":0,"summands":[{"kind":"P","r":1,"nu":0}]}"#));
    let o = nichols(&["fusion", "--p", "3", "--nu-mod", "2", "--format", "csv"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    // header plus a 6 x 6 table
    assert_eq!(stdout(&o).lines().count(), 1 + 36);
    assert!(stdout(&o).lines().all(|l| !l.contains("_2") && !l.contains("_3")));
}

#[test]
fn decompose_example() {
    let dir = tempfile::tempdir().unwrap();
    let o = nichols(&["decompose", "--p", "5", "--vertices", "2", "--format", "csv"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(String::from).collect();
    let want = ["S,5,25", "V,1,8", "V,2,12", "V,3,12", "V,4,8", "P,1,16", "P,2,9", "P,3,4", "P,4,1"];
    assert_eq!(rows, want);
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["fusion", "--p", "13"][..],
        &["fusion"],
        &["fusion", "--p", "1"],
        &["classify", "--p", "5", "--b", "1"],
        &["classify", "--p", "5", "--a", "0", "--b", "0", "--t", "7"],
        &["fusion", "--p", "3", "--nu-mod", "3"],
        &["frobnicate", "--p", "3"],
        &["verify", "--p", "3", "--suite", "nope"],
    ] {
        assert_eq!(nichols(args, dir.path()).status.code(), Some(1), "{args:?}");
    }
    // the cap is 12 by default and can be raised
    let o = nichols(&["classify", "--p", "12", "--a", "0", "--b", "0", "--t", "0"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let o = nichols(&["classify", "--p", "13", "--max-p", "13", "--a", "0"], dir.path());
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn cache_round_trip_and_invalidation() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["loop", "--p", "2"];
    let first = nichols(&args, dir.path());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    let cached = std::fs::read_to_string(&files[0]).unwrap();
    assert!(cached.contains(r#""schema":"nichols-cli/1""#));
    let second = nichols(&args, dir.path());
    assert_eq!(first.stdout, second.stdout);
    // a stale schema is ignored and rewritten
    std::fs::write(&files[0], cached.replace("nichols-cli/1", "nichols-cli/0")).unwrap();
    let third = nichols(&args, dir.path());
    assert_eq!(first.stdout, third.stdout);
    assert!(std::fs::read_to_string(&files[0]).unwrap().contains("nichols-cli/1"));
    // garbage is ignored too
    std::fs::write(&files[0], "not json").unwrap();
    assert_eq!(nichols(&args, dir.path()).stdout, first.stdout);
}

#[test]
fn formats_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.txt");
    let o = nichols(&["verify", "--p", "2", "--suite", "ring", "--format", "pretty", "-o", out.to_str().unwrap()], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("PASS ring p=2"));
    assert!(text.trim_end().ends_with("all checks passed"));
    let o = nichols(&["loop", "--p", "3", "--format", "csv"], dir.path());
    let text = stdout(&o);
    assert!(text.starts_with("quantity,y,z,zeta_coeffs,approx_re,approx_im\n"));
    assert!(text.lines().any(|l| l.starts_with("mu,P[1]_0,X(2)_0,")));
}

#[test]
fn repeated_runs_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["fusion", "--p", "3", "--no-cache"][..], &["classify", "--p", "4", "--no-cache", "--format", "csv"]] {
        assert_eq!(nichols(args, dir.path()).stdout, nichols(args, dir.path()).stdout);
    }
}
