use std::process::{Command, Output};

fn dcp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dcp"))
        .args(args)
        .env_remove("DCP_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn series_bfile() {
    let o = dcp(&["dcp-series", "--max-perimeter", "12", "--format", "bfile"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "4 1\n6 2\n8 7\n10 28\n12 122\n");
    let o = dcp(&["dcp-series", "--max-perimeter", "4", "--format", "bfile"]);
    assert_eq!(stdout(&o), "4 1\n");
}

#[test]
fn bad_perimeters_are_usage_errors() {
    for args in [
        &["dcp-series", "--max-perimeter", "7"][..],
        &["dcp-series", "--max-perimeter", "2"],
        &["brute", "--max-perimeter", "9"],
        &["ratios", "--max-perimeter", "12"],
        &["verify", "--suite", "nope"],
        &[
            "dcp-series",
            "--max-perimeter",
            "8",
            "--by",
            "noses",
            "--format",
            "bfile",
        ],
    ] {
        let o = dcp(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn out_file_is_written_whole() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dc.txt");
    let o = dcp(&[
        "dcp-series",
        "--max-perimeter",
        "20",
        "--format",
        "bfile",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with("20 62128\n"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn failed_run_leaves_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("never.txt");
    let o = dcp(&[
        "dcp-series",
        "--max-perimeter",
        "9",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn refined_series_tables() {
    let o = dcp(&[
        "dcp-series",
        "--max-perimeter",
        "8",
        "--by",
        "diagonals",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("key,count\n4:1,1\n6:2,2\n"));
    let o = dcp(&[
        "dcp-series",
        "--max-perimeter",
        "8",
        "--by",
        "noses",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["8"]["two"], serde_json::json!(1));
    assert_eq!(v["4"]["single"], serde_json::json!(1));
}

#[test]
fn brute_totals() {
    let o = dcp(&["brute", "--max-perimeter", "8", "--format", "bfile"]);
    assert_eq!(stdout(&o), "4 1\n6 2\n8 7\n");
    let o = dcp(&["brute", "--max-perimeter", "20", "--format", "csv"]);
    assert!(stdout(&o).ends_with("20,62128\n"));
}

#[test]
fn brute_output_ignores_thread_count() {
    let args = |t: &'static str| {
        [
            "brute",
            "--max-perimeter",
            "16",
            "--classify",
            "--format",
            "csv",
            "--threads",
            t,
        ]
    };
    let one = dcp(&args("1"));
    let eight = dcp(&args("8"));
    assert!(one.status.success());
    assert_eq!(one.stdout, eight.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_dcp"))
        .args([
            "brute",
            "--max-perimeter",
            "16",
            "--classify",
            "--format",
            "csv",
        ])
        .env("DCP_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
}

#[test]
fn brute_and_series_agree() {
    let brute = dcp(&["brute", "--max-perimeter", "14", "--format", "json"]);
    let series = dcp(&["dcp-series", "--max-perimeter", "14", "--format", "json"]);
    assert_eq!(brute.stdout, series.stdout);
}

#[test]
fn shape_dump() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shapes.txt");
    let o = dcp(&[
        "brute",
        "--max-perimeter",
        "8",
        "--dump",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().any(|l| l == "0:0-0"));
}

#[test]
fn ratios() {
    let o = dcp(&["ratios", "--max-perimeter", "40", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row = |n: u32| {
        text.lines()
            .find(|l| l.starts_with(&format!("{n},")))
            .unwrap()
            .rsplit(',')
            .next()
            .unwrap()
            .to_string()
    };
    for n in (4..=12).step_by(2) {
        assert_eq!(row(n), "1.0000");
    }
    assert_eq!(row(14), "1.0036");
    assert_eq!(row(40), "1.1212");
    assert!(text.starts_with("n,cc,dc,ra\n"));
}

#[test]
fn verify_suites() {
    for args in [
        &["verify", "--suite", "kernel", "--order", "30"][..],
        &["verify", "--suite", "directed"],
        &["verify", "--suite", "oracle", "--order", "16"],
        &["verify", "--suite", "relation8", "--order", "20"],
        &[
            "verify",
            "--suite",
            "columnconvex",
            "--order",
            "20",
            "--d-samples",
            "1",
        ],
    ] {
        let o = dcp(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
        let text = stdout(&o);
        assert!(text.contains("PASS"));
        assert!(!text.contains("FAIL"));
    }
}

#[test]
fn verify_rejects_bad_samples() {
    let o = dcp(&["verify", "--suite", "kernel", "--d-samples", "1,two"]);
    assert_eq!(o.status.code(), Some(2));
    let o = dcp(&["verify", "--suite", "oracle", "--order", "15"]);
    assert_eq!(o.status.code(), Some(2));
}
