use std::process::{Command, Output};

use tracecode::formats::{
    CharSumCaseJson, CharSumSummaryJson, ConstructJson, SumSetJson, VerificationJson,
};

fn tracecode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tracecode"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn reserialize<T: serde::Serialize + serde::de::DeserializeOwned>(line: &str) -> String {
    let v: T = serde_json::from_str(line).unwrap();
    serde_json::to_string(&v).unwrap()
}

#[test]
fn construct_header() {
    let o = tracecode(&["construct", "--family", "1", "--m", "2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n=8 k=4"));
    let rows: Vec<_> = lines.filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.len() == 8));
}

#[test]
fn construct_even_family2_warns() {
    let o = tracecode(&["construct", "--family", "2", "--m", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let doc: ConstructJson = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((doc.n, doc.k), (128, 8));
    assert_eq!(doc.warnings.len(), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["construct", "--family", "5", "--m", "2"][..],
        &["charsums", "--m", "1"],
        &["sumset", "--family", "1", "--m", "2", "--s", "4"],
        &["sumset", "--family", "3", "--m", "3", "--s", "3"],
        &["verify", "--family", "1"],
        &["verify", "--family", "1", "--m", "17"],
        &["bogus"],
        &["verify", "--family", "1", "--m", "3", "--jobs", "0"],
    ] {
        assert_eq!(code(&tracecode(args)), 2, "{args:?}");
    }
}

#[test]
fn resource_guard_exit_3() {
    assert_eq!(
        code(&tracecode(&["verify", "--family", "1", "--m", "9"])),
        3
    );
    assert_eq!(
        code(&tracecode(&["construct", "--family", "1", "--m", "13"])),
        3
    );
    assert_eq!(
        code(&tracecode(&[
            "sumset",
            "--family",
            "1",
            "--m",
            "11",
            "--s",
            "3",
            "--variant",
            "code-column"
        ])),
        3
    );
}

#[test]
fn verify_examples() {
    let o = tracecode(&["verify", "--family", "1", "--m", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("1 + 6x^12 + 47x^16 + 10x^20"));

    let o = tracecode(&["verify", "--family", "2", "--m", "5", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: VerificationJson = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r.enumerator, "1 + 120x^224 + 768x^240 + 135x^256");
    assert_eq!(r.table_match, Some(true));

    let o = tracecode(&["verify", "--family", "3", "--m", "2", "--format", "json"]);
    let r: VerificationJson = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r.griesmer, "almost-optimal");
}

#[test]
fn charsums_examples() {
    let o = tracecode(&["charsums", "--m", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let summaries: Vec<CharSumSummaryJson> = text
        .lines()
        .filter_map(|l| serde_json::from_str(l).ok())
        .filter(|s: &CharSumSummaryJson| s.cases > 0)
        .collect();
    assert_eq!(summaries.len(), 4);
    assert!(summaries.iter().all(|s| s.mismatches == 0 && s.cases == 63));

    let o = tracecode(&["charsums", "--m", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("S3: skipped"));
}

#[test]
fn sumset_examples() {
    for (fam, m, s) in [("1", "2", "3"), ("2", "3", "5")] {
        let o = tracecode(&[
            "sumset", "--family", fam, "--m", m, "--s", s, "--format", "json",
        ]);
        assert_eq!(code(&o), 0);
        let reports: Vec<SumSetJson> = stdout(&o)
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(reports.len(), 4);
        assert!(reports.iter().any(|r| r.is_sum_set));
    }
}

#[test]
fn sumset_exit_1_when_no_configuration_holds() {
    let o = tracecode(&[
        "sumset",
        "--family",
        "1",
        "--m",
        "2",
        "--s",
        "3",
        "--variant",
        "paper-column",
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn sumset_json_keys() {
    let o = tracecode(&[
        "sumset",
        "--family",
        "1",
        "--m",
        "2",
        "--s",
        "3",
        "--variant",
        "code-column",
        "--format",
        "json",
    ]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let mut want = [
        "family",
        "m",
        "s",
        "variant",
        "include_zero",
        "is_sum_set",
        "sigma0",
        "sigma1",
        "count_at_zero",
    ];
    want.sort_unstable();
    assert_eq!(keys, want);
}

#[test]
fn json_round_trips_byte_identical() {
    let o = tracecode(&["verify", "--family", "2", "--m", "4", "--format", "json"]);
    let line = stdout(&o).trim().to_string();
    assert_eq!(reserialize::<VerificationJson>(&line), line);

    let o = tracecode(&["construct", "--family", "3", "--m", "3", "--format", "json"]);
    let line = stdout(&o).trim().to_string();
    assert_eq!(reserialize::<ConstructJson>(&line), line);

    let o = tracecode(&[
        "sumset", "--family", "2", "--m", "3", "--s", "3", "--format", "json",
    ]);
    for line in stdout(&o).lines() {
        assert_eq!(reserialize::<SumSetJson>(line), line);
    }

    let o = tracecode(&["charsums", "--m", "2", "--format", "json"]);
    for line in stdout(&o).lines() {
        if line.contains("\"oracle\"") {
            assert_eq!(reserialize::<CharSumCaseJson>(line), line);
        } else {
            assert_eq!(reserialize::<CharSumSummaryJson>(line), line);
        }
    }
}

#[test]
fn out_file_and_jobs_invariance() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "3", "8"] {
        let path = dir.path().join(format!("r{jobs}.json"));
        let o = tracecode(&[
            "verify",
            "--family",
            "3",
            "--m",
            "4",
            "--format",
            "json",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        assert!(o.stdout.is_empty());
        outputs.push(std::fs::read_to_string(path).unwrap());
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn sweep_reports_every_case() {
    let o = tracecode(&["sweep", "--format", "json"]);
    let reports: Vec<VerificationJson> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(reports.len(), 15);
    let expected = if reports.iter().all(|r| r.passed) {
        0
    } else {
        1
    };
    assert_eq!(code(&o), expected);
    let even2: Vec<_> = reports
        .iter()
        .filter(|r| r.family == 2 && r.m % 2 == 0)
        .collect();
    assert!(even2
        .iter()
        .all(|r| r.table_match.is_none() && r.even_degree_claim.is_some()));
}
