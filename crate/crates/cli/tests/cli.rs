use std::process::{Command, Output};

use brauer_cli::report::{CensusReport, InfoReport};

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn census(args: &[&str]) -> CensusReport {
    let mut full = vec!["census"];
    full.extend_from_slice(args);
    let out = brauer(&full);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).expect("valid report")
}

#[test]
fn info_e6() {
    let out = brauer(&["info", "--type", "E6"]);
    assert_eq!(out.status.code(), Some(0));
    let info: InfoReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(info.group_order, 3);
    assert_eq!(info.roots, 72);
    let dims: Vec<(usize, usize)> = info
        .invariant_dims
        .iter()
        .map(|d| (d.node, d.dim))
        .collect();
    assert_eq!(dims, vec![(0, 6), (1, 2), (6, 2)]);
}

#[test]
fn info_e8_and_a1() {
    let e8: InfoReport = serde_json::from_str(&stdout(&brauer(&["info", "--type", "E8"]))).unwrap();
    assert_eq!(e8.group_order, 1);
    assert_eq!(e8.invariant_dims[0].dim, 8);
    let a1: InfoReport = serde_json::from_str(&stdout(&brauer(&["info", "--type", "A1"]))).unwrap();
    assert_eq!(a1.roots, 2);
    assert_eq!(a1.minuscule_nodes, vec![0, 1]);
}

#[test]
fn census_a1_adjoint() {
    let report = census(&["--type", "A1", "--isogeny", "ad", "--q", "3"]);
    assert_eq!(report.counts.rational_total, 4);
    assert_eq!(report.counts.pprime_char_total, 6);
    assert_eq!(report.config.subgroup, vec![0, 1]);
    assert!(report
        .classes
        .iter()
        .flat_map(|c| &c.rep)
        .all(|x| x.contains('/')));
}

#[test]
fn census_e6_twisted() {
    let report = census(&["--type", "E6", "--isogeny", "ad", "--q", "2", "--twisted"]);
    assert_eq!(report.config.twist, "twisted");
    assert_eq!(report.counts.rational_total, 72);
    assert_eq!(report.counts.n_disconnected, 4);
    assert_eq!(report.disconnected_check.expected, Some(4));
}

#[test]
fn census_json_round_trips_and_is_deterministic() {
    let args = ["census", "--type", "B2", "--isogeny", "ad", "--q", "3"];
    let first = stdout(&brauer(&args));
    let second = stdout(&brauer(&args));
    assert_eq!(first, second);
    let parsed: CensusReport = serde_json::from_str(&first).unwrap();
    let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
    assert_eq!(again, first);
}

#[test]
fn census_tsv() {
    let out = brauer(&[
        "census",
        "--type",
        "A1",
        "--isogeny",
        "ad",
        "--q",
        "3",
        "--format",
        "tsv",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("rep\taffine\t"));
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 4);
    assert!(text.contains("# rational_total\t4\n"));
}

#[test]
fn census_subgroup_isogeny() {
    let report = census(&["--type", "D4", "--isogeny", "sub:alpha1", "--q", "3"]);
    assert_eq!(report.config.subgroup, vec![0, 1]);
    assert_eq!(report.counts.geometric_total, 81);
}

#[test]
fn exit_codes() {
    assert_eq!(brauer(&["info", "--type", "Q3"]).status.code(), Some(1));
    assert_eq!(
        brauer(&["census", "--type", "B3", "--q", "3", "--twisted"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        brauer(&["census", "--type", "A2", "--q", "6"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        brauer(&["census", "--type", "A2", "--isogeny", "xx", "--q", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        brauer(&["verify", "--suite", "nope"]).status.code(),
        Some(1)
    );
    let capped = brauer(&[
        "census",
        "--type",
        "E6",
        "--q",
        "2",
        "--max-subalcoves",
        "10",
    ]);
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("resource"));
}

#[test]
fn invariant_errors_map_to_two() {
    let e = brauer_core::Error::Invariant("x".into());
    assert_eq!(brauer_cli::exit_code(&e), 2);
}

#[test]
fn verify_steinberg_bounds() {
    let out = brauer(&[
        "verify",
        "--suite",
        "steinberg",
        "--max-q",
        "5",
        "--types",
        "A2,C3,G2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.starts_with("PASS\tsteinberg\tG2 sc q=5")));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_table1_and_oracle() {
    for suite in ["table1", "oracle", "table2"] {
        let out = brauer(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).contains(&format!("SUMMARY\t{suite}\t")));
    }
}
