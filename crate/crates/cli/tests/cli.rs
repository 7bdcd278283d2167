use std::process::{Command, Output};

fn pathavoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathavoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn count_examples() {
    for (args, expected) in [
        (
            ["--pattern", "rrrr", "--n", "9", "--m", "4", "--l", "5"].as_slice(),
            "112",
        ),
        (&["--pattern", "urruurr", "--n", "8", "--m", "8"], "1236"),
        (&["--pattern", "uuuu", "--n", "2", "--m", "7"], "6"),
    ] {
        let out = pathavoid(&[&["count"], args].concat());
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), expected);
    }
}

#[test]
fn count_with_verify_and_methods() {
    let out = pathavoid(&[
        "count",
        "--pattern",
        "rrruuurrruu",
        "--n",
        "10",
        "--m",
        "11",
        "--verify",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "58567");
    for method in ["oracle", "recurrence", "formula"] {
        let out = pathavoid(&[
            "count",
            "--pattern",
            "urruurr",
            "--n",
            "5",
            "--m",
            "5",
            "--method",
            method,
        ]);
        assert_eq!(stdout(&out).trim(), "38", "{method}");
    }
}

#[test]
fn analyze_reports_class() {
    let out = pathavoid(&["analyze", "--pattern", "urruurr"]);
    let text = stdout(&out);
    assert!(text.contains("BifixIndex1Depth0"));
    assert!(text.contains("a=4 c=3"));
    assert!(text.contains("b=2 d=2"));
    assert!(text.contains("bifixes      urr"));
    let text = stdout(&pathavoid(&["analyze", "--pattern", "rrruuurrruu"]));
    assert!(text.contains("DepthPositive(depth=2"));
    assert!(text.contains("rrruu"));
    let text = stdout(&pathavoid(&["analyze", "--pattern", "uruuru"]));
    assert!(text.contains("Unsupported"));
    assert!(text.contains("bifix index  2"));
}

#[test]
fn table_extension_grid() {
    let out = pathavoid(&[
        "table",
        "--pattern",
        "rrrr",
        "--nmax",
        "9",
        "--mmax",
        "4",
        "--l",
        "5",
        "--extend",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .filter(|line| line.contains('|') && !line.starts_with(' '))
        .map(|line| line.split('|').nth(1).unwrap().split_whitespace().collect())
        .collect();
    assert_eq!(
        rows[0],
        ["1", "5", "15", "35", "65", "101", "135", "155", "152", "112"]
    );
    assert_eq!(
        rows[4],
        ["1", "1", "1", "1", "0", "0", "0", "0", "-3", "-11"]
    );
}

#[test]
fn table_csv_and_json() {
    let out = pathavoid(&[
        "table",
        "--pattern",
        "urruurr",
        "--nmax",
        "9",
        "--mmax",
        "8",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("# pattern=urruurr\n"));
    assert!(text.contains("\nn,m,value,region\n"));
    assert!(text.contains("\n8,8,1236,path_count\n"));
    let out = pathavoid(&[
        "table",
        "--pattern",
        "urruurr",
        "--nmax",
        "2",
        "--mmax",
        "2",
        "--format",
        "json",
    ]);
    let text = stdout(&out);
    assert!(text.contains("\"meta\""));
    assert!(text.contains("\"cells\""));
}

#[test]
fn verify_small_corpus() {
    let out = pathavoid(&["verify", "--max-len", "4", "--nmax", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0 failed, 2 known issues"));
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("known-issue"))
            .count(),
        2
    );
}

#[test]
fn reproduce_reference_tables() {
    let out = pathavoid(&["reproduce-paper"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for name in ["rrrr-l5", "uuuu", "urruurr", "rrruuurrruu"] {
        assert!(text.contains(&format!("## {name}: ")), "{name}");
    }
    assert_eq!(text.matches(", 0 differ").count(), 4);
    assert!(text.contains("90046"));
    assert!(text.contains("377"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        pathavoid(&["count", "--pattern", "abc", "--n", "1", "--m", "1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        pathavoid(&["count", "--pattern", "u"]).status.code(),
        Some(1)
    );
    assert_eq!(pathavoid(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(pathavoid(&["--help"]).status.code(), Some(0));
    let out = pathavoid(&[
        "count",
        "--pattern",
        "uuuu",
        "--n",
        "1",
        "--m",
        "1",
        "--method",
        "recurrence",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not apply"));
    let out = pathavoid(&[
        "table",
        "--pattern",
        "urr",
        "--nmax",
        "2",
        "--mmax",
        "2",
        "--extend",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
