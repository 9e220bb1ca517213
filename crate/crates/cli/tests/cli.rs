use std::io::Write;
use std::process::{Command, Output};

fn slq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_slq"))
        .args(args)
        .env_remove("SLQ_ORACLE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn star_table() {
    let o = slq(&["table", "star:4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let header = text.lines().next().unwrap();
    let cols: Vec<&str> = header.split_whitespace().collect();
    assert_eq!(
        &cols[..15],
        &["graph", "n", "m", "Delta", "delta", "liu_2.2", "liu_2.3", "meg1", "meg2", "Ncon", "Z1", "Z2", "eta",
          "liu_delta", "spread"]
    );
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row[5], "ext");
    assert_eq!(row[8], "4.00");
    assert_eq!(row[14], "4.00");
}

#[test]
fn unflagged_violation_sets_exit_code() {
    let o = slq(&["table", "path:3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("violation: path:3"));
    // Regular-graph exemptions are marked but do not fail.
    let o = slq(&["table", "complete:2", "--bounds", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("regular_sqrt(logged)"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(slq(&["table"]).status.code(), Some(2));
    let o = slq(&["table", "blob:3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
    assert!(stdout(&o).is_empty());
    assert_eq!(slq(&["table", "path:4", "--bounds", "nope"]).status.code(), Some(2));
    assert_eq!(slq(&["trace", "path:4", "--iters", "0"]).status.code(), Some(2));
    assert_eq!(slq(&["table", "file:/nonexistent/graph.txt"]).status.code(), Some(2));
}

#[test]
fn file_source() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# K_1,3\n4\n0 1\n0 2\n0 3").unwrap();
    let spec = format!("file:{}", f.path().display());
    let o = slq(&["--format", "csv", "table", &spec]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.lines().nth(1).unwrap().contains(",4,3,3,1,ext,4,3,4,"), "{text}");

    writeln!(f, "0 1").unwrap();
    let o = slq(&["table", &spec]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "csv", "table", "rand:n=30,m=90", "cycle:7", "kbip:2,4"];
    let a = stdout(&slq(&args));
    let b = stdout(&slq(&args));
    let mut seq = args.to_vec();
    seq.insert(0, "--sequential");
    let c = stdout(&slq(&seq));
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert!(a.contains("\"rand:n=30,m=90,seed=1\","));
}

#[test]
fn trace_layout() {
    let o = slq(&["trace", "complete:2", "--precision", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let head: Vec<&str> = lines.next().unwrap().split_whitespace().collect();
    let vals: Vec<f64> = lines.next().unwrap().split_whitespace().skip(1).map(|v| v.parse().unwrap()).collect();
    assert_eq!(head[0], "iteration");
    assert_eq!(head.len(), 11);
    assert_eq!(vals.len(), 10);
    let best = vals.iter().copied().fold(f64::MIN, f64::max);
    assert!(best > 1.999 && best <= 2.0 + 1e-6, "{best}");

    let text = stdout(&slq(&["trace", "regular:8,3"]));
    assert!(text.contains("perturbed"), "{text}");
    let csv = stdout(&slq(&["--format", "csv", "trace", "path:5", "--iters", "3"]));
    assert!(csv.starts_with("iteration,1,2,3\nf(x),"));
}

#[test]
fn oracle_limit_flag_beats_env() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_slq"));
        c.args(["invariants", "cycle:7"]);
        match env {
            Some(v) => c.env("SLQ_ORACLE_LIMIT", v),
            None => c.env_remove("SLQ_ORACLE_LIMIT"),
        };
        if let Some(v) = flag {
            c.args(["--oracle-limit", v]);
        }
        String::from_utf8(c.output().unwrap().stdout).unwrap()
    };
    assert!(run(None, None).contains("alpha 3\nvb 1\neb 1\n"));
    assert!(run(Some("5"), None).contains("alpha n/a\nvb n/a\neb n/a\n"));
    assert!(run(Some("5"), Some("7")).contains("alpha 3\n"));
    assert!(run(None, Some("6")).contains("vb n/a"));
}

#[test]
fn spectrum_dump() {
    let text = stdout(&slq(&["spectrum", "kbip:1,3"]));
    let vals: Vec<f64> = text.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(vals.len(), 4);
    assert!((vals[0] - 4.0).abs() < 1e-12 && vals[3].abs() < 1e-12);
    assert!(text.lines().all(|l| l.contains('e')));
    let a = stdout(&slq(&["spectrum", "kbip:1,3", "--matrix", "a"]));
    assert!(a.starts_with("1.7320508075688"), "{a}");
}

#[test]
fn validate_small_corpus() {
    let o = slq(&["validate", "path:4", "cycle:5", "kbip:2,3", "complete:2", "--vectors", "50", "--no-fixtures"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("graphs 4"));
    assert!(text.contains("logged, not failed"));
    assert!(text.contains("complete:2 regular_sqrt"));

    let o = slq(&["validate", "path:3", "--vectors", "10", "--no-fixtures"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("failures:"));
}
