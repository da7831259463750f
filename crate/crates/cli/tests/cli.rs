use std::process::{Command, Output};

fn modsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modsurf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const FIG_PAST: &str = "(1-1*sqrt(3))/1";
const FIG_FUTURE: &str = "(1+1*sqrt(3))/1";

#[test]
fn expand_examples() {
    let o = modsurf(&["expand", "--value", "355/113"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[3; 7, 16]\n");
    let o = modsurf(&["expand", "--value", "(1+1*sqrt(5))/2", "--digits", "5"]);
    assert_eq!(stdout(&o).lines().next(), Some("[1; 1, 1, 1, 1, …]"));
    assert!(stdout(&o).contains("periodic"));
    assert_eq!(modsurf(&["expand", "--value", "abc"]).status.code(), Some(2));
}

#[test]
fn code_examples() {
    let o = modsurf(&["code", "--past", FIG_PAST, "--future", FIG_FUTURE, "--letters", "6"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("LLRLLR"));
    assert_eq!(lines.next(), Some("runs: (2,1,2,1)@L"));
    let o = modsurf(&["code", "--past", "-1/2", "--future", "3", "--letters", "10"]);
    assert_eq!(stdout(&o).lines().next(), Some("LLL⊥"));
    assert_eq!(modsurf(&["code", "--past", "1", "--future", "1"]).status.code(), Some(3));
}

#[test]
fn code_outside_a_needs_reduce() {
    let args = ["code", "--past", "(1+1*sqrt(2))/3", "--future", "(7+1*sqrt(11))/5"];
    assert_eq!(modsurf(&args).status.code(), Some(3));
    let mut with = args.to_vec();
    with.push("--reduce");
    let o = modsurf(&with);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("reduced by [["));
}

#[test]
fn section_examples() {
    let o = modsurf(&["section", "--periodic", "1,1", "--steps", "2", "--closed"]);
    let text = stdout(&o);
    assert!(text.contains("closed length: 1.924847"));
    let parities: Vec<&str> = text.lines().take(2).map(|l| l.split("; ").nth(1).unwrap().split(' ').next().unwrap()).collect();
    assert_eq!(parities, ["0", "1"]);
    let o = modsurf(&["section", "--periodic", "2,1", "--steps", "4"]);
    let text = stdout(&o);
    assert_eq!(text.matches("time=1.316957896924").count(), 4);
    let factors: Vec<&str> = text.lines().take(4).map(|l| l.split("factor=").nth(1).unwrap().split(' ').next().unwrap()).collect();
    assert_eq!(factors, ["(-1+1*sqrt(3))/2", "(-1+1*sqrt(3))/1", "(-1+1*sqrt(3))/2", "(-1+1*sqrt(3))/1"]);
    assert_eq!(modsurf(&["section", "--periodic", ""]).status.code(), Some(3));
}

#[test]
fn json_lines_parse() {
    for args in [
        vec!["--format", "json", "expand", "--value", "(1+1*sqrt(5))/2", "--digits", "4", "--convergents", "3"],
        vec!["--format", "json", "code", "--past", FIG_PAST, "--future", FIG_FUTURE],
        vec!["--format", "json", "section", "--periodic", "2,1", "--closed"],
        vec!["--format", "json", "closed", "--max-length", "3"],
        vec!["--format", "json", "measure", "census"],
    ] {
        let o = modsurf(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        for line in stdout(&o).lines() {
            serde_json::from_str::<serde_json::Value>(line).unwrap_or_else(|e| panic!("{line}: {e}"));
        }
    }
    let o = modsurf(&["--format", "json", "code", "--past", FIG_PAST, "--future", FIG_FUTURE, "--letters", "3"]);
    let letters: Vec<String> = stdout(&o)
        .lines()
        .filter_map(|l| serde_json::from_str::<serde_json::Value>(l).ok()?["letter"].as_str().map(String::from))
        .collect();
    assert_eq!(letters, ["L", "L", "R"]);
}

#[test]
fn floats_carry_seventeen_digits() {
    let o = modsurf(&["--format", "json", "section", "--periodic", "1,1", "--steps", "1"]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    let t = first.split("\"return_time\":").nth(1).unwrap();
    let num: String = t.chars().take_while(|c| c.is_ascii_digit() || *c == '.').collect();
    let significant = num.trim_start_matches(['0', '.']);
    assert_eq!(significant.chars().filter(|c| c.is_ascii_digit()).count(), 17, "{num}");
}

#[test]
fn measure_reports_are_seeded() {
    let a = modsurf(&["--seed", "3", "--format", "json", "measure", "digits", "--samples", "5000"]);
    let b = modsurf(&["--seed", "3", "--format", "json", "measure", "digits", "--samples", "5000"]);
    let c = modsurf(&["--seed", "4", "--format", "json", "measure", "digits", "--samples", "5000"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    for k in ["name", "params", "stats", "pass"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    let o = modsurf(&["measure", "farey", "--grid", "200"]);
    assert!(stdout(&o).starts_with("farey_invariance: PASS"));
}

#[test]
fn closed_census_text() {
    let o = modsurf(&["closed", "--max-length", "2.0"]);
    let text = stdout(&o);
    assert!(text.starts_with("(1)  1.924847"));
    assert!(text.contains("count: 1\n"));
    let o = modsurf(&["closed", "--max-length", "2.7"]);
    assert!(stdout(&o).contains("(2 1)  2.633915"));
}

#[test]
fn draw_counts_and_letters() {
    let o = modsurf(&["draw", "--depth", "0", "--window", "0:1"]);
    let svg = stdout(&o);
    assert_eq!(svg.matches(r#"<path class="edge""#).count(), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("edges: 3"));
    let o = modsurf(&["draw", "--depth", "2", "--geodesic", &format!("{FIG_PAST},{FIG_FUTURE}")]);
    let svg = stdout(&o);
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let letters: Vec<&str> = doc
        .descendants()
        .filter(|n| n.attribute("class") == Some("letter"))
        .filter_map(|n| n.text())
        .collect();
    assert_eq!(letters, ["L", "L", "R"]);
    assert_eq!(doc.descendants().filter(|n| n.attribute("class") == Some("geodesic")).count(), 1);
}

#[test]
fn draw_writes_file() {
    let dir = std::env::temp_dir().join(format!("modsurf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tess.svg");
    let o = modsurf(&["draw", "--depth", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("</svg>"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(modsurf(&["expand", "--value", "1", "--bogus"]).status.code(), Some(2));
    assert_eq!(modsurf(&["--format", "svg", "expand", "--value", "1"]).status.code(), Some(2));
    assert_eq!(modsurf(&["draw", "--window", "x:1"]).status.code(), Some(2));
    assert_eq!(modsurf(&["draw", "--window", "1:0"]).status.code(), Some(3));
    assert_eq!(modsurf(&["--precision", "8", "section", "--periodic", "2,1"]).status.code(), Some(4));
    assert_eq!(
        modsurf(&["--out", "/nonexistent-dir/x/out.txt", "expand", "--value", "2"]).status.code(),
        Some(5)
    );
    assert_eq!(modsurf(&["--help"]).status.code(), Some(0));
}
