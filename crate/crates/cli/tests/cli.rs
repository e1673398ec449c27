use std::process::{Command, Output};

use leonard_cli::{run, EXIT_INVALID_SPEC, EXIT_OK, EXIT_USAGE};

fn leonard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leonard"))
        .args(args)
        .env_remove("LEONARD_SEED")
        .output()
        .expect("spawn leonard")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn value<'a>(report: &'a str, key: &str) -> Option<&'a str> {
    report.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix(" = "))
}

const KRAWTCHOUK: [&str; 11] = [
    "analyze", "--type", "krawtchouk", "--d", "3", "--field", "Q", "--param", "s=1", "--param", "s_star=1",
];

#[test]
fn krawtchouk_r2_has_spin() {
    let out = leonard(&[&KRAWTCHOUK[..], &["--param", "r=2"]].concat());
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let text = stdout(&out);
    assert_eq!(value(&text, "dim_z"), Some("1"));
    assert_eq!(value(&text, "spin"), Some("true"));
    assert_eq!(value(&text, "a"), Some("[6, 3, 0, -3]"));
    assert_eq!(value(&text, "relation.minus_coeff"), Some("1"));
    assert_eq!(value(&text, "status"), Some("ok"));
}

#[test]
fn krawtchouk_r1_breaks_a_clause() {
    let out = leonard(&[&KRAWTCHOUK[..], &["--param", "r=1"]].concat());
    assert_eq!(out.status.code(), Some(EXIT_INVALID_SPEC));
    assert!(stderr(&out).starts_with("error[parray::InvalidSpec]"));
    assert!(stdout(&out).is_empty());
}

#[test]
fn orphan_over_rationals_is_rejected() {
    let out = leonard(&[
        "analyze", "--type", "orphan", "--d", "3", "--field", "Q", "--param", "h=1", "--param", "h_star=1",
        "--param", "s=1", "--param", "s_star=1", "--param", "r=1",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_INVALID_SPEC));
    assert!(stderr(&out).contains("error[parray::UnsupportedCharacteristic]"));
}

#[test]
fn dual_hahn_has_trivial_z() {
    let out = leonard(&[
        "analyze", "--type", "dual-hahn", "--d", "4", "--field", "Q", "--param", "h=1", "--param", "s=1",
        "--param", "s_star=2", "--param", "r=7",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_OK), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(value(&text, "dim_z"), Some("0"));
    assert_eq!(value(&text, "z_nonzero"), Some("false"));
    assert!(value(&text, "relation").is_none());
}

#[test]
fn config_file_with_flag_override() {
    let dir = std::env::temp_dir().join(format!("leonard-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spec.conf");
    std::fs::write(&path, "type = krawtchouk\nd = 3\nfield = Q\ns = 1\ns_star = 1\nr = 1\n").unwrap();
    let config = path.to_str().unwrap();

    let rejected = leonard(&["--config", config, "analyze"]);
    assert_eq!(rejected.status.code(), Some(EXIT_INVALID_SPEC));
    let accepted = leonard(&["--config", config, "analyze", "--param", "r=1/2"]);
    assert_eq!(accepted.status.code(), Some(EXIT_OK));
    assert_eq!(value(&stdout(&accepted), "dim_z"), Some("2"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn finite_field_spec() {
    let out = leonard(&[
        "analyze", "--type", "orphan", "--d", "3", "--field", "GF(2^3)", "--param", "h=1", "--param",
        "h_star=t", "--param", "s=t^2", "--param", "s_star=t+1", "--param", "r=t^2+t",
    ]);
    assert_eq!(out.status.code(), Some(EXIT_OK), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(value(&text, "theta"), Some("[0, t^2+1, 1, t^2]"));
    assert_eq!(value(&text, "dim_z"), Some("0"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(leonard(&["bogus"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(leonard(&["analyze", "--param", "no-equals"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(leonard(&["verify-tables", "--d-min", "2"]).status.code(), Some(EXIT_USAGE));
    assert_eq!(leonard(&["verify-tables", "--depth", "deep"]).status.code(), Some(EXIT_USAGE));
    let missing = leonard(&["--config", "/nonexistent/leonard.conf", "analyze"]);
    assert_eq!(missing.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&missing).starts_with("error[cli::Usage]"));
}

#[test]
fn help_exits_zero() {
    let out = run(["leonard", "--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verify-tables"));
}

#[test]
fn counterexample_report() {
    let out = leonard(&["counterexample"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let text = stdout(&out);
    assert_eq!(value(&text, "E*0.row0"), Some("(1, 1, 9/4)"));
    assert!(text.lines().any(|l| l.starts_with("g0*g0star in span: yes")));
    assert_eq!(value(&text, "vanishing_pattern_pairs"), Some("12"));
    assert_eq!(value(&text, "status"), Some("ok"));
}

#[test]
fn verify_tables_filters_types() {
    let out = leonard(&["verify-tables", "--types", "krawtchouk", "--seed", "7", "--trials", "20"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let text = stdout(&out);
    let cells: Vec<&str> = text.lines().filter(|l| l.starts_with("cell ")).collect();
    assert!(cells.iter().all(|l| l.contains("type=krawtchouk ")));
    let plain: usize = cells
        .iter()
        .filter(|l| l.contains("forcing=none"))
        .map(|l| value_in(l, "passes="))
        .sum();
    assert_eq!(plain, 80);
    assert!(text.lines().last().unwrap().contains("failures=0"));
}

#[test]
fn orphan_cells_have_trivial_z() {
    let out = leonard(&["verify-tables", "--types", "orphan", "--seed", "3", "--depth", "tables"]);
    assert_eq!(out.status.code(), Some(EXIT_OK));
    for line in stdout(&out).lines().filter(|l| l.starts_with("cell ")) {
        assert!(line.ends_with("dimz=20/0/0"), "{line}");
    }
}

fn value_in(line: &str, key: &str) -> usize {
    let start = line.find(key).unwrap() + key.len();
    line[start..].split_whitespace().next().unwrap().parse().unwrap()
}
