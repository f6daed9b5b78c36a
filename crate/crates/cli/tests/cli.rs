use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use surplus_core::edgelist::parse_edge_list;
use surplus_core::Cut;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surplus-cut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn field<'a>(table: &'a str, key: &str) -> &'a str {
    table
        .lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')).map(str::trim))
        .unwrap_or_else(|| panic!("no field {key} in\n{table}"))
}

#[test]
fn gen_dgt_has_expected_size() {
    let out = bin(&["gen", "dgt", "--q", "5", "--k", "3"]);
    assert!(out.status.success());
    let g = parse_edge_list(&stdout(&out)).unwrap();
    assert_eq!((g.n(), g.m()), (25, 150));
}

#[test]
fn gen_cycle_and_families() {
    let g = parse_edge_list(&stdout(&bin(&["gen", "cycle", "--n", "5"]))).unwrap();
    assert_eq!(g.m(), 5);
    let g = parse_edge_list(&stdout(&bin(&["gen", "kst", "--s", "2", "--t", "3"]))).unwrap();
    assert_eq!((g.n(), g.m()), (5, 6));
    let g = parse_edge_list(&stdout(&bin(&["gen", "polarity", "--q", "3"]))).unwrap();
    assert_eq!(g.n(), 13);
    let g = parse_edge_list(&stdout(&bin(&["gen", "wheel", "--k", "3"]))).unwrap();
    assert_eq!((g.n(), g.m()), (7, 12));
}

#[test]
fn gen_gnp_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for p in [&a, &b] {
        let out = bin(&["gen", "gnp", "--n", "10", "--p", "0.5", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn gen_usage_errors() {
    let out = bin(&["gen", "cycle"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--n"));
    assert_eq!(bin(&["gen", "dgt", "--q", "6", "--k", "2"]).status.code(), Some(1));
    assert_eq!(bin(&["gen", "nonsense"]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));
}

#[test]
fn audit_examples() {
    let out = bin(&["audit", &corpus("petersen.txt"), "--eps", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("# surplus-cut v1\nvertex,degree,nbhd_edges,local_c\n"));
    assert!(text.lines().last().unwrap().starts_with("c_star,0.000000000000e0,"));

    let out = bin(&["audit", &corpus("k4.txt"), "--eps", "1", "--format", "csv"]);
    assert!(stdout(&out).lines().last().unwrap().starts_with("c_star,1.000000000000e0,witness,0"));
}

#[test]
fn audit_reports_parse_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "4 3\n0 1\n1 2\n2 2\n").unwrap();
    let out = bin(&["audit", bad.to_str().unwrap(), "--eps", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 4"), "{}", stderr(&out));
    let missing = bin(&["audit", "/nonexistent/graph.txt", "--eps", "1"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn cut_petersen_reaches_twelve() {
    let dir = tempfile::tempdir().unwrap();
    let cut_path = dir.path().join("cut.txt");
    let out = bin(&[
        "cut",
        &corpus("petersen.txt"),
        "--eps",
        "1",
        "--c",
        "1",
        "--trials",
        "200",
        "--seed",
        "1",
        "--out",
        cut_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let summary = stdout(&out);
    assert_eq!(field(&summary, "crossing"), "12");
    assert_eq!(field(&summary, "surplus"), "4.5");
    let g = parse_edge_list(&std::fs::read_to_string(corpus("petersen.txt")).unwrap()).unwrap();
    let cut = Cut::from_text(&std::fs::read_to_string(&cut_path).unwrap(), &g).unwrap();
    assert_eq!(cut.crossing(), 12);
}

#[test]
fn cut_rejects_non_sparse_input() {
    let out = bin(&["cut", &corpus("k4.txt"), "--eps", "1", "--c", "0.5"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("vertex 0"), "{}", stderr(&out));
    assert_eq!(bin(&["cut", &corpus("k4.txt"), "--eps", "2"]).status.code(), Some(1));
    assert_eq!(bin(&["cut", &corpus("k4.txt"), "--eps", "1", "--c", "-1"]).status.code(), Some(1));
    assert_eq!(bin(&["cut", &corpus("k4.txt"), "--eps", "1", "--trials", "0"]).status.code(), Some(1));
}

#[test]
fn cut_surplus_beats_lower_bound_on_shipped_corpus() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(files.len() >= 8);
    for f in files {
        for eps in ["0.5", "1"] {
            let out = bin(&["cut", f.to_str().unwrap(), "--eps", eps, "--trials", "200", "--seed", "1"]);
            assert!(out.status.success(), "{}: {}", f.display(), stderr(&out));
            let summary = stdout(&out);
            let surplus: f64 = field(&summary, "surplus").parse().unwrap();
            let lower: f64 = field(&summary, "lower_bound").parse().unwrap();
            assert!(surplus >= lower, "{} eps {eps}: {surplus} < {lower}", f.display());
        }
    }
}

#[test]
fn cut_dichotomy_method() {
    let out = bin(&["cut", &corpus("gnp-60-015.txt"), "--eps", "1", "--method", "dichotomy", "--trials", "20"]);
    assert!(out.status.success());
    let summary = stdout(&out);
    let surplus: f64 = field(&summary, "surplus").parse().unwrap();
    let bound: f64 = field(&summary, "branch_bound").parse().unwrap();
    assert!(surplus >= bound);
    assert!(["degenerate", "dense-core"].contains(&field(&summary, "branch")));
}

#[test]
fn bounds_examples() {
    let out = bin(&["bounds", &corpus("k5.txt"), "--eps", "0", "--c", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value = |name: &str| -> f64 {
        let line = text.lines().find(|l| l.starts_with(&format!("{name},"))).unwrap();
        line.split(',').nth(2).unwrap().parse().unwrap()
    };
    assert_eq!(value("edwards"), 1.0);
    assert_eq!(value("exact"), 1.0);

    let text = stdout(&bin(&["bounds", &corpus("petersen.txt"), "--eps", "1", "--format", "csv"]));
    assert!(text.contains("\nexact,exact,4.500000000000e0,"));

    let out = bin(&["bounds", &corpus("gnp-60-015.txt"), "--eps", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.lines().any(|l| l.starts_with("eigenvalue")));
    assert!(text.contains("not regular"));
}

#[test]
fn experiment_usage_errors() {
    assert_eq!(bin(&["experiment", "cycle", "--eps", "1"]).status.code(), Some(1));
    assert_eq!(bin(&["experiment", "cycle", "--eps", "1", "--sizes", "5,6"]).status.code(), Some(1));
    assert_eq!(bin(&["experiment", "gnp", "--eps", "1", "--sizes", "5,6,7,8,9"]).status.code(), Some(1));
}

#[test]
fn experiment_csv_shape() {
    let out = bin(&["experiment", "gnp", "--eps", "1", "--sizes", "10,12,14,16,18", "--p", "0.3", "--trials", "10"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# surplus-cut v1"));
    assert!(lines.next().unwrap().starts_with("family,size,"));
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("gnp,")).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.ends_with(",true")));
    assert!(text.contains("# fit,slope,"));
}
