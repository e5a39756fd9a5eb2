use std::process::{Command, Output};

fn qtsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtsym")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qtsym(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn first_line(args: &[&str]) -> String {
    stdout(args).lines().next().unwrap_or_default().to_string()
}

#[test]
fn poly_examples() {
    assert_eq!(stdout(&["poly", "2", "--content", "1,1"]), "1 + q\n");
    assert_eq!(stdout(&["poly", "1,1", "--content", "1,1"]), "1 + t\n");
    assert_eq!(stdout(&["poly", "1", "--content", "1"]), "1\n");
    assert_eq!(stdout(&["poly", "2", "--content", "1,1", "--json"]), "[[0,0,1],[1,0,1]]\n");
    assert_eq!(stdout(&["poly", "1,1", "--content", "1,1", "--q0"]), "1 + t\n");
}

#[test]
fn poly_over_every_content() {
    let out = stdout(&["poly", "2,1", "--alphabet-size", "2"]);
    assert_eq!(out.lines().count(), 4);
    let json: serde_json::Value = serde_json::from_str(&stdout(&["poly", "2,1", "--alphabet-size", "2", "--json"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 4);
}

#[test]
fn map_examples() {
    assert_eq!(first_line(&["map", "carlitz", "4,1,3,2"]), "3,2,4,1");
    assert_eq!(stdout(&["map", "reduce", "1,5,2,2,1,4,3,2,3,1,3"]), "5,1,2,1,4,3,2,2,1,3  cc=12\n");
    assert_eq!(first_line(&["map", "invcode", "4,1,3,2"]), "1210  sum=4");
    assert_eq!(first_line(&["map", "majcode", "3,2,4,1"]), "1210  sum=4");
    assert_eq!(first_line(&["map", "invcode", "1210", "--alphabet", "1,2,3,4"]), "4,1,3,2");
    assert_eq!(first_line(&["map", "cocharge", "1,5,2,2,1,4,3,2,3,1,3"]), "cc=12");
}

#[test]
fn zero_bump_keeps_maj() {
    let out = stdout(&["map", "zero-bump", "[[1,2,3],[2,1]]"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "[[1,2],[2,1]]");
    assert_eq!(lines[1], "shape=(3,2) inv=0 maj=1  ->  shape=(2,2) inv=0 maj=1");
}

#[test]
fn filling_maps_swap_statistics() {
    let out = stdout(&["map", "hl-symmetry", "[[3,4,6,8],[5,8,2,2],[8,1]]"]);
    assert!(out.ends_with("shape=(4,4,2) inv=0 maj=5  ->  shape=(3,3,2,2) inv=5 maj=0\n"), "{out}");
    let out = stdout(&["map", "hook-phi", "[[1,2,3],[2]]"]);
    assert!(out.ends_with("inv=0 maj=1  ->  shape=(2,1,1) inv=1 maj=0\n"), "{out}");
    let out = stdout(&["map", "t1", "[[1,3],[2]]"]);
    assert!(out.contains("maj=1  ->  shape=(2,1) inv=1"), "{out}");
}

#[test]
fn verify_passes_and_reports_json() {
    for suite in ["symmetry", "hl-bijection", "hook", "t1", "cocharge", "codes", "zero-bump"] {
        let out = qtsym(&["verify", suite, "--max-n", "4", "--json", "--jobs", "2"]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["suite"], suite);
        assert!(report["cases"].as_u64().unwrap() > 0);
        assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    }
    let out = stdout(&["verify", "all", "--max-n", "4"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 10);
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&["verify", "all", "--max-n", "4", "--json", "--jobs", "1"]);
    let b = stdout(&["verify", "all", "--max-n", "4", "--json", "--jobs", "4"]);
    assert_eq!(a, b);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "nonsense"],
        vec!["poly", "3", "--content", "1,1"],
        vec!["poly", "2,3", "--content", "5"],
        vec!["map", "t1", "[[1,1]]"],
        vec!["map", "zero-bump", "[[2,1]]"],
        vec!["map", "carlitz", "1,x"],
        vec!["map", "unknown", "1"],
        vec![],
    ] {
        assert_eq!(qtsym(&args).status.code(), Some(2), "{args:?}");
    }
}
