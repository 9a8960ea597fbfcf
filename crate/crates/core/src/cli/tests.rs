use super::*;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_args(args: &[&str]) -> Outcome {
    let cli = Cli::try_parse_from(std::iter::once("lgr").chain(args.iter().copied())).expect("parses");
    run(&cli)
}

#[test]
fn partition_parsing() {
    assert_eq!(parse_partition("2,1").unwrap().parts(), &[2, 1]);
    assert_eq!(parse_partition("[3, 1, 0]").unwrap().parts(), &[3, 1]);
    assert!(parse_partition("").unwrap().is_empty());
    assert!(parse_partition("1,2").is_err());
    assert!(parse_partition("a").is_err());
}

#[test]
fn rat_list_parsing() {
    let xs = parse_rat_list("1/2, 1/3,5").unwrap();
    assert_eq!(xs, vec![Rat::new(1, 2), Rat::new(1, 3), Rat::from_int(5)]);
    assert!(parse_rat_list("1/0").is_err());
}

#[test]
fn lattice_and_triples() {
    assert_eq!(lattice(3, 1).len(), 27);
    assert_eq!(lattice(2, 0), vec![vec![0, 0]]);
    assert_eq!(triples(4), vec![[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]);
}

#[test]
fn minors_json_order() {
    let o = run_args(&["--json", "minors", &fixture("tridiagonal.json")]);
    assert_eq!(o.code, 0);
    assert_eq!(o.text, "{\"\":\"1\",\"1\":\"2\",\"2\":\"2\",\"3\":\"2\",\"12\":\"3\",\"13\":\"4\",\"23\":\"3\",\"123\":\"4\"}\n");
}

#[test]
fn error_codes() {
    assert_eq!(run_args(&["minors", &fixture("nonsymmetric.json")]).code, 3);
    assert_eq!(run_args(&["minors", &fixture("truncated.json")]).code, 2);
    assert_eq!(run_args(&["minors", &fixture("does-not-exist.json")]).code, 2);
    assert_eq!(run_args(&["decompose", "--n", "6"]).code, 2);
    assert_eq!(run_args(&["mn", "2,1", "--r", "0"]).code, 2);
}

#[test]
fn report_table_lists_failures() {
    let r = Report::from_residuals(
        "x".into(),
        &[Residual::new("a", Rat::zero()), Residual::new("long name", Rat::new(-1, 2))],
        None,
    );
    assert!(!r.pass);
    assert_eq!(r.checked, 2);
    assert_eq!(r.to_table(), "x: FAIL (2 checked, 1 nonzero)\n  long name  -1/2\n");
    assert_eq!(r.into_outcome(false).code, 1);
}

#[test]
fn json_report_shape() {
    let o = run_args(&["--json", "check", "hyperdet", "--affine", &fixture("id3.json")]);
    let v: serde_json::Value = serde_json::from_str(&o.text).unwrap();
    assert_eq!(v["command"], "check hyperdet");
    assert_eq!(v["pass"], true);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}
