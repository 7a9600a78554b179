//! Golden tests for the command-line interface: fixed argv in, exact
//! stdout/exit codes out.

use hybrid_paths::cli::run;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["hybrid-paths".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = cli(args);
    assert_eq!(code, 0, "args {args:?} failed: {err}");
    out
}

#[test]
fn perm_build_examples() {
    assert_eq!(stdout_of(&["perm-build", "--perm", "21"]), "UUUdDd\n");
    assert_eq!(stdout_of(&["perm-build", "--perm", "12"]), "UdUd\n");
    assert_eq!(
        stdout_of(&["perm-build", "--perm", "21", "--flavor", "little"]),
        "UUUUdDdD\n"
    );
}

#[test]
fn lengths_examples() {
    assert_eq!(
        stdout_of(&["lengths", "--n", "4"]),
        "q^14 + 6q^12 + 6q^10 + q^8\n"
    );
    assert_eq!(stdout_of(&["lengths", "--n", "1"]), "q^2\n");
    assert_eq!(stdout_of(&["lengths", "--n", "3"]), "q^10 + 3q^8 + q^6\n");
    let (code, out, _) = cli(&["--json", "lengths", "--n", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["counts"], serde_json::json!([[4, 1], [6, 1]]));
}

#[test]
fn evolve_and_devolve() {
    assert_eq!(
        stdout_of(&["evolve", "--flavor", "little", "--path", "UUdD"]),
        "UHHD\n"
    );
    assert_eq!(
        stdout_of(&["evolve", "--flavor", "big", "--path", "UUHHDd", "--step"]),
        "UHHHHD\n"
    );
    assert_eq!(
        stdout_of(&["devolve", "--flavor", "little", "--path", "UHHD"]),
        "UUdD\n"
    );
    assert_eq!(
        stdout_of(&["devolve", "--flavor", "big", "--path", "UHHD", "--step"]),
        "UUDd\n"
    );
    assert_eq!(
        stdout_of(&["devolve", "--flavor", "big", "--path", "HHHH"]),
        "UdUd\n"
    );
}

#[test]
fn trace_json_shape() {
    for args in [
        vec!["evolve", "--flavor", "big", "--path", "UUUdDd", "--trace"],
        vec!["trace", "--flavor", "big", "--path", "UUUdDd"],
    ] {
        let out = stdout_of(&args);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["flavor"], "big");
        assert_eq!(v["start"], "UUUdDd");
        assert_eq!(v["snapshots"], serde_json::json!(["UUHHDd", "UHHHHD"]));
        assert_eq!(v["creation_order"], serde_json::json!([4, 2]));
    }
}

#[test]
fn classify_output() {
    let out = stdout_of(&["classify", "--path", "UUdD"]);
    assert!(out.contains("esdp: yes"));
    assert!(out.contains("osdp: no"));
    assert!(out.contains("little-hybrid: yes"));
    let (code, out, _) = cli(&["--json", "classify", "--path", "HHUd"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["big-hybrid"], true);
    assert_eq!(v["little-hybrid"], false);
    assert_eq!(v["big-schroeder"], false);
}

#[test]
fn matchings_both_ways() {
    assert_eq!(
        stdout_of(&["to-matching", "--path", "UHHUDHHD"]),
        "(1,3),(2,7),(4,5),(6,8)\n"
    );
    assert_eq!(
        stdout_of(&["to-matching", "--path", "UUdUUUDDdD"]),
        "(1,10),(2,3)*,(4,9)*,(5,8),(6,7)\n"
    );
    assert_eq!(
        stdout_of(&["from-matching", "--matching", "(1,3),(2,7),(4,5),(6,8)"]),
        "UHHUDHHD\n"
    );
    assert_eq!(stdout_of(&["from-matching", "--matching", "(1,2)"]), "UD\n");
    let (code, out, _) = cli(&["--json", "to-matching", "--path", "UHHD"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["edges"], serde_json::json!([[1, 3], [2, 4]]));
}

#[test]
fn perm_extract_examples() {
    assert_eq!(
        stdout_of(&["perm-extract", "--flavor", "big", "--path", "UUUdDd"]),
        "21\n"
    );
    assert_eq!(
        stdout_of(&["perm-extract", "--flavor", "big", "--path", "UdUd"]),
        "12\n"
    );
    assert_eq!(
        stdout_of(&["perm-extract", "--flavor", "little", "--path", "UUUUdDdD"]),
        "21\n"
    );
}

#[test]
fn counts_table_and_csv() {
    let out = stdout_of(&["counts", "--class", "big-hybrid", "--max-length", "14"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("length:"));
    assert!(lines[1].starts_with("big-hybrid:"));
    let row: Vec<&str> = lines[1].split_whitespace().skip(1).collect();
    assert_eq!(row, ["1", "3", "11", "47", "219", "1075", "5459", "28383"]);

    let out = stdout_of(&[
        "counts",
        "--class",
        "little-hybrid",
        "--max-length",
        "6",
        "--csv",
    ]);
    assert_eq!(out, "length,count\n0,1\n2,1\n4,4\n6,18\n");

    // closed-form mode agrees, and --threads changes nothing
    let a = stdout_of(&[
        "counts",
        "--class",
        "little-hybrid",
        "--max-length",
        "14",
        "--mode",
        "closed-form",
        "--csv",
    ]);
    let b = stdout_of(&[
        "counts",
        "--class",
        "little-hybrid",
        "--max-length",
        "14",
        "--csv",
        "--threads",
        "4",
    ]);
    assert_eq!(a, b);
}

#[test]
fn series_output() {
    assert_eq!(
        stdout_of(&["series", "--name", "s", "--order", "6"]),
        "1 + 1*x + 3*x^2 + 11*x^3 + 45*x^4 + 197*x^5\n"
    );
    assert_eq!(
        stdout_of(&["series", "--name", "pascal-catalan", "--order", "5"]),
        "1 + 2*x + 7*x^2 + 30*x^3 + 141*x^4\n"
    );
    assert_eq!(
        stdout_of(&["series", "--name", "R", "--order", "4"]),
        "1 - 3*x - 4*x^2 - 12*x^3\n"
    );
    assert_eq!(
        stdout_of(&["series", "--name", "length-gf", "--order", "7"]),
        "1 + 1*x^2 + 1*x^4 + 2*x^6\n"
    );
    let (code, out, _) = cli(&["--json", "series", "--name", "B", "--order", "5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!(["1", "3", "11", "47", "219"]));
}

#[test]
fn render_formats() {
    assert_eq!(
        stdout_of(&["render", "--path", "UUdD", "--format", "tokens"]),
        "UUdD\n"
    );
    let art = stdout_of(&["render", "--path", "HHUD", "--format", "ascii"]);
    assert_eq!(art, "__/\\\n");
    let svg = stdout_of(&["render", "--path", "UUdD", "--format", "svg"]);
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("stroke-dasharray"));

    let dir = std::env::temp_dir().join("hybrid_paths_render_test.svg");
    let (code, _, _) = cli(&[
        "render",
        "--path",
        "UUdD",
        "--format",
        "svg",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let written = std::fs::read_to_string(&dir).unwrap();
    assert!(written.starts_with("<svg"));
    let _ = std::fs::remove_file(&dir);
}

#[test]
fn verify_examples_suite() {
    let (code, out, _) = cli(&["verify", "--suite", "examples"]);
    assert_eq!(code, 0);
    assert!(out.contains("[examples] flatten-peak: PASS"));
    assert!(out.lines().last().unwrap().starts_with("verify: PASS"));
}

#[test]
fn verify_quick_suites_with_threads() {
    let (code, out, _) = cli(&[
        "verify",
        "--suite",
        "conjecture",
        "--n",
        "5",
        "--threads",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("[conjecture] length-rows-are-narayana-n5: PASS"));
}

#[test]
fn domain_errors_exit_one_with_error_name() {
    let (code, _, err) = cli(&["evolve", "--flavor", "big", "--path", "UUdD"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("WrongStartClass"));

    let (code, _, err) = cli(&["classify", "--path", "UX"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("UnknownToken"));

    let (code, _, err) = cli(&["to-matching", "--path", "UUDd"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("NotLittleHybrid"));

    let (code, _, err) = cli(&["perm-build", "--perm", "231"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("Not231Avoiding"));

    let (code, _, err) = cli(&["counts", "--class", "dyck", "--max-length", "40"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("LengthTooLarge"));
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = cli(&["no-such-verb"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["evolve", "--flavor", "medium", "--path", "UD"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["series", "--name", "Q", "--order", "5"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&[]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
