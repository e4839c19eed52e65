use std::process::{Command, Output};

fn permstat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permstat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn stats_reports_every_field() {
    let out = permstat(&["stats", "4,5,3,1,6,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["exc_hat"], serde_json::json!([5, 6]));
    assert_eq!(v["aexc"], serde_json::json!([1, 2]));
    assert_eq!(v["fix_hat"], serde_json::json!([3]));
    assert_eq!(v["depth"], 7);
    assert_eq!(v["drp"], 8);
    assert_eq!(v["sign"], -1);
    let text = stdout(&out);
    assert!(text.find("\"n\"").unwrap() < text.find("\"sign\"").unwrap());
}

#[test]
fn permutation_separators() {
    let a = stdout(&permstat(&["stats", "4", "5", "3", "1", "6", "2"]));
    let b = stdout(&permstat(&["stats", "4 5 3 1 6 2"]));
    let c = stdout(&permstat(&["stats", "4,5,3,1,6,2"]));
    assert_eq!(a, b);
    assert_eq!(b, c);
}

#[test]
fn map_examples() {
    let cases = [
        ("phi-triple", "4,5,3,1,6,2", "4,6,2,3,1,5"),
        ("phi-triple-inv", "4,6,2,3,1,5", "4,5,3,1,6,2"),
        ("foata", "8,9,1,6,2,4,3,7,5", "8,7,3,1,9,5,2,6,4"),
        ("foata-inv", "8,7,3,1,9,5,2,6,4", "8,9,1,6,2,4,3,7,5"),
        ("psi1", "1,2,3", "1,2,3"),
        ("psi2", "2,1,3", "2,1,3"),
    ];
    for (name, input, expected) in cases {
        let out = permstat(&["map", "--bijection", name, input]);
        assert_eq!(code(&out), 0, "{name}");
        assert_eq!(stdout(&out).trim(), expected, "{name} {input}");
    }
}

#[test]
fn triple_roundtrip_through_cli() {
    for input in ["3,1,4,2,5", "2,3,1", "5,4,3,2,1", "1"] {
        let fwd = stdout(&permstat(&["map", "--bijection", "phi-triple", input]));
        let back = stdout(&permstat(&["map", "--bijection", "phi-triple-inv", fwd.trim()]));
        assert_eq!(back.trim(), input);
    }
}

#[test]
fn f_keeps_first_letter_and_sign() {
    for input in ["3,1,2", "2,4,1,3", "1,3,2,4", "8,9,1,6,2,4,3,7,5"] {
        let img = stdout(&permstat(&["map", "--bijection", "f", input]));
        let before = json(&permstat(&["stats", input]));
        let after = json(&permstat(&["stats", img.trim()]));
        assert_eq!(before["first_letter"], after["first_letter"]);
        assert_eq!(before["sign"], after["sign"]);
        assert_eq!(before["depth"], after["drp"]);
    }
}

#[test]
fn domain_violation_exits_3() {
    let out = permstat(&["map", "--bijection", "psi1", "2", "1"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("psi1"));
    assert_eq!(code(&permstat(&["map", "--bijection", "phi-tilde", "1,2,3"])), 3);
}

#[test]
fn parse_errors_exit_2() {
    for bad in [["stats", "1,1"], ["stats", "0,1"], ["stats", "1,3"], ["stats", "a,b"], ["stats", "-1,2"]] {
        let out = permstat(&bad);
        assert_eq!(code(&out), 2, "{bad:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(code(&permstat(&["map", "--bijection", "nope", "1"])), 2);
    assert_eq!(code(&permstat(&["verify", "--n-max", "0"])), 2);
    assert_eq!(code(&permstat(&["verify", "--n-max", "10"])), 2);
    assert_eq!(code(&permstat(&["verify", "--n-max", "2", "--theorem", "nope"])), 2);
    assert_eq!(code(&permstat(&["dist", "--n", "3", "--stats", "bogus"])), 2);
    assert_eq!(code(&permstat(&["dist", "--n", "3", "--stats", "suc-set", "--signed"])), 2);
}

#[test]
fn trace_shows_words_biword_and_steps() {
    let out = permstat(&["trace", "4", "5", "3", "1", "6", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        [
            "words: [0,4,6],[1,5],[2,3]",
            "biword: (6 4 / 2 1)",
            "iterations: 2",
            "pick=[2,3] Y=1 host=[0,4,6] junction=6>2",
            "pick=[1,5] Y=1 host=[0,4,6,2,3] junction=3>1",
            "final: 4,6,2,3,1,5",
        ]
    );
}

#[test]
fn trace_of_identity_has_no_iterations() {
    let text = stdout(&permstat(&["trace", "--bijection", "phi-triple", "1,2,3"]));
    assert!(text.contains("iterations: 0"));
    assert!(text.ends_with("final: 1,2,3\n"));
}

#[test]
fn dist_polynomial_json() {
    let v = json(&permstat(&["dist", "--n", "3", "--stats", "depth"]));
    assert_eq!(v["variables"], serde_json::json!(["q"]));
    let coeffs: Vec<i64> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["coefficient"].as_i64().unwrap())
        .collect();
    assert_eq!(coeffs, [1, 2, 3]);

    let v = json(&permstat(&["dist", "--n", "1", "--stats", "depth"]));
    assert_eq!(v["terms"], serde_json::json!([{"exponents": [0], "coefficient": 1}]));
}

#[test]
fn dist_joint_and_signed() {
    let a = stdout(&permstat(&["dist", "--n", "5", "--stats", "depth,exc"]));
    let b = stdout(&permstat(&["dist", "--n", "5", "--stats", "drp,des"]));
    assert_eq!(a, b);
    let v = json(&permstat(&["dist", "--n", "4", "--stats", "drp", "--signed"]));
    let coeffs: Vec<i64> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["coefficient"].as_i64().unwrap())
        .collect();
    assert_eq!(coeffs, [1, -3, 3, -1]);
}

#[test]
fn dist_set_table_csv_and_json() {
    let out = permstat(&["dist", "--n", "3", "--stats", "suc-set", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("key,count"));
    let counts: Vec<u64> = lines
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(counts.len(), 4);
    assert_eq!(counts.iter().sum::<u64>(), 6);

    let v = json(&permstat(&["dist", "--n", "3", "--stats", "suc-set"]));
    assert_eq!(v["statistic"], "suc-set");
    assert_eq!(v["rows"][0], serde_json::json!({"key": "{}", "count": 3}));
}

#[test]
fn dist_polynomial_csv() {
    let text = stdout(&permstat(&["dist", "--n", "3", "--stats", "depth", "--format", "csv"]));
    assert_eq!(text, "q,coefficient\n0,1\n1,2\n2,3\n");
}

#[test]
fn verify_all_small() {
    let out = permstat(&["verify", "--n-max", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let pass_lines = text.lines().filter(|l| l.starts_with("PASS ")).count();
    assert_eq!(pass_lines, 54);
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_single_theorem_sequential() {
    let out = permstat(&["verify", "--n-max", "3", "--theorem", "signed-drp", "--sequential"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("PASS signed-drp n=3 [1 - 2q + q^2]"));
    assert!(text.contains("3/3 checks passed"));
}
