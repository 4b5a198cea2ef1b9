use std::process::{Command, Output};

use serde_json::Value;

fn stirsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stirsys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stirling_value() {
    let o = stirsys(&["stirling", "--kind", "2", "-n", "4", "-k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "7\n");
    let o = stirsys(&["stirling", "--kind", "1", "-n", "4", "-k", "2"]);
    assert_eq!(stdout(&o), "11\n");
}

#[test]
fn cpoly_text_and_json() {
    let o = stirsys(&["cpoly", "--k1", "1", "--k2", "1", "-l", "2"]);
    assert_eq!(stdout(&o), "2 * x^1 y^1\n");
    let o = stirsys(&[
        "--format", "json", "cpoly", "--k1", "1", "--k2", "1", "-l", "2", "--method", "egf",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "cpoly");
    assert_eq!(v["poly"], serde_json::json!([[1, 1, 0, "2"]]));
}

#[test]
fn det_three_points() {
    let o = stirsys(&["det", "--points", "0,0;1,0;0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("det = -1 * x^2 y^1 + 1 * x^1 y^2\n"));
}

#[test]
fn counterexample_exits_one() {
    let o = stirsys(&["verify", "counterexample"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("det_matches_factored_form: FAIL"));
    assert!(text.contains("det_factorization: PASS"));
    assert!(text.contains("cleared_solution_residual_zero: PASS"));
}

#[test]
fn passing_verifications_exit_zero() {
    for args in [
        &[
            "verify",
            "thest",
            "--points",
            "0,0;1,0;0,1;1,1",
            "--mults",
            "1,2,1,1",
        ][..],
        &["verify", "det", "--points", "0,0;1,0;2,0;0,1"],
        &[
            "verify",
            "quotient",
            "--points",
            "0,0;1,0;2,0;3,0;0,1;0,2;0,3;0,4",
            "--rel",
            "2x-3y",
        ],
        &["verify", "identities"],
        &["verify", "lemma", "--k1", "2", "--k2", "1", "-l", "6"],
        &[
            "verify", "lemgp0", "-a", "1", "-b", "2", "--k1", "1", "--k2", "1", "-l", "6",
        ],
        &[
            "verify", "lemgp", "-a", "2", "-b", "1", "--k1", "0", "--k2", "2", "-l", "6",
        ],
        &["verify", "cpoly", "--k1", "2", "--k2", "3", "-l", "9"],
        &[
            "verify",
            "unique",
            "--points",
            "0,0;1,0;0,1",
            "--at",
            "1/2,-3,2",
        ],
        &["verify", "stirling"],
    ] {
        let o = stirsys(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).ends_with("verdict: true\n"), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["stirling", "--kind", "3", "-n", "1", "-k", "1"][..],
        &["det"],
        &["det", "--points", "0,0;0,0"],
        &["solve", "--points", "0,0;1,1"],
        &["reduce", "--points", "0,0;1,0", "--rel", "2z"],
        &[
            "verify", "lemgp", "-a", "1", "-b", "3", "--k1", "0", "--k2", "1", "-l", "4",
        ],
        &["nonsense"],
    ] {
        let o = stirsys(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn reduce_polynomial_normal_form() {
    let o = stirsys(&["reduce", "--rel", "x+y", "--poly", "x*y + z"]);
    assert_eq!(o.status.code(), Some(0));
    let o2 = stirsys(&[
        "--format", "json", "reduce", "--rel", "x+y", "--poly", "x*y + z",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o2)).unwrap();
    assert_eq!(v["case"], "pos");
    assert_eq!(v["text"].as_str().unwrap(), stdout(&o).trim_end());
}

#[test]
fn reduce_worked_example() {
    let o = stirsys(&[
        "--format",
        "json",
        "reduce",
        "--points",
        "0,0;1,0;2,0;3,0;0,1;0,2;0,3;0,4",
        "--rel",
        "2x-3y",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["r0"], 7);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 1);
    assert_eq!(v["certificates"][0]["dropped"], serde_json::json!([0, 3]));
}

#[test]
fn json_is_deterministic() {
    let args = [
        "--format",
        "json",
        "sweep",
        "--only",
        "det,unique",
        "--seed",
        "3",
    ];
    let a = stirsys(&args);
    let b = stirsys(&args);
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<Value> = stdout(&a)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(lines.len() > 1);
    assert!(lines.iter().all(|l| l["schema"] == 1));
    assert_eq!(lines[0]["verdict"], true);
}

#[test]
fn points_file() {
    let dir = std::env::temp_dir().join(format!("stirsys-points-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    std::fs::write(&path, "[[0,0],[1,0],[0,1]]").unwrap();
    let a = stirsys(&["det", "--points-file", path.to_str().unwrap()]);
    let b = stirsys(&["det", "--points", "0,0;1,0;0,1"]);
    assert_eq!(a.stdout, b.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
