use std::path::Path;

use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

const GRID: [(i64, i64, i64); 10] = [
    (2, 1, 0),
    (2, 1, 1),
    (2, 1, 2),
    (2, 1, 3),
    (3, 1, 1),
    (3, 2, 0),
    (3, 2, 1),
    (4, 1, 1),
    (4, 3, 1),
    (5, 2, 1),
];

fn pbij() -> Command {
    Command::cargo_bin("pbij").expect("binary pbij should be built")
}

fn params(cmd: &mut Command, p: i64, a: i64, r: i64) -> &mut Command {
    cmd.args(["--p", &p.to_string(), "--a", &a.to_string(), "--r", &r.to_string()])
}

fn stdout_of(args: &[&str]) -> String {
    let out = pbij().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file readable")
}

#[test]
fn map_and_unmap_examples() {
    pbij()
        .args(["map", "--p", "2", "--a", "1", "--r", "1", "--partition", "2^2,1^3"])
        .assert()
        .success()
        .stdout("4,3\n");
    pbij()
        .args(["unmap", "--p", "2", "--a", "1", "--r", "1", "--partition", "4,3"])
        .assert()
        .success()
        .stdout("2^2,1^3\n");
    pbij()
        .args(["map", "--p", "2", "--a", "1", "--r", "1", "--partition", ""])
        .assert()
        .success()
        .stdout("\n");
    pbij()
        .args(["map", "--p", "3", "--a", "1", "--r", "1", "--partition", "5^4", "--format", "json"])
        .assert()
        .success()
        .stdout("{\"parts\":[[20,1]]}\n");
}

#[test]
fn member_examples() {
    let cases = [
        ("A", "4", "false\n"),
        ("B", "3,2", "true\n"),
        ("A", "", "true\n"),
        ("B", "3,2,1", "false\n"),
    ];
    for (family, partition, expected) in cases {
        pbij()
            .args(["member", "--family", family, "--p", "2", "--a", "1", "--r", "1"])
            .args(["--partition", partition])
            .assert()
            .success()
            .stdout(expected);
    }
    let json = stdout_of(&[
        "member", "--family", "B", "--p", "2", "--a", "1", "--r", "1", "--partition", "3,2", "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v, serde_json::json!({"family": "B", "member": true}));
}

#[test]
fn count_and_series_examples() {
    let rows = "0,1\n1,0\n2,1\n3,1\n4,2\n5,1\n6,4\n";
    pbij()
        .args(["count", "--family", "A", "--p", "2", "--a", "1", "--r", "1", "--max-n", "6"])
        .args(["--method", "enumerate"])
        .assert()
        .success()
        .stdout(rows);
    pbij()
        .args(["series", "--side", "B", "--p", "2", "--a", "1", "--r", "1", "--max-n", "6"])
        .assert()
        .success()
        .stdout(rows);
    pbij()
        .args(["count", "--family", "B", "--p", "2", "--a", "1", "--r", "1", "--max-n", "0"])
        .assert()
        .success()
        .stdout("0,1\n");
}

#[test]
fn verify_matches_golden_files() {
    let json = stdout_of(&["verify", "--p", "2", "--a", "1", "--r", "1", "--max-n", "6"]);
    assert_eq!(json, golden("verify_2_1_1_n6.json"));
    let text = stdout_of(&["verify", "--p", "3", "--a", "2", "--r", "1", "--max-n", "12", "--format", "text"]);
    assert_eq!(text, golden("verify_3_2_1_n12.txt"));
}

#[test]
fn verify_report_schema() {
    let json = stdout_of(&["verify", "--p", "3", "--a", "2", "--r", "1", "--max-n", "12"]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["n_max"], 12);
    assert_eq!(v["params"]["block"], 5);
    assert_eq!(v["params"]["modulus"], 15);
    let per_n = v["per_n"].as_array().unwrap();
    assert_eq!(per_n.len(), 13);
    for (n, rec) in per_n.iter().enumerate() {
        assert_eq!(rec["n"], n as u64);
        assert_eq!(rec["count_a"], rec["count_b"]);
    }
}

#[test]
fn json_outputs_parse() {
    let cases: [&[&str]; 4] = [
        &["map", "--p", "4", "--a", "3", "--r", "1", "--partition", "1^7", "--format", "json"],
        &["count", "--family", "A", "--p", "3", "--a", "1", "--r", "1", "--max-n", "10", "--format", "json"],
        &["series", "--side", "A", "--p", "2", "--a", "1", "--r", "0", "--max-n", "450", "--format", "json"],
        &["verify", "--p", "5", "--a", "2", "--r", "1", "--max-n", "8", "--format", "json"],
    ];
    for args in cases {
        let out = stdout_of(args);
        serde_json::from_str::<Value>(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn partition_json_roundtrips_through_the_map() {
    let json = stdout_of(&[
        "map", "--p", "3", "--a", "2", "--r", "1", "--partition", "7^10,2^3", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&json).unwrap();
    let text: Vec<String> = v["parts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|pair| format!("{}^{}", pair[0], pair[1]))
        .collect();
    let back = stdout_of(&["unmap", "--p", "3", "--a", "2", "--r", "1", "--partition", &text.join(",")]);
    assert_eq!(back, "7^10,2^3\n");
}

#[test]
fn exact_counts_beyond_64_bits() {
    // p(450) via (2,1,0), where every partition belongs to both families.
    let out = stdout_of(&["series", "--side", "B", "--p", "2", "--a", "1", "--r", "0", "--max-n", "450"]);
    let last = out.lines().last().unwrap();
    assert_eq!(last, "450,134508188001572923840");
}

#[test]
fn enumerate_and_series_counts_agree_on_grid() {
    for (p, a, r) in GRID {
        for family in ["A", "B"] {
            let run = |method: &str| {
                let out = params(pbij().args(["count", "--family", family]), p, a, r)
                    .args(["--max-n", "40", "--method", method])
                    .output()
                    .unwrap();
                assert!(out.status.success());
                out.stdout
            };
            assert_eq!(run("enumerate"), run("series"), "({p},{a},{r}) {family}");
        }
    }
}

#[test]
fn output_independent_of_jobs() {
    let base = ["verify", "--p", "4", "--a", "3", "--r", "1", "--max-n", "16"];
    let one = stdout_of(&[&base[..], &["--jobs", "1"]].concat());
    let four = stdout_of(&[&base[..], &["--jobs", "4"]].concat());
    let default = stdout_of(&base);
    assert_eq!(one, four);
    assert_eq!(one, default);
}

#[test]
fn domain_errors_exit_2() {
    pbij()
        .args(["map", "--p", "2", "--a", "1", "--r", "1", "--partition", "4"])
        .assert()
        .code(2)
        .stdout("")
        .stderr(predicate::str::contains("threshold 3"));
    pbij()
        .args(["unmap", "--p", "2", "--a", "1", "--r", "1", "--partition", "1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("part 1 is forbidden"));
    pbij()
        .args(["verify", "--p", "4", "--a", "2", "--r", "1", "--max-n", "5"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("gcd"));
    pbij()
        .args(["member", "--family", "A", "--p", "2", "--a", "1", "--r", "-1", "--partition", "1"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("r = -1"));
}

#[test]
fn parse_errors_and_caps_exit_2() {
    for partition in ["4,", "x", "0", "3^0"] {
        pbij()
            .args(["member", "--family", "B", "--p", "2", "--a", "1", "--r", "1", "--partition", partition])
            .assert()
            .code(2);
    }
    pbij()
        .args(["count", "--family", "A", "--p", "2", "--a", "1", "--r", "1", "--max-n", "61"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("cap 60"));
    pbij()
        .args(["count", "--family", "A", "--p", "2", "--a", "1", "--r", "1", "--max-n", "61", "--cap", "61"])
        .args(["--method", "series"])
        .assert()
        .success();
    pbij()
        .args(["series", "--side", "A", "--p", "2", "--a", "1", "--r", "1", "--max-n", "2001"])
        .assert()
        .code(2);
}

#[test]
fn usage_errors_exit_2() {
    pbij().args(["map", "--p", "2"]).assert().code(2);
    pbij().args(["frobnicate"]).assert().code(2);
    pbij()
        .args(["count", "--family", "C", "--p", "2", "--a", "1", "--r", "1", "--max-n", "3"])
        .assert()
        .code(2);
    pbij().arg("--help").assert().success();
}
