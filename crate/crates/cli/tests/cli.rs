use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn vcw(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vcw"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn iddim_on_all_pairs() {
    let text = std::fs::read(fixture("all_pairs.json")).unwrap();
    let out = vcw(&["iddim", "--cap", "6"], Some(&text));
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["capped"], false);
    assert_eq!(v["witness_names"], serde_json::json!(["ab", "ac"]));
}

#[test]
fn iddim_matches_library() {
    let path = fixture("all_pairs.json");
    let f = vcw_core::parse_family(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let lib = serde_json::to_value(vcw_core::independence_dimension(&f, 6)).unwrap();
    let out = vcw(&["iddim", "--cap", "6", "--input", path.to_str().unwrap()], None);
    let v = json(&out);
    for key in ["dimension", "witness", "capped"] {
        assert_eq!(v[key], lib[key]);
    }
}

#[test]
fn capped_iddim_exits_4() {
    let out = vcw(
        &[
            "iddim",
            "--cap",
            "1",
            "--input",
            fixture("all_pairs.json").to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 4);
    assert_eq!(json(&out)["capped"], true);
}

#[test]
fn id1_order_on_crossing_family_prints_witness() {
    let out = vcw(
        &[
            "order",
            "--mode",
            "id1",
            "--input",
            fixture("crossing.json").to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 3);
    let v = json(&out);
    assert_eq!(v["witness"]["member_names"], serde_json::json!(["A", "B"]));
    assert_eq!(v["witness"]["cells"].as_array().unwrap().len(), 4);
}

#[test]
fn laminar_order_on_crossing_family() {
    let out = vcw(
        &[
            "order",
            "--mode",
            "laminar",
            "--input",
            fixture("crossing.json").to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 3);
    assert!(json(&out)["crossing"].is_object());
}

#[test]
fn independent_predicates_have_eight_types() {
    let gen = vcw(
        &["gen", "predicates", "--k", "3", "--mode", "independent", "--m", "8"],
        None,
    );
    assert_eq!(code(&gen), 0);
    let out = vcw(&["types"], Some(&gen.stdout));
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["count"], 8);
}

#[test]
fn gen_round_trips_losslessly() {
    let gen = vcw(
        &["gen", "random-id1", "--depth", "3", "--flips", "2", "--seed", "11"],
        None,
    );
    let f = vcw_core::parse_family(std::str::from_utf8(&gen.stdout).unwrap()).unwrap();
    let p = vcw_core::RandomId1::new(11, 3, 2);
    assert_eq!(f, vcw_core::gen_random_id1(&p).unwrap());
    assert_eq!(vcw_core::to_json(&f) + "\n", String::from_utf8(gen.stdout).unwrap());
}

#[test]
fn gen_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("arcs.json");
    let out = vcw(
        &[
            "gen",
            "cyclic",
            "--m",
            "8",
            "--arcs",
            "1:4,3:7",
            "--output",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let cert = vcw(&["certify", "--input", path.to_str().unwrap()], None);
    assert_eq!(json(&cert)["certified"], false);
}

#[test]
fn order_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let gen = vcw(
        &["gen", "random-id1", "--depth", "2", "--flips", "1", "--seed", "4"],
        None,
    );
    let fam = dir.path().join("fam.json");
    std::fs::write(&fam, &gen.stdout).unwrap();
    let order = vcw(&["order", "--mode", "id1", "--input", fam.to_str().unwrap()], None);
    assert_eq!(code(&order), 0);
    let ord = dir.path().join("order.json");
    std::fs::write(&ord, &order.stdout).unwrap();
    let v = vcw(
        &[
            "verify",
            "--order",
            ord.to_str().unwrap(),
            "--allow-complement",
            "--input",
            fam.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code(&v), 0);
    assert_eq!(json(&v)["convex"], true);
}

#[test]
fn ray_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let ord = dir.path().join("order.json");
    std::fs::write(&ord, r#"["1","2","3","4","5","6"]"#).unwrap();
    let fam = fixture("chain.json");
    let run = |n: &str| {
        json(&vcw(
            &[
                "ray",
                "--n",
                n,
                "--order",
                ord.to_str().unwrap(),
                "--set",
                "S",
                "--input",
                fam.to_str().unwrap(),
            ],
            None,
        ))
    };
    assert_eq!(run("1")["ray"], serde_json::json!(["1"]));
    assert_eq!(run("2")["ray"], serde_json::json!(["1", "2", "3"]));
    assert_eq!(run("3")["ray"], serde_json::json!(["1", "2", "3", "4"]));
    assert_eq!(run("3")["alternations"], 4);
}

#[test]
fn combo_with_order() {
    let dir = tempfile::tempdir().unwrap();
    let ord = dir.path().join("order.json");
    std::fs::write(&ord, r#"{"order":["1","2","3","4","5","6"]}"#).unwrap();
    let fam = fixture("chain.json");
    let out = vcw(
        &[
            "combo",
            "--expr",
            "T & !S",
            "--order",
            ord.to_str().unwrap(),
            "--input",
            fam.to_str().unwrap(),
        ],
        None,
    );
    let v = json(&out);
    assert_eq!(v["elements"], serde_json::json!(["1"]));
    assert_eq!(v["k"], 2);
}

#[test]
fn udtfs1_report_and_trace() {
    let gen = vcw(&["gen", "predicates", "--k", "3", "--mode", "nested", "--m", "8"], None);
    let r = vcw(&["udtfs1"], Some(&gen.stdout));
    assert_eq!(code(&r), 0);
    assert_eq!(json(&r)["exact"], true);
    let t = vcw(&["udtfs1", "--element", "5"], Some(&gen.stdout));
    let v = json(&t);
    assert!(v["decisions"]
        .as_array()
        .unwrap()
        .iter()
        .all(|d| d["predicted"] == d["actual"]));
    let crossing = std::fs::read(fixture("crossing.json")).unwrap();
    assert_eq!(code(&vcw(&["udtfs1"], Some(&crossing))), 3);
}

#[test]
fn ladder_and_density() {
    let gen = vcw(&["gen", "linear", "--m", "5", "--cuts", "2,4"], None);
    let v = json(&vcw(&["ladder"], Some(&gen.stdout)));
    assert_eq!(v["length"], 2);
    let grid = vcw(
        &["gen", "grid", "--n", "2", "--m", "20", "--count", "16", "--seed", "1"],
        None,
    );
    let d = json(&vcw(&["density", "--schedule", "2,4,8,16"], Some(&grid.stdout)));
    assert!(d["slope"].as_f64().unwrap() > 1.0);
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(code(&vcw(&["types"], Some(b"{\"universe\": [1]}"))), 2);
    assert_eq!(code(&vcw(&["types"], Some(b"not json"))), 2);
    assert_eq!(code(&vcw(&["gen", "linear", "--m", "3", "--cuts", "9"], None)), 2);
    assert_eq!(code(&vcw(&["frobnicate"], None)), 2);
}

#[test]
fn cap_exceeded_exits_4() {
    assert_eq!(code(&vcw(&["gen", "grid", "--n", "3", "--m", "20"], None)), 4);
}

#[test]
fn table_format() {
    let gen = vcw(&["gen", "linear", "--m", "4", "--cuts", "2,3"], None);
    let out = vcw(&["--format", "table", "types"], Some(&gen.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("count  3\n"), "{text}");
}

#[test]
fn dedupe_flag() {
    let fam = br#"{"universe":["a","b"],"sets":{"X":["a"],"Y":["a"]}}"#;
    let plain = json(&vcw(&["types"], Some(fam)));
    let dd = json(&vcw(&["--dedupe", "types"], Some(fam)));
    assert_eq!(plain["types"], serde_json::json!(["11", "00"]));
    assert_eq!(dd["types"], serde_json::json!(["1", "0"]));
}
