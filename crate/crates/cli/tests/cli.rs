use std::process::{Command, Output};

use hirano_core::ring::{parse_element, parse_ring};

fn hirano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hirano"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut args = args.to_vec();
    args.push("--json");
    let o = hirano(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_examples() {
    let o = hirano(&["classify", "M2(Z/2)", "[[0,1],[1,1]]"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("drazin: yes (b = [[1,1],[1,0]]"), "{out}");
    assert!(out.contains("hirano: no"));

    assert!(stdout(&hirano(&["classify", "Z/5", "3"])).contains("hirano: no"));
    assert!(stdout(&hirano(&["classify", "Z/9", "2"])).contains("hirano: yes (b = 5)"));
}

#[test]
fn signed_literals() {
    let v = json(&["classify", "Z/5", "−1"]);
    assert_eq!(v["element"], "4");
    assert_eq!(v["hirano"]["inverse"], "4");
}

#[test]
fn decompose_examples() {
    let v = json(&["decompose", "Z/9", "2"]);
    assert_eq!(v["tripotent"], "8");
    assert_eq!(v["nilpotent"], "3");
    let v = json(&["decompose", "Z/3", "2"]);
    assert_eq!(
        (v["tripotent"].as_str(), v["nilpotent"].as_str()),
        (Some("2"), Some("0"))
    );

    let o = hirano(&["decompose", "Z/4", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a unit"));
}

#[test]
fn census_examples() {
    let v = json(&["census", "M2(Z/2)"]);
    assert_eq!(v["counts"]["drazin"], 16);
    assert_eq!(v["counts"]["hirano"], 14);
    assert_eq!(json(&["census", "Z/3"])["counts"]["hirano"], 3);

    let o = hirano(&["census", "M2(Z/2)", "--max-ring-size", "10"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let o = hirano(&["verify", "5.1", "M2(Z/2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations: 0"));

    let v = json(&[
        "verify",
        "4.1",
        "M2(Z/3)",
        "--samples",
        "200",
        "--seed",
        "3",
    ]);
    assert_eq!(
        (v["instances"].as_u64(), v["seed"].as_u64()),
        (Some(200), Some(3))
    );
    assert_eq!(v["strategy"], "sampled");

    let v = json(&["verify", "5.1", "M2(Z/5)"]);
    assert_eq!(
        (v["strategy"].as_str(), v["instances"].as_u64()),
        (Some("sampled"), Some(10_000))
    );

    assert_eq!(hirano(&["verify", "9.9", "Z/3"]).status.code(), Some(1));
}

#[test]
fn parse_failures_exit_one() {
    for args in [
        &["classify", "Z/5", "[1"][..],
        &["classify", "Q", "1"],
        &["classify", "M9(Z/2)", "0"],
        &["classify", "M2(Z/2)", "[[1,0]]"],
    ] {
        assert_eq!(hirano(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn emitted_elements_parse_back() {
    let v = json(&["classify", "M2(Z/6)", "[[-1,2],[3,4]]"]);
    let ring = parse_ring(v["ring"].as_str().unwrap()).unwrap();
    let elem = parse_element(&ring, v["element"].as_str().unwrap()).unwrap();
    assert_eq!(elem, ring.elem(&[5, 2, 3, 4]).unwrap());
    let b = parse_element(&ring, v["drazin"]["inverse"].as_str().unwrap()).unwrap();
    assert_eq!(b.to_string(), v["drazin"]["inverse"]);
}

#[test]
fn json_keys_are_sorted() {
    let o = hirano(&["census", "Z/6", "--json"]);
    let out = stdout(&o);
    let a = out.find("\"counts\"").unwrap();
    let b = out.find("\"cross_check\"").unwrap();
    let c = out.find("\"witnesses\"").unwrap();
    assert!(a < b && b < c);
}
