use std::process::{Command, Output};

use serde_json::Value;

fn oscillo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oscillo")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn roots_tables() {
    let out = oscillo(&["roots", "--type", "G", "--rank", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
    assert_eq!(v["dual_type"], "G2");

    let out = oscillo(&["roots", "--type", "A", "--rank", "1"]);
    assert_eq!(json(&out)["rows"].as_array().unwrap().len(), 1);

    let out = oscillo(&["roots", "--type", "B", "--rank", "3"]);
    assert_eq!(json(&out)["dual_type"], "C3");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["roots", "--type", "H", "--rank", "2"][..],
        &["roots", "--type", "G", "--rank", "3"],
        &["verify", "--type", "A", "--rank", "2", "--theta", "1,x"],
        &["kostant", "--type", "A", "--rank", "2", "--theta", "1,-1"],
        &["kostant", "--type", "A", "--rank", "2", "--theta", "1,1,1"],
        &["plo-stalk", "--type", "A", "--rank", "2", "--config", "1,0@x;0,1@x"],
        &["plo-stalk", "--type", "A", "--rank", "1", "--pattern", "2,0"],
        &["uea", "mul", "--type", "A", "--rank", "2", "--lhs", "e3", "--rhs", "e1"],
        &["diag", "--type", "A", "--rank", "2", "--theta", "0,0"],
        &["fixture", "--type", "A", "--rank", "2", "--theta", "1,1"],
        &["no-such-command"],
    ] {
        let out = oscillo(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn kostant_a2() {
    let v = json(&oscillo(&["kostant", "--type", "A", "--rank", "2", "--theta", "1,1"]));
    assert_eq!(v["count"], 2);
    assert_eq!(v["partitions"].as_array().unwrap().len(), 2);
}

#[test]
fn plo_stalk_a2_point() {
    let v = json(&oscillo(&["plo-stalk", "--type", "A", "--rank", "2", "--config", "1,1@x"]));
    assert_eq!(v["character"]["text"], "q + q^(1/2) + 2 + q^(-1/2) + q^-1");
    let by_length = v["by_length"].as_array().unwrap();
    assert_eq!(by_length.len(), 2);
    assert_eq!(by_length[0]["character"]["text"], "q^(1/2) + q^(-1/2)");

    let v = json(&oscillo(&["plo-stalk", "--type", "A", "--rank", "1", "--pattern", "3"]));
    assert_eq!(v["character"]["text"], "0");
}

#[test]
fn diag_all_coroots() {
    let out = oscillo(&["diag", "--type", "G", "--rank", "2", "--all-coroots"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for r in rows {
        assert_eq!(r["s1"]["text"], "-q + 1");
        assert_eq!(r["s2"]["text"], "2");
        assert_eq!(r["decomposition"][0]["dim"], 2);
    }
    let md = oscillo(&["diag", "--type", "A", "--rank", "1", "--theta", "1", "--format", "markdown"]);
    let text = String::from_utf8(md.stdout).unwrap();
    assert!(text.contains("Qℓ(0)") && text.contains("Qℓ(1)"));
}

#[test]
fn verify_passes() {
    let out = oscillo(&["verify", "--type", "A", "--rank", "2", "--max-length", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true));

    let v = json(&oscillo(&["verify", "--type", "G", "--rank", "2"]));
    assert_eq!(v["passed"], true);
    let s1_coroot_rows = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["check"] == "S1" && c["expected"] == "-q + 1")
        .count();
    assert_eq!(s1_coroot_rows, 6);
}

#[test]
fn uea_commands() {
    let v = json(&oscillo(&["uea", "mul", "--type", "A", "--rank", "2", "--lhs", "e2", "--rhs", "e1"]));
    assert_eq!(v["product"]["text"], "-E3 + E1*E2");

    let v = json(&oscillo(&["uea", "dims", "--type", "B", "--rank", "2", "--max-length", "4"]));
    assert_eq!(v["passed"], true);
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["dim"], row["kostant_count"]);
    }

    let out = oscillo(&["uea", "check", "--type", "B", "--rank", "2", "--hopf", "--assoc"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn fixture_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = oscillo(&["fixture", "--type", "A", "--rank", "2", "--theta", "1,1", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let (x, y) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(x, y);
    let v: Value = serde_json::from_slice(&x).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["kostant"]["count"], 2);
}

#[test]
fn unwritable_path_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("f.json");
    let out = oscillo(&["fixture", "--type", "A", "--rank", "2", "--theta", "1,1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}
