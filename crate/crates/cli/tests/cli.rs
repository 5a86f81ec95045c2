use std::process::{Command, Output};

fn edbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edbound")).args(args).output().expect("binary runs")
}

fn json(out: &[u8]) -> serde_json::Value {
    serde_json::from_slice(out).expect("valid JSON")
}

fn error_category(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(2));
    json(&out.stderr)["error"]["category"].as_str().unwrap().to_owned()
}

fn data(name: &str) -> String {
    format!("{}/../core/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn bound_reports() {
    let out = edbound(&["bound", "A5", "--json"]);
    assert!(out.status.success());
    let v = json(&out.stdout);
    assert_eq!(v["schema"], "edbound.bound/1");
    assert_eq!((v["f"].as_u64(), v["s"].as_u64()), (Some(2), Some(1)));
    assert_eq!(v["branch"], "projective");
    assert_eq!(v["bound"], "upper");
    assert!(v["seed"].is_u64());

    let v = json(&edbound(&["bound", "A6", "--with-optional", "--json"]).stdout);
    assert_eq!((v["s"].as_u64(), v["source"].as_str()), (Some(2), Some("3.A6")));

    let text = String::from_utf8(edbound(&["bound", "PSL(3,2)"]).stdout).unwrap();
    assert!(text.contains("s = f - 1 = 2"), "{text}");
    assert!(text.contains("UPPER bound"));
}

#[test]
fn degrees_round_trip() {
    let dir = std::env::temp_dir().join(format!("edbound-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a6.toml");
    let out = edbound(&["degrees", "A6", "--with-optional"]);
    assert!(out.status.success());
    std::fs::write(&path, &out.stdout).unwrap();
    let v = json(&edbound(&["bound", "--degrees-from", path.to_str().unwrap(), "--json"]).stdout);
    assert_eq!(v["s"], 2);
    assert_eq!(v["simple_verified"], false);
    std::fs::remove_dir_all(&dir).unwrap();

    let v = json(&edbound(&["bound", "--degrees-from", &data("a9_degrees.toml"), "--json"]).stdout);
    assert_eq!((v["s"].as_u64(), v["alternating"]["consistent"].as_bool()), (Some(6), Some(true)));
}

#[test]
fn errors_are_categorized() {
    assert_eq!(error_category(&edbound(&["bound", "M24"])), "unknown-base");
    assert_eq!(error_category(&edbound(&["bound"])), "precondition");
    assert_eq!(error_category(&edbound(&["lie", "classify", "so4"])), "not-simple");
    assert_eq!(error_category(&edbound(&["lie", "table", "B", "4"])), "invalid-parameter");
    assert_eq!(error_category(&edbound(&["contain", "A5", "--faithful", "0"])), "not-faithful");
    assert_eq!(error_category(&edbound(&["lie", "subalgebra", "sl2", "--basis", "0,1,0;0,0,1"])), "not-closed");
}

#[test]
fn catalog_commands() {
    let out = edbound(&["catalog", "verify", "--json"]);
    assert!(out.status.success());
    let v = json(&out.stdout);
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["passed"] == true));
    let list = String::from_utf8(edbound(&["catalog", "list"]).stdout).unwrap();
    assert!(list.contains("3.A6") && list.contains("optional"), "{list}");
}

#[test]
fn group_and_lie_commands() {
    let v = json(&edbound(&["group", "info", "SL(2,7)", "--json"]).stdout);
    assert_eq!((v["order"].as_u64(), v["center_order"].as_u64()), (Some(336), Some(2)));
    assert_eq!(v["simple"], false);

    let v = json(&edbound(&["chartable", "A5", "--json"]).stdout);
    assert_eq!(v["degrees"], serde_json::json!([1, 3, 3, 4, 5]));

    let v = json(&edbound(&["lie", "rank", "sl3", "--json"]).stdout);
    assert_eq!((v["rank"]["rank"].as_u64(), v["rank"]["certified"].as_bool()), (Some(2), Some(true)));

    let v = json(&edbound(&["lie", "subalgebra", "sl2", "--basis", "1,0,0;0,1,0", "--json"]).stdout);
    assert_eq!(v["index"], 1);
}
