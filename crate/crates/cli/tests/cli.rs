use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semirep")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn quiver_json_partition_lattice() {
    let o = run(&["quiver", "--input", &data("sigma3_opposite.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    let arrows: u64 = v["arrows"].as_array().unwrap().iter().map(|a| a["mult"].as_u64().unwrap()).sum();
    assert_eq!(arrows, 6);
}

#[test]
fn rees_is_reported_not_directed() {
    let o = run(&["directed", "--input", &data("rees_c2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("not directed"));
    assert!(out.contains("expansion rank 3 of 4"));
}

#[test]
fn non_regular_input_exits_2() {
    let o = run(&["quiver", "--input", &data("nonregular.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("element 1"));
}

#[test]
fn non_associative_input_exits_1() {
    let o = run(&["analyze", "--input", &data("nonassociative.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("(1*1)*2"));
}

#[test]
fn missing_file_and_bad_flags_exit_1() {
    assert_eq!(run(&["nico", "--input", "/nonexistent.json"]).status.code(), Some(1));
    assert_eq!(run(&["nico"]).status.code(), Some(1));
    assert_eq!(
        run(&["quiver", "--input", &data("sigma2_opposite.json"), "--char-table", "7=x.json"]).status.code(),
        Some(1)
    );
}

#[test]
fn left_regular_band_is_a_precondition_failure() {
    let o = run(&["quiver", "--input", &data("sigma2.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dot_output_is_byte_identical() {
    let args = ["quiver", "--input", &data("sigma2_c2_opposite.json"), "--format", "dot"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("digraph quiver {\n") && text.ends_with("}\n"));
    assert_eq!(text.matches(" -> ").count(), 4);
}

#[test]
fn oracle_flags_report_agreement() {
    for args in [
        vec!["quiver", "--input", &data("sigma2_c2_opposite.json"), "--oracle"],
        vec!["cartan", "--input", &data("sigma3_opposite.json"), "--oracle"],
        vec!["gbar", "--generators", &data("c4_regular.json"), "--oracle"],
        vec!["hsiao", "--n", "3", "--mode", "both", "--oracle"],
    ] {
        let o = run(&args.iter().map(|s| s.as_ref()).collect::<Vec<&str>>());
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert!(stdout(&o).contains("oracle agrees"), "{args:?}");
    }
}

#[test]
fn cartan_json_two_element_chain() {
    let o = run(&["cartan", "--input", &data("sigma2_opposite.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // minimal class first
    assert_eq!(v["matrix"], serde_json::json!([[1, 0], [1, 1]]));
}

#[test]
fn hsiao_with_symmetric_group_table() {
    let o = run(&[
        "hsiao",
        "--n",
        "2",
        "--group-table",
        &data("s3_group.json"),
        "--char-table",
        &data("s3_table.json"),
        "--mode",
        "both",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("closed form and general algorithm agree"));
    let o = run(&["hsiao", "--n", "2", "--group-table", &data("s3_group.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_and_gbar() {
    let expect = [("c3", "finite"), ("c4", "finite"), ("c5", "tame"), ("c6", "wild")];
    for (g, kind) in expect {
        let o = run(&["classify", "--generators", &data(&format!("{g}_regular.json"))]);
        assert!(stdout(&o).contains(&format!("{kind} representation type")), "{g}");
    }
    let o = run(&["classify", "--generators", &data("intransitive.json")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["gbar", "--generators", &data("s3_natural.json"), "--char-table", &data("s3_table.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("-> J0:[2,1] x1"));
}

#[test]
fn analyze_and_nico_text() {
    let o = run(&["analyze", "--input", &data("rees_c2.json")]);
    let out = stdout(&o);
    assert!(out.contains("principal order: J0 < J1"));
    assert!(out.contains("rrbg: false"));
    let o = run(&["nico", "--input", &data("sigma2_opposite.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bound"], 1);
}
