use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    fs::read_to_string(data(name)).unwrap()
}

fn geneasm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_geneasm"))
        .args(args)
        .env_remove("GENEASM_KAPPA_CAP")
        .output()
        .unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = geneasm(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code_of(args: &[&str]) -> i32 {
    geneasm(args).status.code().unwrap()
}

#[test]
fn encodes_arrangement_compactly() {
    assert_eq!(stdout_of(&["encode", "M7 M1 M6 M3 M5 -M2 M4"]), "72673456-3-245\n");
}

#[test]
fn decodes_back_to_arrangement() {
    assert_eq!(stdout_of(&["decode", "72673456-3-245"]), "M7 M1 M6 M3 M5 -M2 M4\n");
}

#[test]
fn large_arrangements_use_spaced_output() {
    let arrangement: Vec<String> = (1..=10).map(|k| format!("M{k}")).collect();
    let out = stdout_of(&["encode", &arrangement.join(" ")]);
    assert_eq!(out, "2 2 3 3 4 4 5 5 6 6 7 7 8 8 9 9 10 10\n");
}

#[test]
fn counts_components() {
    assert_eq!(stdout_of(&["components", "453475623267"]), "3\n");
    assert_eq!(stdout_of(&["components", "72673456-3-245"]), "2\n");
}

#[test]
fn counts_negative_rules_from_string_and_graph() {
    assert_eq!(stdout_of(&["count-negative", "453475623267"]), "2\n");
    assert_eq!(stdout_of(&["count-negative", "72673456-3-245"]), "1\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    fs::write(&path, stdout_of(&["overlap", "453475623267"])).unwrap();
    assert_eq!(stdout_of(&["count-negative", "--graph", path.to_str().unwrap()]), "2\n");
}

#[test]
fn overlap_graph_matches_golden() {
    assert_eq!(stdout_of(&["overlap", "24535423"]), golden("overlap_24535423.json"));
}

#[test]
fn reduction_graph_dot_matches_golden() {
    let dot = stdout_of(&["reduction-graph", "--format", "dot", "32-43-24"]);
    assert_eq!(dot, golden("reduction_32-43-24.dot"));
    assert_eq!(dot.matches("penwidth=2").count(), 6);
    assert_eq!(dot.matches("style=dashed").count(), 6);
}

#[test]
fn direct_graphs_match_golden() {
    for u in ["453475623267", "72673456-3-245"] {
        assert_eq!(stdout_of(&["direct", u]), golden(&format!("direct_{u}.json")));
    }
    assert_eq!(
        stdout_of(&["direct", "--format", "dot", "453475623267"]),
        golden("direct_453475623267.dot")
    );
    assert_eq!(
        stdout_of(&["direct", "--explain", "453475623267"]),
        golden("explain_453475623267.txt")
    );
}

#[test]
fn direct_dot_and_json_list_the_same_edges() {
    let dot = stdout_of(&["direct", "--format", "dot", "453475623267"]);
    let json = stdout_of(&["direct", "453475623267"]);
    let from_dot: Vec<String> = dot
        .lines()
        .filter_map(|l| l.trim().strip_suffix(';'))
        .filter(|l| l.contains(" -- "))
        .map(|l| l.replace(" -- ", ","))
        .collect();
    let from_json: Vec<String> = json
        .split("],[")
        .map(|e| e.trim_matches(|c: char| !c.is_alphanumeric() && c != ',').replace('"', ""))
        .map(|e| e.rsplit(":[[").next().unwrap().to_string())
        .collect();
    assert_eq!(from_dot, from_json);
}

#[test]
fn explain_lists_both_witness_sets() {
    let out = stdout_of(&["direct", "--explain", "453475623267"]);
    let block: Vec<&str> = out
        .lines()
        .skip_while(|l| *l != "J2 -- J6")
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .collect();
    assert!(block.iter().any(|l| l.contains("P = {3,4,5}:")));
    assert!(block.iter().any(|l| l.contains("P = {2,3,4,5,6}:")));
}

#[test]
fn iso_check_against_stored_graphs() {
    let stored = data("direct_72673456-3-245.json");
    let stored = stored.to_str().unwrap();
    assert_eq!(stdout_of(&["iso-check", "--cps", "72673456-3-245", "--direct", stored]), "isomorphic\n");
    assert_eq!(stdout_of(&["iso-check", "--cps", "453475623267", "--direct", stored]), "not isomorphic\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code_of(&["validate", "23x"]), 2);
    assert_eq!(code_of(&["validate", "2-"]), 2);
    assert_eq!(code_of(&["validate", "223"]), 3);
    assert_eq!(code_of(&["decode", "2323"]), 0);
    assert_eq!(code_of(&["decode", "2-32-3"]), 4);
    let unrealistic = data("overlap_24535423.json");
    assert_eq!(code_of(&["check-realism", "--graph", unrealistic.to_str().unwrap()]), 4);
    assert_eq!(code_of(&["direct", "--graph", unrealistic.to_str().unwrap()]), 4);
    assert_eq!(code_of(&["direct", "24535423"]), 4);
    assert_eq!(code_of(&["encode", "M1 M1"]), 2);
    assert_eq!(code_of(&["components", "-2-33-2"]), 0);
    assert_eq!(code_of(&["no-such-verb"]), 2);
}

#[test]
fn validate_reports_realism() {
    assert_eq!(stdout_of(&["validate", "72673456-3-245"]), "legal=yes kappa=7 realistic=yes\n");
    assert_eq!(stdout_of(&["validate", "2 3 2 3"]), "legal=yes kappa=3 realistic=yes\n");
    assert_eq!(stdout_of(&["validate", "2-32-3"]), "legal=yes kappa=3 realistic=no\n");
}

#[test]
fn realism_cap_comes_from_environment() {
    let g = data("overlap_24535423.json");
    let out = Command::new(env!("CARGO_BIN_EXE_geneasm"))
        .args(["check-realism", "--graph", g.to_str().unwrap()])
        .env("GENEASM_KAPPA_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 3"));
}

#[test]
fn reads_standard_input_and_files() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_geneasm"))
        .arg("components")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"453475623267\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3\n");

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "M7 M1 M6 M3 M5 -M2 M4").unwrap();
    assert_eq!(
        stdout_of(&["encode", "--file", file.path().to_str().unwrap()]),
        "72673456-3-245\n"
    );
}

#[test]
fn classify_table_agrees_with_search() {
    let out = stdout_of(&["classify", "453475623267", "--brute-force"]);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().all(|l| l.ends_with("search=agrees")));
    assert!(out.contains("{Gnr,Gdr} successful"));
    assert!(out.contains("{Gpr,Gdr} unsuccessful"));
    assert_eq!(
        stdout_of(&["classify", "72673456-3-245", "--rules", "gnr,gpr"]),
        "{Gnr,Gpr} successful\n"
    );
}

#[test]
fn empty_graphs_render_empty_dot() {
    assert_eq!(stdout_of(&["reduction-graph", "--format", "dot", ""]), "graph reduction {\n}\n");
}

#[test]
fn random_is_reproducible() {
    let args = ["random", "--kappa", "6", "--seed", "11", "--count", "5"];
    let a = stdout_of(&args);
    assert_eq!(a, stdout_of(&args));
    assert_eq!(a.lines().count(), 5);
    for line in a.lines() {
        let (arrangement, string) = line.split_once('\t').unwrap();
        assert_eq!(stdout_of(&["encode", arrangement]).trim(), string);
    }
    assert_ne!(a, stdout_of(&["random", "--kappa", "6", "--seed", "12", "--count", "5"]));
}

#[test]
fn crossval_summary_is_deterministic() {
    let args = ["crossval", "--trials", "200", "--kappa", "7", "--seed", "7"];
    let out = stdout_of(&args);
    assert_eq!(out, golden("crossval_200_7_7.txt"));
    assert_eq!(out, stdout_of(&args));
}

#[test]
fn random_and_crossval_need_a_seed() {
    assert_eq!(code_of(&["random", "--kappa", "4"]), 2);
    assert_eq!(code_of(&["crossval", "--trials", "3"]), 2);
}
