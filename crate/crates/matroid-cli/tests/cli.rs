//! End-to-end CLI tests, including the determinism acceptance criterion:
//! two runs of the full verification sweep must produce byte-identical
//! reports.

use std::io::Write;
use std::process::{Command, Output};

fn matroid_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matroid"))
        .args(args)
        .env_remove("MATROID_MAX_SIZE")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = matroid_cmd(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn value_of(output: &str, key: &str) -> String {
    for line in output.lines() {
        if let Some((k, v)) = line.split_once('\t') {
            if k == key {
                return v.to_string();
            }
        }
    }
    panic!("key {key} not found in output:\n{output}");
}

#[test]
fn acceptance_criterion_11_determinism() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--max-size",
        "6",
        "--seed",
        "0",
        "--format",
        "machine",
    ];
    let first = matroid_cmd(&args);
    let second = matroid_cmd(&args);
    assert!(first.status.success(), "verify run failed");
    assert_eq!(
        first.stdout, second.stdout,
        "verify reports are not byte-identical"
    );
    let text = String::from_utf8(first.stdout).unwrap();
    assert_eq!(value_of(&text, "output.failures"), "0");
    println!("acceptance 11 determinism: pass");
}

#[test]
fn rank_of_fano_triple() {
    let out = stdout_of(&[
        "rank",
        "--matroid",
        "fano",
        "--set",
        "1,2,3",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.rank"), "2");
}

#[test]
fn lambda_of_uniform_partition() {
    let out = stdout_of(&[
        "lambda",
        "--matroid",
        "uniform:2,4",
        "--partition",
        "a,b|c,d",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.lambda"), "2");
}

#[test]
fn closure_in_fano() {
    let out = stdout_of(&[
        "closure",
        "--matroid",
        "fano",
        "--set",
        "1,2",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.closure"), "1,2,3");
}

#[test]
fn guts_cut_of_vamos_pair_family() {
    let out = stdout_of(&[
        "guts-cut",
        "--matroid",
        "vamos",
        "--family",
        "a1,a2|b1,b2",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.covers_ground"), "false");
    assert_eq!(value_of(&out, "output.valid"), "false");
    assert!(value_of(&out, "output.violation").contains("c1,c2"));
    assert!(value_of(&out, "output.violation").contains("d1,d2"));
}

#[test]
fn quotient_and_reconstruction() {
    let out = stdout_of(&[
        "quotient",
        "--n",
        "uniform:1,3",
        "--m",
        "uniform:2,3",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.quotient"), "true");
    let out = stdout_of(&[
        "discrepancy",
        "--n",
        "uniform:1,3",
        "--m",
        "uniform:2,3",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.discrepancy"), "1");
    let out = stdout_of(&[
        "reconstruct-projection",
        "--n",
        "uniform:1,3",
        "--m",
        "uniform:2,3",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.removed_size"), "1");
}

#[test]
fn domain_error_exits_2() {
    let out = matroid_cmd(&[
        "discrepancy",
        "--n",
        "uniform:2,3",
        "--m",
        "uniform:1,3",
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("quotient"));
}

#[test]
fn usage_error_exits_1() {
    let out = matroid_cmd(&["rank", "--matroid", "fano"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_catalog_name_exits_2() {
    let out = matroid_cmd(&["rank", "--matroid", "nonesuch", "--set", "a"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spec_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let text = r#"{
  "name": "demo",
  "kind": { "uniform": { "rank": 2, "size": 4 } }
}"#;
    std::fs::File::create(&path)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
    let arg = format!("@{}", path.display());
    let out = stdout_of(&["build", "--matroid", &arg, "--format", "machine"]);
    assert_eq!(value_of(&out, "output.rank"), "2");
    assert_eq!(value_of(&out, "output.size"), "4");

    // exported spec parses back to the same matroid
    let spec_json = value_of(&out, "output.spec");
    let path2 = dir.path().join("exported.json");
    std::fs::File::create(&path2)
        .unwrap()
        .write_all(spec_json.as_bytes())
        .unwrap();
    let arg2 = format!("@{}", path2.display());
    let out2 = stdout_of(&[
        "rank",
        "--matroid",
        &arg2,
        "--set",
        "a,b,c",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out2, "output.rank"), "2");
}

#[test]
fn env_var_caps_enumeration() {
    let out = Command::new(env!("CARGO_BIN_EXE_matroid"))
        .args(["flats", "--matroid", "uniform:2,4", "--format", "machine"])
        .env("MATROID_MAX_SIZE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));

    // the flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_matroid"))
        .args([
            "flats",
            "--matroid",
            "uniform:2,4",
            "--max-size",
            "8",
            "--format",
            "machine",
        ])
        .env("MATROID_MAX_SIZE", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(value_of(&text, "output.count"), "6");
}

#[test]
fn byte_stable_rank_output() {
    let args = [
        "rank",
        "--matroid",
        "fano",
        "--set",
        "1,2,3",
        "--format",
        "machine",
    ];
    assert_eq!(matroid_cmd(&args).stdout, matroid_cmd(&args).stdout);
}

#[test]
fn exported_vamos_builds_and_passes_axioms() {
    // export the catalog entry as an explicit-bases spec, read it back
    let out = stdout_of(&["build", "--matroid", "vamos", "--format", "machine"]);
    assert_eq!(value_of(&out, "output.rank"), "4");
    let spec_json = value_of(&out, "output.spec");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("vamos.json");
    std::fs::File::create(&path)
        .unwrap()
        .write_all(spec_json.as_bytes())
        .unwrap();
    let arg = format!("@{}", path.display());
    // building an explicit-bases spec validates exchange on load
    let out2 = stdout_of(&["build", "--matroid", &arg, "--format", "machine"]);
    assert_eq!(value_of(&out2, "output.rank"), "4");
    assert_eq!(value_of(&out2, "output.size"), "8");
    let out3 = stdout_of(&[
        "rank",
        "--matroid",
        &arg,
        "--set",
        "a1,a2,b1,b2",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out3, "output.rank"), "3");
}

#[test]
fn lambda_of_single_set() {
    let out = stdout_of(&[
        "lambda",
        "--matroid",
        "graphic:K4",
        "--set",
        "a,b,d",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.lambda"), "2");
}

#[test]
fn catalog_listing() {
    let out = stdout_of(&["catalog", "--format", "machine"]);
    assert!(out.contains("catalog.fano"));
    assert!(out.contains("catalog.vamos"));
    assert!(out.contains("catalog.uniform:2,4"));
}

#[test]
fn extend_and_project_by_cli() {
    let out = stdout_of(&[
        "extend",
        "--matroid",
        "uniform:2,3",
        "--label",
        "d",
        "--cut",
        "a,b,c",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.rank"), "2");
    assert!(value_of(&out, "output.spec").contains("\"d\""));

    let out = stdout_of(&[
        "project-by",
        "--matroid",
        "uniform:2,3",
        "--cut",
        "a,b,c",
        "--format",
        "machine",
    ]);
    assert_eq!(value_of(&out, "output.rank"), "1");
}

#[test]
fn verify_single_suite() {
    let out = stdout_of(&[
        "verify",
        "--suite",
        "connselfdual",
        "--max-size",
        "5",
        "--format",
        "machine",
    ]);
    let row = value_of(&out, "suite.connselfdual");
    assert!(row.ends_with("pass"), "row: {row}");
}
