use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn knotforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotforge"))
        .args(args)
        .output()
        .expect("run knotforge")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let out = knotforge(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("knotforge-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn knot_by_name_text() {
    let out = knotforge(&["knot", "3_1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in [
        "H0 = Z",
        "H1 = Z",
        "H2 = 0",
        "3-colorings = 9",
        "5-colorings = 5",
    ] {
        assert!(
            text.lines().any(|l| l == line),
            "missing {line:?} in\n{text}"
        );
    }
}

#[test]
fn pd_input_matches_table_homology() {
    let by_name = json(&["knot", "3_1", "--format", "json"]);
    let by_pd = json(&[
        "knot",
        "--pd",
        "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        "--format",
        "json",
    ]);
    for key in ["h0", "h1", "h2", "colorings"] {
        assert_eq!(by_name[key], by_pd[key], "{key}");
    }
    assert_eq!(by_pd["source"]["kind"], "pd");
    assert_eq!(by_name["source"]["kind"], "table");
}

#[test]
fn gauss_input() {
    let r = json(&[
        "knot",
        "--gauss",
        "O1+U2+O3+U1+O2+U3+",
        "--format",
        "json",
        "--colorings",
        "3",
    ]);
    assert_eq!(r["pi1"]["generator_count"], 3);
    assert_eq!(r["h1"], serde_json::json!({"rank": 1, "torsion": []}));
    assert_eq!(r["colorings"], serde_json::json!({"3": 9}));
}

#[test]
fn json_shape() {
    let r = json(&["knot", "4_1", "--format", "json"]);
    let pi1 = &r["pi1"];
    assert_eq!(pi1["generators"], serde_json::json!(["a", "b", "c", "d"]));
    let relators = pi1["relators"].as_array().unwrap();
    assert_eq!(relators.len(), 3);
    for rel in relators {
        let g = rel["generators"].as_array().unwrap();
        let e = rel["exponents"].as_array().unwrap();
        assert_eq!(g.len(), e.len());
        assert!(e.iter().all(|x| x == 1 || x == -1));
    }
    assert!(pi1["text"].as_str().unwrap().starts_with('⟨'));
    assert_eq!(r["colorings"], serde_json::json!({"3": 3, "5": 25, "7": 7}));
}

#[test]
fn unknown_name_exits_2() {
    let out = knotforge(&["knot", "nonexistent_99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("nonexistent_99"));
}

#[test]
fn malformed_codes_exit_2() {
    for args in [
        vec!["knot", "--pd", "X(1,2,3)"],
        vec!["knot", "--pd", "X(1,2,3,4) X(1,2,3,4)"],
        vec!["knot", "--gauss", "O1+U1-"],
        vec!["knot", "--gauss", "Q1+"],
    ] {
        assert_eq!(knotforge(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn usage_errors_are_nonzero() {
    assert_ne!(knotforge(&["knot"]).status.code(), Some(0));
    assert_ne!(
        knotforge(&["knot", "3_1", "--pd", "X(1,1,2,2)"])
            .status
            .code(),
        Some(0)
    );
    assert_ne!(
        knotforge(&["knot", "3_1", "--colorings", "1"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn heegaard_files() {
    let cases = [
        ("p3", "genus 1\na a\n", 0, vec![2]),
        ("s3", "genus 1\na\n", 0, vec![]),
        ("h3", "genus 3\n", 3, vec![]),
        ("l5", "# lens space\ngenus 1\na^5\n", 0, vec![5]),
    ];
    for (name, contents, rank, torsion) in cases {
        let path = scratch(name, contents);
        let r = json(&["heegaard", path.to_str().unwrap(), "--format", "json"]);
        std::fs::remove_file(&path).unwrap();
        assert_eq!(
            r["h1"],
            serde_json::json!({"rank": rank, "torsion": torsion}),
            "{name}"
        );
        assert!(r.get("h2").is_none());
        assert!(r.get("colorings").is_none());
        assert_eq!(r["source"]["kind"], "heegaard");
    }
}

#[test]
fn heegaard_text_and_errors() {
    let path = scratch("p3-text", "genus 1\na a\n");
    let out = knotforge(&["heegaard", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert!(stdout(&out).contains("H1 = Z/2\n"));

    assert_eq!(
        knotforge(&["heegaard", "/nonexistent/knotforge/file"])
            .status
            .code(),
        Some(2)
    );
    let bad = scratch("bad", "genus 1\na b\n");
    let out = knotforge(&["heegaard", bad.to_str().unwrap()]);
    std::fs::remove_file(&bad).unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_list_and_show() {
    let list = stdout(&knotforge(&["table", "list"]));
    for name in ["3_1", "4_1", "5_1", "5_2"] {
        assert!(list.lines().any(|l| l == name), "{name}");
    }
    let show = knotforge(&["table", "show", "5_2"]);
    assert_eq!(show.status.code(), Some(0));
    assert!(stdout(&show).starts_with("X("));
    assert_eq!(
        knotforge(&["table", "show", "nonexistent_99"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn custom_table() {
    let path = scratch("table.tsv", "kink\tX(1,1,2,2)\n");
    let p = path.to_str().unwrap();
    let list = stdout(&knotforge(&["table", "list", "--table", p]));
    let r = json(&["knot", "kink", "--table", p, "--format", "json"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(list, "kink\n");
    assert_eq!(r["h1"], serde_json::json!({"rank": 1, "torsion": []}));
}

#[test]
fn text_and_json_agree() {
    for name in ["3_1", "4_1", "5_2"] {
        let text = stdout(&knotforge(&["knot", name]));
        let r = json(&["knot", name, "--format", "json"]);
        for (key, label) in [("h0", "H0"), ("h1", "H1"), ("h2", "H2")] {
            let rank = r[key]["rank"].as_u64().unwrap();
            let expected = match rank {
                0 => "0".to_string(),
                1 => "Z".to_string(),
                r => format!("Z^{r}"),
            };
            assert!(r[key]["torsion"].as_array().unwrap().is_empty());
            assert!(
                text.contains(&format!("{label} = {expected}\n")),
                "{name} {label}"
            );
        }
        for (n, count) in r["colorings"].as_object().unwrap() {
            assert!(
                text.contains(&format!("{n}-colorings = {count}\n")),
                "{name} n={n}"
            );
        }
    }
}
