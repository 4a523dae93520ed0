//! End-to-end runs of the `rotsys` binary.

use std::path::Path;
use std::process::{Command, Output};

use rotsys_cli::{parse_embeddings, write_embedding};

fn rotsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rotsys"))
        .args(args)
        .env("ROTSYS_WORKERS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const THETA5_2: &str = "graph theta5-2
vertices 2
edge 1 1 2
edge 2 1 2
edge 3 1 2
edge 4 1 2
edge 5 1 2
rot 1: 1 2 3 4 5
rot 2: 1 2 3 4 5
";

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn genus_faces_and_word_of_a_native_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("theta.rot");
    std::fs::write(&file, THETA5_2).unwrap();
    let f = file.to_str().unwrap();

    let o = rotsys(&["genus", f]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "theta5-2: vertices 2 edges 5 faces 1 genus 2\n");

    let o = rotsys(&["faces", f]);
    assert!(stdout(&o).contains("face 1 length 10"));

    let o = rotsys(&["word", f]);
    assert_eq!(
        stdout(&o),
        "theta5-2: a+b+c+d+e+a-b-c-d-e-\n  orientable genus 2, 2 corners\n"
    );
}

#[test]
fn converted_tables_classify_as_published() {
    let dir = tempfile::tempdir().unwrap();
    for (table, file, summary) in [
        (
            "appendixA",
            "appendix_a.txt",
            "31 embeddings, 31 classes (14+17 or+non)",
        ),
        (
            "appendixB",
            "appendix_b.txt",
            "13 embeddings, 13 classes (11+2 or+non)",
        ),
    ] {
        let o = rotsys(&["convert", table, &data(file)]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let text = stdout(&o);
        // the converted text is itself canonical
        let docs = parse_embeddings(&text).unwrap();
        let rewritten: String = docs
            .iter()
            .map(|d| write_embedding(&d.name, &d.embedding))
            .collect();
        let stripped: String = text
            .lines()
            .filter(|l| !l.starts_with('#') && !l.is_empty())
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(rewritten, stripped);

        let out = dir.path().join(format!("{table}.rot"));
        std::fs::write(&out, text).unwrap();
        let o = rotsys(&["classify", out.to_str().unwrap()]);
        assert!(o.status.success());
        assert!(stdout(&o).starts_with(summary), "{}", stdout(&o));
    }
}

#[test]
fn enumerate_and_theta_commands() {
    let o = rotsys(&["enumerate", "--graph", "K3,3", "--distribution"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("genus 1\tclasses 2\t"));
    assert!(text.contains("genus 2\tclasses 1\tor 0\tnon 1"));

    let o = rotsys(&["enumerate", "--graph", "K5", "--genus", "3", "--one-face"]);
    assert!(stdout(&o).starts_with("complete(5): 7776 systems, 13 classes (11+2 or+non)"));

    let o = rotsys(&["theta", "--m", "5", "--genus", "2", "--mode", "iso"]);
    assert!(stdout(&o).starts_with("theta5 one-face genus 2: 3 classes (0+3 or+non)"));

    let o = rotsys(&["pipeline", "k5"]);
    let text = stdout(&o);
    assert!(text.contains("k5-uv: 192 candidates (72 from w4, 120 from k4plus)"));
    assert!(text
        .lines()
        .last()
        .unwrap()
        .contains("31 classes (14+17 or+non)"));
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k33.tsv");
    let o = rotsys(&[
        "verify",
        "--suite",
        "k33",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("overall PASS"));
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.lines().all(|l| l.split('\t').count() == 4));

    let again = rotsys(&["--workers", "1", "verify", "--suite", "k33", "--tsv"]);
    assert_eq!(stdout(&again), written);
}

#[test]
fn exit_status_two_on_input_and_budget_errors() {
    assert_eq!(
        rotsys(&["verify", "--suite", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(rotsys(&["genus", "/no/such/file"]).status.code(), Some(2));
    let o = rotsys(&["verify", "--suite", "appendixA", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("over the budget"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("loop.rot");
    std::fs::write(&bad, THETA5_2.replace("edge 5 1 2", "edge 5 1 1")).unwrap();
    let o = rotsys(&["genus", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));

    let malformed = dir.path().join("a.txt");
    std::fs::write(&malformed, "K5#43 (or)\n-1 5 [1 0 0 0 0] 4 2 0 0 0 0]\n").unwrap();
    let o = rotsys(&["convert", "appendixA", malformed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn over_budget_torus_rows_are_skipped_not_failed() {
    let o = rotsys(&[
        "verify",
        "--suite",
        "torus-table",
        "--budget",
        "500",
        "--tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("K4 torus classes\t2 (0+2)\t2 (0+2)\tPASS"));
    assert!(text.contains("K5 torus classes\t6 (3+3)\t7776 systems over budget 500\tSKIP"));
}
