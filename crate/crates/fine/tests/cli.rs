//! End-to-end runs of the `fine` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fine::format::PolytopeFile;
use fine_core::polyhedra::Polytope;
use fine_core::shapes;
use tempfile::TempDir;

fn fine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fine")).args(args).env("RUST_LOG", "off").output().expect("run fine")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).expect("write input");
    path
}

fn write_polytope(dir: &TempDir, name: &str, p: &Polytope) -> PathBuf {
    write(dir, name, &PolytopeFile::from_polytope(p).to_json())
}

fn arg(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn fine_interior_of_dilated_triangles() {
    let dir = TempDir::new().unwrap();
    let three = write(&dir, "3d2.json", r#"{"dim": 2, "vertices": [[0,0],[3,0],[0,3]]}"#);
    let two = write(&dir, "2d2.json", r#"{"dim": 2, "vertices": [[0,0],[2,0],[0,2]]}"#);

    let o = fine(&["fine", arg(&three)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(1,1)\n");

    let o = fine(&["fine", arg(&two), "--dilation", "3/2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(1,1)\n");

    let o = fine(&["fine", arg(&two)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "empty\n");

    let o = fine(&["fine", arg(&three), "--brute", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(1,1)\n");
}

#[test]
fn multipliers_of_named_simplices() {
    let dir = TempDir::new().unwrap();
    let s244 = write_polytope(&dir, "s244.json", &shapes::unit_fraction_simplex(&[2, 4, 4]).unwrap());
    let o = fine(&["multipliers", arg(&s244)]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("mu = 5/4\n"), "{}", stdout(&o));

    let s4 = write_polytope(&dir, "s4.json", &shapes::hollow_four_simplex().unwrap());
    let o = fine(&["multipliers", arg(&s4)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("mu = 1\nmu_max = 4/3\n"), "{text}");
}

#[test]
fn bad_input_exit_codes() {
    let dir = TempDir::new().unwrap();
    let garbage = write(&dir, "bad.json", "{ not json");
    assert_eq!(fine(&["fine", arg(&garbage)]).status.code(), Some(2));

    let wide = write(&dir, "wide.json", r#"{"dim": 7, "vertices": [[0,0,0,0,0,0,0]]}"#);
    assert_eq!(fine(&["fine", arg(&wide)]).status.code(), Some(3));

    let ragged = write(&dir, "ragged.json", r#"{"dim": 2, "vertices": [[0,0],[1]]}"#);
    assert_eq!(fine(&["fine", arg(&ragged)]).status.code(), Some(3));
}

#[test]
fn verify_a_file() {
    let dir = TempDir::new().unwrap();
    let p = write_polytope(&dir, "s333.json", &shapes::unit_fraction_simplex(&[3, 3, 3]).unwrap());
    let o = fine(&["verify", arg(&p)]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(text.contains("PASS oracle"), "{text}");
}

#[test]
fn classify_polygons_is_deterministic_across_jobs() {
    let dir = TempDir::new().unwrap();
    let one = dir.path().join("one.jsonl");
    let two = dir.path().join("two.jsonl");
    let a = fine(&["classify", "polygons", "--check", "--jobs", "1", "--out", arg(&one)]);
    let b = fine(&["classify", "polygons", "--check", "--jobs", "2", "--out", arg(&two)]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).ends_with("check passed\n"));
    let records = std::fs::read(&one).unwrap();
    assert_eq!(records, std::fs::read(&two).unwrap());
    // Header line plus one record per class.
    assert_eq!(records.iter().filter(|&&b| b == b'\n').count(), 5);
}
