use std::path::Path;
use std::process::{Command, Output};

fn symtype(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symtype"))
        .args(args)
        .env_remove("SYMTYPE_ALIASES")
        .output()
        .expect("run symtype")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no `{key}` in\n{report}"))
}

#[test]
fn census_row_for_k5() {
    let o = symtype(&["enumerate", "--k", "5", "--census"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["5", "13", "3", "3", "3", "3", "3", "3", "raw"]);

    let o = symtype(&["enumerate", "--k", "4", "--census", "--format", "records", "--duality-mode", "conjugacy"]);
    assert_eq!(
        stdout(&o).trim(),
        "census k=4 a=22 b=8 c=8 d=17 e=15 f=15 g=20 mode=conjugacy"
    );
}

#[test]
fn analyze_medial_of_cube() {
    let dir = tempfile::tempdir().unwrap();
    let me = dir.path().join("me.flg");
    let o = symtype(&["transform", "--op", "medial", "builtin:cube", "-o", me.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = symtype(&["analyze", me.to_str().unwrap()]);
    assert!(o.status.success());
    let report = stdout(&o);
    assert_eq!(field(&report, "orbits"), "2");
    assert_eq!(field(&report, "alias"), "2_01");
    assert_eq!(field(&report, "medial"), "yes");
    assert_eq!(field(&report, "flags"), "96");
    assert_eq!(field(&report, "euler"), "2");
}

#[test]
fn analyze_builtins() {
    let report = stdout(&symtype(&["analyze", "builtin:tetrahedron"]));
    assert_eq!(field(&report, "schlafli"), "{3,3}");
    assert_eq!(field(&report, "automorphisms"), "24");
    assert_eq!(field(&report, "self_dual"), "yes (proper)");
    assert_eq!(field(&report, "alias"), "1");
    let report = stdout(&symtype(&["analyze", "builtin:torus44(3,0,0,3)"]));
    assert_eq!(field(&report, "euler"), "0");
    assert!(field(&report, "self_dual").starts_with("yes"));
}

#[test]
fn klein_bottle_files() {
    for file in ["klein_3x4.flg", "klein_3x4.map"] {
        let o = symtype(&["analyze", &data(file)]);
        assert!(o.status.success(), "{}", stderr(&o));
        let report = stdout(&o);
        assert_eq!(field(&report, "euler"), "0");
        assert_eq!(field(&report, "orientable"), "no");
        assert_eq!(field(&report, "schlafli"), "{4,4}");
    }
    let o = symtype(&["validate", &data("klein_3x4.flg")]);
    assert_eq!(stdout(&o), "ok: flg n=96\n");
}

#[test]
fn demedialize_rejects_tetrahedron() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x");
    let o = symtype(&["transform", "--op", "demedialize", "builtin:tetrahedron", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: NotAMedial: "));
}

#[test]
fn demedialize_writes_dual_pair() {
    let dir = tempfile::tempdir().unwrap();
    let me = dir.path().join("co.flg");
    let me = me.to_str().unwrap();
    symtype(&["transform", "--op", "medial", "builtin:cube", "-o", me]);
    let o = symtype(&["transform", "--op", "demedialize", me]);
    assert!(o.status.success(), "{}", stderr(&o));
    let mut vertices = Vec::new();
    for suffix in ["a", "b"] {
        let report = stdout(&symtype(&["analyze", &format!("{me}.{suffix}")]));
        vertices.push(field(&report, "vertices").to_string());
    }
    vertices.sort();
    assert_eq!(vertices, ["6", "8"]);
}

#[test]
fn transforms_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("p1.flg");
    let p2 = dir.path().join("p2.flg");
    symtype(&["transform", "--op", "petrie", "builtin:cube", "-o", p1.to_str().unwrap()]);
    symtype(&["transform", "--op", "petrie", p1.to_str().unwrap(), "-o", p2.to_str().unwrap()]);
    let cube = stdout(&symtype(&["transform", "--op", "dual", "builtin:octahedron"]));
    let back = std::fs::read_to_string(&p2).unwrap();
    assert!(back.starts_with("flg 1\nn 48\n"));
    assert!(cube.starts_with("flg 1\nn 48\n"));
    let report = stdout(&symtype(&["analyze", p1.to_str().unwrap()]));
    // hexagonal Petrie polygons of the cube: {6,3} on the torus
    assert_eq!(field(&report, "faces"), "4");
    assert_eq!(field(&report, "euler"), "0");
    assert_eq!(field(&report, "orientable"), "yes");
    let o = symtype(&["transform", "--op", "opposite", "builtin:cube"]);
    assert!(o.status.success());
}

#[test]
fn typegraph_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("t.dot");
    let o = symtype(&["typegraph", "builtin:tetrahedron", "-o", dot.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.matches("[shape=point]").count(), 3);
    let stg = stdout(&symtype(&["typegraph", "builtin:cube"]));
    assert_eq!(stg, "stg 1\nn 1\nt0 0\nt1 0\nt2 0\n");
}

#[test]
fn errors_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.flg");
    std::fs::write(&bad, "flg 1\nn 4\ns0 1 0 3 2\ns1 1 0 3\ns2 2 3 0 1\n").unwrap();
    let o = symtype(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: Syntax: line 4"), "{}", stderr(&o));

    std::fs::write(&bad, "stg 1\nn 2\nt0 1 0\nt1 1 0\nt2 0 0\n").unwrap();
    let o = symtype(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: InvalidTypeGraph: "));

    let o = symtype(&["validate", "/nonexistent/file.flg"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: Io: "));

    assert_eq!(symtype(&["enumerate"]).status.code(), Some(2));
    assert_eq!(symtype(&["transform", "--op", "twist", "x"]).status.code(), Some(2));
    assert_eq!(symtype(&["enumerate", "--k", "3", "--format", "dot-dir"]).status.code(), Some(2));
}

#[test]
fn enumerate_is_deterministic_and_writes_dot_files() {
    let a = symtype(&["enumerate", "--k", "6", "--format", "records"]);
    let b = symtype(&["enumerate", "--k", "6", "--format", "records", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 70);

    let dir = tempfile::tempdir().unwrap();
    let o = symtype(&["enumerate", "--k", "5", "--format", "dot-dir", "-o", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 13);
    let first = std::fs::read_to_string(dir.path().join("5_0.dot")).unwrap();
    let nodes = first.lines().filter(|l| !l.contains("--") && !l.contains("shape") && l.ends_with(';'));
    assert_eq!(nodes.count(), 5);
}

#[test]
fn medial_listing() {
    let out = stdout(&symtype(&["enumerate", "--k", "2", "--medial", "--format", "records"]));
    assert!(out.contains("name=2_12 source=2:0,1|1,0|0,1 how=proper"));
    assert!(out.contains("name=2_01 source=1:0|0|0 how=none"));
}

#[test]
fn alias_file_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let aliases = dir.path().join("aliases.txt");
    std::fs::write(&aliases, "# test aliases\nmedial_cube 2:0,1|0,1|1,0\n").unwrap();
    let me = dir.path().join("me.flg");
    symtype(&["transform", "--op", "medial", "builtin:cube", "-o", me.to_str().unwrap()]);
    let o = Command::new(env!("CARGO_BIN_EXE_symtype"))
        .args(["analyze", me.to_str().unwrap()])
        .env("SYMTYPE_ALIASES", &aliases)
        .output()
        .unwrap();
    assert_eq!(field(&stdout(&o), "alias"), "medial_cube");
}

#[test]
fn selftest_small() {
    let o = symtype(&["selftest", "--max-k", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("[PASS]")).count(), 12);
}
