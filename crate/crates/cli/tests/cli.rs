use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data").join(name).display().to_string()
}

fn poly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poly")).args(args).env_remove("POLY_BUDGET").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dim_and_height_of_the_square() {
    let o = poly(&["dim", &data("square.txt")]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 5);
    let o = poly(&["height", &data("square.txt"), "--order", "lex1rev"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["height"].as_u64(), v["order"].as_str()), (Some(4), Some("lex1rev")));
}

#[test]
fn minors_and_basis() {
    let o = poly(&["minors", &data("domino.txt")]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = poly(&["gb", &data("ring3.txt"), "--order", "yset:0,0;1,1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).lines().count() >= 20);
}

#[test]
fn koenig_then_verify_then_order_from_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let cert = cert.to_str().unwrap();
    for mode in ["--walk", "--search"] {
        assert!(poly(&["koenig", &data("ring3.txt"), mode, "--out", cert]).status.success());
        let o = poly(&["verify", &data("ring3.txt"), cert]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().filter(|l| l.ends_with(": ok")).count(), 5);
    }
    let o = poly(&["gb", &data("ring3.txt"), "--order", &format!("weights:{cert}")]);
    assert!(o.status.success());
    let o = poly(&["verify", &data("zigzag16.txt"), cert]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(poly(&["dim", "/definitely/not/here"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "0 0\n5 5\n").unwrap();
    assert_eq!(poly(&["classify", bad.to_str().unwrap()]).status.code(), Some(1));
    let o = Command::new(env!("CARGO_BIN_EXE_poly")).args(["dim", &data("ring3.txt")]).env("POLY_BUDGET", "3").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(poly(&["koenig", &data("square.txt"), "--walk"]).status.code(), Some(1));
}

#[test]
fn render_and_classify() {
    assert_eq!(stdout(&poly(&["render", &data("ring3.txt")])), "███\n█·█\n███\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&poly(&["classify", &data("zigzag16.txt")]))).unwrap();
    assert_eq!((v["closed_path"].as_bool(), v["prime"].as_bool()), (Some(true), Some(false)));
    assert_eq!(v["rank"], 16);
}

#[test]
fn enumerate_and_resume() {
    let o = poly(&["enumerate", "--max-rank", "4", "--dedup", "translation"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 2 + 6 + 19);
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("log.jsonl");
    let log = log.to_str().unwrap();
    let args = ["enumerate", "--max-rank", "8", "--filter", "non-simple,thin", "--out", log];
    let first = poly(&args);
    assert!(first.status.success());
    let text = std::fs::read_to_string(log).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert_eq!(poly(&args).status.code(), Some(1));
    let again = poly(&[&args[..], &["--resume"]].concat());
    assert_eq!(stdout(&again), stdout(&first));
    assert_eq!(std::fs::read_to_string(log).unwrap(), text);
    std::fs::write(log, format!("{text}garbage\n")).unwrap();
    assert_eq!(poly(&[&args[..], &["--resume"]].concat()).status.code(), Some(3));
}
