use std::io::Write;
use std::process::{Command, Output};

use gkgrowth_core::cuspidal::{level_zero, murnaghan_unramified};
use gkgrowth_core::growth::exact_growth;
use gkgrowth_core::segments::{Multisegment, Segment, Symbol};
use gkgrowth_core::{CuspidalGrowth, SourceMap, XLaurent};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkgrowth")).args(args).output().unwrap()
}

fn with_file(json: &str, args: &[&str]) -> Output {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap().to_string();
    let mut all: Vec<&str> = args.to_vec();
    all.insert(1, &path);
    bin(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const BZ: &str = r#"{"version":1,"symbols":[{"id":"rho","size":1}],
  "multisegment":"[rho:0..0],[rho:1..1],[rho:1..1],[rho:2..2]"}"#;

const STEINBERG: &str = r#"{"version":1,
  "symbols":[{"id":"rho","size":1,"source":{"kind":"explicit","poly":[{"x":0,"num":[1]}]}}],
  "multisegment":[["rho",0,1],["rho",1,1]]}"#;

const GL2_LEVEL0: &str = r#"{"version":1,
  "symbols":[{"id":"s","size":2,"source":{"kind":"gl2","case":"level0"}}],
  "multisegment":[["s",0,1]]}"#;

#[test]
fn gk_of_bz_top_node() {
    let o = with_file(BZ, &["gk"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        "gk = 6, coeff = q^6 + 3*q^5 + 5*q^4 + 6*q^3 + 5*q^2 + 3*q + 1, generic = true"
    );
}

#[test]
fn gk_single_segment() {
    let o = with_file(r#"{"version":1,"symbols":[{"id":"r","size":1}],"multisegment":[["r",0,3]]}"#, &["gk"]);
    assert!(stdout(&o).starts_with("gk = 0,"), "{}", stdout(&o));
}

#[test]
fn empty_multisegment_is_semantic_error() {
    let o = with_file(r#"{"version":1,"symbols":[{"id":"r","size":1}],"multisegment":[]}"#, &["gk"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(with_file("{not json", &["gk"]).status.code(), Some(2));
    assert_eq!(with_file(r#"{"symbols":[],"multisegment":[]}"#, &["exact"]).status.code(), Some(2));
    assert_eq!(bin(&["gk", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(bin(&["bogus"]).status.code(), Some(2));
}

#[test]
fn steinberg_exact() {
    let o = with_file(STEINBERG, &["exact"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "(q + 1)*X - 1");
}

#[test]
fn linked_segments_refused() {
    let json = r#"{"version":1,"symbols":[{"id":"rho","size":1,"source":{"kind":"explicit","poly":[{"x":0,"num":[1]}]}}],
      "multisegment":"[rho:0..1],[rho:1..2]"}"#;
    let o = with_file(json, &["exact"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("intersect"));
}

#[test]
fn leading_only_source_refused() {
    let o = with_file(r#"{"version":1,"symbols":[{"id":"r","size":1}],"multisegment":[["r",0,1]]}"#, &["exact"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn product_across_symbols() {
    let json = r#"{"version":1,"symbols":[
        {"id":"a","size":2,"source":{"kind":"level0"}},
        {"id":"b","size":2,"source":{"kind":"level0"}}],
      "multisegment":[["a",0,1],["b",0,1]]}"#;
    let o = with_file(json, &["exact"]);
    assert!(o.status.success());
    let got = XLaurent::parse(stdout(&o).trim()).unwrap();
    // [4;2,2]_q X^4 ((q+1)X - 2)^2
    let g2 = level_zero(2).unwrap();
    let binom = XLaurent::parse("(q^4 + q^3 + 2*q^2 + q + 1)*X^4").unwrap();
    assert_eq!(got, &binom * &(&g2 * &g2));
}

#[test]
fn exact_output_round_trips() {
    let json = r#"{"version":1,"symbols":[{"id":"s","size":3,"source":{"kind":"murnaghan_unr","j":1}}],
      "multisegment":[["s",0,2],["s",4,1]]}"#;
    let o = with_file(json, &["exact"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let s = Symbol::new("s", 3);
    let a = Multisegment::new(vec![
        Segment::new(s.clone(), 0, 2).unwrap(),
        Segment::new(s, 4, 1).unwrap(),
    ]);
    let src = SourceMap::from([("s".to_string(), CuspidalGrowth::MurnaghanUnramified { n: 3, j: 1 })]);
    assert_eq!(XLaurent::parse(stdout(&o).trim()).unwrap(), exact_growth(&a, &src).unwrap());
}

#[test]
fn poset_dot_has_five_nodes() {
    let o = with_file(BZ, &["poset", "--dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=").count(), 5);
    assert_eq!(dot.matches(" -> ").count(), 5);
    let mut gks: Vec<&str> = dot.match_indices("gk = ").map(|(i, _)| &dot[i + 5..i + 6]).collect();
    gks.sort();
    assert_eq!(gks, ["3", "4", "5", "5", "6"]);
}

#[test]
fn poset_size_limit_exit_5() {
    let o = with_file(BZ, &["poset", "--max-nodes", "2"]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "flags", "--max-n", "3", "--primes", "2,3", "--max-N", "2"][..],
        &["verify", "--suite", "level0"],
        &["verify", "--suite", "identities"],
        &["verify", "--suite", "cartan", "--max-n", "2", "--primes", "2,3"],
    ] {
        let o = bin(args);
        assert!(o.status.success(), "{args:?}\n{}", stdout(&o));
        assert!(stdout(&o).contains(", 0 failed"));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn verify_is_deterministic() {
    let a = bin(&["verify", "--suite", "flags", "--max-n", "2"]);
    let b = bin(&["verify", "--suite", "flags", "--max-n", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn eval_gl2_level0() {
    let o = with_file(GL2_LEVEL0, &["eval", "--q", "2", "--N", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "10");
}

#[test]
fn eval_point_from_file_and_threshold_warning() {
    let json = r#"{"version":1,
      "symbols":[{"id":"r","size":1,"source":{"kind":"explicit","poly":[{"x":0,"num":[1]}],"threshold":3}}],
      "multisegment":[["r",0,1],["r",1,1]],"eval":{"q":3,"N":2}}"#;
    let o = with_file(json, &["eval"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "11");
    assert!(stderr(&o).contains("warning"));
    let o = with_file(json, &["eval", "--N", "3"]);
    assert_eq!(stdout(&o).trim(), "35");
    assert!(stderr(&o).is_empty());
}

#[test]
fn cuspidal_murnaghan_unramified() {
    let o = bin(&["cuspidal", "murnaghan_unr", "--n", "3", "--j", "0"]);
    assert!(o.status.success());
    let got = XLaurent::parse(stdout(&o).trim()).unwrap();
    assert_eq!(got, murnaghan_unramified(3, 0).unwrap());
    assert_eq!(stdout(&o).trim(), "(q^3 + 2*q^2 + 2*q + 1)*X^3 - (3*q^2 + 3*q + 3)*X^2 + 3");
}

#[test]
fn cuspidal_ramified_warns_on_stderr() {
    let o = bin(&["cuspidal", "murnaghan_ram", "--n", "2", "--j", "1"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("warning"));
    assert!(stdout(&o).contains('s'));
}

#[test]
fn cuspidal_expansion_json() {
    let o = bin(&["cuspidal", "level0", "--n", "2", "--expansion"]);
    let out = stdout(&o);
    let line = out.lines().nth(1).unwrap();
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    assert_eq!(v["n"], 2);
}

#[test]
fn sl_two_of_four_rotated_symbols() {
    let json = r#"{"version":1,
      "symbols":[{"id":"r0","size":1},{"id":"r1","size":1},{"id":"r2","size":1},{"id":"r3","size":1}],
      "multisegment":[["r0",0,2],["r2",0,2]],
      "twist":{"n":4,"perms":[[],[["r0","r1","r2","r3"]],[["r0","r2"],["r1","r3"]],[["r0","r3","r2","r1"]]]}}"#;
    let o = with_file(json, &["sl"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "d = 2, gk = 4, coeff = (q^4 + q^3 + 2*q^2 + q + 1)/2");
}

#[test]
fn sl_without_table_is_semantic_error() {
    assert_eq!(with_file(BZ, &["sl"]).status.code(), Some(3));
}
