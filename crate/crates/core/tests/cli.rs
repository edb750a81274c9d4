use std::io::Write;
use std::process::{Command, Output};

use tate_core::cli::builtins::elliptic_quartic;
use tate_core::cli::json::*;
use tate_core::cli::parse::{parse_ext, parse_input, parse_poly, ParsedInput};
use tate_core::exterior::Exterior;
use tate_core::monads::{beilinson, free_monad, Mu};
use tate_core::scalars::Field;
use tate_core::symmetric::{slice, Polynomials};
use tate_core::tate::{cohomology_table, tate_from_module};

fn tate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tate")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn input_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn row_values(out: &str, label: &str) -> Vec<usize> {
    let line = out.lines().find(|l| l.trim_start().starts_with(label)).unwrap_or_else(|| panic!("no row {label} in\n{out}"));
    line.trim_start()[label.len()..].split_whitespace().map(|x| if x == "." { 0 } else { x.parse().unwrap() }).collect()
}

#[test]
fn power_operator_is_rejected() {
    let r = Polynomials::new(Field::Prime(101), 2);
    let e = parse_poly(r, "x0**2").unwrap_err();
    assert_eq!((e.line, e.col), (1, 4));
    assert!(e.msg.contains('*'));
    assert!(parse_poly(r, "x0^2 + 3*x0*x1").is_ok());
    assert!(parse_poly(r, "x0 + x1^2").is_err());

    let f = input_file("kind presentation\nfield 101\nv 2\ntarget 0\nsource 2\nmatrix\n  [x0**2]\n");
    let o = tate(&["tate", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 7"), "{}", stderr(&o));
}

#[test]
fn exterior_entries_reorder_with_sign() {
    let a = Exterior::new(Field::Prime(101), 3).unwrap();
    let x = parse_ext(a, "e2*e0").unwrap();
    let y = parse_ext(a, "-e0*e2").unwrap();
    assert_eq!(x, y);
    assert!(parse_ext(a, "e1*e1").is_err());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(tate(&["tate", "--builtin", "nope"]).status.code(), Some(1));
    assert_eq!(tate(&["tate", "--builtin", "rnc", "--param", "d=4"]).status.code(), Some(1));
    assert_eq!(tate(&["tate", "--builtin", "hm", "--param", "x=1"]).status.code(), Some(1));
    assert_eq!(tate(&["cohomology", "--builtin", "o", "--range", "3:1"]).status.code(), Some(1));
    assert_eq!(tate(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(tate(&["--help"]).status.code(), Some(0));
}

#[test]
fn verification_failures_exit_two() {
    let o = tate(&["beilinson", "--builtin", "elliptic-quartic", "--verify", "0:6"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tate(&["beilinson", "--builtin", "elliptic-quartic", "--verify", "2:6"]);
    assert_eq!(o.status.code(), Some(0));
    let o = tate(&["tate", "--builtin", "elliptic-quartic", "--trunc", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = tate(&["check", "--builtin", "elliptic-quartic", "--trunc", "1", "--force-trunc"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("uncertified"));
    assert_eq!(tate(&["check", "--builtin", "hm"]).status.code(), Some(0));
}

#[test]
fn quartic_cohomology_rows() {
    let o = tate(&["cohomology", "--builtin", "elliptic-quartic", "--range", "-3:3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(row_values(&s, "h^0:"), vec![0, 0, 0, 1, 4, 8, 12]);
    assert_eq!(row_values(&s, "h^1:"), vec![12, 8, 4, 1, 0, 0, 0]);
}

#[test]
fn omega_betti_ranks() {
    let s = stdout(&tate(&["betti", "--builtin", "omega", "--p", "1", "--v", "4"]));
    let ranks = row_values(&s, "ranks:");
    let at = ranks.windows(5).position(|w| w == [15, 4, 1, 6, 20]);
    assert!(at.is_some(), "{s}");
}

#[test]
fn horrocks_mumford_rows() {
    let s = stdout(&tate(&["tate", "--builtin", "hm", "--window", "-6:6"]));
    assert_eq!(row_values(&s, "4:")[1..4], [100, 35, 4]);
    assert_eq!(row_values(&s, "3:")[2..6], [2, 10, 10, 5]);
    assert_eq!(row_values(&s, "2:")[6], 2);
    assert_eq!(row_values(&s, "1:")[7..11], [5, 10, 10, 2]);
    assert_eq!(row_values(&s, "0:")[9..12], [4, 35, 100]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tate", "--builtin", "elliptic-quartic", "--format", "json"][..],
        &["monad", "--builtin", "elliptic-quartic"][..],
        &["lin", "--builtin", "rnc", "--param", "d=3", "--param", "k=0"][..],
    ] {
        assert_eq!(stdout(&tate(args)), stdout(&tate(args)));
    }
}

#[test]
fn json_round_trips() {
    let m = elliptic_quartic(Field::Prime(101), 2).unwrap();
    let t = tate_from_module(&slice(&m, 2, 9).unwrap(), 2, -4, 6, false).unwrap();

    let j: TateJson = serde_json::from_str(&stdout(&tate(&["tate", "--builtin", "elliptic-quartic", "--window", "-4:6", "--format", "json"]))).unwrap();
    assert_eq!(tate_from_json(&j).unwrap(), t);

    let table = cohomology_table(&t);
    let text = serde_json::to_string(&cohomology_to_json(&table)).unwrap();
    assert_eq!(cohomology_from_json(&serde_json::from_str(&text).unwrap()), table);

    let bm = beilinson(&t).unwrap();
    let text = serde_json::to_string(&omega_monad_to_json(&bm)).unwrap();
    assert_eq!(omega_monad_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), bm);

    let fm = free_monad(&t, &Mu::beilinson(4)).unwrap();
    let text = serde_json::to_string(&free_monad_to_json(&fm)).unwrap();
    assert_eq!(free_monad_from_json(&serde_json::from_str(&text).unwrap()).unwrap(), fm);

    let j: FreeMonadJson = serde_json::from_str(&stdout(&tate(&["monad", "--builtin", "elliptic-quartic", "--format", "json"]))).unwrap();
    assert_eq!(free_monad_from_json(&j).unwrap().complex, fm.complex);
}

#[test]
fn file_inputs_match_builtins() {
    let point = input_file("kind presentation\nfield 32003\nv 2\ntarget 0\nsource 1\nmatrix\n  [x1]\n");
    let a = stdout(&tate(&["cohomology", point.path().to_str().unwrap(), "--range", "-2:2"]));
    let b = stdout(&tate(&["cohomology", "--builtin", "point", "--range", "-2:2"]));
    assert_eq!(a, b);

    let map = input_file("kind exterior\nfield 32003\nv 2\nsource 0\ntarget -2\nposition 1\nmatrix\n  [e0*e1]\n");
    let s = stdout(&tate(&["cohomology", map.path().to_str().unwrap(), "--range", "-2:1"]));
    assert_eq!(row_values(&s, "h^0:"), vec![0, 0, 0, 0]);
    assert_eq!(row_values(&s, "h^1:"), vec![3, 2, 1, 0]);

    let sl = "kind slice\nfield 32003\nv 2\nlo 0\ndims 1 1 1\nmult 0 0\n  [1]\nmult 1 0\n  [1]\n";
    match parse_input(sl).unwrap() {
        ParsedInput::Slice(s) => assert_eq!(s.hilbert().into_iter().map(|(_, d)| d).collect::<Vec<_>>(), vec![1, 1, 1]),
        other => panic!("{other:?}"),
    }
    let bad = parse_input("kind slice\nfield 32003\nv 2\nlo 0\ndims 1 1\nmult 0 5\n  [1]\n").unwrap_err();
    assert_eq!(bad.line, 6);
}
