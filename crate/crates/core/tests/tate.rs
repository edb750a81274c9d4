mod common;

use common::FIELD;
use tate_core::cli::builtins::{elliptic_quartic, horrocks_mumford};
use tate_core::exterior::{EComplex, EMap, Exterior, FreeE};
use tate_core::scalars::Field;
use tate_core::symmetric::{slice, Polynomials, PresentedS};
use tate_core::tate::*;

fn ranks(t: &TateWindow) -> Vec<usize> {
    (t.lo()..=t.hi()).map(|e| t.complex.term(e).rank()).collect()
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn point_on_line_is_periodic() {
    let r = Polynomials::new(FIELD, 2);
    let m = PresentedS::quotient(r, vec![r.var(0)]).unwrap();
    let t = tate_from_module(&slice(&m, 0, 6).unwrap(), 0, -4, 3, false).unwrap();
    assert_eq!(ranks(&t), vec![1; 8]);
    for e in -4..=3 {
        assert_eq!(t.multiplicity(e, -e), 1);
    }
    let lc = local_cohomology_dims(&t);
    assert_eq!(lc.len(), 4);
    assert!(lc.iter().all(|(&(j, d), &m)| j == 1 && d < 0 && m == 1));
}

#[test]
fn structure_sheaf_of_line() {
    let r = Polynomials::new(FIELD, 2);
    let s = slice(&PresentedS::free(r, vec![0]), 0, 6).unwrap();
    let t = tate_from_module(&s, 0, -3, 3, false).unwrap();
    assert_eq!(ranks(&t), vec![3, 2, 1, 1, 2, 3, 4]);
    let junction = t.complex.diff(-1).unwrap().entry(0, 0);
    assert_eq!(junction.word_length(), Some(2));
    let table = cohomology_table(&t);
    assert_eq!(table.get(1, -2).unwrap(), 1);
    assert_eq!(table.get(0, 3).unwrap(), 4);
}

#[test]
fn exterior_map_windows() {
    let a = Exterior::new(FIELD, 2).unwrap();
    let e0 = a.var(0).unwrap();
    let phi = EMap::new(a, FreeE::new(2, vec![1]), FreeE::new(2, vec![0]), vec![e0]).unwrap();
    let t = tate_from_emap(&phi, 0, -2, 3).unwrap();
    assert!(t.complex.is_exact_on(-1, 2));
    assert_eq!(ranks(&t), vec![1; 6]);

    let e01 = a.monomial(&[0, 1], FIELD.one()).unwrap();
    let psi = EMap::new(a, FreeE::new(2, vec![0]), FreeE::new(2, vec![-2]), vec![e01]).unwrap();
    let t = tate_from_emap(&psi, 1, -2, 4).unwrap();
    assert!(t.complex.is_exact_on(-1, 3));
    let table = cohomology_table(&t);
    // O(-2) on the line: the quadratic map joins h^1 and h^0
    assert_eq!(table.get(1, 0).unwrap(), 1);
    assert_eq!(table.get(0, 3).unwrap(), 2);
    assert_eq!(table.get(1, -2).unwrap(), 3);
}

#[test]
fn elliptic_quartic_terms() {
    let m = elliptic_quartic(Field::Prime(101), 2).unwrap();
    let t = tate_from_module(&slice(&m, 2, 8).unwrap(), 2, -1, 2, false).unwrap();
    let b = t.betti();
    let want = [((-1, 2), 8), ((0, 1), 4), ((0, 0), 1), ((1, 0), 1), ((1, -1), 4), ((2, -2), 8)];
    assert_eq!(b.len(), want.len());
    for (k, m) in want {
        assert_eq!(b.get(&k), Some(&m), "{k:?}");
    }
    let table = cohomology_table(&tate_from_module(&slice(&m, 2, 9).unwrap(), 2, -4, 6, false).unwrap());
    assert_eq!(table.get(0, 1).unwrap(), 4);
    assert_eq!(table.get(1, 0).unwrap(), 1);
    assert_eq!(table.get(1, -2).unwrap(), 8);
    for l in -1..=3 {
        assert_eq!(table.euler_characteristic(l), Some(4 * l as i64));
    }
    assert!(elliptic_quartic(Field::Prime(101), 0).is_ok());
}

#[test]
fn plane_structure_sheaf() {
    let r = Polynomials::new(FIELD, 3);
    let s = slice(&PresentedS::free(r, vec![0]), 0, 8).unwrap();
    let t = tate_from_module(&s, 0, -4, 4, false).unwrap();
    let table = cohomology_table(&t);
    assert_eq!(table.get(0, 2).unwrap(), 6);
    assert_eq!(table.get(2, -3).unwrap(), 1);
    assert_eq!(table.get(1, 0).unwrap(), 0);
    for l in -2..=2 {
        let chi = (l as i64 + 1) * (l as i64 + 2) / 2;
        assert_eq!(table.euler_characteristic(l), Some(chi));
    }
    assert!(table.get(0, 5).is_err());
}

#[test]
fn local_cohomology_of_free_module() {
    let r = Polynomials::new(FIELD, 2);
    let s = slice(&PresentedS::free(r, vec![0]), 0, 6).unwrap();
    let t = tate_from_module(&s, 0, -5, 2, false).unwrap();
    let lc = local_cohomology_dims(&t);
    for e in -4..=-2 {
        assert_eq!(lc.get(&(2, e)).copied().unwrap_or(0), (-e - 2 + 1) as usize, "degree {e}");
    }
    assert!(lc.keys().all(|&(j, _)| j == 2));
}

#[test]
fn truncation_independence() {
    let m = elliptic_quartic(Field::Prime(101), 2).unwrap();
    let a = tate_from_module(&slice(&m, 2, 9).unwrap(), 2, -2, 3, false).unwrap();
    let b = tate_from_module(&slice(&m, 3, 9).unwrap(), 3, -2, 3, false).unwrap();
    assert_eq!(a.betti(), b.betti());
    let low = tate_from_module(&slice(&m, 1, 9).unwrap(), 1, -2, 3, false);
    assert!(matches!(low, Err(TateError::NotLinear { d: 1, .. })));
    let forced = tate_from_module(&slice(&m, 1, 9).unwrap(), 1, -2, 3, true).unwrap();
    assert!(!forced.certified);
}

#[test]
fn omega_rows_and_deltas() {
    for v in 3..=4usize {
        let r = Polynomials::new(FIELD, v);
        let vv = v as i64;
        for p in 0..v as i32 {
            let m = tate_core::symmetric::omega_module(r, p).unwrap();
            let d = p + 1;
            let t = tate_from_module(&slice(&m, d, d + v as i32 + 4).unwrap(), d, p - 2, p + 2, false).unwrap();
            let pp = p as i64;
            let want = [(vv - pp) * binom(vv + 1, vv - pp + 1), binom(vv, vv - pp), 1, binom(vv, pp + 1), (pp + 1) * binom(vv + 1, pp + 2)];
            let got: Vec<i64> = ranks(&t).into_iter().map(|x| x as i64).collect();
            assert_eq!(got, want, "v={v} p={p}");
        }
    }
}

#[test]
fn horrocks_mumford_row_bound() {
    let (phi, pos) = horrocks_mumford(Field::Prime(32003)).unwrap();
    let t = tate_from_emap(&phi, pos, -6, 5).unwrap();
    assert_eq!(t.betti().get(&(0, 2)), Some(&2));
    let rb = row_bound_check(&t.complex, None).unwrap();
    assert_eq!(rb.band, (0, 4));
}

#[test]
fn row_bound_negative() {
    let r = Polynomials::new(FIELD, 2);
    let m = PresentedS::quotient(r, vec![r.var(0)]).unwrap();
    let t = tate_from_module(&slice(&m, 0, 6).unwrap(), 0, -3, 3, false).unwrap();
    assert!(row_bound_check(&t.complex, None).is_ok());
    // a stray row 2 at position -2, above the propagated bound
    let extra = EComplex::single(t.complex.alg, FreeE::new(2, vec![4]), -2);
    let bad = t.complex.direct_sum(&extra);
    match row_bound_check(&bad, None).unwrap_err() {
        TateError::RowBound { position, row } => assert_eq!((position, row), (-2, 2)),
        e => panic!("{e}"),
    }
}

#[test]
fn betti_rendering() {
    let r = Polynomials::new(FIELD, 2);
    let m = PresentedS::quotient(r, vec![r.var(0)]).unwrap();
    let t = tate_from_module(&slice(&m, 0, 6).unwrap(), 0, -1, 1, false).unwrap();
    let s = render_betti(&t.betti(), -1, 1);
    assert_eq!(s, "  e: -1  0  1\n  0:  1  1  1\n");
}

#[test]
fn finite_length_modules_need_socle_free_truncation() {
    let r = Polynomials::new(FIELD, 2);
    let (x, y) = (r.var(0), r.var(1));
    let m = PresentedS::quotient(r, vec![x.mul(&x), x.mul(&y), y.mul(&y)]).unwrap();
    let s = slice(&m, 0, 6).unwrap();
    assert!(tate_core::bgg::truncation_linearity_check(&s, 1, 3).unwrap().is_ok());
    assert!(matches!(tate_from_module(&s, 1, -2, 2, false), Err(TateError::Socle { d: 1, dim: 2 })));
    let t = tate_from_module(&s, 2, -2, 2, false).unwrap();
    assert_eq!(t.complex.total_rank(), 0);
}
