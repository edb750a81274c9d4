mod common;

use common::*;
use tate_core::bgg::*;
use tate_core::exterior::{resolve_backward, EComplex, EMap, Exterior, ExtMonomial, FreeE};
use tate_core::scalars::Field;
use tate_core::symmetric::{slice, PolyMatrix, Polynomials, PresentedS, SComplex};

#[test]
fn r_homology_is_koszul_tor() {
    let mut rng = rng(7);
    for case in 0..20 {
        let v = 2 + case % 2;
        let s = random_slice(&mut rng, v, -1, 4);
        let r = functor_r(&s);
        for t in s.lo() + 1..s.hi() {
            for d in t..=t + v as i32 {
                let tor = s.koszul_tor((d - t) as usize, d).unwrap();
                assert_eq!(r.homology_dim(t, d), tor, "case {case}: t={t} d={d}");
            }
        }
    }
}

#[test]
fn l_of_r_resolves_finite_slices() {
    let mut rng = rng(11);
    for case in 0..20 {
        let v = 2 + case % 2;
        let s = random_slice(&mut rng, v, 0, 3);
        let lr = functor_l(&functor_r(&s));
        for e in lr.lo()..=lr.hi() {
            for t in -2..=6 {
                let want = if e == 0 && (0..=3).contains(&t) { s.dim(t).unwrap() } else { 0 };
                assert_eq!(lr.homology_dim(e, t), want, "case {case}: H^{e}_{t}");
            }
        }
    }
}

#[test]
fn r_of_complex_on_example() {
    let rc = functor_r_complex(&example_33());
    assert_eq!(rc.term(0).twists, vec![0, 1]);
    assert_eq!(rc.term(1).twists, vec![-1, 0]);
    let m = rc.minimize();
    assert_eq!(m.term(0).twists, vec![1]);
    assert_eq!(m.term(1).twists, vec![-1]);
    let x = m.diff(0).unwrap().entry(0, 0);
    assert_eq!(x.terms().len(), 1);
    assert_eq!(x.terms()[0].0, ExtMonomial::from_indices(&[0, 1]).unwrap());
    let lin = linear_part(&rc);
    assert!(lin.diffs().iter().all(EMap::is_zero));
    let via = linear_part_via_homology(&rc).unwrap();
    assert_eq!(via.betti(), lin.betti());
    assert!(via.diffs().iter().all(EMap::is_zero));
}

#[test]
fn truncation_linearity() {
    let ring = Polynomials::new(FIELD, 2);
    let m = PresentedS::quotient(ring, vec![ring.var(0).mul(&ring.var(0))]).unwrap();
    let s = slice(&m, 0, 6).unwrap();
    let fail = truncation_linearity_check(&s, 0, 3).unwrap().unwrap_err();
    assert_eq!(fail.position, 1);
    assert!(truncation_linearity_check(&s, 1, 3).unwrap().is_ok());
    assert!(truncation_linearity_check(&s, 1, 9).is_err());
}

#[test]
fn kernel_module_and_reciprocity() {
    let mut rng = rng(5);
    let mut checked = 0;
    for case in 0..40 {
        let v = 2 + case % 2;
        let s = random_slice(&mut rng, v, 0, 8);
        let Some(d) = (0..=3).find(|&d| truncation_linearity_check(&s, d, v as i32 + 1).unwrap().is_ok()) else { continue };
        let r = functor_r_truncated(&s, d, d + v as i32 + 1).unwrap();
        let p = EModule::kernel(r.diff(d).unwrap());
        let lp = functor_l_module(&p);
        for e in lp.lo()..=lp.hi() {
            for t in d..=d + 3 {
                let want = if e == -d { s.dim(t).unwrap() } else { 0 };
                assert_eq!(lp.homology_dim(e, t), want, "case {case}: d={d} H^{e}_{t}");
            }
        }
        checked += 1;
    }
    assert!(checked >= 10);
}

#[test]
fn linear_part_methods_agree_on_random_resolutions() {
    let mut rng = rng(3);
    for case in 0..10 {
        let v = 2 + case % 3;
        let alg = Exterior::new(FIELD, v).unwrap();
        let f = random_emap(&mut rng, alg);
        let res = resolve_backward(&EComplex::from_map(f, -1), 2 * v).minimize();
        let lin = linear_part(&res);
        let via = linear_part_via_homology(&res).unwrap();
        assert_eq!(lin.betti(), via.betti(), "case {case}");
        let (lo, hi) = lin.degree_range().unwrap_or((0, 0));
        for e in lin.lo()..=lin.hi() {
            for d in lo..=hi {
                let r1 = lin.diff(e).map_or(0, |m| m.matrix_in_degree(d).rank());
                let r2 = via.diff(e).map_or(0, |m| m.matrix_in_degree(d).rank());
                assert_eq!(r1, r2, "case {case}: e={e} d={d}");
            }
        }
    }
}

#[test]
fn irredundancy_of_linear_complexes() {
    let ring = Polynomials::new(Field::Prime(101), 2);
    let (x, y) = (ring.var(0), ring.var(1));
    let koszul = SComplex::new(
        ring,
        -2,
        vec![vec![2], vec![1, 1], vec![0]],
        vec![PolyMatrix::from_entries(2, 1, vec![y.neg(), x.clone()]), PolyMatrix::from_entries(1, 2, vec![x.clone(), y.clone()])],
    )
    .unwrap();
    let f = irredundancy_flags(&koszul).unwrap();
    assert!(f.irredundant && f.is_linear_part_of_resolution);

    let single = SComplex::new(ring, -1, vec![vec![1], vec![0]], vec![PolyMatrix::from_entries(1, 1, vec![x.clone()])]).unwrap();
    let f = irredundancy_flags(&single).unwrap();
    assert!(f.irredundant && f.is_linear_part_of_resolution);

    let redundant = SComplex::new(ring, -1, vec![vec![1, 1], vec![0]], vec![PolyMatrix::from_entries(1, 2, vec![x.clone(), x.clone()])]).unwrap();
    assert!(!irredundancy_flags(&redundant).unwrap().irredundant);

    let truncated = SComplex::new(ring, -1, vec![vec![1, 1], vec![0]], vec![PolyMatrix::from_entries(1, 2, vec![x.clone(), y.clone()])]).unwrap();
    let f = irredundancy_flags(&truncated).unwrap();
    assert!(f.irredundant && !f.is_linear_part_of_resolution);

    let quadratic = SComplex::new(ring, -1, vec![vec![2], vec![0]], vec![PolyMatrix::from_entries(1, 1, vec![x.mul(&y)])]).unwrap();
    assert!(matches!(irredundancy_flags(&quadratic), Err(BggError::NotLinear(_))));
}

#[test]
fn l_of_free_module() {
    let alg = Exterior::new(FIELD, 3).unwrap();
    let c = EComplex::single(alg, FreeE::new(3, vec![0]), 0);
    let l = functor_l(&c);
    // the Koszul complex resolving the residue field
    assert_eq!(l.lo(), -3);
    assert_eq!(l.terms()[3], vec![0]);
    assert_eq!(l.terms()[0], vec![3]);
    for e in l.lo()..=l.hi() {
        for t in 0..6 {
            assert_eq!(l.homology_dim(e, t), usize::from(e == 0 && t == 0));
        }
    }
}
