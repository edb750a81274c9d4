use tate_core::scalars::{DenseMatrix, Field};
use tate_core::symmetric::*;

fn ring(v: usize) -> Polynomials {
    Polynomials::new(Field::Prime(32003), v)
}

fn binom(n: i64, k: i64) -> usize {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as usize
}

#[test]
fn polynomial_arithmetic() {
    let r = ring(3);
    let (x, y) = (r.var(0), r.var(1));
    let p = x.add(&y).mul(&x.sub(&y));
    assert_eq!(p, x.mul(&x).sub(&y.mul(&y)));
    assert_eq!(p.degree(), Some(2));
    assert!(x.add(&r.constant(1)).degree().is_none());
    assert_eq!(r.basis(2).len(), 6);
    assert_eq!(r.basis(-1).len(), 0);
}

#[test]
fn hyperplane_slice() {
    let r = ring(3);
    let m = PresentedS::quotient(r, vec![r.var(0)]).unwrap();
    let s = slice(&m, -1, 4).unwrap();
    assert_eq!(s.dims(), &[0, 1, 2, 3, 4, 5]);
    assert!(s.mult(1, 0).unwrap().is_zero());
    assert!(!s.mult(1, 1).unwrap().is_zero());
}

#[test]
fn inhomogeneous_presentation_rejected() {
    let r = ring(2);
    let bad = r.var(0).add(&r.var(0).mul(&r.var(1)));
    assert!(matches!(PresentedS::quotient(r, vec![bad]), Err(SymmetricError::Inhomogeneous { .. })));
    assert!(PresentedS::new(r, vec![0], vec![2], vec![r.var(0)]).is_err());
}

#[test]
fn omega_hilbert_functions() {
    for v in 2..=4usize {
        let r = ring(v);
        for i in -1..v as i32 {
            let om = omega_module(r, i).unwrap();
            let s = slice(&om, -1, 4).unwrap();
            for t in -1..=4 {
                // alternating sum over the Koszul complex
                let mut want: i64 = 0;
                for k in (i + 1)..=v as i32 {
                    let sign = if (k - i - 1) % 2 == 0 { 1 } else { -1 };
                    want += sign * (binom(v as i64, k as i64) * binom((v as i32 - 1 + t - k) as i64, v as i64 - 1)) as i64;
                }
                assert_eq!(s.dim(t).unwrap() as i64, want, "v={v} i={i} t={t}");
            }
        }
        assert!(omega_module(r, v as i32).is_err());
    }
}

#[test]
fn koszul_tor_of_residue_field() {
    let r = ring(3);
    let k = slice(&omega_module(r, -1).unwrap(), -4, 4).unwrap();
    for kk in 0..=3usize {
        for j in -1..=3 {
            let want = if j == kk as i32 { binom(3, kk as i64) } else { 0 };
            assert_eq!(k.koszul_tor(kk, j).unwrap(), want);
        }
    }
}

#[test]
fn koszul_tor_of_free_module() {
    let r = ring(3);
    let s = slice(&PresentedS::free(r, vec![0]), -4, 6).unwrap();
    for kk in 0..=3usize {
        for j in 0..=3 {
            assert_eq!(s.koszul_tor(kk, j).unwrap(), usize::from(kk == 0 && j == 0));
        }
    }
}

#[test]
fn direct_slice_commutativity() {
    let r = Polynomials::new(Field::Prime(7), 2);
    let f = r.field;
    let m0 = vec![DenseMatrix::from_i64(f, &[&[1], &[0]]), DenseMatrix::from_i64(f, &[&[0], &[1]])];
    let swap = vec![DenseMatrix::from_i64(f, &[&[1, 0]]), DenseMatrix::from_i64(f, &[&[1, 0]])];
    let err = GradedSlice::direct(r, 0, vec![1, 2, 1], vec![m0.clone(), swap]).unwrap_err();
    assert_eq!(err, SymmetricError::NotCommutative { i: 0, j: 1, degree: 0 });
    let good = vec![DenseMatrix::from_i64(f, &[&[0, 1]]), DenseMatrix::from_i64(f, &[&[1, 0]])];
    let s = GradedSlice::direct(r, 0, vec![1, 2, 1], vec![m0, good]).unwrap();
    assert_eq!(s.hilbert(), vec![(0, 1), (1, 2), (2, 1)]);
    assert!(s.dim(3).is_err());
    assert_eq!(s.padded(-1, 3).dim(3).unwrap(), 0);
}

#[test]
fn truncation_and_twist() {
    let r = ring(2);
    let s = slice(&PresentedS::free(r, vec![0]), 0, 3).unwrap();
    assert_eq!(s.truncate(2).dims(), &[0, 0, 3, 4]);
    let t = s.twisted(1);
    assert_eq!((t.lo(), t.dim(-1).unwrap()), (-1, 1));
}

#[test]
fn tensor_with_twist() {
    let r = ring(2);
    let a = PresentedS::quotient(r, vec![r.var(0)]).unwrap();
    let b = PresentedS::quotient(r, vec![r.var(1)]).unwrap();
    let s = slice(&a.tensor(&b), 0, 3).unwrap();
    assert_eq!(s.dims(), &[1, 0, 0, 0]);
    let s = slice(&a.twisted(2), -3, 0).unwrap();
    assert_eq!(s.dims(), &[0, 1, 1, 1]);
}

#[test]
fn minimize_cancels_units() {
    let r = ring(2);
    let d = PolyMatrix::from_entries(1, 2, vec![r.constant(1), r.var(0)]);
    let c = SComplex::new(r, 0, vec![vec![0, 1], vec![0]], vec![d]).unwrap();
    assert!(!c.is_minimal());
    let m = c.minimize();
    assert!(m.is_minimal());
    assert_eq!(m.terms(), &[vec![1], vec![]]);
    for t in 0..4 {
        assert_eq!(c.homology_dim(0, t), m.homology_dim(0, t));
        assert_eq!(m.homology_dim(0, t), t.max(0) as usize);
        assert_eq!(c.homology_dim(1, t), 0);
    }
}

#[test]
fn koszul_complex_homology() {
    let r = ring(2);
    let (x, y) = (r.var(0), r.var(1));
    let d0 = PolyMatrix::from_entries(2, 1, vec![y.neg(), x.clone()]);
    let d1 = PolyMatrix::from_entries(1, 2, vec![x, y]);
    let c = SComplex::new(r, -2, vec![vec![2], vec![1, 1], vec![0]], vec![d0.clone(), d1.clone()]).unwrap();
    let h = c.homology(-1, 4);
    for ((e, t), n) in h {
        assert_eq!(n, usize::from(e == 0 && t == 0), "H^{e}_{t}");
    }
    assert!(SComplex::new(r, 0, vec![vec![2], vec![1, 1], vec![0]], vec![d0.clone(), d0.transpose()]).is_err());
    let dual = c.dual();
    assert_eq!(dual.lo(), 0);
    assert_eq!(dual.terms(), &[vec![0], vec![-1, -1], vec![-2]]);
}
