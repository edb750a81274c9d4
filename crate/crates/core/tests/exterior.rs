use tate_core::exterior::*;
use tate_core::scalars::Field;

fn alg(v: usize) -> Exterior {
    Exterior::new(Field::Prime(32003), v).unwrap()
}

fn e(a: &Exterior, idx: &[usize]) -> ExtElement {
    a.monomial(idx, a.field.one()).unwrap()
}

fn free(v: usize, t: &[i32]) -> FreeE {
    FreeE::new(v, t.to_vec())
}

#[test]
fn wedge_products() {
    let a = alg(3);
    assert_eq!(a.mul(&e(&a, &[0]), &e(&a, &[1])).unwrap(), e(&a, &[0, 1]));
    assert_eq!(a.mul(&e(&a, &[1]), &e(&a, &[0])).unwrap(), e(&a, &[0, 1]).neg());
    assert!(a.mul(&e(&a, &[0, 1]), &e(&a, &[0])).unwrap().is_zero());
    assert!(a.var(3).is_err());
    let b = alg(2);
    assert!(b.mul(&e(&a, &[2]), &e(&b, &[0])).is_err());
}

#[test]
fn monomial_order() {
    let m = |i: &[usize]| ExtMonomial::from_indices(i).unwrap();
    let mut v = vec![m(&[1, 2]), m(&[0]), m(&[0, 2]), m(&[]), m(&[0, 1]), m(&[2])];
    v.sort();
    assert_eq!(v, vec![m(&[]), m(&[0]), m(&[2]), m(&[0, 1]), m(&[0, 2]), m(&[1, 2])]);
}

#[test]
fn piece_bases() {
    assert_eq!(free(4, &[1]).degree_piece_basis(1).len(), 6);
    assert!(free(2, &[0]).degree_piece_basis(3).is_empty());
    assert_eq!(free(3, &[0, 1]).degree_piece_basis(0).len(), 4);
}

#[test]
fn matrix_in_degree_small() {
    let a = alg(2);
    let f = EMap::from_rows(a, free(2, &[1]), free(2, &[0]), vec![vec![e(&a, &[0])]]).unwrap();
    let m = f.matrix_in_degree(1);
    assert_eq!((m.rows(), m.cols()), (2, 1));
    let nonzero: Vec<_> = (0..2).filter(|&r| !m.get(r, 0).is_zero()).collect();
    assert_eq!(nonzero.len(), 1);
    assert!(m.get(nonzero[0], 0).is_one() || m.get(nonzero[0], 0).neg().is_one());
    let z = EMap::zero(a, free(2, &[1]), free(2, &[0]));
    assert!(z.matrix_in_degree(1).is_zero());
    let id = EMap::identity(a, free(2, &[0]));
    for d in 0..=2 {
        let m = id.matrix_in_degree(d);
        assert_eq!(m, tate_core::scalars::DenseMatrix::identity(a.field, m.rows()));
    }
}

#[test]
fn inhomogeneous_entries_rejected() {
    let a = alg(3);
    let x = e(&a, &[0]).add(&e(&a, &[1, 2]));
    assert!(EMap::from_rows(a, free(3, &[1]), free(3, &[0]), vec![vec![x]]).is_err());
    assert!(EMap::from_rows(a, free(3, &[2]), free(3, &[0]), vec![vec![e(&a, &[0])]]).is_err());
}

#[test]
fn composition_is_functorial_in_degrees() {
    let a = alg(3);
    let f = EMap::from_rows(a, free(3, &[2]), free(3, &[1, 1]), vec![vec![e(&a, &[0])], vec![e(&a, &[1])]]).unwrap();
    let g = EMap::from_rows(a, free(3, &[1, 1]), free(3, &[0]), vec![vec![e(&a, &[2]), e(&a, &[0])]]).unwrap();
    let gf = g.compose(&f).unwrap();
    for d in -3..=3 {
        assert_eq!(gf.matrix_in_degree(d), g.matrix_in_degree(d).mul(&f.matrix_in_degree(d)).unwrap());
    }
}

#[test]
fn principal_kernel() {
    let a = alg(2);
    let f = EMap::from_rows(a, free(2, &[0]), free(2, &[-1]), vec![vec![e(&a, &[0])]]).unwrap();
    let gens = kernel_min_generators(&f);
    assert_eq!(gens.len(), 1);
    assert_eq!(gens[0].degree, 1);
    let cover = minimal_cover(&gens, &f.source, a).unwrap();
    assert_eq!(cover.source.twists, vec![1]);
    assert_eq!(cover.entry(0, 0).word_length(), Some(1));
    assert_eq!(cover.entry(0, 0).terms()[0].0, ExtMonomial::from_indices(&[0]).unwrap());
    assert!(kernel_min_generators(&EMap::identity(a, free(2, &[0, 1]))).is_empty());
    let z = kernel_min_generators(&EMap::zero(a, free(2, &[1]), free(2, &[])));
    assert_eq!(z.len(), 1);
    assert_eq!(z[0].degree, 1);
    let c = minimal_cover(&z, &free(2, &[1]), a).unwrap();
    assert_eq!(c.source.twists, vec![1]);
    assert!(minimal_cover(&[], &free(2, &[1]), a).unwrap().source.is_zero());
}

#[test]
fn periodic_backward_resolution() {
    let a = alg(2);
    let f = EMap::from_rows(a, free(2, &[0]), free(2, &[-1]), vec![vec![e(&a, &[0])]]).unwrap();
    let c = resolve_backward(&EComplex::from_map(f, 0), 2);
    assert_eq!(c.lo(), -2);
    let twists: Vec<Vec<i32>> = c.terms().iter().map(|t| t.twists.clone()).collect();
    assert_eq!(twists, vec![vec![2], vec![1], vec![0], vec![-1]]);
    for d in c.diffs() {
        assert_eq!(d.entry(0, 0).terms()[0].0, ExtMonomial::from_indices(&[0]).unwrap());
    }
    assert!(c.is_exact_on(-1, 0));
    let zero = EComplex::single(a, free(2, &[]), 0);
    let z = resolve_backward(&zero, 3);
    assert_eq!(z.total_rank(), 0);
    assert_eq!(z.lo(), -3);
}

#[test]
fn duality() {
    let a = alg(2);
    let f = EMap::from_rows(a, free(2, &[0]), free(2, &[-1]), vec![vec![e(&a, &[0])]]).unwrap();
    let c = EComplex::from_map(f, 0);
    let d = c.dual();
    assert_eq!(d.lo(), -1);
    assert_eq!(d.terms()[0].twists, vec![3]);
    assert_eq!(d.terms()[1].twists, vec![2]);
    assert_eq!(d.diffs()[0].entry(0, 0).word_length(), Some(1));
    assert_eq!(d.dual(), c);
    let ext = resolve_backward(&c, 3);
    assert!(ext.is_exact_on(-2, 0));
    assert!(ext.dual().is_exact_on(0, 2));
}

#[test]
fn forward_resolution_of_point() {
    let a = alg(2);
    let f = EMap::from_rows(a, free(2, &[1]), free(2, &[0]), vec![vec![e(&a, &[0])]]).unwrap();
    let c = resolve_forward(&EComplex::from_map(f, -1), 2);
    assert_eq!(c.hi(), 2);
    let twists: Vec<Vec<i32>> = c.terms().iter().map(|t| t.twists.clone()).collect();
    assert_eq!(twists, vec![vec![1], vec![0], vec![-1], vec![-2]]);
    for d in c.diffs() {
        let x = d.entry(0, 0);
        assert_eq!(x.terms().len(), 1);
        assert_eq!(x.terms()[0].0, ExtMonomial::from_indices(&[0]).unwrap());
    }
}

#[test]
fn minimize_example() {
    let a = alg(2);
    let (x, y) = (e(&a, &[0]), e(&a, &[1]));
    let d = EMap::from_rows(
        a,
        free(2, &[3, 2]),
        free(2, &[2, 1]),
        vec![vec![x.clone(), a.constant(1)], vec![ExtElement::zero(), y.clone()]],
    )
    .unwrap();
    let m = EComplex::from_map(d, 0).minimize();
    assert_eq!(m.terms()[0].twists, vec![3]);
    assert_eq!(m.terms()[1].twists, vec![1]);
    // -b*a = a*b
    assert_eq!(m.diffs()[0].entry(0, 0), &e(&a, &[0, 1]));
    let lin = m.linear_strand_erase().unwrap();
    assert!(lin.diffs()[0].is_zero());
    let cone = EComplex::from_map(EMap::identity(a, free(2, &[0])), 0).minimize();
    assert_eq!(cone.total_rank(), 0);
    assert_eq!(m.minimize(), m);
}

#[test]
fn linear_erase_requires_minimal() {
    let a = alg(2);
    let c = EComplex::from_map(EMap::identity(a, free(2, &[0])), 0);
    assert!(c.linear_strand_erase().is_err());
    let x = e(&a, &[0]).add(&e(&a, &[0, 1]));
    assert_eq!(x.linear_part(), e(&a, &[0]));
}
