use proptest::prelude::*;
use tate_core::scalars::*;

#[test]
fn field_parsing() {
    assert_eq!("Q".parse::<Field>().unwrap(), Field::Rational);
    assert_eq!("101".parse::<Field>().unwrap(), Field::Prime(101));
    assert!("100".parse::<Field>().is_err());
    assert!("2".parse::<Field>().is_err());
    assert!(Field::prime(1 << 31).is_err());
    let q = Field::Rational;
    assert_eq!(q.parse_scalar("-3/6").unwrap(), q.from_ratio(&(-1).into(), &2.into()).unwrap());
    assert!(q.parse_scalar("1/0").is_err());
    let p = Field::Prime(7);
    assert_eq!(p.parse_scalar("1/2").unwrap(), p.from_i64(4));
    assert_eq!(p.from_i64(-1).to_string(), "-1");
}

#[test]
fn scalar_arithmetic() {
    let p = Field::Prime(32003);
    let a = p.from_i64(12345);
    assert!(a.mul(&a.inv().unwrap()).is_one());
    assert!(p.zero().inv().is_none());
    assert!(a.sub(&a).is_zero());
    let q = Field::Rational;
    let h = q.parse_scalar("1/3").unwrap();
    assert_eq!(h.add(&h).add(&h), q.one());
}

#[test]
fn rank_deficient_prime() {
    let m = DenseMatrix::from_i64(Field::Prime(7), &[&[2, 4], &[1, 2]]);
    assert_eq!(m.rank(), 1);
    let r = m.rref();
    assert_eq!(r.pivot_cols, vec![0]);
    assert_eq!(r.transform.mul(&m).unwrap(), r.reduced);
}

#[test]
fn kernel_over_f5() {
    let m = DenseMatrix::from_i64(Field::Prime(5), &[&[1, 1]]);
    let k = m.kernel_basis();
    assert_eq!((k.rows(), k.cols()), (2, 1));
    assert!(m.mul(&k).unwrap().is_zero());
}

#[test]
fn rational_rank() {
    let m = DenseMatrix::from_i64(Field::Rational, &[&[1, 2], &[2, 4]]);
    assert_eq!(m.rank(), 1);
    assert_eq!(DenseMatrix::identity(Field::Rational, 4).rank(), 4);
    assert_eq!(DenseMatrix::zeros(Field::Rational, 3, 5).rank(), 0);
    assert_eq!(DenseMatrix::zeros(Field::Prime(3), 0, 5).kernel_basis().cols(), 5);
}

#[test]
fn solve_consistent_and_not() {
    let f = Field::Prime(11);
    let m = DenseMatrix::from_i64(f, &[&[1, 2], &[2, 4]]);
    let x = m.solve(&[f.from_i64(3), f.from_i64(6)]).unwrap().unwrap();
    assert_eq!(x[0].add(&x[1].add(&x[1])), f.from_i64(3));
    assert!(m.solve(&[f.from_i64(1), f.from_i64(1)]).unwrap().is_none());
    assert!(m.solve(&[f.one()]).is_err());
}

#[test]
fn row_space_membership() {
    let f = Field::Prime(13);
    let mut s = RowSpace::new(f, 3);
    assert!(s.insert(&[f.one(), f.from_i64(2), f.zero()]));
    assert!(!s.insert(&[f.from_i64(2), f.from_i64(4), f.zero()]));
    assert!(s.contains(&[f.from_i64(5), f.from_i64(10), f.zero()]));
    assert!(!s.contains(&[f.zero(), f.zero(), f.one()]));
    assert_eq!(s.rank(), 1);
}

fn matrix_strategy() -> impl Strategy<Value = (Field, usize, usize, Vec<i64>)> {
    (prop_oneof![Just(Field::Prime(5)), Just(Field::Prime(32003)), Just(Field::Rational)], 1usize..6, 1usize..6)
        .prop_flat_map(|(f, r, c)| (Just(f), Just(r), Just(c), proptest::collection::vec(-3i64..4, r * c)))
}

fn build(f: Field, r: usize, c: usize, data: &[i64]) -> DenseMatrix {
    let rows: Vec<&[i64]> = data.chunks(c).collect();
    let m = DenseMatrix::from_i64(f, &rows);
    assert_eq!((m.rows(), m.cols()), (r, c));
    m
}

proptest! {
    #[test]
    fn rank_nullity((f, r, c, data) in matrix_strategy()) {
        let m = build(f, r, c, &data);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), c);
        prop_assert!(m.mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.rank(), k.cols());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn rref_transform_invertible((f, r, c, data) in matrix_strategy()) {
        let m = build(f, r, c, &data);
        let rr = m.rref();
        prop_assert_eq!(rr.transform.rank(), r);
        prop_assert_eq!(rr.transform.mul(&m).unwrap(), rr.reduced.clone());
        prop_assert_eq!(rr.pivot_cols.len(), m.rank());
        let mut space = RowSpace::new(f, c);
        for i in 0..r {
            space.insert(&m.row(i));
        }
        prop_assert_eq!(space.rank(), m.rank());
    }
}
