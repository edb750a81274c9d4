mod common;

use common::*;
use proptest::prelude::*;
use tate_core::cli::builtins::ModuleSource;
use tate_core::cli::find_truncation;
use tate_core::bgg::{functor_l, functor_r, linear_part};
use tate_core::exterior::{resolve_backward, EComplex, EMap, Exterior, FreeE};
use tate_core::symmetric::{slice, Polynomials};
use tate_core::tate::{cohomology_table, tate_from_module};

fn resolution(seed: u64, v: usize, steps: usize) -> EComplex {
    let alg = Exterior::new(FIELD, v).unwrap();
    let f = random_emap(&mut rng(seed), alg);
    resolve_backward(&EComplex::from_map(f, 0), steps).minimize()
}

fn assert_is_complex(c: &EComplex) {
    for e in c.lo()..c.hi() - 1 {
        let dd = c.diff(e + 1).unwrap().compose(c.diff(e).unwrap()).unwrap();
        assert!(dd.is_zero(), "d^2 != 0 at {e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exterior_product_is_associative_and_alternating(seed in any::<u64>(), v in 2usize..=5) {
        let alg = Exterior::new(FIELD, v).unwrap();
        let mut r = rng(seed);
        let (x, y, z) = (random_ext(&mut r, alg, 1), random_ext(&mut r, alg, 2), random_ext(&mut r, alg, 1));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x).is_zero());
        prop_assert_eq!(x.mul(&z), z.mul(&x).neg());
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }

    #[test]
    fn resolutions_are_minimal_complexes(seed in any::<u64>(), v in 2usize..=3) {
        let c = resolution(seed, v, 2 * v);
        assert_is_complex(&c);
        prop_assert!(c.is_minimal());
        prop_assert!(c.is_exact_on(c.lo() + 1, c.hi() - 1));
    }

    #[test]
    fn minimize_cancels_split_pairs(seed in any::<u64>(), v in 2usize..=3, a in -1i32..=2) {
        let c = resolution(seed, v, v);
        let alg = c.alg;
        let p = c.lo() + 1;
        let unit = FreeE::new(v, vec![a]);
        let pair = EComplex::new(alg, p, vec![unit.clone(), unit.clone()], vec![EMap::identity(alg, unit)]).unwrap();
        let fat = c.direct_sum(&pair);
        prop_assert!(!fat.is_minimal());
        let m = fat.minimize();
        prop_assert_eq!(m.betti(), c.betti());
        let (lo, hi) = c.degree_range().unwrap();
        for e in c.lo()..=c.hi() {
            for d in lo..=hi {
                prop_assert_eq!(m.homology_dim(e, d), c.homology_dim(e, d));
            }
        }
    }

    #[test]
    fn dual_twist_and_shift_are_consistent(seed in any::<u64>(), v in 2usize..=3, k in -3i32..=3) {
        let c = resolution(seed, v, v);
        prop_assert_eq!(c.dual().dual(), c.clone());
        prop_assert_eq!(c.twisted(k).twisted(-k), c.clone());
        prop_assert_eq!(c.shifted(k).lo(), c.lo() + k);
        prop_assert_eq!(c.shifted(k).betti().values().sum::<usize>(), c.betti().values().sum::<usize>());
        prop_assert_eq!(c.dual().total_rank(), c.total_rank());
        assert_is_complex(&c.dual());
    }

    #[test]
    fn linear_part_is_a_complex(seed in any::<u64>(), v in 2usize..=3) {
        let c = resolution(seed, v, 2 * v);
        let lin = linear_part(&c);
        assert_is_complex(&lin);
        prop_assert_eq!(lin.betti(), c.betti());
    }

    #[test]
    fn l_of_r_squares_to_zero(seed in any::<u64>(), v in 2usize..=3) {
        let s = random_slice(&mut rng(seed), v, 0, 3);
        let l = functor_l(&functor_r(&s));
        for e in l.lo()..l.hi() - 1 {
            let dd = l.diff(e + 1).unwrap().mul(l.diff(e).unwrap());
            prop_assert!(dd.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn euler_characteristic_is_polynomial(seed in any::<u64>(), v in 2usize..=3) {
        let ring = Polynomials::new(FIELD, v);
        let m = random_presented(&mut rng(seed), ring);
        let s = slice(&m, 0, 14).unwrap();
        let d = find_truncation(&ModuleSource::Presented(m.clone())).unwrap();
        prop_assume!(d <= 4);
        let t = tate_from_module(&s.restrict(d, 14).unwrap(), d, -4, 6, false).unwrap();
        let table = cohomology_table(&t);
        let chi: Vec<i64> = (-3..=4).filter_map(|l| table.euler_characteristic(l)).collect();
        prop_assume!(chi.len() > v + 1);
        let mut diffs = chi;
        for _ in 0..v {
            diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        }
        prop_assert!(diffs.iter().all(|&x| x == 0), "{:?}", diffs);
        for l in d..=4 {
            prop_assert_eq!(table.get(0, l).unwrap(), s.dim(l).unwrap());
            for j in 1..v as i32 {
                prop_assert_eq!(table.get(j, l).unwrap(), 0);
            }
        }
    }
}
