#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tate_core::bgg::SliceComplex;
use tate_core::exterior::{EMap, ExtElement, ExtMonomial, Exterior, FreeE};
use tate_core::scalars::{DenseMatrix, Field};
use tate_core::symmetric::{slice, GradedSlice, Poly, Polynomials, PresentedS};

pub const FIELD: Field = Field::Prime(32003);

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_form(rng: &mut StdRng, ring: Polynomials, deg: i32) -> Poly {
    let mut p = Poly::zero();
    for m in ring.basis(deg).list {
        if rng.gen_bool(0.6) {
            p.add_term(m, &ring.field.from_i64(rng.gen_range(-9..10)));
        }
    }
    p
}

/// A presented module with one or two generators and a few relations of degree one or two above them.
pub fn random_presented(rng: &mut StdRng, ring: Polynomials) -> PresentedS {
    let ngen = rng.gen_range(1..=2);
    let target: Vec<i32> = (0..ngen).map(|_| rng.gen_range(0..=1)).collect();
    let nrel = rng.gen_range(1..=3);
    let source: Vec<i32> = (0..nrel).map(|_| rng.gen_range(1..=3)).collect();
    let mut entries = Vec::new();
    for &a in &target {
        for &b in &source {
            entries.push(if b >= a { random_form(rng, ring, b - a) } else { Poly::zero() });
        }
    }
    PresentedS::new(ring, target, source, entries).expect("homogeneous by construction")
}

pub fn random_slice(rng: &mut StdRng, v: usize, lo: i32, hi: i32) -> GradedSlice {
    let ring = Polynomials::new(FIELD, v);
    slice(&random_presented(rng, ring), lo, hi).expect("window")
}

pub fn random_ext(rng: &mut StdRng, alg: Exterior, len: i32) -> ExtElement {
    if len < 0 || len as usize > alg.v {
        return ExtElement::zero();
    }
    let monos: Vec<ExtMonomial> = (0u32..(1 << alg.v)).map(ExtMonomial).filter(|m| m.len() == len as usize).collect();
    let mut terms = Vec::new();
    for m in monos {
        if rng.gen_bool(0.6) {
            terms.push((m, alg.field.from_i64(rng.gen_range(-9..10))));
        }
    }
    ExtElement::from_terms(terms)
}

/// A random homogeneous map `⊕ω(a_l) → ω(0)^r` with entries of word length one or two.
pub fn random_emap(rng: &mut StdRng, alg: Exterior) -> EMap {
    let r = rng.gen_range(1..=2);
    let c = rng.gen_range(1..=3);
    let source: Vec<i32> = (0..c).map(|_| rng.gen_range(1..=2)).collect();
    let target = vec![0; r];
    let entries = (0..r).flat_map(|_| source.clone()).map(|a| random_ext(rng, alg, a)).collect();
    EMap::new(alg, FreeE::new(alg.v, source), FreeE::new(alg.v, target), entries).expect("homogeneous")
}

/// `S/(x0, x1^2) → S/(x0^2, x1)(1)` by multiplication with `x0`, on `P^1`.
pub fn example_33() -> SliceComplex {
    let ring = Polynomials::new(FIELD, 2);
    let f = FIELD;
    let z = |r: usize, c: usize| DenseMatrix::zeros(f, r, c);
    let one = DenseMatrix::identity(f, 1);
    // degrees -1..=2
    let m0 = GradedSlice::direct(ring, -1, vec![0, 1, 1, 0], vec![vec![z(1, 0), z(1, 0)], vec![z(1, 1), one.clone()], vec![z(0, 1), z(0, 1)]]).expect("module");
    let m1 = GradedSlice::direct(ring, -1, vec![1, 1, 0, 0], vec![vec![one.clone(), z(1, 1)], vec![z(0, 1), z(0, 1)], vec![z(0, 0), z(0, 0)]]).expect("module");
    let maps = vec![vec![z(1, 0), one, z(0, 1), z(0, 0)]];
    SliceComplex::new(0, vec![m0, m1], maps).expect("chain map")
}
