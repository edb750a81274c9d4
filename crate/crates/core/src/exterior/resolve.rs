use crate::scalars::{RowSpace, Scalar};

use super::algebra::{ExtElement, ExtMonomial};
use super::complex::EComplex;
use super::module::{EMap, FreeE, PieceLayout};
use super::ExteriorError;

/// A minimal generator of a kernel: its internal degree and one component per source summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGenerator {
    pub degree: i32,
    pub components: Vec<ExtElement>,
}

/// Index map for right multiplication by `e_i` from the degree-`d+1` piece to the degree-`d` piece.
fn right_mult_map(upper: &PieceLayout, lower: &PieceLayout, i: usize) -> Vec<Option<(usize, bool)>> {
    let ei = ExtMonomial(1 << i);
    let mut out = Vec::with_capacity(upper.total);
    for k in 0..upper.sizes.len() {
        for &m in upper.monomials(k) {
            out.push(m.times(ei).map(|(neg, p)| (lower.index_of(k, p), neg)));
        }
    }
    out
}

fn apply_index_map(map: &[Option<(usize, bool)>], vec: &[Scalar], out_len: usize, zero: &Scalar) -> Vec<Scalar> {
    let mut out = vec![zero.clone(); out_len];
    for (src, x) in vec.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if let Some((t, neg)) = map[src] {
            out[t] = x.signed(neg);
        }
    }
    out
}

/// Minimal generators of `ker f`, found degree by degree from the top: in each degree the
/// kernel is compared with `V` times the kernel one degree higher.
pub fn kernel_min_generators(f: &EMap) -> Vec<KernelGenerator> {
    let alg = f.alg;
    let v = alg.v;
    let zero = alg.field.zero();
    let Some((bottom, top)) = f.source.degree_range() else {
        return Vec::new();
    };
    let mut gens = Vec::new();
    let mut upper: Option<(PieceLayout, Vec<Vec<Scalar>>)> = None;
    for d in (bottom..=top).rev() {
        let layout = f.source.layout(d);
        if layout.total == 0 {
            upper = None;
            continue;
        }
        let kernel = f.matrix_in_degree(d).kernel_basis();
        let k_d = kernel.cols();
        let basis: Vec<Vec<Scalar>> = (0..k_d).map(|j| kernel.column(j)).collect();
        if k_d > 0 {
            let mut span = RowSpace::new(alg.field, layout.total);
            if let Some((up_layout, up_basis)) = &upper {
                'fill: for i in 0..v {
                    let map = right_mult_map(up_layout, &layout, i);
                    for b in up_basis {
                        span.insert(&apply_index_map(&map, b, layout.total, &zero));
                        if span.rank() == k_d {
                            break 'fill;
                        }
                    }
                }
            }
            for vec in &basis {
                if span.rank() == k_d {
                    break;
                }
                if span.insert(vec) {
                    gens.push(KernelGenerator { degree: d, components: layout.to_components(vec) });
                }
            }
        }
        upper = Some((layout, basis));
    }
    gens
}

/// The map from `⊕ ω_E(v - deg)` onto the submodule generated by `gens`.
pub fn minimal_cover(gens: &[KernelGenerator], ambient: &FreeE, alg: super::Exterior) -> Result<EMap, ExteriorError> {
    let v = alg.v as i32;
    let source = FreeE::new(ambient.v, gens.iter().map(|g| v - g.degree).collect());
    let r = ambient.rank();
    let mut entries = vec![ExtElement::zero(); r * gens.len()];
    for (l, g) in gens.iter().enumerate() {
        if g.components.len() != r {
            return Err(ExteriorError::Shape { expected: (r, 1), found: g.components.len() });
        }
        for (k, x) in g.components.iter().enumerate() {
            entries[k * gens.len() + l] = x.clone();
        }
    }
    EMap::new(alg, source, ambient.clone(), entries)
}

/// Extends the window to the left by `steps` minimal covers of kernels.
pub fn resolve_backward(c: &EComplex, steps: usize) -> EComplex {
    let alg = c.alg;
    let mut lo = c.lo();
    let mut terms: Vec<FreeE> = c.terms().to_vec();
    let mut diffs: Vec<EMap> = c.diffs().to_vec();
    for _ in 0..steps {
        let first = match diffs.first() {
            Some(d) => d.clone(),
            None => EMap::zero(alg, terms[0].clone(), FreeE::zero(alg.v)),
        };
        let gens = kernel_min_generators(&first);
        let cover = minimal_cover(&gens, &terms[0], alg).expect("kernel generators are homogeneous");
        terms.insert(0, cover.source.clone());
        diffs.insert(0, cover);
        lo -= 1;
    }
    EComplex::from_parts(alg, lo, terms, diffs)
}

/// Extends the window to the right, via duality.
pub fn resolve_forward(c: &EComplex, steps: usize) -> EComplex {
    resolve_backward(&c.dual(), steps).dual()
}
