//! The BGG functors `R` (graded `S`-modules to linear complexes over `E`) and `L` (graded
//! `E`-modules and complexes to complexes over `S`), linear parts of complexes, and the
//! regularity and irredundancy tests built on them.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exterior::{subset_table, EComplex, EMap, ExtElement, ExtMonomial, FreeE};
use crate::scalars::{DenseMatrix, RowSpace, Scalar};
use crate::symmetric::{GradedSlice, Poly, PolyMatrix, Polynomials, SComplex, SymmetricError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BggError {
    #[error(transparent)]
    Symmetric(#[from] SymmetricError),
    #[error("slice window [{have_lo}, {have_hi}] does not contain [{need_lo}, {need_hi}]")]
    Window { need_lo: i32, need_hi: i32, have_lo: i32, have_hi: i32 },
    #[error("complex terms are inconsistent: {0}")]
    Shape(String),
    #[error("complex is not linear: {0}")]
    NotLinear(String),
}

fn rank_or_zero(m: Option<DenseMatrix>) -> usize {
    m.map_or(0, |m| m.rank())
}

/// Entry `Σ_i X_i[k][l] e_i` of the linear map built from multiplication matrices.
fn linear_entries(xs: &[&DenseMatrix], rows: usize, cols: usize, negate: bool) -> Vec<ExtElement> {
    let mut entries = Vec::with_capacity(rows * cols);
    for k in 0..rows {
        for l in 0..cols {
            let terms = xs.iter().enumerate().filter(|(_, x)| !x.is_zero_at(k, l)).map(|(i, x)| (ExtMonomial(1 << i), x.get(k, l).signed(negate)));
            entries.push(ExtElement::from_terms(terms));
        }
    }
    entries
}

/// `R(M)` on the window of the slice: `ω_E(-t)^{dim M_t}` at position `t`.
pub fn functor_r(s: &GradedSlice) -> EComplex {
    let alg = crate::exterior::Exterior::new(s.field(), s.v()).expect("valid variable count");
    let v = s.v();
    let terms: Vec<FreeE> = (s.lo()..=s.hi()).map(|t| FreeE::new(v, vec![-t; s.dim(t).expect("in window")])).collect();
    let diffs = (s.lo()..s.hi())
        .map(|t| {
            let xs: Vec<&DenseMatrix> = (0..v).map(|i| s.mult(t, i).expect("in window")).collect();
            let src = &terms[(t - s.lo()) as usize];
            let tgt = &terms[(t + 1 - s.lo()) as usize];
            EMap::new(alg, src.clone(), tgt.clone(), linear_entries(&xs, tgt.rank(), src.rank(), false)).expect("linear entries")
        })
        .collect();
    EComplex::new(alg, s.lo(), terms, diffs).expect("commuting variables give a complex")
}

/// `R(M_{≥d})` on `[d, hi]` after checking the slice covers it.
pub fn functor_r_truncated(s: &GradedSlice, d: i32, hi: i32) -> Result<EComplex, BggError> {
    if s.lo() > d || s.hi() < hi {
        return Err(BggError::Window { need_lo: d, need_hi: hi, have_lo: s.lo(), have_hi: s.hi() });
    }
    Ok(functor_r(&s.restrict(d, hi)?))
}

/// A bounded complex of graded modules sharing one degree window.
#[derive(Clone, Debug)]
pub struct SliceComplex {
    pub lo: i32,
    pub terms: Vec<GradedSlice>,
    /// `maps[i][t - deg_lo]`: the degree-`t` component of `M^{lo+i} → M^{lo+i+1}`.
    pub maps: Vec<Vec<DenseMatrix>>,
}

impl SliceComplex {
    pub fn new(lo: i32, terms: Vec<GradedSlice>, maps: Vec<Vec<DenseMatrix>>) -> Result<Self, BggError> {
        if terms.is_empty() || maps.len() + 1 != terms.len() {
            return Err(BggError::Shape(format!("{} modules and {} maps", terms.len(), maps.len())));
        }
        let (dlo, dhi) = (terms[0].lo(), terms[0].hi());
        if terms.iter().any(|m| m.lo() != dlo || m.hi() != dhi) {
            return Err(BggError::Shape("modules must share one degree window".into()));
        }
        for (i, fs) in maps.iter().enumerate() {
            if fs.len() != (dhi - dlo + 1) as usize {
                return Err(BggError::Shape(format!("map {i} has {} degree components", fs.len())));
            }
            for t in dlo..dhi {
                let f = &fs[(t - dlo) as usize];
                let g = &fs[(t + 1 - dlo) as usize];
                for x in 0..terms[i].v() {
                    let a = g.mul(terms[i].mult(t, x)?).map_err(|e| BggError::Shape(e.to_string()))?;
                    let b = terms[i + 1].mult(t, x)?.mul(f).map_err(|e| BggError::Shape(e.to_string()))?;
                    if a != b {
                        return Err(BggError::Shape(format!("map {i} does not commute with x{x} in degree {t}")));
                    }
                }
            }
        }
        Ok(SliceComplex { lo, terms, maps })
    }
}

/// The total complex of `R` applied to a complex of modules:
/// `(RM)^k = ⊕_{i+j=k} ω_E(-j)^{dim (M^i)_j}`.
pub fn functor_r_complex(mc: &SliceComplex) -> EComplex {
    let m0 = &mc.terms[0];
    let alg = crate::exterior::Exterior::new(m0.field(), m0.v()).expect("valid variable count");
    let (dlo, dhi) = (m0.lo(), m0.hi());
    let ilo = mc.lo;
    let ihi = mc.lo + mc.terms.len() as i32 - 1;
    let (klo, khi) = (ilo + dlo, ihi + dhi);
    // blocks[(k)] = list of (i, j, offset, size)
    let mut blocks: BTreeMap<i32, Vec<(i32, i32, usize, usize)>> = BTreeMap::new();
    let mut terms = Vec::new();
    for k in klo..=khi {
        let mut list = Vec::new();
        let mut twists = Vec::new();
        for i in ilo..=ihi {
            let j = k - i;
            if j < dlo || j > dhi {
                continue;
            }
            let n = mc.terms[(i - ilo) as usize].dim(j).expect("in window");
            list.push((i, j, twists.len(), n));
            twists.extend(std::iter::repeat(-j).take(n));
        }
        blocks.insert(k, list);
        terms.push(FreeE::new(alg.v, twists));
    }
    let mut diffs = Vec::new();
    for k in klo..khi {
        let src = &terms[(k - klo) as usize];
        let tgt = &terms[(k + 1 - klo) as usize];
        let mut d = EMap::zero(alg, src.clone(), tgt.clone());
        let find = |i: i32, j: i32| blocks[&(k + 1)].iter().find(|b| b.0 == i && b.1 == j).map(|b| b.2);
        let mut entries: Vec<ExtElement> = d.entries().to_vec();
        let cols = src.rank();
        for &(i, j, off, n) in &blocks[&k] {
            if n == 0 {
                continue;
            }
            let m = &mc.terms[(i - ilo) as usize];
            if let Some(toff) = find(i, j + 1) {
                for x in 0..alg.v {
                    let a = m.mult(j, x).expect("in window");
                    for r in 0..a.rows() {
                        for c in 0..a.cols() {
                            if !a.is_zero_at(r, c) {
                                let e = &mut entries[(toff + r) * cols + off + c];
                                *e = e.add(&ExtElement::term(ExtMonomial(1 << x), a.get(r, c).signed(i.rem_euclid(2) == 1)));
                            }
                        }
                    }
                }
            }
            if i < ihi {
                if let Some(toff) = find(i + 1, j) {
                    let f = &mc.maps[(i - ilo) as usize][(j - dlo) as usize];
                    for r in 0..f.rows() {
                        for c in 0..f.cols() {
                            if !f.is_zero_at(r, c) {
                                entries[(toff + r) * cols + off + c] = ExtElement::constant(f.get(r, c));
                            }
                        }
                    }
                }
            }
        }
        d = EMap::new(alg, src.clone(), tgt.clone(), entries).expect("homogeneous");
        diffs.push(d);
    }
    EComplex::new(alg, klo, terms, diffs).expect("total complex")
}

/// `L` of a complex of free `E`-modules: the piece `(T^e)_d` contributes `S(-d)^{dim}` at
/// position `e - d`; the differential is the `E`-map in each degree plus `(-1)^e` times
/// `s ⊗ p ↦ Σ x_i s ⊗ p e_i`.
pub fn functor_l(c: &EComplex) -> SComplex {
    let alg = c.alg;
    let v = alg.v;
    let ring = Polynomials::new(alg.field, v);
    let Some((dlo, dhi)) = c.degree_range() else {
        return SComplex::new(ring, 0, vec![Vec::new()], Vec::new()).expect("zero complex");
    };
    let (klo, khi) = (c.lo() - dhi, c.hi() - dlo);
    let mut index: BTreeMap<(i32, i32), usize> = BTreeMap::new();
    let mut terms: Vec<Vec<i32>> = Vec::new();
    for k in klo..=khi {
        let mut t = Vec::new();
        for e in c.lo()..=c.hi() {
            let d = e - k;
            let n = c.term(e).piece_dim(d);
            if n > 0 {
                index.insert((e, d), t.len());
                t.extend(std::iter::repeat(d).take(n));
            }
        }
        terms.push(t);
    }
    let mut diffs = Vec::new();
    for k in klo..khi {
        let (rows, cols) = (terms[(k + 1 - klo) as usize].len(), terms[(k - klo) as usize].len());
        let mut m = PolyMatrix::zero(rows, cols);
        for e in c.lo()..=c.hi() {
            let d = e - k;
            let Some(&off) = index.get(&(e, d)) else { continue };
            let term = c.term(e);
            let upper = term.layout(d);
            if let Some(&toff) = index.get(&(e, d - 1)) {
                let lower = term.layout(d - 1);
                for (ci, p) in upper.basis().iter().enumerate() {
                    for i in 0..v {
                        if let Some((neg, prod)) = p.monomial.times(ExtMonomial(1 << i)) {
                            let r = toff + lower.index_of(p.summand, prod);
                            let x = ring.var(i).scale(&alg.field.one().signed(neg ^ (e.rem_euclid(2) == 1)));
                            let ent = m.get_mut(r, off + ci);
                            *ent = ent.add(&x);
                        }
                    }
                }
            }
            if let (Some(f), Some(&toff)) = (c.diff(e), index.get(&(e + 1, d))) {
                let a = f.matrix_in_degree(d);
                for r in 0..a.rows() {
                    for cc in 0..a.cols() {
                        if !a.is_zero_at(r, cc) {
                            *m.get_mut(toff + r, off + cc) = Poly::constant(v, a.get(r, cc));
                        }
                    }
                }
            }
        }
        diffs.push(m);
    }
    SComplex::new(ring, klo, terms, diffs).expect("L of a complex is a complex")
}

/// A finite-dimensional graded `E`-module: pieces by internal degree and the right action
/// `e_i: P_d → P_{d-1}`.
#[derive(Clone, Debug)]
pub struct EModule {
    pub alg: crate::exterior::Exterior,
    pub lo: i32,
    pub dims: Vec<usize>,
    /// `action[d - lo][i]`: `dims[d-1] x dims[d]` (empty at the bottom degree).
    pub action: Vec<Vec<DenseMatrix>>,
}

impl EModule {
    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn dim(&self, d: i32) -> usize {
        if d < self.lo || d > self.hi() {
            0
        } else {
            self.dims[(d - self.lo) as usize]
        }
    }

    /// The kernel of a map of free modules as a graded module.
    pub fn kernel(f: &EMap) -> EModule {
        let alg = f.alg;
        let (lo, hi) = f.source.degree_range().unwrap_or((0, 0));
        let bases: Vec<DenseMatrix> = (lo..=hi).map(|d| f.matrix_in_degree(d).kernel_basis()).collect();
        let dims: Vec<usize> = bases.iter().map(DenseMatrix::cols).collect();
        let mut action = Vec::new();
        for d in lo..=hi {
            if d == lo {
                action.push(Vec::new());
                continue;
            }
            let (upper, lower) = (f.source.layout(d), f.source.layout(d - 1));
            let kb_up = &bases[(d - lo) as usize];
            let kb_low = &bases[(d - 1 - lo) as usize];
            let mut per = Vec::new();
            for i in 0..alg.v {
                let mut m = DenseMatrix::zeros(alg.field, kb_low.cols(), kb_up.cols());
                for j in 0..kb_up.cols() {
                    let mut w = vec![alg.field.zero(); lower.total];
                    for (idx, p) in upper.basis().iter().enumerate() {
                        let x = kb_up.get(idx, j);
                        if x.is_zero() {
                            continue;
                        }
                        if let Some((neg, prod)) = p.monomial.times(ExtMonomial(1 << i)) {
                            let r = lower.index_of(p.summand, prod);
                            w[r] = w[r].add(&x.signed(neg));
                        }
                    }
                    let coords = kb_low.solve(&w).expect("sizes").expect("kernel is a submodule");
                    for (r, x) in coords.iter().enumerate() {
                        m.set(r, j, x);
                    }
                }
                per.push(m);
            }
            action.push(per);
        }
        EModule { alg, lo, dims, action }
    }
}

/// `L(P)` for a graded `E`-module: `S(-d) ⊗ P_d` at position `-d`.
pub fn functor_l_module(p: &EModule) -> SComplex {
    let v = p.alg.v;
    let ring = Polynomials::new(p.alg.field, v);
    let (klo, khi) = (-p.hi(), -p.lo);
    let terms: Vec<Vec<i32>> = (klo..=khi).map(|k| vec![-k; p.dim(-k)]).collect();
    let diffs = (klo..khi)
        .map(|k| {
            let d = -k;
            let mut m = PolyMatrix::zero(p.dim(d - 1), p.dim(d));
            for i in 0..v {
                let a = &p.action[(d - p.lo) as usize][i];
                for r in 0..a.rows() {
                    for c in 0..a.cols() {
                        if !a.is_zero_at(r, c) {
                            let e = m.get_mut(r, c);
                            *e = e.add(&ring.var(i).scale(&a.get(r, c)));
                        }
                    }
                }
            }
            m
        })
        .collect();
    SComplex::new(ring, klo, terms, diffs).expect("L of a module is a complex")
}

/// Minimal form with all non-linear entries erased.
pub fn linear_part(c: &EComplex) -> EComplex {
    c.minimize().linear_strand_erase().expect("minimized")
}

/// The linear part computed from the homology of `Hom_E(K, c)` with its `S`-action:
/// the strand `s` module `N^s_t = H^{s+t}` in socle degree `t` contributes `R(N^s)`
/// shifted to start at position `t + s`.
pub fn linear_part_via_homology(c: &EComplex) -> Result<EComplex, BggError> {
    let alg = c.alg;
    let field = alg.field;
    let ring = Polynomials::new(field, alg.v);
    // summand indices by (position, twist)
    let idx = |p: i32, a: i32| -> Vec<usize> { c.term(p).twists.iter().enumerate().filter(|(_, &x)| x == a).map(|(i, _)| i).collect() };
    let twists: Vec<i32> = {
        let mut t: Vec<i32> = c.terms().iter().flat_map(|f| f.twists.iter().copied()).collect();
        t.sort();
        t.dedup();
        t
    };
    let block = |f: &EMap, rows: &[usize], cols: &[usize], mono: ExtMonomial| -> DenseMatrix {
        let mut m = DenseMatrix::zeros(field, rows.len(), cols.len());
        for (r, &k) in rows.iter().enumerate() {
            for (s, &l) in cols.iter().enumerate() {
                if let Some(x) = f.entry(k, l).coefficient(mono) {
                    m.set(r, s, x);
                }
            }
        }
        m
    };
    struct Hom {
        basis: Vec<Vec<Scalar>>,
        solver: Option<DenseMatrix>,
        boundary_rank: usize,
    }
    let mut homs: BTreeMap<(i32, i32), Hom> = BTreeMap::new();
    for p in c.lo()..=c.hi() {
        for &a in &twists {
            let cols = idx(p, a);
            if cols.is_empty() {
                continue;
            }
            let z = match c.diff(p) {
                Some(f) => block(f, &idx(p + 1, a), &cols, ExtMonomial::ONE).kernel_basis(),
                None => DenseMatrix::identity(field, cols.len()),
            };
            let bnd = match c.diff(p - 1) {
                Some(f) => block(f, &cols, &idx(p - 1, a), ExtMonomial::ONE),
                None => DenseMatrix::zeros(field, cols.len(), 0),
            };
            let mut space = RowSpace::new(field, cols.len());
            let mut bcols = Vec::new();
            for j in 0..bnd.cols() {
                let col = bnd.column(j);
                if space.insert(&col) {
                    bcols.push(col);
                }
            }
            let boundary_rank = bcols.len();
            let mut basis = Vec::new();
            for j in 0..z.cols() {
                let col = z.column(j);
                if space.insert(&col) {
                    basis.push(col);
                }
            }
            if basis.is_empty() {
                continue;
            }
            let all: Vec<Vec<Scalar>> = bcols.into_iter().chain(basis.iter().cloned()).collect();
            let solver = Some(DenseMatrix::from_columns(field, cols.len(), &all));
            homs.insert((p, a), Hom { basis, solver, boundary_rank });
        }
    }
    // strands
    let mut strands: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
    for &(p, a) in homs.keys() {
        strands.entry(p + a).or_default().push(-a);
    }
    let mut total: Option<EComplex> = None;
    for (s, ts) in strands {
        let (tlo, thi) = (*ts.iter().min().expect("nonempty"), *ts.iter().max().expect("nonempty"));
        let dims: Vec<usize> = (tlo..=thi).map(|t| homs.get(&(s + t, -t)).map_or(0, |h| h.basis.len())).collect();
        let mut mult = Vec::new();
        for t in tlo..thi {
            let (p, a) = (s + t, -t);
            let mut per = Vec::new();
            for i in 0..alg.v {
                let (rows, cols) = (dims[(t + 1 - tlo) as usize], dims[(t - tlo) as usize]);
                let mut m = DenseMatrix::zeros(field, rows, cols);
                if let (Some(src), Some(tgt), Some(f)) = (homs.get(&(p, a)), homs.get(&(p + 1, a - 1)), c.diff(p)) {
                    let lin = block(f, &idx(p + 1, a - 1), &idx(p, a), ExtMonomial(1 << i));
                    for (j, h) in src.basis.iter().enumerate() {
                        let hv = DenseMatrix::from_columns(field, h.len(), std::slice::from_ref(h));
                        let w = lin.mul(&hv).expect("sizes").column(0);
                        let coords = tgt.solver.as_ref().expect("solver").solve(&w).expect("sizes").ok_or_else(|| BggError::Shape("connecting map leaves the cycles".into()))?;
                        for (r, x) in coords[tgt.boundary_rank..].iter().enumerate() {
                            m.set(r, j, x);
                        }
                    }
                }
                per.push(m);
            }
            mult.push(per);
        }
        let n = GradedSlice::direct(ring, tlo, dims, mult)?;
        let r = functor_r(&n).shifted(s);
        total = Some(match total {
            None => r,
            Some(acc) => acc.direct_sum(&r),
        });
    }
    let base = EComplex::single(alg, FreeE::zero(alg.v), c.lo()).direct_sum(&EComplex::single(alg, FreeE::zero(alg.v), c.hi()));
    let out = match total {
        Some(t) => base.direct_sum(&t),
        None => base,
    };
    Ok(out.window(c.lo(), c.hi()).unwrap_or(out))
}

/// Where `R(M_{≥d})` first fails to be exact, as (position, internal degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearityFailure {
    pub position: i32,
    pub degree: i32,
}

/// Checks exactness of `R(M_{≥d})` at positions `d+1 ..= d+w`; this holds for all `w`
/// exactly when `M_{≥d}` has a linear resolution.
pub fn truncation_linearity_check(s: &GradedSlice, d: i32, w: i32) -> Result<Result<(), LinearityFailure>, BggError> {
    let r = functor_r_truncated(s, d, d + w + 1)?;
    let v = s.v() as i32;
    for p in d + 1..=d + w {
        for deg in p..=p + v {
            let mid = r.term(p).piece_dim(deg);
            if mid == 0 {
                continue;
            }
            let out = rank_or_zero(r.diff(p).map(|f| f.matrix_in_degree(deg)));
            let inc = rank_or_zero(r.diff(p - 1).map(|f| f.matrix_in_degree(deg)));
            if out + inc != mid {
                return Ok(Err(LinearityFailure { position: p, degree: deg }));
            }
        }
    }
    Ok(Ok(()))
}

/// Dimension of the part of `M_d` killed by every variable.
pub fn socle_dim(s: &GradedSlice, d: i32) -> Result<usize, BggError> {
    let cols = s.dim(d)?;
    let below = s.dim(d + 1)?;
    let mut stacked = DenseMatrix::zeros(s.field(), below * s.v(), cols);
    for i in 0..s.v() {
        let m = s.mult(d, i)?;
        for r in 0..below {
            for c in 0..cols {
                stacked.set(i * below + r, c, &m.get(r, c));
            }
        }
    }
    Ok(cols - stacked.rank())
}

/// Verdicts for a linear complex `G` ending at `G^0`, through `P` with `L(P^*) = G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrredundancyFlags {
    pub irredundant: bool,
    pub is_linear_part_of_resolution: bool,
}

pub fn irredundancy_flags(c: &SComplex) -> Result<IrredundancyFlags, BggError> {
    let v = c.ring.v;
    let field = c.ring.field;
    if c.hi() != 0 {
        return Err(BggError::Shape(format!("complex ends at position {}, expected 0", c.hi())));
    }
    for e in c.lo()..=0 {
        if let Some(&a) = c.term(e).iter().find(|&&a| a != -e) {
            return Err(BggError::NotLinear(format!("summand S(-{a}) at position {e}")));
        }
    }
    let jmax = -c.lo();
    let rank = |j: i32| c.term(-j).len();
    // e_i: P_{-(j-1)} → P_{-j} is the transpose of the x_i-coefficients of G^{-j} → G^{-j+1}
    let action = |j: i32, i: usize| -> DenseMatrix {
        let mut m = DenseMatrix::zeros(field, rank(j), rank(j - 1));
        if let Some(d) = c.diff(-j) {
            let xi = crate::symmetric::SMonomial::var(v, i);
            for r in 0..d.rows {
                for s in 0..d.cols {
                    let p = d.get(r, s);
                    if let Some(x) = p.terms().find(|(m, _)| **m == xi).map(|(_, x)| x.clone()) {
                        m.set(s, r, &x);
                    }
                    if p.degree().is_some_and(|deg| deg != 1) {
                        return DenseMatrix::zeros(field, 0, 0);
                    }
                }
            }
        }
        m
    };
    let mut acts: BTreeMap<(i32, usize), DenseMatrix> = BTreeMap::new();
    for j in 1..=jmax {
        for i in 0..v {
            let a = action(j, i);
            if a.rows() != rank(j) {
                return Err(BggError::NotLinear(format!("map into position {}", -j + 1)));
            }
            acts.insert((j, i), a);
        }
    }
    let mut irredundant = true;
    for j in 1..=jmax {
        let mut space = RowSpace::new(field, rank(j));
        for i in 0..v {
            let a = &acts[&(j, i)];
            for col in 0..a.cols() {
                space.insert(&a.column(col));
            }
        }
        if space.rank() != rank(j) {
            irredundant = false;
        }
    }
    // cover E ⊗ P_0 → P in degree -j: e_J ⊗ p ↦ e_J · p
    let p0 = rank(0);
    let table = subset_table(v);
    let image_of = |mono: ExtMonomial, p: &Vec<Scalar>| -> Vec<Scalar> {
        let idxs = mono.indices();
        let mut cur = p.clone();
        for (step, &i) in idxs.iter().rev().enumerate() {
            let j = step as i32 + 1;
            if j > jmax {
                return Vec::new();
            }
            let hv = DenseMatrix::from_columns(field, cur.len(), std::slice::from_ref(&cur));
            cur = acts[&(j, i)].mul(&hv).expect("sizes").column(0);
        }
        cur
    };
    let mut kernels: Vec<DenseMatrix> = Vec::new();
    let mut linear = true;
    for j in 0..=(v as i32) {
        let monos = &table.by_size[j as usize];
        let dim_f = monos.len() * p0;
        let target = if j <= jmax { rank(j) } else { 0 };
        let mut pi = DenseMatrix::zeros(field, target, dim_f);
        if target > 0 {
            for (mi, &mono) in monos.iter().enumerate() {
                for q in 0..p0 {
                    let mut unit = vec![field.zero(); p0];
                    unit[q] = field.one();
                    let img = image_of(mono, &unit);
                    for (r, x) in img.iter().enumerate() {
                        pi.set(r, mi * p0 + q, x);
                    }
                }
            }
        }
        let ker = if target > 0 { pi.kernel_basis() } else { DenseMatrix::identity(field, dim_f) };
        if j >= 2 {
            let prev = &kernels[(j - 1) as usize];
            let prev_monos = &table.by_size[(j - 1) as usize];
            let mut span = RowSpace::new(field, dim_f);
            for col in 0..prev.cols() {
                let kv = prev.column(col);
                for i in 0..v {
                    let mut w = vec![field.zero(); dim_f];
                    for (mi, &mono) in prev_monos.iter().enumerate() {
                        if let Some((neg, prod)) = ExtMonomial(1 << i).times(mono) {
                            let t = table.rank[prod.0 as usize];
                            for q in 0..p0 {
                                let x = &kv[mi * p0 + q];
                                if !x.is_zero() {
                                    w[t * p0 + q] = w[t * p0 + q].add(&x.signed(neg));
                                }
                            }
                        }
                    }
                    span.insert(&w);
                }
            }
            if span.rank() < ker.cols() {
                linear = false;
            }
        }
        kernels.push(ker);
    }
    Ok(IrredundancyFlags { irredundant, is_linear_part_of_resolution: irredundant && linear })
}
