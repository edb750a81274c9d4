//! Beilinson monads `Ω(T)` and free monads `min L(T')`, in particular the partition
//! monads `L_μ`, with checks of their homology and of the shape of their terms.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::bgg::functor_l;
use crate::exterior::{EComplex, ExteriorError, FreeE};
use crate::scalars::{DenseMatrix, Scalar};
use crate::symmetric::{GradedSlice, Polynomials, SComplex};
use crate::tate::{CohomologyTable, TateError, TateWindow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonadError {
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Tate(#[from] TateError),
    #[error("window [{have_lo}, {have_hi}] does not contain [{need_lo}, {need_hi}]")]
    Window { need_lo: i32, need_hi: i32, have_lo: i32, have_hi: i32 },
    #[error("sequence {0:?} is not weakly increasing")]
    NotIncreasing(Vec<i32>),
    #[error("sequence has {found} entries, expected {expected}")]
    MuLength { expected: usize, found: usize },
    #[error("homology at position {position} in degree {degree} is {found}, expected {expected}")]
    Homology { position: i32, degree: i32, expected: usize, found: usize },
    #[error("row h^{row} does not vanish at the {side} end of the readable window")]
    UnboundedRow { row: i32, side: &'static str },
}

/// `Ω(T)`: each `ω(a)` with `0 ≤ a ≤ n` in `T^e`, `-n ≤ e ≤ n`, becomes `Ω^a(a)`; the
/// differential blocks keep their entries in `∧^{a-b} V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaMonad {
    pub complex: EComplex,
}

impl OmegaMonad {
    pub fn v(&self) -> usize {
        self.complex.v()
    }

    /// `(p, multiplicity)` for `Ω^p(p)` at position `e`, by decreasing `p`.
    pub fn term(&self, e: i32) -> Vec<(i32, usize)> {
        let mut m: BTreeMap<i32, usize> = BTreeMap::new();
        for &a in &self.complex.term(e).twists {
            *m.entry(a).or_insert(0) += 1;
        }
        m.into_iter().rev().collect()
    }

    /// Terms as `Ω^p(p)^m` joined by `+`, `0` for an empty position.
    pub fn describe(&self) -> Vec<(i32, String)> {
        (self.complex.lo()..=self.complex.hi())
            .map(|e| {
                let t = self.term(e);
                let s = if t.is_empty() {
                    "0".to_string()
                } else {
                    t.iter()
                        .map(|&(p, m)| {
                            let base = if p == 0 { "O".to_string() } else { format!("Omega^{p}({p})") };
                            if m == 1 { base } else { format!("{base}^{m}") }
                        })
                        .collect::<Vec<_>>()
                        .join(" + ")
                };
                (e, s)
            })
            .collect()
    }
}

pub fn beilinson(t: &TateWindow) -> Result<OmegaMonad, MonadError> {
    let n = t.v() as i32 - 1;
    if t.lo() > -n || t.hi() < n {
        return Err(MonadError::Window { need_lo: -n, need_hi: n, have_lo: t.lo(), have_hi: t.hi() });
    }
    let c = &t.complex;
    let keep = |e: i32| -> Vec<usize> { c.term(e).twists.iter().enumerate().filter(|(_, &a)| (0..=n).contains(&a)).map(|(i, _)| i).collect() };
    let idx: Vec<Vec<usize>> = (-n..=n).map(keep).collect();
    let terms: Vec<FreeE> = (-n..=n).zip(&idx).map(|(e, ix)| FreeE::new(t.v(), ix.iter().map(|&i| c.term(e).twists[i]).collect())).collect();
    let diffs = (-n..n).map(|e| c.diff(e).expect("inside window").restrict(&idx[(e + 1 + n) as usize], &idx[(e + n) as usize])).collect();
    Ok(OmegaMonad { complex: EComplex::new(c.alg, -n, terms, diffs)? })
}

/// `Γ_*(Ω^a(a))_t` as the kernel of `S_t ⊗ ω(a)_0 → S_{t+1} ⊗ ω(a)_{-1}`,
/// `s ⊗ y ↦ Σ x_i s ⊗ y e_i`; rows indexed `y * dim S_t + monomial`.
fn omega_sections(ring: Polynomials, a: i32, t: i32) -> DenseMatrix {
    let v = ring.v;
    let f = FreeE::new(v, vec![a]);
    let (top, low) = (f.layout(0), f.layout(-1));
    let (bt, bn) = (ring.basis(t), ring.basis(t + 1));
    let mut kappa = DenseMatrix::zeros(ring.field, low.total * bn.len(), top.total * bt.len());
    for (yi, y) in top.basis().iter().enumerate() {
        for (mi, mono) in bt.list.iter().enumerate() {
            for i in 0..v {
                if let Some((neg, prod)) = y.monomial.times(crate::exterior::ExtMonomial(1 << i)) {
                    let r = low.index_of(0, prod) * bn.len() + bn.index_of(&mono.times_var(i)).expect("degree");
                    kappa.set(r, yi * bt.len() + mi, &ring.field.one().signed(neg));
                }
            }
        }
    }
    kappa.kernel_basis()
}

/// Degreewise homology of `Ω(T)` with every `Ω^a(a)` modelled by its module of twisted
/// sections; position 0 must match the reference slice and every other position must
/// vanish for all degrees in `[t_lo, t_hi]`.
pub fn verify_omega_monad(m: &OmegaMonad, reference: &GradedSlice, t_lo: i32, t_hi: i32) -> Result<(), MonadError> {
    let h = omega_monad_homology(m, t_lo, t_hi);
    for ((e, t), found) in h {
        let expected = if e == 0 {
            reference.dim(t).map_err(|_| MonadError::Window { need_lo: t_lo, need_hi: t_hi, have_lo: reference.lo(), have_hi: reference.hi() })?
        } else {
            0
        };
        if found != expected {
            return Err(MonadError::Homology { position: e, degree: t, expected, found });
        }
    }
    Ok(())
}

/// `dim H^e(Γ_*(Ω(T)))_t` for every position and every `t` in `[t_lo, t_hi]`.
pub fn omega_monad_homology(m: &OmegaMonad, t_lo: i32, t_hi: i32) -> BTreeMap<(i32, i32), usize> {
    let c = &m.complex;
    let ring = Polynomials::new(c.alg.field, c.v());
    let mut out = BTreeMap::new();
    for t in t_lo..=t_hi {
        let st = ring.basis(t).len();
        let mut sections: BTreeMap<i32, DenseMatrix> = BTreeMap::new();
        let mut section = |a: i32| sections.entry(a).or_insert_with(|| omega_sections(ring, a, t)).clone();
        let dims: Vec<usize> = (c.lo()..=c.hi()).map(|e| c.term(e).twists.iter().map(|&a| section(a).cols()).sum()).collect();
        let ranks: Vec<usize> = (c.lo()..c.hi())
            .map(|e| {
                let d = c.diff(e).expect("inside window");
                let mat = d.matrix_in_degree(0);
                let (src, tgt) = (d.source.layout(0), d.target.layout(0));
                let cols: usize = dims[(e - c.lo()) as usize];
                let mut img = DenseMatrix::zeros(ring.field, tgt.total * st, cols);
                let mut col0 = 0;
                for (l, &a) in d.source.twists.iter().enumerate() {
                    let k = section(a);
                    let off = src.offsets[l];
                    let width = src.offsets.get(l + 1).copied().unwrap_or(src.total) - off;
                    for j in 0..k.cols() {
                        let kv = k.column(j);
                        let mut acc: Vec<Scalar> = vec![ring.field.zero(); tgt.total * st];
                        for y in 0..width {
                            for yp in 0..tgt.total {
                                if mat.is_zero_at(yp, off + y) {
                                    continue;
                                }
                                let c0 = mat.get(yp, off + y);
                                for mo in 0..st {
                                    let x = &kv[y * st + mo];
                                    if !x.is_zero() {
                                        acc[yp * st + mo] = acc[yp * st + mo].add(&c0.mul(x));
                                    }
                                }
                            }
                        }
                        for (r, x) in acc.iter().enumerate() {
                            if !x.is_zero() {
                                img.set(r, col0 + j, x);
                            }
                        }
                    }
                    col0 += k.cols();
                }
                img.rank()
            })
            .collect();
        for e in c.lo()..=c.hi() {
            let i = (e - c.lo()) as usize;
            let out_rank = if e < c.hi() { ranks[i] } else { 0 };
            let in_rank = if e > c.lo() { ranks[i - 1] } else { 0 };
            out.insert((e, t), dims[i] - out_rank - in_rank);
        }
    }
    out
}

/// A weakly increasing `m_0 ≤ … ≤ m_n`, extended by `m_0` below and `m_n` above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mu(Vec<i32>);

impl Mu {
    pub fn new(m: Vec<i32>, v: usize) -> Result<Mu, MonadError> {
        if m.len() != v {
            return Err(MonadError::MuLength { expected: v, found: m.len() });
        }
        if m.windows(2).any(|w| w[0] > w[1]) {
            return Err(MonadError::NotIncreasing(m));
        }
        Ok(Mu(m))
    }

    pub fn values(&self) -> &[i32] {
        &self.0
    }

    pub fn n(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn m(&self, i: i32) -> i32 {
        self.0[i.clamp(0, self.n()) as usize]
    }

    /// `(0, 1, …, n)`.
    pub fn beilinson(v: usize) -> Mu {
        Mu((0..v as i32).collect())
    }
}

/// `T_μ`: the summands `ω(a)` of `T^e` whose row `j = e + a` has `e ≥ m_j`.
pub fn partition_subcomplex(t: &TateWindow, mu: &Mu) -> EComplex {
    let c = &t.complex;
    let idx: Vec<Vec<usize>> = (c.lo()..=c.hi())
        .map(|e| c.term(e).twists.iter().enumerate().filter(|(_, &a)| e >= mu.m(e + a)).map(|(i, _)| i).collect())
        .collect();
    let terms = (c.lo()..=c.hi()).zip(&idx).map(|(e, ix)| FreeE::new(c.v(), ix.iter().map(|&i| c.term(e).twists[i]).collect())).collect();
    let diffs = (c.lo()..c.hi()).map(|e| c.diff(e).expect("inside window").restrict(&idx[(e + 1 - c.lo()) as usize], &idx[(e - c.lo()) as usize])).collect();
    EComplex::new(c.alg, c.lo(), terms, diffs).expect("T_mu is a subcomplex")
}

/// A minimal complex of free `S`-modules whose sheafification is a monad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMonad {
    pub complex: SComplex,
    pub mu: Option<Mu>,
}

/// `min L(T')` for a window `[lo, hi]` of a complex `T'` that agrees with a Tate
/// resolution from `hi` on and vanishes below `lo`. Cutting at `hi` only adds summands
/// `S(-a)` at positions `i` with `a + i = hi`, which are dropped.
pub fn free_monad_from_window(tp: &EComplex) -> SComplex {
    let hi = tp.hi();
    functor_l(tp).minimize().filter_summands(|i, a| a + i < hi).trimmed()
}

/// `L_μ = min L(T_μ)`; the window must reach from `m_0` to past `m_n`.
pub fn free_monad(t: &TateWindow, mu: &Mu) -> Result<FreeMonad, MonadError> {
    let (need_lo, need_hi) = (mu.m(0), mu.m(mu.n()) + 1);
    if t.lo() > need_lo || t.hi() < need_hi {
        return Err(MonadError::Window { need_lo, need_hi, have_lo: t.lo(), have_hi: t.hi() });
    }
    let tm = partition_subcomplex(&t.window(need_lo.min(t.hi()), need_hi)?, mu);
    Ok(FreeMonad { complex: free_monad_from_window(&tm), mu: Some(mu.clone()) })
}

/// The sequence for Walter's monad `W(F, c)`: rows `i ≤ c` start at their first nonzero
/// twist, rows `i > c` start past their last one and at least at `big`.
pub fn walter_mu(table: &CohomologyTable, c: i32, big: i32) -> Result<Mu, MonadError> {
    let n = table.ranges.keys().max().copied().unwrap_or(0);
    let support = |i: i32| -> Vec<i32> { table.entries.iter().filter(|(&(j, _), &h)| j == i && h > 0).map(|(&(_, l), _)| l).collect() };
    let mut m = vec![0i32; (n + 1) as usize];
    for i in (0..=c.min(n)).rev() {
        let (lo, _) = table.ranges[&i];
        if table.get(i, lo)? != 0 {
            return Err(MonadError::UnboundedRow { row: i, side: "left" });
        }
        let next = if i < c.min(n) { Some(m[(i + 1) as usize]) } else { None };
        let own = support(i).first().map(|&l| l + i);
        m[i as usize] = match (own, next) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => -big,
        };
    }
    for i in (c + 1).max(0)..=n {
        let (_, hi) = table.ranges[&i];
        if table.get(i, hi)? != 0 {
            return Err(MonadError::UnboundedRow { row: i, side: "right" });
        }
        let own = support(i).last().map_or(i32::MIN, |&l| l + i + 1);
        let prev = if i > 0 { m[(i - 1) as usize] } else { i32::MIN };
        m[i as usize] = own.max(prev).max(big);
    }
    Mu::new(m, (n + 1) as usize)
}

/// What [`monad_checks`] found wrong, if anything.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonadViolation {
    /// A nonzero term outside `[-n, n]`.
    Bounded { position: i32 },
    /// `S(-a)` at position `i` with `a + i` outside `[m_i, m_{i+n}]`.
    Range { position: i32, twist: i32 },
    /// `H^i(L)_d` differs from the prediction.
    Homology { position: i32, degree: i32, expected: usize, found: usize },
    /// `H^{n-i}(L^*)_{-n-d-1}` differs from the prediction.
    DualHomology { position: i32, degree: i32, expected: usize, found: usize },
}

/// Term bounds, twist ranges and the homology of `L` and `L^*` against a cohomology table,
/// for twists `d` in `[d_lo, d_hi]`.
pub fn monad_checks(l: &SComplex, mu: &Mu, table: &CohomologyTable, d_lo: i32, d_hi: i32) -> Result<Vec<MonadViolation>, MonadError> {
    let n = mu.n();
    let mut bad = Vec::new();
    for e in l.lo()..=l.hi() {
        let term = l.term(e);
        if !term.is_empty() && e.abs() > n {
            bad.push(MonadViolation::Bounded { position: e });
        }
        for &a in term {
            if a + e < mu.m(e) || a + e > mu.m(e + n) {
                bad.push(MonadViolation::Range { position: e, twist: a });
            }
        }
    }
    let h = |i: i32, d: i32| -> Result<usize, MonadError> { if (0..=n).contains(&i) { Ok(table.get(i, d)?) } else { Ok(0) } };
    for i in (l.lo().min(-n))..=(l.hi().max(n)) {
        for d in d_lo..=d_hi {
            let expected = if d >= mu.m(i) - i { h(i, d)? } else { 0 };
            let found = l.homology_dim(i, d);
            if found != expected {
                bad.push(MonadViolation::Homology { position: i, degree: d, expected, found });
            }
        }
    }
    let dual = l.dual();
    for i in 0..=n {
        for d in d_lo..=d_hi {
            let expected = if d < mu.m(i) - i { h(i, d)? } else { 0 };
            let found = dual.homology_dim(n - i, -n - d - 1);
            if found != expected {
                bad.push(MonadViolation::DualHomology { position: n - i, degree: -n - d - 1, expected, found });
            }
        }
    }
    Ok(bad)
}
