use crate::scalars::{DenseMatrix, Scalar};

use super::algebra::{subset_table, ExtElement, ExtMonomial, Exterior};
use super::ExteriorError;

pub(crate) fn binomial(n: i64, k: i64) -> usize {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

/// A graded free module `⊕_k ω_E(a_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeE {
    pub v: usize,
    pub twists: Vec<i32>,
}

/// Position of a basis vector `g_k e_K` inside a degree piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PieceIndex {
    pub summand: usize,
    pub monomial: ExtMonomial,
}

/// The degree-`d` piece of a free module: offsets per summand and monomial size.
#[derive(Clone, Debug)]
pub struct PieceLayout {
    pub v: usize,
    pub offsets: Vec<usize>,
    /// Word length of the basis monomials of each summand, if the piece is nonzero.
    pub sizes: Vec<Option<usize>>,
    pub total: usize,
}

impl PieceLayout {
    pub fn index_of(&self, summand: usize, m: ExtMonomial) -> usize {
        self.offsets[summand] + subset_table(self.v).rank[m.0 as usize]
    }

    pub fn monomials(&self, summand: usize) -> &'static [ExtMonomial] {
        match self.sizes[summand] {
            Some(s) => &subset_table(self.v).by_size[s],
            None => &[],
        }
    }

    pub fn basis(&self) -> Vec<PieceIndex> {
        let mut out = Vec::with_capacity(self.total);
        for k in 0..self.sizes.len() {
            for &m in self.monomials(k) {
                out.push(PieceIndex { summand: k, monomial: m });
            }
        }
        out
    }

    /// Reads a coordinate vector back as one element of `E` per summand.
    pub fn to_components(&self, vec: &[Scalar]) -> Vec<ExtElement> {
        (0..self.sizes.len())
            .map(|k| {
                let ms = self.monomials(k);
                ExtElement::from_terms(
                    ms.iter().enumerate().filter(|(i, _)| !vec[self.offsets[k] + i].is_zero()).map(|(i, m)| (*m, vec[self.offsets[k] + i].clone())),
                )
            })
            .collect()
    }
}

impl FreeE {
    pub fn new(v: usize, twists: Vec<i32>) -> Self {
        FreeE { v, twists }
    }

    pub fn zero(v: usize) -> Self {
        FreeE { v, twists: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn is_zero(&self) -> bool {
        self.twists.is_empty()
    }

    pub fn piece_dim(&self, d: i32) -> usize {
        self.twists.iter().map(|&a| binomial(self.v as i64, (a + d) as i64)).sum()
    }

    pub fn layout(&self, d: i32) -> PieceLayout {
        let v = self.v as i32;
        let mut offsets = Vec::with_capacity(self.twists.len());
        let mut sizes = Vec::with_capacity(self.twists.len());
        let mut total = 0;
        for &a in &self.twists {
            offsets.push(total);
            let s = v - a - d;
            if (0..=v).contains(&s) {
                sizes.push(Some(s as usize));
                total += binomial(v as i64, s as i64);
            } else {
                sizes.push(None);
            }
        }
        PieceLayout { v: self.v, offsets, sizes, total }
    }

    /// Ordered basis of the degree-`d` piece.
    pub fn degree_piece_basis(&self, d: i32) -> Vec<PieceIndex> {
        self.layout(d).basis()
    }

    /// Internal degrees in which the module is nonzero, as `(lowest, highest)`.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let lo = self.twists.iter().map(|&a| -a).min()?;
        let hi = self.twists.iter().map(|&a| self.v as i32 - a).max()?;
        Some((lo, hi))
    }

    pub fn direct_sum(&self, o: &FreeE) -> FreeE {
        let mut t = self.twists.clone();
        t.extend_from_slice(&o.twists);
        FreeE { v: self.v, twists: t }
    }
}

/// A homogeneous map of free modules, `g_l ↦ Σ_k g_k X_{kl}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EMap {
    pub alg: Exterior,
    pub source: FreeE,
    pub target: FreeE,
    entries: Vec<ExtElement>,
}

impl EMap {
    /// Entries are given row-major: `entries[k * source.rank() + l]`.
    pub fn new(alg: Exterior, source: FreeE, target: FreeE, entries: Vec<ExtElement>) -> Result<Self, ExteriorError> {
        if entries.len() != source.rank() * target.rank() {
            return Err(ExteriorError::Shape {
                expected: (target.rank(), source.rank()),
                found: entries.len(),
            });
        }
        let m = EMap { alg, source, target, entries };
        for k in 0..m.rows() {
            for l in 0..m.cols() {
                let x = m.entry(k, l);
                if let Some(i) = x.max_index().filter(|&i| i >= alg.v) {
                    return Err(ExteriorError::IndexOutOfRange { index: i, v: alg.v });
                }
                if x.is_zero() {
                    continue;
                }
                let want = m.source.twists[l] - m.target.twists[k];
                if x.word_length().map(|w| w as i32) != Some(want) {
                    return Err(ExteriorError::Inhomogeneous {
                        row: k,
                        col: l,
                        expected: want,
                        entry: x.to_string(),
                    });
                }
            }
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(alg: Exterior, source: FreeE, target: FreeE, entries: Vec<ExtElement>) -> Self {
        debug_assert_eq!(entries.len(), source.rank() * target.rank());
        EMap { alg, source, target, entries }
    }

    pub fn from_rows(alg: Exterior, source: FreeE, target: FreeE, rows: Vec<Vec<ExtElement>>) -> Result<Self, ExteriorError> {
        let entries: Vec<ExtElement> = rows.into_iter().flatten().collect();
        Self::new(alg, source, target, entries)
    }

    pub fn zero(alg: Exterior, source: FreeE, target: FreeE) -> Self {
        let n = source.rank() * target.rank();
        EMap { alg, source, target, entries: vec![ExtElement::zero(); n] }
    }

    pub fn identity(alg: Exterior, f: FreeE) -> Self {
        let n = f.rank();
        let mut m = Self::zero(alg, f.clone(), f);
        for i in 0..n {
            m.entries[i * n + i] = alg.constant(1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.target.rank()
    }

    pub fn cols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, k: usize, l: usize) -> &ExtElement {
        &self.entries[k * self.cols() + l]
    }

    pub(crate) fn entry_mut(&mut self, k: usize, l: usize) -> &mut ExtElement {
        let c = self.cols();
        &mut self.entries[k * c + l]
    }

    pub fn entries(&self) -> &[ExtElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(ExtElement::is_zero)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &EMap) -> Result<EMap, ExteriorError> {
        if first.target != self.source {
            return Err(ExteriorError::Composition);
        }
        let (n, m, r) = (self.rows(), first.cols(), self.cols());
        let mut entries = vec![ExtElement::zero(); n * m];
        for i in 0..n {
            for k in 0..r {
                let z = self.entry(i, k);
                if z.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let x = first.entry(k, j);
                    if !x.is_zero() {
                        entries[i * m + j] = entries[i * m + j].add(&z.mul(x));
                    }
                }
            }
        }
        Ok(EMap { alg: self.alg, source: first.source.clone(), target: self.target.clone(), entries })
    }

    /// The `K`-linear map `source_d → target_d` in the ordered piece bases.
    pub fn matrix_in_degree(&self, d: i32) -> DenseMatrix {
        let src = self.source.layout(d);
        let tgt = self.target.layout(d);
        let mut mat = DenseMatrix::zeros(self.alg.field, tgt.total, src.total);
        let table = subset_table(self.alg.v);
        for l in 0..self.cols() {
            let ms = src.monomials(l);
            if ms.is_empty() {
                continue;
            }
            for k in 0..self.rows() {
                let x = self.entry(k, l);
                if x.is_zero() || tgt.sizes[k].is_none() {
                    continue;
                }
                for (ci, &mk) in ms.iter().enumerate() {
                    let col = src.offsets[l] + ci;
                    for (mj, c) in x.terms() {
                        if let Some((neg, prod)) = mj.times(mk) {
                            let row = tgt.offsets[k] + table.rank[prod.0 as usize];
                            let cur = mat.get(row, col);
                            mat.set(row, col, &cur.add(&c.signed(neg)));
                        }
                    }
                }
            }
        }
        mat
    }

    /// Submatrix on the given target rows and source columns.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> EMap {
        let source = FreeE::new(self.source.v, cols.iter().map(|&l| self.source.twists[l]).collect());
        let target = FreeE::new(self.target.v, rows.iter().map(|&k| self.target.twists[k]).collect());
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &k in rows {
            for &l in cols {
                entries.push(self.entry(k, l).clone());
            }
        }
        EMap { alg: self.alg, source, target, entries }
    }

    /// Applies `f` to every entry (must preserve homogeneity).
    pub fn map_entries(&self, f: impl Fn(&ExtElement) -> ExtElement) -> EMap {
        EMap { entries: self.entries.iter().map(f).collect(), ..self.clone() }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, o: &EMap) -> EMap {
        let source = self.source.direct_sum(&o.source);
        let target = self.target.direct_sum(&o.target);
        let mut m = EMap::zero(self.alg, source, target);
        for k in 0..self.rows() {
            for l in 0..self.cols() {
                *m.entry_mut(k, l) = self.entry(k, l).clone();
            }
        }
        for k in 0..o.rows() {
            for l in 0..o.cols() {
                *m.entry_mut(self.rows() + k, self.cols() + l) = o.entry(k, l).clone();
            }
        }
        m
    }

    pub fn row_elements(&self, k: usize) -> Vec<ExtElement> {
        (0..self.cols()).map(|l| self.entry(k, l).clone()).collect()
    }
}
