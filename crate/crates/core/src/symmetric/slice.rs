use crate::exterior::subset_table;
use crate::scalars::{DenseMatrix, Field, Scalar};

use super::poly::Polynomials;
use super::presented::PresentedS;
use super::SymmetricError;

/// A graded `S`-module known in degrees `[lo, hi]`: a basis size per degree and the
/// multiplication maps `x_i: M_t → M_{t+1}` for `lo ≤ t < hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSlice {
    pub ring: Polynomials,
    lo: i32,
    dims: Vec<usize>,
    /// `mult[t - lo][i]` is `dims[t+1] x dims[t]`.
    mult: Vec<Vec<DenseMatrix>>,
}

impl GradedSlice {
    /// Builds a slice from dimensions and multiplication matrices, checking that the
    /// variables commute.
    pub fn direct(ring: Polynomials, lo: i32, dims: Vec<usize>, mult: Vec<Vec<DenseMatrix>>) -> Result<Self, SymmetricError> {
        if dims.is_empty() || mult.len() + 1 != dims.len() {
            return Err(SymmetricError::Shape(format!("{} degrees need {} multiplication steps, found {}", dims.len(), dims.len().saturating_sub(1), mult.len())));
        }
        for (s, ms) in mult.iter().enumerate() {
            if ms.len() != ring.v {
                return Err(SymmetricError::Shape(format!("degree {} has {} multiplication maps", lo + s as i32, ms.len())));
            }
            for m in ms {
                if m.rows() != dims[s + 1] || m.cols() != dims[s] || m.field() != ring.field {
                    return Err(SymmetricError::Shape(format!("multiplication map from degree {} has the wrong size", lo + s as i32)));
                }
            }
        }
        let sl = GradedSlice { ring, lo, dims, mult };
        sl.check_commutativity()?;
        Ok(sl)
    }

    fn check_commutativity(&self) -> Result<(), SymmetricError> {
        for s in 0..self.mult.len().saturating_sub(1) {
            for i in 0..self.ring.v {
                for j in i + 1..self.ring.v {
                    let a = self.mult[s + 1][j].mul(&self.mult[s][i]).expect("sizes");
                    let b = self.mult[s + 1][i].mul(&self.mult[s][j]).expect("sizes");
                    if a != b {
                        return Err(SymmetricError::NotCommutative { i, j, degree: self.lo + s as i32 });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn field(&self) -> Field {
        self.ring.field
    }

    pub fn v(&self) -> usize {
        self.ring.v
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn check(&self, t: i32) -> Result<usize, SymmetricError> {
        if t < self.lo || t > self.hi() {
            return Err(SymmetricError::OutsideWindow { degree: t, lo: self.lo, hi: self.hi() });
        }
        Ok((t - self.lo) as usize)
    }

    pub fn dim(&self, t: i32) -> Result<usize, SymmetricError> {
        Ok(self.dims[self.check(t)?])
    }

    /// `x_i: M_t → M_{t+1}`.
    pub fn mult(&self, t: i32, i: usize) -> Result<&DenseMatrix, SymmetricError> {
        self.check(t + 1)?;
        Ok(&self.mult[self.check(t)?][i])
    }

    /// `M_{≥d}`: degrees below `d` are zeroed.
    pub fn truncate(&self, d: i32) -> GradedSlice {
        let mut out = self.clone();
        for s in 0..out.dims.len() {
            let t = self.lo + s as i32;
            if t < d {
                out.dims[s] = 0;
            }
        }
        for s in 0..out.mult.len() {
            for m in out.mult[s].iter_mut() {
                *m = if self.lo + (s as i32) < d {
                    DenseMatrix::zeros(self.field(), out.dims[s + 1], out.dims[s])
                } else {
                    m.clone()
                };
            }
        }
        out
    }

    /// The degrees `[from, to]` of the slice.
    pub fn restrict(&self, from: i32, to: i32) -> Result<GradedSlice, SymmetricError> {
        let a = self.check(from)?;
        let b = self.check(to)?;
        if a > b {
            return Err(SymmetricError::OutsideWindow { degree: from, lo: self.lo, hi: self.hi() });
        }
        Ok(GradedSlice { ring: self.ring, lo: from, dims: self.dims[a..=b].to_vec(), mult: self.mult[a..b].to_vec() })
    }

    /// `M(k)`: the piece of degree `t` becomes the piece of degree `t - k`.
    pub fn twisted(&self, k: i32) -> GradedSlice {
        GradedSlice { lo: self.lo - k, ..self.clone() }
    }

    /// Pads with zero pieces so the window becomes `[from, to]`.
    pub fn padded(&self, from: i32, to: i32) -> GradedSlice {
        let lo = from.min(self.lo);
        let hi = to.max(self.hi());
        let dims: Vec<usize> = (lo..=hi).map(|t| self.dim(t).unwrap_or(0)).collect();
        let mult = (lo..hi)
            .map(|t| {
                (0..self.v())
                    .map(|i| match self.mult(t, i) {
                        Ok(m) => m.clone(),
                        Err(_) => DenseMatrix::zeros(self.field(), dims[(t + 1 - lo) as usize], dims[(t - lo) as usize]),
                    })
                    .collect()
            })
            .collect();
        GradedSlice { ring: self.ring, lo, dims, mult }
    }

    /// `dim Tor_k(K, M)_j` from the Koszul complex
    /// `∧^{k+1}W ⊗ M_{j-k-1} → ∧^k W ⊗ M_{j-k} → ∧^{k-1}W ⊗ M_{j-k+1}`.
    pub fn koszul_tor(&self, k: usize, j: i32) -> Result<usize, SymmetricError> {
        let v = self.v();
        let t = j - k as i32;
        let mid = self.koszul_block(k, t)?;
        if mid == 0 {
            return Ok(0);
        }
        let out = if k >= 1 { self.koszul_map(k, t)?.rank() } else { 0 };
        let inc = if k < v { self.koszul_map(k + 1, t - 1)?.rank() } else { 0 };
        Ok(mid - out - inc)
    }

    fn koszul_block(&self, k: usize, t: i32) -> Result<usize, SymmetricError> {
        if k > self.v() {
            return Ok(0);
        }
        Ok(subset_table(self.v()).by_size[k].len() * self.dim(t)?)
    }

    /// `∧^k W ⊗ M_t → ∧^{k-1} W ⊗ M_{t+1}`, `w_J ⊗ m ↦ Σ_s (-1)^s w_{J∖j_s} ⊗ x_{j_s} m`.
    pub fn koszul_map(&self, k: usize, t: i32) -> Result<DenseMatrix, SymmetricError> {
        let table = subset_table(self.v());
        let (m_src, m_tgt) = (self.dim(t)?, self.dim(t + 1)?);
        let src = &table.by_size[k];
        let tgt = &table.by_size[k - 1];
        let mut out = DenseMatrix::zeros(self.field(), tgt.len() * m_tgt, src.len() * m_src);
        for (c, mono) in src.iter().enumerate() {
            for (s, var) in mono.indices().into_iter().enumerate() {
                let r = table.rank[(mono.0 & !(1 << var)) as usize];
                let x = self.mult(t, var)?;
                for a in 0..m_tgt {
                    for b in 0..m_src {
                        if !x.is_zero_at(a, b) {
                            out.set(r * m_tgt + a, c * m_src + b, &x.get(a, b).signed(s % 2 == 1));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Hilbert function on the window.
    pub fn hilbert(&self) -> Vec<(i32, usize)> {
        self.dims.iter().enumerate().map(|(s, &d)| (self.lo + s as i32, d)).collect()
    }
}

/// Sparse row echelon form with unit leading entries; row `k` starts at column `lead[k]`.
struct Echelon {
    field: Field,
    pivot_row: Vec<Option<usize>>,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl Echelon {
    fn new(field: Field, width: usize) -> Self {
        Echelon { field, pivot_row: vec![None; width], rows: Vec::new() }
    }

    /// Clears pivot columns of `w` from column `from` on, in increasing order.
    fn reduce(&self, w: &mut [Scalar], from: usize) {
        for c in from..w.len() {
            if w[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let f = w[c].clone();
                for (cc, x) in &self.rows[r] {
                    w[*cc] = w[*cc].sub(&f.mul(x));
                }
            }
        }
    }

    fn insert(&mut self, w: &mut [Scalar]) {
        let Some(start) = w.iter().position(|x| !x.is_zero()) else { return };
        self.reduce(w, start);
        let Some(lead) = w.iter().position(|x| !x.is_zero()) else { return };
        let inv = w[lead].inv().expect("nonzero");
        let row: Vec<(usize, Scalar)> = (lead..w.len()).filter(|&c| !w[c].is_zero()).map(|c| (c, w[c].mul(&inv))).collect();
        for x in w.iter_mut() {
            *x = self.field.zero();
        }
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
    }
}

/// Normal forms modulo the relations in one degree of a presented module.
pub(crate) struct DegreePiece {
    /// Basis of `(F_0)_t` as (generator, monomial index).
    pub basis: Vec<(usize, usize)>,
    pub offsets: Vec<Option<usize>>,
    echelon: Echelon,
    /// Non-pivot columns: the coset representatives.
    pub reps: Vec<usize>,
    rep_index: Vec<Option<usize>>,
}

impl DegreePiece {
    /// Coordinates of the basis vector `idx` of `(F_0)_t` in the representatives.
    pub fn normal_form_of(&self, idx: usize, scratch: &mut [Scalar]) -> Vec<(usize, Scalar)> {
        let field = self.echelon.field;
        scratch[idx] = field.one();
        self.echelon.reduce(scratch, idx);
        let mut out = Vec::new();
        for c in idx..scratch.len() {
            if !scratch[c].is_zero() {
                out.push((self.rep_index[c].expect("reduced"), scratch[c].clone()));
                scratch[c] = field.zero();
            }
        }
        out
    }
}

pub(crate) fn degree_piece(p: &PresentedS, t: i32) -> DegreePiece {
    let ring = p.ring;
    let mut offsets = Vec::new();
    let mut basis = Vec::new();
    let mut total = 0;
    for (g, &a) in p.target.iter().enumerate() {
        let b = ring.basis(t - a);
        if b.is_empty() {
            offsets.push(None);
        } else {
            offsets.push(Some(total));
            for m in 0..b.len() {
                basis.push((g, m));
            }
            total += b.len();
        }
    }
    let bases: Vec<_> = p.target.iter().map(|&a| ring.basis(t - a)).collect();
    let mut echelon = Echelon::new(ring.field, total);
    let mut row = vec![ring.field.zero(); total];
    for (j, &bj) in p.source.iter().enumerate() {
        for mu in ring.basis(t - bj).list {
            for (i, off) in offsets.iter().enumerate() {
                let Some(off) = off else { continue };
                for (m, c) in p.entry(i, j).terms() {
                    let idx = bases[i].index_of(&m.times(&mu)).expect("degree matches");
                    row[off + idx] = row[off + idx].add(c);
                }
            }
            echelon.insert(&mut row);
        }
    }
    let reps: Vec<usize> = (0..total).filter(|&c| echelon.pivot_row[c].is_none()).collect();
    let mut rep_index = vec![None; total];
    for (k, &c) in reps.iter().enumerate() {
        rep_index[c] = Some(k);
    }
    DegreePiece { basis, offsets, echelon, reps, rep_index }
}

/// The slice of a presented module on `[lo, hi]`, with monomial coset representatives.
pub fn slice(p: &PresentedS, lo: i32, hi: i32) -> Result<GradedSlice, SymmetricError> {
    if lo > hi {
        return Err(SymmetricError::OutsideWindow { degree: lo, lo, hi });
    }
    let ring = p.ring;
    let pieces: Vec<DegreePiece> = (lo..=hi).map(|t| degree_piece(p, t)).collect();
    let dims: Vec<usize> = pieces.iter().map(|pc| pc.reps.len()).collect();
    let mut mult = Vec::new();
    for t in lo..hi {
        let (cur, next) = (&pieces[(t - lo) as usize], &pieces[(t + 1 - lo) as usize]);
        let next_bases: Vec<_> = p.target.iter().map(|&a| ring.basis(t + 1 - a)).collect();
        let cur_bases: Vec<_> = p.target.iter().map(|&a| ring.basis(t - a)).collect();
        let mut per_var = Vec::with_capacity(ring.v);
        let mut scratch = vec![ring.field.zero(); next.basis.len()];
        for i in 0..ring.v {
            let mut m = DenseMatrix::zeros(ring.field, next.reps.len(), cur.reps.len());
            for (col, &rep) in cur.reps.iter().enumerate() {
                let (g, mi) = cur.basis[rep];
                let mono = cur_bases[g].list[mi].times_var(i);
                let idx = next.offsets[g].expect("nonempty") + next_bases[g].index_of(&mono).expect("degree");
                for (row, x) in next.normal_form_of(idx, &mut scratch) {
                    m.set(row, col, &x);
                }
            }
            per_var.push(m);
        }
        mult.push(per_var);
    }
    Ok(GradedSlice { ring, lo, dims, mult })
}
