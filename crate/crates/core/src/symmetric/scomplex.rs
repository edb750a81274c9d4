use std::collections::BTreeMap;

use crate::scalars::DenseMatrix;

use super::poly::{Poly, Polynomials};
use super::SymmetricError;

/// A matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Poly::zero(); rows * cols] }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix { rows, cols, entries }
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Poly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn mul(&self, o: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let e = out.get_mut(i, j);
                        *e = e.add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.get_mut(c, r) = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }
}

/// A bounded complex of graded free `S`-modules `⊕ S(-a)`; each term is its list of `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SComplex {
    pub ring: Polynomials,
    lo: i32,
    terms: Vec<Vec<i32>>,
    diffs: Vec<PolyMatrix>,
}

impl SComplex {
    /// Checks shapes, homogeneity (entry `(k,l)` has degree `a_l - b_k`) and `d∘d = 0`.
    pub fn new(ring: Polynomials, lo: i32, terms: Vec<Vec<i32>>, diffs: Vec<PolyMatrix>) -> Result<Self, SymmetricError> {
        if terms.is_empty() || diffs.len() + 1 != terms.len() {
            return Err(SymmetricError::Shape(format!("{} terms and {} maps", terms.len(), diffs.len())));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.cols != terms[i].len() || d.rows != terms[i + 1].len() {
                return Err(SymmetricError::Shape(format!("map at position {} does not match its terms", lo + i as i32)));
            }
            for k in 0..d.rows {
                for l in 0..d.cols {
                    let x = d.get(k, l);
                    let want = terms[i][l] - terms[i + 1][k];
                    if !x.is_zero() && x.degree() != Some(want) {
                        return Err(SymmetricError::Inhomogeneous { row: k, col: l, expected: want, entry: x.to_string() });
                    }
                }
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i].mul(&diffs[i - 1]).is_zero() {
                return Err(SymmetricError::NotAComplex(lo + i as i32 - 1));
            }
        }
        Ok(SComplex { ring, lo, terms, diffs })
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn terms(&self) -> &[Vec<i32>] {
        &self.terms
    }

    pub fn diffs(&self) -> &[PolyMatrix] {
        &self.diffs
    }

    pub fn term(&self, e: i32) -> &[i32] {
        if e < self.lo || e > self.hi() {
            return &[];
        }
        &self.terms[(e - self.lo) as usize]
    }

    pub fn diff(&self, e: i32) -> Option<&PolyMatrix> {
        if e < self.lo || e >= self.hi() {
            return None;
        }
        Some(&self.diffs[(e - self.lo) as usize])
    }

    /// `(position, twist a) → multiplicity of S(-a)`.
    pub fn betti(&self) -> BTreeMap<(i32, i32), usize> {
        let mut t = BTreeMap::new();
        for (i, term) in self.terms.iter().enumerate() {
            for &a in term {
                *t.entry((self.lo + i as i32, a)).or_insert(0) += 1;
            }
        }
        t
    }

    /// Sorted twist multiset per position, dropping empty positions.
    pub fn shape(&self) -> Vec<(i32, Vec<i32>)> {
        self.terms
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(|(i, t)| {
                let mut t = t.clone();
                t.sort();
                (self.lo + i as i32, t)
            })
            .collect()
    }

    pub fn piece_dim(&self, e: i32, t: i32) -> usize {
        self.term(e).iter().map(|&a| self.ring.basis(t - a).len()).sum()
    }

    /// The map `C^e_t → C^{e+1}_t` in monomial bases.
    pub fn matrix_in_degree(&self, e: i32, t: i32) -> Option<DenseMatrix> {
        let d = self.diff(e)?;
        let src = self.term(e);
        let tgt = self.term(e + 1);
        let src_b: Vec<_> = src.iter().map(|&a| self.ring.basis(t - a)).collect();
        let tgt_b: Vec<_> = tgt.iter().map(|&a| self.ring.basis(t - a)).collect();
        let offs = |bs: &[super::poly::MonomialBasis]| {
            let mut o = Vec::with_capacity(bs.len());
            let mut acc = 0;
            for b in bs {
                o.push(acc);
                acc += b.len();
            }
            (o, acc)
        };
        let (so, sn) = offs(&src_b);
        let (to, tn) = offs(&tgt_b);
        let mut m = DenseMatrix::zeros(self.ring.field, tn, sn);
        for l in 0..src.len() {
            for k in 0..tgt.len() {
                let x = d.get(k, l);
                if x.is_zero() {
                    continue;
                }
                for (ci, mu) in src_b[l].list.iter().enumerate() {
                    for (m0, c) in x.terms() {
                        let r = to[k] + tgt_b[k].index_of(&m0.times(mu)).expect("degree");
                        let cur = m.get(r, so[l] + ci);
                        m.set(r, so[l] + ci, &cur.add(c));
                    }
                }
            }
        }
        Some(m)
    }

    /// `dim H^e(C)_t`, with zero maps beyond the window.
    pub fn homology_dim(&self, e: i32, t: i32) -> usize {
        let mid = self.piece_dim(e, t);
        if mid == 0 {
            return 0;
        }
        let out = self.matrix_in_degree(e, t).map_or(0, |m| m.rank());
        let inc = self.matrix_in_degree(e - 1, t).map_or(0, |m| m.rank());
        mid - out - inc
    }

    /// Homology dimensions for every position and every degree in `[t_lo, t_hi]`.
    pub fn homology(&self, t_lo: i32, t_hi: i32) -> BTreeMap<(i32, i32), usize> {
        let mut out = BTreeMap::new();
        for e in self.lo..=self.hi() {
            for t in t_lo..=t_hi {
                out.insert((e, t), self.homology_dim(e, t));
            }
        }
        out
    }

    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|d| (0..d.rows).all(|k| (0..d.cols).all(|l| d.get(k, l).constant_term().is_none())))
    }

    /// Cancels unit constant entries until none remain.
    pub fn minimize(&self) -> SComplex {
        let mut c = self.clone();
        loop {
            let found = c.diffs.iter().enumerate().find_map(|(i, d)| {
                (0..d.rows).find_map(|k| (0..d.cols).find(|&l| d.get(k, l).constant_term().is_some()).map(|l| (i, k, l)))
            });
            match found {
                Some((i, k, l)) => c.cancel(i, k, l),
                None => return c,
            }
        }
    }

    fn cancel(&mut self, i: usize, k: usize, l: usize) {
        let d = &self.diffs[i];
        let cinv = d.get(k, l).constant_term().expect("unit").inv().expect("nonzero");
        let rows: Vec<usize> = (0..d.rows).filter(|&r| r != k).collect();
        let cols: Vec<usize> = (0..d.cols).filter(|&s| s != l).collect();
        let mut nd = d.restrict(&rows, &cols);
        let beta: Vec<(usize, Poly)> = rows.iter().enumerate().filter(|(_, &r)| !d.get(r, l).is_zero()).map(|(ri, &r)| (ri, d.get(r, l).scale(&cinv))).collect();
        let gamma: Vec<(usize, &Poly)> = cols.iter().enumerate().filter(|(_, &s)| !d.get(k, s).is_zero()).map(|(ci, &s)| (ci, d.get(k, s))).collect();
        for (ri, b) in &beta {
            for (ci, g) in &gamma {
                let e = nd.get_mut(*ri, *ci);
                *e = e.sub(&b.mul(g));
            }
        }
        self.diffs[i] = nd;
        if i > 0 {
            let p = &self.diffs[i - 1];
            let keep: Vec<usize> = (0..p.rows).filter(|&r| r != l).collect();
            self.diffs[i - 1] = p.restrict(&keep, &(0..p.cols).collect::<Vec<_>>());
        }
        if i + 1 < self.diffs.len() {
            let n = &self.diffs[i + 1];
            let keep: Vec<usize> = (0..n.cols).filter(|&s| s != k).collect();
            self.diffs[i + 1] = n.restrict(&(0..n.rows).collect::<Vec<_>>(), &keep);
        }
        self.terms[i].remove(l);
        self.terms[i + 1].remove(k);
    }

    /// Keeps summands satisfying `keep(position, twist)`; the caller guarantees the result
    /// is a subcomplex.
    pub fn filter_summands(&self, keep: impl Fn(i32, i32) -> bool) -> SComplex {
        let idx: Vec<Vec<usize>> = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| (0..t.len()).filter(|&s| keep(self.lo + i as i32, t[s])).collect())
            .collect();
        let terms = idx.iter().enumerate().map(|(i, ix)| ix.iter().map(|&s| self.terms[i][s]).collect()).collect();
        let diffs = self.diffs.iter().enumerate().map(|(i, d)| d.restrict(&idx[i + 1], &idx[i])).collect();
        SComplex { ring: self.ring, lo: self.lo, terms, diffs }
    }

    /// Drops zero terms at both ends.
    pub fn trimmed(&self) -> SComplex {
        let nz: Vec<usize> = (0..self.terms.len()).filter(|&i| !self.terms[i].is_empty()).collect();
        let (a, b) = match (nz.first(), nz.last()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => (0, 0),
        };
        SComplex {
            ring: self.ring,
            lo: self.lo + a as i32,
            terms: self.terms[a..=b].to_vec(),
            diffs: self.diffs[a..b].to_vec(),
        }
    }

    /// `Hom_S(-, S)`: `S(-a)` at `e` becomes `S(a)` at `-e`, maps transposed.
    pub fn dual(&self) -> SComplex {
        let terms = self.terms.iter().rev().map(|t| t.iter().map(|a| -a).collect()).collect();
        let diffs = self.diffs.iter().rev().map(PolyMatrix::transpose).collect();
        SComplex { ring: self.ring, lo: -self.hi(), terms, diffs }
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(Vec::len).sum()
    }
}
