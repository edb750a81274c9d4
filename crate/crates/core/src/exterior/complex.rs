use std::collections::BTreeMap;

use super::algebra::{ExtElement, Exterior};
use super::module::{EMap, FreeE};
use super::ExteriorError;

/// A bounded window `T^lo → ... → T^hi` of a complex of free `E`-modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EComplex {
    pub alg: Exterior,
    lo: i32,
    terms: Vec<FreeE>,
    diffs: Vec<EMap>,
}

/// Betti table: `(position e, twist a) → multiplicity of ω_E(a) in T^e`.
pub type Betti = BTreeMap<(i32, i32), usize>;

impl EComplex {
    /// Checks shapes and that consecutive maps compose to zero.
    pub fn new(alg: Exterior, lo: i32, terms: Vec<FreeE>, diffs: Vec<EMap>) -> Result<Self, ExteriorError> {
        if terms.is_empty() || diffs.len() + 1 != terms.len() {
            return Err(ExteriorError::ComplexShape(format!("{} terms and {} maps", terms.len(), diffs.len())));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.source != terms[i] || d.target != terms[i + 1] {
                return Err(ExteriorError::ComplexShape(format!("map at position {} does not match its terms", lo + i as i32)));
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i].compose(&diffs[i - 1])?.is_zero() {
                return Err(ExteriorError::NotAComplex(lo + i as i32 - 1));
            }
        }
        Ok(EComplex { alg, lo, terms, diffs })
    }

    pub(crate) fn from_parts(alg: Exterior, lo: i32, terms: Vec<FreeE>, diffs: Vec<EMap>) -> Self {
        debug_assert_eq!(diffs.len() + 1, terms.len());
        EComplex { alg, lo, terms, diffs }
    }

    /// The two-term complex `source → target` with the source at position `pos`.
    pub fn from_map(f: EMap, pos: i32) -> Self {
        EComplex { alg: f.alg, lo: pos, terms: vec![f.source.clone(), f.target.clone()], diffs: vec![f] }
    }

    pub fn single(alg: Exterior, f: FreeE, pos: i32) -> Self {
        EComplex { alg, lo: pos, terms: vec![f], diffs: Vec::new() }
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn v(&self) -> usize {
        self.alg.v
    }

    pub fn terms(&self) -> &[FreeE] {
        &self.terms
    }

    pub fn diffs(&self) -> &[EMap] {
        &self.diffs
    }

    /// `T^e`, or the zero module outside the window.
    pub fn term(&self, e: i32) -> FreeE {
        if e < self.lo || e > self.hi() {
            return FreeE::zero(self.v());
        }
        self.terms[(e - self.lo) as usize].clone()
    }

    /// The map `T^e → T^{e+1}` if both ends lie in the window.
    pub fn diff(&self, e: i32) -> Option<&EMap> {
        if e < self.lo || e >= self.hi() {
            return None;
        }
        Some(&self.diffs[(e - self.lo) as usize])
    }

    pub fn betti(&self) -> Betti {
        let mut t = Betti::new();
        for (i, f) in self.terms.iter().enumerate() {
            for &a in &f.twists {
                *t.entry((self.lo + i as i32, a)).or_insert(0) += 1;
            }
        }
        t
    }

    /// Positions `[from, to]` of the window as a new complex.
    pub fn window(&self, from: i32, to: i32) -> Result<EComplex, ExteriorError> {
        if from < self.lo || to > self.hi() || from > to {
            return Err(ExteriorError::Window { lo: from, hi: to, have: (self.lo, self.hi()) });
        }
        let a = (from - self.lo) as usize;
        let b = (to - self.lo) as usize;
        Ok(EComplex::from_parts(self.alg, from, self.terms[a..=b].to_vec(), self.diffs[a..b].to_vec()))
    }

    /// Every summand twisted by `k`: ω(a) becomes ω(a+k).
    pub fn twisted(&self, k: i32) -> EComplex {
        let tw = |f: &FreeE| FreeE::new(f.v, f.twists.iter().map(|a| a + k).collect());
        EComplex {
            alg: self.alg,
            lo: self.lo,
            terms: self.terms.iter().map(tw).collect(),
            diffs: self.diffs.iter().map(|d| EMap::new_unchecked(self.alg, tw(&d.source), tw(&d.target), d.entries().to_vec())).collect(),
        }
    }

    /// Re-indexes positions: `T^e` moves to `e + k`.
    pub fn shifted(&self, k: i32) -> EComplex {
        EComplex { lo: self.lo + k, ..self.clone() }
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(FreeE::rank).sum()
    }

    /// Internal degrees where some term is nonzero.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        let rs: Vec<(i32, i32)> = self.terms.iter().filter_map(FreeE::degree_range).collect();
        Some((rs.iter().map(|r| r.0).min()?, rs.iter().map(|r| r.1).max()?))
    }

    /// Dimension of the homology at position `e` in internal degree `d`, computed with zero
    /// maps beyond the window.
    pub fn homology_dim(&self, e: i32, d: i32) -> usize {
        let mid = self.term(e).piece_dim(d);
        if mid == 0 {
            return 0;
        }
        let out = self.diff(e).map_or(0, |f| f.matrix_in_degree(d).rank());
        let inc = self.diff(e - 1).map_or(0, |f| f.matrix_in_degree(d).rank());
        mid - out - inc
    }

    /// First `(position, degree)` in `[from, to]` with nonzero homology.
    pub fn first_inexact(&self, from: i32, to: i32) -> Option<(i32, i32)> {
        let (dlo, dhi) = self.degree_range()?;
        for e in from..=to {
            for d in dlo..=dhi {
                if self.homology_dim(e, d) != 0 {
                    return Some((e, d));
                }
            }
        }
        None
    }

    pub fn is_exact_on(&self, from: i32, to: i32) -> bool {
        self.first_inexact(from, to).is_none()
    }

    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|d| d.entries().iter().all(|x| x.constant_term().is_none()))
    }

    /// `Hom_E(-, E)` re-expressed with ω-twists: `ω(a)` at `e` becomes `ω(v-a)` at `-e`.
    pub fn dual(&self) -> EComplex {
        let v = self.v() as i32;
        let dual_free = |f: &FreeE| FreeE::new(f.v, f.twists.iter().map(|a| v - a).collect());
        let terms: Vec<FreeE> = self.terms.iter().rev().map(dual_free).collect();
        let diffs: Vec<EMap> = self
            .diffs
            .iter()
            .rev()
            .map(|d| {
                let (r, c) = (d.rows(), d.cols());
                let mut entries = Vec::with_capacity(r * c);
                for l in 0..c {
                    for k in 0..r {
                        entries.push(d.entry(k, l).reversed());
                    }
                }
                EMap::new_unchecked(self.alg, dual_free(&d.target), dual_free(&d.source), entries)
            })
            .collect();
        EComplex::from_parts(self.alg, -self.hi(), terms, diffs)
    }

    /// Cancels unit constant entries until none remain.
    pub fn minimize(&self) -> EComplex {
        let mut c = self.clone();
        while let Some((i, k, l)) = c.find_unit() {
            c.cancel(i, k, l);
        }
        c
    }

    fn find_unit(&self) -> Option<(usize, usize, usize)> {
        for (i, d) in self.diffs.iter().enumerate() {
            for k in 0..d.rows() {
                for l in 0..d.cols() {
                    if d.entry(k, l).constant_term().is_some() {
                        return Some((i, k, l));
                    }
                }
            }
        }
        None
    }

    /// Removes source summand `l` of `diffs[i]` and target summand `k`, where the entry
    /// `(k, l)` is a unit `c`; the rest of the map becomes `α - β c⁻¹ γ`.
    fn cancel(&mut self, i: usize, k: usize, l: usize) {
        let d = &self.diffs[i];
        let c = d.entry(k, l).constant_term().expect("unit entry").clone();
        let cinv = c.inv().expect("nonzero");
        let rows: Vec<usize> = (0..d.rows()).filter(|&r| r != k).collect();
        let cols: Vec<usize> = (0..d.cols()).filter(|&s| s != l).collect();
        let mut nd = d.restrict(&rows, &cols);
        let beta: Vec<(usize, ExtElement)> = rows.iter().enumerate().filter(|(_, &r)| !d.entry(r, l).is_zero()).map(|(ri, &r)| (ri, d.entry(r, l).scale(&cinv))).collect();
        let gamma: Vec<(usize, &ExtElement)> = cols.iter().enumerate().filter(|(_, &s)| !d.entry(k, s).is_zero()).map(|(ci, &s)| (ci, d.entry(k, s))).collect();
        for (ri, b) in &beta {
            for (ci, g) in &gamma {
                let e = nd.entry_mut(*ri, *ci);
                *e = e.sub(&b.mul(g));
            }
        }
        let new_source = nd.source.clone();
        let new_target = nd.target.clone();
        self.diffs[i] = nd;
        if i > 0 {
            let prev = &self.diffs[i - 1];
            let all_cols: Vec<usize> = (0..prev.cols()).collect();
            self.diffs[i - 1] = prev.restrict(&(0..prev.rows()).filter(|&r| r != l).collect::<Vec<_>>(), &all_cols);
        }
        if i + 1 < self.diffs.len() {
            let next = &self.diffs[i + 1];
            let all_rows: Vec<usize> = (0..next.rows()).collect();
            self.diffs[i + 1] = next.restrict(&all_rows, &(0..next.cols()).filter(|&s| s != k).collect::<Vec<_>>());
        }
        self.terms[i] = new_source;
        self.terms[i + 1] = new_target;
    }

    /// Keeps only the `V`-linear parts of the entries.
    pub fn linear_strand_erase(&self) -> Result<EComplex, ExteriorError> {
        if !self.is_minimal() {
            return Err(ExteriorError::NotMinimal);
        }
        Ok(EComplex { diffs: self.diffs.iter().map(|d| d.map_entries(ExtElement::linear_part)).collect(), ..self.clone() })
    }

    /// Direct sum of two complexes over the union of their windows.
    pub fn direct_sum(&self, o: &EComplex) -> EComplex {
        let lo = self.lo.min(o.lo);
        let hi = self.hi().max(o.hi());
        let terms: Vec<FreeE> = (lo..=hi).map(|e| self.term(e).direct_sum(&o.term(e))).collect();
        let diffs = (lo..hi)
            .map(|e| {
                let a = self.diff(e).cloned().unwrap_or_else(|| EMap::zero(self.alg, self.term(e), self.term(e + 1)));
                let b = o.diff(e).cloned().unwrap_or_else(|| EMap::zero(self.alg, o.term(e), o.term(e + 1)));
                a.direct_sum(&b)
            })
            .collect();
        EComplex::from_parts(self.alg, lo, terms, diffs)
    }

    /// Drops zero terms at both ends (keeps at least one term).
    pub fn trimmed(&self) -> EComplex {
        let nz: Vec<usize> = (0..self.terms.len()).filter(|&i| !self.terms[i].is_zero()).collect();
        match (nz.first(), nz.last()) {
            (Some(&a), Some(&b)) => self.window(self.lo + a as i32, self.lo + b as i32).expect("inside window"),
            _ => self.window(self.lo, self.lo).expect("inside window"),
        }
    }
}
