use crate::exterior::{binomial, subset_table};

use super::poly::{Poly, Polynomials};
use super::SymmetricError;

/// `M = coker(⊕_j S(-b_j) → ⊕_i S(-a_i))` given by a homogeneous polynomial matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedS {
    pub ring: Polynomials,
    /// Generator degrees `a_i` (rows).
    pub target: Vec<i32>,
    /// Relation degrees `b_j` (columns).
    pub source: Vec<i32>,
    entries: Vec<Poly>,
}

impl PresentedS {
    /// Entries row-major; entry `(i, j)` must be homogeneous of degree `b_j - a_i`.
    pub fn new(ring: Polynomials, target: Vec<i32>, source: Vec<i32>, entries: Vec<Poly>) -> Result<Self, SymmetricError> {
        if entries.len() != target.len() * source.len() {
            return Err(SymmetricError::Shape(format!("expected {}x{} entries, found {}", target.len(), source.len(), entries.len())));
        }
        let p = PresentedS { ring, target, source, entries };
        for i in 0..p.target.len() {
            for j in 0..p.source.len() {
                let x = p.entry(i, j);
                if x.is_zero() {
                    continue;
                }
                if x.num_vars() != Some(ring.v) || x.max_var().is_some_and(|m| m >= ring.v) {
                    return Err(SymmetricError::VariableOutOfRange(x.to_string()));
                }
                let want = p.source[j] - p.target[i];
                if x.degree() != Some(want) {
                    return Err(SymmetricError::Inhomogeneous { row: i, col: j, expected: want, entry: x.to_string() });
                }
            }
        }
        Ok(p)
    }

    /// A free module `⊕ S(-a_i)`.
    pub fn free(ring: Polynomials, target: Vec<i32>) -> Self {
        PresentedS { ring, target, source: Vec::new(), entries: Vec::new() }
    }

    /// `S / (f_1, ..., f_r)` for homogeneous forms.
    pub fn quotient(ring: Polynomials, forms: Vec<Poly>) -> Result<Self, SymmetricError> {
        let degs = forms.iter().map(|f| f.degree().ok_or_else(|| SymmetricError::Inhomogeneous { row: 0, col: 0, expected: 0, entry: f.to_string() })).collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, vec![0], degs, forms)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.source.len() + j]
    }

    /// `M(k)`: every degree lowered by `k`.
    pub fn twisted(&self, k: i32) -> Self {
        PresentedS {
            ring: self.ring,
            target: self.target.iter().map(|a| a - k).collect(),
            source: self.source.iter().map(|b| b - k).collect(),
            entries: self.entries.clone(),
        }
    }

    /// Presentation of `M ⊗_S N` from presentations of both factors.
    pub fn tensor(&self, o: &PresentedS) -> PresentedS {
        let (r0, c0, r1, c1) = (self.target.len(), self.source.len(), o.target.len(), o.source.len());
        let mut target = Vec::with_capacity(r0 * r1);
        for &a in &self.target {
            for &b in &o.target {
                target.push(a + b);
            }
        }
        let mut source = Vec::new();
        for &b in &self.source {
            for &c in &o.target {
                source.push(b + c);
            }
        }
        for &a in &self.target {
            for &d in &o.source {
                source.push(a + d);
            }
        }
        let cols = source.len();
        let mut entries = vec![Poly::zero(); target.len() * cols];
        // A ⊗ 1
        for i in 0..r0 {
            for j in 0..c0 {
                for k in 0..r1 {
                    entries[(i * r1 + k) * cols + j * r1 + k] = self.entry(i, j).clone();
                }
            }
        }
        // 1 ⊗ B
        for i in 0..r0 {
            for k in 0..r1 {
                for l in 0..c1 {
                    entries[(i * r1 + k) * cols + c0 * r1 + i * c1 + l] = o.entry(k, l).clone();
                }
            }
        }
        PresentedS { ring: self.ring, target, source, entries }
    }
}

/// `Ω^i`: the cokernel of the Koszul map `S ⊗ ∧^{i+2}W → S ⊗ ∧^{i+1}W`.
pub fn omega_module(ring: Polynomials, i: i32) -> Result<PresentedS, SymmetricError> {
    let v = ring.v as i32;
    if i < -1 || i > v - 1 {
        return Err(SymmetricError::OmegaIndex { i, v: ring.v });
    }
    let table = subset_table(ring.v);
    let tgt = &table.by_size[(i + 1) as usize];
    let empty = Vec::new();
    let src = if i + 2 <= v { &table.by_size[(i + 2) as usize] } else { &empty };
    let mut entries = vec![Poly::zero(); tgt.len() * src.len()];
    for (c, m) in src.iter().enumerate() {
        for (s, j) in m.indices().into_iter().enumerate() {
            let rest = crate::exterior::ExtMonomial(m.0 & !(1 << j));
            let r = table.rank[rest.0 as usize];
            let x = ring.var(j);
            entries[r * src.len() + c] = if s % 2 == 0 { x } else { x.neg() };
        }
    }
    debug_assert_eq!(tgt.len(), binomial(v as i64, (i + 1) as i64));
    PresentedS::new(ring, vec![i + 1; tgt.len()], vec![i + 2; src.len()], entries)
}
