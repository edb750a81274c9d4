use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::scalars::{Field, Scalar};

use super::ExteriorError;

/// Largest number of exterior variables supported.
pub const MAX_VARS: usize = 16;

/// A basis monomial `e_{i_1}∧...∧e_{i_k}` with `i_1 < ... < i_k`, stored as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExtMonomial(pub u32);

impl ExtMonomial {
    pub const ONE: ExtMonomial = ExtMonomial(0);

    pub fn from_indices(indices: &[usize]) -> Option<ExtMonomial> {
        let mut m = 0u32;
        for &i in indices {
            if i >= MAX_VARS || m & (1 << i) != 0 {
                return None;
            }
            m |= 1 << i;
        }
        Some(ExtMonomial(m))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Internal degree, `-|subset|`.
    pub fn degree(self) -> i32 {
        -(self.len() as i32)
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).collect()
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    /// Product `e_self * e_other` as (sign is negative, monomial), or `None` when they overlap.
    pub fn times(self, other: ExtMonomial) -> Option<(bool, ExtMonomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0u32;
        let mut b = other.0;
        while b != 0 {
            let j = b.trailing_zeros();
            swaps += (self.0 >> j).count_ones();
            b &= b - 1;
        }
        Some((swaps % 2 == 1, ExtMonomial(self.0 | other.0)))
    }
}

impl Ord for ExtMonomial {
    /// By size, then lexicographically on the sorted index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    Ordering::Equal
                } else if self.0 & (1 << diff.trailing_zeros()) != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            o => o,
        }
    }
}

impl PartialOrd for ExtMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("e{i}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Monomials of each size in basis order, and the position of each mask within its size.
pub(crate) struct SubsetTable {
    pub by_size: Vec<Vec<ExtMonomial>>,
    pub rank: Vec<usize>,
}

pub(crate) fn subset_table(v: usize) -> &'static SubsetTable {
    static TABLES: [OnceLock<SubsetTable>; MAX_VARS + 1] = [const { OnceLock::new() }; MAX_VARS + 1];
    TABLES[v].get_or_init(|| {
        let mut by_size = vec![Vec::new(); v + 1];
        for m in 0..(1u32 << v) {
            by_size[m.count_ones() as usize].push(ExtMonomial(m));
        }
        let mut rank = vec![0; 1 << v];
        for list in by_size.iter_mut() {
            list.sort();
            for (i, m) in list.iter().enumerate() {
                rank[m.0 as usize] = i;
            }
        }
        SubsetTable { by_size, rank }
    })
}

/// An element of `E`: a sorted list of monomials with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExtElement {
    terms: Vec<(ExtMonomial, Scalar)>,
}

impl ExtElement {
    pub fn zero() -> Self {
        ExtElement { terms: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(ExtMonomial::ONE, c)
    }

    pub fn term(m: ExtMonomial, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ExtElement { terms: vec![(m, c)] }
        }
    }

    /// Sums arbitrary (monomial, coefficient) pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (ExtMonomial, Scalar)>) -> Self {
        let mut acc: BTreeMap<ExtMonomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(x) => *x = x.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        ExtElement { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(ExtMonomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common word length of all terms; `None` for zero or mixed elements.
    pub fn word_length(&self) -> Option<usize> {
        let first = self.terms.first()?.0.len();
        self.terms.iter().all(|(m, _)| m.len() == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.word_length().is_some()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.iter().filter(|(m, _)| !m.is_empty()).map(|(m, _)| 31 - m.0.leading_zeros() as usize).max()
    }

    pub fn coefficient(&self, m: ExtMonomial) -> Option<&Scalar> {
        self.terms.iter().find(|(x, _)| *x == m).map(|(_, c)| c)
    }

    pub fn constant_term(&self) -> Option<&Scalar> {
        self.coefficient(ExtMonomial::ONE)
    }

    /// Keeps only the terms of word length `k`.
    pub fn component(&self, k: usize) -> ExtElement {
        ExtElement { terms: self.terms.iter().filter(|(m, _)| m.len() == k).cloned().collect() }
    }

    /// The part lying in `V`.
    pub fn linear_part(&self) -> ExtElement {
        self.component(1)
    }

    pub fn add(&self, o: &ExtElement) -> ExtElement {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (a, b) = (&self.terms[i], &o.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.1.add(&b.1);
                    if !c.is_zero() {
                        out.push((a.0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        ExtElement { terms: out }
    }

    pub fn neg(&self) -> ExtElement {
        ExtElement { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, o: &ExtElement) -> ExtElement {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> ExtElement {
        if c.is_zero() {
            return Self::zero();
        }
        ExtElement { terms: self.terms.iter().map(|(m, x)| (*m, x.mul(c))).collect() }
    }

    pub fn mul(&self, o: &ExtElement) -> ExtElement {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                if let Some((neg, m)) = a.times(*b) {
                    raw.push((m, x.mul(y).signed(neg)));
                }
            }
        }
        Self::from_terms(raw)
    }

    /// The anti-involution `e_{i_1}...e_{i_k} ↦ e_{i_k}...e_{i_1}`.
    pub fn reversed(&self) -> ExtElement {
        ExtElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let k = m.len();
                    (*m, c.signed((k * k.saturating_sub(1) / 2) % 2 == 1))
                })
                .collect(),
        }
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.prints_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// The exterior algebra `∧V` on `v` generators over a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exterior {
    pub field: Field,
    pub v: usize,
}

impl Exterior {
    pub fn new(field: Field, v: usize) -> Result<Self, ExteriorError> {
        if v == 0 || v > MAX_VARS {
            return Err(ExteriorError::VariableCount(v));
        }
        Ok(Exterior { field, v })
    }

    pub fn var(&self, i: usize) -> Result<ExtElement, ExteriorError> {
        self.monomial(&[i], self.field.one())
    }

    pub fn monomial(&self, indices: &[usize], c: Scalar) -> Result<ExtElement, ExteriorError> {
        if let Some(&i) = indices.iter().find(|&&i| i >= self.v) {
            return Err(ExteriorError::IndexOutOfRange { index: i, v: self.v });
        }
        // unsorted index lists are reordered with the matching sign
        let mut acc = ExtElement::constant(c);
        for &i in indices {
            acc = acc.mul(&ExtElement::term(ExtMonomial(1 << i), self.field.one()));
        }
        Ok(acc)
    }

    pub fn constant(&self, n: i64) -> ExtElement {
        ExtElement::constant(self.field.from_i64(n))
    }

    /// Product with range checking of both factors.
    pub fn mul(&self, x: &ExtElement, y: &ExtElement) -> Result<ExtElement, ExteriorError> {
        for e in [x, y] {
            if let Some(i) = e.max_index().filter(|&i| i >= self.v) {
                return Err(ExteriorError::IndexOutOfRange { index: i, v: self.v });
            }
        }
        Ok(x.mul(y))
    }

    /// The top monomial `e_0∧...∧e_{v-1}`.
    pub fn full(&self) -> ExtMonomial {
        ExtMonomial((1u32 << self.v) - 1)
    }
}
