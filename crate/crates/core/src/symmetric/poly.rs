use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::scalars::{Field, Scalar};

/// Exponent vector of a monomial in `x_0..x_{v-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SMonomial(pub Vec<u32>);

impl SMonomial {
    pub fn one(v: usize) -> Self {
        SMonomial(vec![0; v])
    }

    pub fn var(v: usize, i: usize) -> Self {
        let mut e = vec![0; v];
        e[i] = 1;
        SMonomial(e)
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().sum::<u32>() as i32
    }

    pub fn times(&self, o: &SMonomial) -> SMonomial {
        SMonomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn times_var(&self, i: usize) -> SMonomial {
        let mut e = self.0.clone();
        e[i] += 1;
        SMonomial(e)
    }
}

impl Ord for SMonomial {
    /// Graded, then lexicographic with `x_0` largest.
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for SMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for SMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All monomials of degree `t` in `v` variables, largest first, with reverse lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub list: Vec<SMonomial>,
    index: HashMap<SMonomial, usize>,
}

impl MonomialBasis {
    pub fn new(v: usize, t: i32) -> Self {
        let mut list = Vec::new();
        if t >= 0 && v > 0 {
            let mut cur = vec![0u32; v];
            fill(&mut list, &mut cur, 0, t as u32);
        }
        let index = list.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialBasis { list, index }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn index_of(&self, m: &SMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

fn fill(out: &mut Vec<SMonomial>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(SMonomial(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill(out, cur, i + 1, left - e);
    }
    cur[i] = 0;
}

/// A polynomial, stored as a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<SMonomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn term(m: SMonomial, c: Scalar) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn constant(v: usize, c: Scalar) -> Self {
        Self::term(SMonomial::one(v), c)
    }

    pub fn var(field: Field, v: usize, i: usize) -> Self {
        Self::term(SMonomial::var(v, i), field.one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (SMonomial, Scalar)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: SMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = x.add(c);
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous polynomials.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(SMonomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn constant_term(&self) -> Option<&Scalar> {
        self.terms.iter().find(|(m, _)| m.degree() == 0).map(|(_, c)| c)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c);
        }
        p
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                p.add_term(a.times(b), &x.mul(y));
            }
        }
        p
    }

    pub fn mul_monomial(&self, m: &SMonomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(a, c)| (a.times(m), c.clone())).collect() }
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.0.iter().rposition(|&e| e > 0)).max()
    }

    pub fn num_vars(&self) -> Option<usize> {
        self.terms.keys().next().map(|m| m.0.len())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.prints_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.degree() == 0 {
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

/// The polynomial ring `S = Sym(W)` on `v` variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Polynomials {
    pub field: Field,
    pub v: usize,
}

impl Polynomials {
    pub fn new(field: Field, v: usize) -> Self {
        Polynomials { field, v }
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(self.field, self.v, i)
    }

    pub fn constant(&self, n: i64) -> Poly {
        Poly::constant(self.v, self.field.from_i64(n))
    }

    pub fn basis(&self, t: i32) -> MonomialBasis {
        MonomialBasis::new(self.v, t)
    }
}
