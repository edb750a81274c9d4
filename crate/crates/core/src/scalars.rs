//! Exact field arithmetic and dense linear algebra over `F_p` and `Q`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("{0} is not an odd prime below 2^31")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// The coefficient field of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Prime(u32),
    Rational,
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(32003)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if p % 2 == 1 && p < (1 << 31) && is_prime(p) {
            Ok(Field::Prime(p as u32))
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Mod {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
            Field::Rational => Scalar::Rat(Box::new(BigRational::from_integer(n.into()))),
        }
    }

    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let n = ((num % &pb) + &pb) % &pb;
                let d = ((den % &pb) + &pb) % &pb;
                let n = Scalar::Mod { value: n.to_u32().unwrap(), modulus: p };
                let d = Scalar::Mod { value: d.to_u32().unwrap(), modulus: p };
                let inv = d.inv().ok_or(ScalarError::DivisionByZero)?;
                Ok(n.mul(&inv))
            }
            Field::Rational => Ok(Scalar::Rat(Box::new(BigRational::new(num.clone(), den.clone())))),
        }
    }

    /// Parses `n` or `n/d` with an optional sign.
    pub fn parse_scalar(self, s: &str) -> Result<Scalar, ScalarError> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (t, "1"),
        };
        let bad = || ScalarError::Parse(s.to_string());
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        self.from_ratio(&num, &den)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let p: u64 = t.parse().map_err(|_| ScalarError::Parse(s.to_string()))?;
        Field::prime(p)
    }
}

/// A field element. Prime-field elements carry their modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u32, modulus: u32 },
    Rat(Box<BigRational>),
}

#[inline]
fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
            Scalar::Rat(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(&**a + &**b)),
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Scalar::Rat(a) => Scalar::Rat(Box::new(-&**a)),
        }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, .. }) => Scalar::Mod {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(Box::new(&**a * &**b)),
            _ => panic!("mixed fields"),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Mod { value, modulus } => Scalar::Mod { value: inv_mod(*value, *modulus), modulus: *modulus },
            Scalar::Rat(a) => Scalar::Rat(Box::new(a.recip())),
        })
    }

    /// `(-1)^k * self`
    pub fn signed(&self, negate: bool) -> Scalar {
        if negate {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Scalar {
    /// Prime-field values print in the symmetric range `(-p/2, p/2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, modulus } => {
                let v = *value as i64;
                let p = *modulus as i64;
                if v > p / 2 {
                    write!(f, "{}", v - p)
                } else {
                    write!(f, "{v}")
                }
            }
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl Scalar {
    /// True when the printed form starts with a minus sign.
    pub fn prints_negative(&self) -> bool {
        match self {
            Scalar::Mod { value, modulus } => *value > modulus / 2,
            Scalar::Rat(r) => r.is_negative(),
        }
    }
}

// ---------------------------------------------------------------------------
// elimination backends

trait Backend {
    type E: Clone + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    /// dst -= f * src
    fn axpy(&self, dst: &mut [Self::E], src: &[Self::E], f: &Self::E);
    fn scale(&self, row: &mut [Self::E], f: &Self::E) {
        for x in row.iter_mut() {
            *x = self.mul(x, f);
        }
    }
}

struct PrimeArith(u32);

impl Backend for PrimeArith {
    type E = u32;
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.0 as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        inv_mod(*a, self.0)
    }
    #[inline]
    fn axpy(&self, dst: &mut [u32], src: &[u32], f: &u32) {
        let p = self.0 as u64;
        let g = (p - *f as u64) % p;
        if g == 0 {
            return;
        }
        for (d, s) in dst.iter_mut().zip(src) {
            if *s != 0 {
                *d = ((*d as u64 + g * *s as u64) % p) as u32;
            }
        }
    }
}

struct RatArith;

impl Backend for RatArith {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn axpy(&self, dst: &mut [BigRational], src: &[BigRational], f: &BigRational) {
        if f.is_zero() {
            return;
        }
        for (d, s) in dst.iter_mut().zip(src) {
            if !s.is_zero() {
                *d -= f * s;
            }
        }
    }
}

/// Reduces `data` (row-major, `rows` x `cols`) to reduced row-echelon form in place
/// and returns the pivot columns. When `pivot_limit` is set, only columns below it
/// are eligible as pivots (used for augmented systems).
fn rref_in_place<B: Backend>(b: &B, data: &mut [B::E], rows: usize, cols: usize, pivot_limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_limit.min(cols) {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !b.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if pr != r {
            for k in 0..cols {
                data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = b.inv(&data[r * cols + c]);
        b.scale(&mut data[r * cols..(r + 1) * cols], &inv);
        let pivot_row: Vec<B::E> = data[r * cols..(r + 1) * cols].to_vec();
        for i in 0..rows {
            if i != r {
                let f = data[i * cols + c].clone();
                if !b.is_zero(&f) {
                    b.axpy(&mut data[i * cols..(i + 1) * cols], &pivot_row, &f);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Row-echelon rank without full back substitution.
fn rank_in_place<B: Backend>(b: &B, data: &mut [B::E], rows: usize, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !b.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if pr != r {
            for k in c..cols {
                data.swap(pr * cols + k, r * cols + k);
            }
        }
        let inv = b.inv(&data[r * cols + c]);
        b.scale(&mut data[r * cols + c..(r + 1) * cols], &inv);
        let pivot_row: Vec<B::E> = data[r * cols + c..(r + 1) * cols].to_vec();
        for i in r + 1..rows {
            let f = data[i * cols + c].clone();
            if !b.is_zero(&f) {
                b.axpy(&mut data[i * cols + c..(i + 1) * cols], &pivot_row, &f);
            }
        }
        r += 1;
    }
    r
}

// ---------------------------------------------------------------------------
// DenseMatrix

#[derive(Clone, Debug, PartialEq, Eq)]
enum Store {
    Prime(Vec<u32>),
    Rational(Vec<BigRational>),
}

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    store: Store,
}

/// Result of [`DenseMatrix::rref`]: `transform * m == reduced`.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: DenseMatrix,
    pub pivot_cols: Vec<usize>,
    pub transform: DenseMatrix,
}

fn to_u32(s: &Scalar) -> u32 {
    match s {
        Scalar::Mod { value, .. } => *value,
        Scalar::Rat(_) => panic!("rational scalar in prime-field matrix"),
    }
}

fn to_rat(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rat(r) => (**r).clone(),
        Scalar::Mod { .. } => panic!("prime-field scalar in rational matrix"),
    }
}

impl DenseMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        let store = match field {
            Field::Prime(_) => Store::Prime(vec![0; rows * cols]),
            Field::Rational => Store::Rational(vec![BigRational::zero(); rows * cols]),
        };
        DenseMatrix { field, rows, cols, store }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, &field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Result<Self, ScalarError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(ScalarError::Dimension(format!("row {i} has {} entries, expected {c}", row.len())));
            }
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, &rows).expect("ragged rows")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        let i = r * self.cols + c;
        match (&self.store, self.field) {
            (Store::Prime(d), Field::Prime(p)) => Scalar::Mod { value: d[i], modulus: p },
            (Store::Rational(d), _) => Scalar::Rat(Box::new(d[i].clone())),
            _ => unreachable!(),
        }
    }

    pub fn is_zero_at(&self, r: usize, c: usize) -> bool {
        let i = r * self.cols + c;
        match &self.store {
            Store::Prime(d) => d[i] == 0,
            Store::Rational(d) => d[i].is_zero(),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, x: &Scalar) {
        let i = r * self.cols + c;
        match &mut self.store {
            Store::Prime(d) => d[i] = to_u32(x),
            Store::Rational(d) => d[i] = to_rat(x),
        }
    }

    pub fn row(&self, r: usize) -> Vec<Scalar> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Prime(d) => d.iter().all(|&x| x == 0),
            Store::Rational(d) => d.iter().all(|x| x.is_zero()),
        }
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = DenseMatrix::zeros(self.field, self.cols, self.rows);
        match (&self.store, &mut t.store) {
            (Store::Prime(a), Store::Prime(b)) => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        b[j * self.rows + i] = a[i * self.cols + j];
                    }
                }
            }
            (Store::Rational(a), Store::Rational(b)) => {
                for i in 0..self.rows {
                    for j in 0..self.cols {
                        b[j * self.rows + i] = a[i * self.cols + j].clone();
                    }
                }
            }
            _ => unreachable!(),
        }
        t
    }

    pub fn mul(&self, o: &DenseMatrix) -> Result<DenseMatrix, ScalarError> {
        if self.cols != o.rows {
            return Err(ScalarError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = DenseMatrix::zeros(self.field, self.rows, o.cols);
        let (n, m, k) = (self.rows, o.cols, self.cols);
        match (&self.store, &o.store, &mut out.store, self.field) {
            (Store::Prime(a), Store::Prime(b), Store::Prime(c), Field::Prime(p)) => {
                let p = p as u64;
                let mut acc = vec![0u64; m];
                for i in 0..n {
                    acc.iter_mut().for_each(|x| *x = 0);
                    for t in 0..k {
                        let x = a[i * k + t] as u64;
                        if x == 0 {
                            continue;
                        }
                        for (j, y) in b[t * m..(t + 1) * m].iter().enumerate() {
                            acc[j] = (acc[j] + x * *y as u64) % p;
                        }
                    }
                    for j in 0..m {
                        c[i * m + j] = acc[j] as u32;
                    }
                }
            }
            (Store::Rational(a), Store::Rational(b), Store::Rational(c), _) => {
                for i in 0..n {
                    for t in 0..k {
                        let x = &a[i * k + t];
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..m {
                            let y = &b[t * m + j];
                            if !y.is_zero() {
                                c[i * m + j] += x * y;
                            }
                        }
                    }
                }
            }
            _ => return Err(ScalarError::Dimension("mixed fields".into())),
        }
        Ok(out)
    }

    fn with_backend<R>(&self, f_prime: impl FnOnce(&PrimeArith, Vec<u32>) -> R, f_rat: impl FnOnce(&RatArith, Vec<BigRational>) -> R) -> R {
        match (&self.store, self.field) {
            (Store::Prime(d), Field::Prime(p)) => f_prime(&PrimeArith(p), d.clone()),
            (Store::Rational(d), _) => f_rat(&RatArith, d.clone()),
            _ => unreachable!(),
        }
    }

    fn augmented_identity<B: Backend>(b: &B, data: &[B::E], rows: usize, cols: usize) -> Vec<B::E> {
        let w = cols + rows;
        let mut out = vec![b.zero(); rows * w];
        for i in 0..rows {
            out[i * w..i * w + cols].clone_from_slice(&data[i * cols..(i + 1) * cols]);
            out[i * w + cols + i] = b.one();
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let (rows, cols, field) = (self.rows, self.cols, self.field);
        fn split<B: Backend>(b: &B, data: Vec<B::E>, rows: usize, cols: usize) -> (Vec<B::E>, Vec<usize>, Vec<B::E>) {
            let mut aug = DenseMatrix::augmented_identity(b, &data, rows, cols);
            let w = cols + rows;
            let piv = rref_in_place(b, &mut aug, rows, w, cols);
            let mut red = Vec::with_capacity(rows * cols);
            let mut tr = Vec::with_capacity(rows * rows);
            for i in 0..rows {
                red.extend_from_slice(&aug[i * w..i * w + cols]);
                tr.extend_from_slice(&aug[i * w + cols..(i + 1) * w]);
            }
            (red, piv, tr)
        }
        self.with_backend(
            |b, d| {
                let (red, piv, tr) = split(b, d, rows, cols);
                Rref {
                    reduced: DenseMatrix { field, rows, cols, store: Store::Prime(red) },
                    pivot_cols: piv,
                    transform: DenseMatrix { field, rows, cols: rows, store: Store::Prime(tr) },
                }
            },
            |b, d| {
                let (red, piv, tr) = split(b, d, rows, cols);
                Rref {
                    reduced: DenseMatrix { field, rows, cols, store: Store::Rational(red) },
                    pivot_cols: piv,
                    transform: DenseMatrix { field, rows, cols: rows, store: Store::Rational(tr) },
                }
            },
        )
    }

    /// Reduced row-echelon form and pivots, without the transform.
    pub fn reduced(&self) -> (DenseMatrix, Vec<usize>) {
        let (rows, cols, field) = (self.rows, self.cols, self.field);
        self.with_backend(
            |b, mut d| {
                let piv = rref_in_place(b, &mut d, rows, cols, cols);
                (DenseMatrix { field, rows, cols, store: Store::Prime(d) }, piv)
            },
            |b, mut d| {
                let piv = rref_in_place(b, &mut d, rows, cols, cols);
                (DenseMatrix { field, rows, cols, store: Store::Rational(d) }, piv)
            },
        )
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        let m = if self.rows > self.cols { self.transpose() } else { self.clone() };
        let (rows, cols) = (m.rows, m.cols);
        m.with_backend(|b, mut d| rank_in_place(b, &mut d, rows, cols), |b, mut d| rank_in_place(b, &mut d, rows, cols))
    }

    /// Basis of the right null space, as the columns of the result.
    pub fn kernel_basis(&self) -> DenseMatrix {
        let (red, piv) = self.reduced();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        let mut k = DenseMatrix::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, &self.field.one());
            for (r, &pc) in piv.iter().enumerate() {
                if !red.is_zero_at(r, f) {
                    k.set(pc, j, &red.get(r, f).neg());
                }
            }
        }
        k
    }

    /// Solves `self * x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, ScalarError> {
        if b.len() != self.rows {
            return Err(ScalarError::Dimension(format!("right-hand side has {} entries, expected {}", b.len(), self.rows)));
        }
        let mut aug = DenseMatrix::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.is_zero_at(i, j) {
                    aug.set(i, j, &self.get(i, j));
                }
            }
            aug.set(i, self.cols, &b[i]);
        }
        let (red, piv) = aug.reduced();
        if piv.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &pc) in piv.iter().enumerate() {
            x[pc] = red.get(r, self.cols);
        }
        Ok(Some(x))
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// incremental row space

enum SpaceStore {
    Prime(PrimeArith, Vec<(usize, Vec<u32>)>),
    Rational(Vec<(usize, Vec<BigRational>)>),
}

/// An incrementally grown subspace of `K^dim`, kept in semi-echelon form.
pub struct RowSpace {
    field: Field,
    dim: usize,
    store: SpaceStore,
}

fn reduce_by<B: Backend>(b: &B, rows: &[(usize, Vec<B::E>)], v: &mut [B::E]) {
    for (pc, row) in rows {
        let f = v[*pc].clone();
        if !b.is_zero(&f) {
            b.axpy(v, row, &f);
        }
    }
}

fn insert_into<B: Backend>(b: &B, rows: &mut Vec<(usize, Vec<B::E>)>, mut v: Vec<B::E>) -> bool {
    reduce_by(b, rows, &mut v);
    match v.iter().position(|x| !b.is_zero(x)) {
        None => false,
        Some(pc) => {
            let inv = b.inv(&v[pc]);
            b.scale(&mut v, &inv);
            rows.push((pc, v));
            true
        }
    }
}

impl RowSpace {
    pub fn new(field: Field, dim: usize) -> Self {
        let store = match field {
            Field::Prime(p) => SpaceStore::Prime(PrimeArith(p), Vec::new()),
            Field::Rational => SpaceStore::Rational(Vec::new()),
        };
        RowSpace { field, dim, store }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        match &self.store {
            SpaceStore::Prime(_, r) => r.len(),
            SpaceStore::Rational(r) => r.len(),
        }
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        match &mut self.store {
            SpaceStore::Prime(b, rows) => insert_into(b, rows, v.iter().map(to_u32).collect()),
            SpaceStore::Rational(rows) => insert_into(&RatArith, rows, v.iter().map(to_rat).collect()),
        }
    }

    /// Remainder of `v` after reduction; zero iff `v` lies in the space.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        match &self.store {
            SpaceStore::Prime(b, rows) => {
                let mut w: Vec<u32> = v.iter().map(to_u32).collect();
                reduce_by(b, rows, &mut w);
                w.into_iter().map(|x| Scalar::Mod { value: x, modulus: b.0 }).collect()
            }
            SpaceStore::Rational(rows) => {
                let mut w: Vec<BigRational> = v.iter().map(to_rat).collect();
                reduce_by(&RatArith, rows, &mut w);
                w.into_iter().map(|x| Scalar::Rat(Box::new(x))).collect()
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn field(&self) -> Field {
        self.field
    }
}
