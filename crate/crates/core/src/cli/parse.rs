//! Text grammars: polynomials like `3*x0^2*x1 - x2^2`, exterior elements like
//! `e0*e3 - 2*e1`, matrices as bracketed rows, and keyed input files.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exterior::{EMap, ExtElement, ExtMonomial, Exterior, FreeE};
use crate::scalars::{DenseMatrix, Field, Scalar};
use crate::symmetric::{GradedSlice, Poly, Polynomials, PresentedS, SMonomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, col, msg: msg.into() })
}

/// Where a fragment sits in its source, for error positions.
#[derive(Clone, Copy, Debug)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl Span {
    pub const START: Span = Span { line: 1, col: 1 };
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
    at: Span,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, at: Span) -> Self {
        Cursor { text: text.as_bytes(), pos: 0, at }
    }

    fn col(&self) -> usize {
        self.at.col + self.pos
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        err(self.at.line, self.col(), msg)
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a number");
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos]).expect("ascii"))
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let col = self.col();
        self.digits()?.parse().or_else(|_| err(self.at.line, col, "number out of range"))
    }

    /// An unsigned coefficient `n` or `n/m`.
    fn coefficient(&mut self, field: Field) -> Result<Scalar, ParseError> {
        let col = self.col();
        let mut s = self.digits()?.to_string();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            s.push('/');
            s.push_str(self.digits()?);
        }
        field.parse_scalar(&s).or_else(|e| err(self.at.line, col, e.to_string()))
    }
}

/// One signed sum of products `c * f_1 * ... * f_k`; `factor` reads one variable factor
/// and folds it into the running monomial.
fn parse_sum<M: Clone>(
    c: &mut Cursor<'_>,
    field: Field,
    one: &M,
    factor: &mut dyn FnMut(&mut Cursor<'_>, &mut M, &mut bool) -> Result<(), ParseError>,
) -> Result<Vec<(M, Scalar)>, ParseError> {
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut negate = false;
        match c.peek() {
            None if first => return c.fail("empty expression"),
            None => break,
            Some(b'+') if !first => c.pos += 1,
            Some(b'-') => {
                negate = true;
                c.pos += 1;
            }
            Some(ch) if !first => return c.fail(format!("expected '+' or '-', found '{}'", ch as char)),
            _ => {}
        }
        first = false;
        let mut coef = field.one();
        let mut mono = one.clone();
        let mut need_factor = true;
        if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
            coef = c.coefficient(field)?;
            need_factor = false;
            if c.peek() == Some(b'*') {
                c.pos += 1;
                need_factor = true;
            }
        }
        if need_factor {
            loop {
                factor(c, &mut mono, &mut negate)?;
                if c.peek() == Some(b'*') {
                    c.pos += 1;
                    continue;
                }
                break;
            }
        }
        terms.push((mono, coef.signed(negate)));
    }
    Ok(terms)
}

fn variable(c: &mut Cursor<'_>, letter: u8, v: usize) -> Result<usize, ParseError> {
    match c.peek() {
        Some(ch) if ch == letter => c.pos += 1,
        Some(b'*') => return c.fail("unexpected '*'"),
        Some(ch) => return c.fail(format!("expected '{}<index>', found '{}'", letter as char, ch as char)),
        None => return c.fail("unexpected end of input"),
    }
    if c.text.get(c.pos).is_some_and(|ch| ch.is_ascii_whitespace()) {
        return c.fail("expected a variable index");
    }
    let col = c.col();
    let i = c.number()?;
    if i >= v {
        return err(c.at.line, col, format!("variable index {i} out of range for v = {v}"));
    }
    Ok(i)
}

pub fn parse_poly_at(ring: Polynomials, text: &str, at: Span) -> Result<Poly, ParseError> {
    let mut c = Cursor::new(text, at);
    let mut factor = |c: &mut Cursor<'_>, m: &mut SMonomial, _: &mut bool| -> Result<(), ParseError> {
        let i = variable(c, b'x', ring.v)?;
        let mut exp = 1;
        if c.peek() == Some(b'^') {
            c.pos += 1;
            exp = c.number()? as u32;
        }
        m.0[i] += exp;
        Ok(())
    };
    let terms = parse_sum(&mut c, ring.field, &SMonomial::one(ring.v), &mut factor)?;
    let p = Poly::from_terms(terms);
    if !p.is_homogeneous() {
        return err(at.line, at.col, format!("'{}' is not homogeneous", text.trim()));
    }
    Ok(p)
}

pub fn parse_poly(ring: Polynomials, text: &str) -> Result<Poly, ParseError> {
    parse_poly_at(ring, text, Span::START)
}

pub fn parse_ext_at(alg: Exterior, text: &str, at: Span) -> Result<ExtElement, ParseError> {
    let mut c = Cursor::new(text, at);
    let mut factor = |c: &mut Cursor<'_>, m: &mut ExtMonomial, neg: &mut bool| -> Result<(), ParseError> {
        let col = c.col();
        let i = variable(c, b'e', alg.v)?;
        match m.times(ExtMonomial(1 << i)) {
            Some((s, prod)) => {
                *m = prod;
                *neg ^= s;
                Ok(())
            }
            None => err(c.at.line, col, format!("repeated factor e{i}")),
        }
    };
    let terms = parse_sum(&mut c, alg.field, &ExtMonomial(0), &mut factor)?;
    Ok(ExtElement::from_terms(terms))
}

pub fn parse_ext(alg: Exterior, text: &str) -> Result<ExtElement, ParseError> {
    parse_ext_at(alg, text, Span::START)
}

/// Splits `[a, b, c]` into entries with their columns.
pub fn bracketed_row(text: &str, at: Span) -> Result<Vec<(String, Span)>, ParseError> {
    let trimmed = text.trim_end();
    let lead = text.len() - text.trim_start().len();
    let body = trimmed.trim_start();
    if !body.starts_with('[') {
        return err(at.line, at.col + lead, "expected '['");
    }
    if !body.ends_with(']') {
        return err(at.line, at.col + trimmed.len(), "expected ']'");
    }
    let inner = &body[1..body.len() - 1];
    let mut out = Vec::new();
    let mut col = at.col + lead + 1;
    if inner.trim().is_empty() {
        return Ok(out);
    }
    for piece in inner.split(',') {
        out.push((piece.to_string(), Span { line: at.line, col }));
        col += piece.len() + 1;
    }
    Ok(out)
}

/// A keyed input file: `key value...` lines, `#` comments, and bracketed rows that
/// belong to the most recent key.
#[derive(Clone, Debug, Default)]
pub struct KeyedFile {
    pub entries: Vec<KeyedEntry>,
}

#[derive(Clone, Debug)]
pub struct KeyedEntry {
    pub key: String,
    pub args: Vec<String>,
    pub at: Span,
    pub rows: Vec<(String, Span)>,
}

impl KeyedFile {
    pub fn parse(text: &str) -> Result<KeyedFile, ParseError> {
        let mut entries: Vec<KeyedEntry> = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let at = Span { line: n + 1, col: 1 };
            if line.trim_start().starts_with('[') {
                match entries.last_mut() {
                    Some(e) => e.rows.push((line.to_string(), at)),
                    None => return err(at.line, 1, "matrix row before any key"),
                }
                continue;
            }
            let mut words = line.split_whitespace();
            let key = words.next().expect("nonempty").to_string();
            entries.push(KeyedEntry { key, args: words.map(str::to_string).collect(), at, rows: Vec::new() });
        }
        Ok(KeyedFile { entries })
    }

    pub fn get(&self, key: &str) -> Option<&KeyedEntry> {
        self.entries.iter().find(|e| e.key == key)
    }

    pub fn require(&self, key: &str) -> Result<&KeyedEntry, ParseError> {
        self.get(key).ok_or_else(|| ParseError { line: self.entries.last().map_or(1, |e| e.at.line), col: 1, msg: format!("missing '{key}'") })
    }

    fn single<T: std::str::FromStr>(&self, key: &str) -> Result<T, ParseError>
    where
        T::Err: std::fmt::Display,
    {
        let e = self.require(key)?;
        match e.args.as_slice() {
            [x] => x.parse().or_else(|m: T::Err| err(e.at.line, e.key.len() + 2, m.to_string())),
            _ => err(e.at.line, 1, format!("'{key}' takes one value")),
        }
    }

    fn ints(&self, key: &str) -> Result<Vec<i32>, ParseError> {
        let e = self.require(key)?;
        e.args.iter().map(|a| a.parse().or_else(|_| err(e.at.line, 1, format!("bad integer '{a}' for '{key}'")))).collect()
    }
}

/// What an input file describes.
#[derive(Clone, Debug)]
pub enum ParsedInput {
    Presented(PresentedS),
    Slice(GradedSlice),
    Map { phi: EMap, pos: i32 },
}

fn field_and_v(f: &KeyedFile) -> Result<(Field, usize), ParseError> {
    Ok((f.single("field")?, f.single("v")?))
}

fn matrix_rows<T>(entry: &KeyedEntry, cols: usize, mut item: impl FnMut(&str, Span) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
    let mut out = Vec::new();
    for (row, at) in &entry.rows {
        let cells = bracketed_row(row, *at)?;
        if cells.len() != cols {
            return err(at.line, 1, format!("expected {cols} entries, found {}", cells.len()));
        }
        for (text, span) in cells {
            out.push(item(&text, span)?);
        }
    }
    Ok(out)
}

/// Reads `kind presentation|slice|exterior` files.
pub fn parse_input(text: &str) -> Result<ParsedInput, ParseError> {
    let f = KeyedFile::parse(text)?;
    let kind: String = f.single("kind")?;
    let (field, v) = field_and_v(&f)?;
    let kind_at = f.require("kind")?.at;
    match kind.as_str() {
        "presentation" => {
            let ring = Polynomials::new(field, v);
            let target = f.ints("target")?;
            let source = f.get("source").map_or(Ok(Vec::new()), |_| f.ints("source"))?;
            let m = f.require("matrix")?;
            if m.rows.len() != target.len() && !source.is_empty() {
                return err(m.at.line, 1, format!("expected {} rows, found {}", target.len(), m.rows.len()));
            }
            let entries = matrix_rows(m, source.len(), |t, at| parse_poly_at(ring, t, at))?;
            PresentedS::new(ring, target, source, entries).map(ParsedInput::Presented).or_else(|e| err(m.at.line, 1, e.to_string()))
        }
        "slice" => {
            let ring = Polynomials::new(field, v);
            let lo: i32 = f.single("lo")?;
            let dims: Vec<usize> = f.ints("dims")?.into_iter().map(|d| d.max(0) as usize).collect();
            let mut mult = vec![vec![DenseMatrix::zeros(field, 0, 0); v]; dims.len().saturating_sub(1)];
            let mut seen = BTreeMap::new();
            for e in f.entries.iter().filter(|e| e.key == "mult") {
                let [t, i] = e.args.as_slice() else { return err(e.at.line, 1, "expected 'mult <degree> <variable>'") };
                let (t, i): (i32, usize) = match (t.parse(), i.parse()) {
                    (Ok(t), Ok(i)) => (t, i),
                    _ => return err(e.at.line, 6, "bad degree or variable"),
                };
                let k = t - lo;
                if k < 0 || k as usize + 1 >= dims.len() || i >= v {
                    return err(e.at.line, 6, format!("no map from degree {t} for variable {i}"));
                }
                let (rows, cols) = (dims[k as usize + 1], dims[k as usize]);
                if e.rows.len() != rows {
                    return err(e.at.line, 1, format!("expected {rows} rows, found {}", e.rows.len()));
                }
                let vals = matrix_rows(e, cols, |s, at| field.parse_scalar(s.trim()).or_else(|m| err(at.line, at.col, m.to_string())))?;
                let data: Vec<Vec<Scalar>> = vals.chunks(cols.max(1)).map(<[Scalar]>::to_vec).collect();
                let mut mat = DenseMatrix::zeros(field, rows, cols);
                for (r, row) in data.iter().enumerate().take(rows) {
                    for (c, x) in row.iter().enumerate() {
                        mat.set(r, c, x);
                    }
                }
                mult[k as usize][i] = mat;
                seen.insert((k, i), ());
            }
            for (k, row) in mult.iter_mut().enumerate() {
                for (i, m) in row.iter_mut().enumerate() {
                    if !seen.contains_key(&(k as i32, i)) {
                        *m = DenseMatrix::zeros(field, dims[k + 1], dims[k]);
                    }
                }
            }
            GradedSlice::direct(ring, lo, dims, mult).map(ParsedInput::Slice).or_else(|e| err(kind_at.line, 1, e.to_string()))
        }
        "exterior" => {
            let alg = Exterior::new(field, v).or_else(|e| err(kind_at.line, 1, e.to_string()))?;
            let source = f.ints("source")?;
            let target = f.ints("target")?;
            let pos: i32 = f.get("position").map_or(Ok(0), |_| f.single("position"))?;
            let m = f.require("matrix")?;
            if m.rows.len() != target.len() {
                return err(m.at.line, 1, format!("expected {} rows, found {}", target.len(), m.rows.len()));
            }
            let entries = matrix_rows(m, source.len(), |t, at| parse_ext_at(alg, t, at))?;
            let phi = EMap::new(alg, FreeE::new(v, source), FreeE::new(v, target), entries).or_else(|e| err(m.at.line, 1, e.to_string()))?;
            Ok(ParsedInput::Map { phi, pos })
        }
        other => err(kind_at.line, 6, format!("unknown kind '{other}'")),
    }
}
