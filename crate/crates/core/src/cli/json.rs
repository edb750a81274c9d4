//! JSON forms of complexes, monads and cohomology tables. Every `*_to_json` has a
//! matching `*_from_json` that rebuilds an equal value.

use serde::{Deserialize, Serialize};

use crate::exterior::{EComplex, EMap, ExtElement, ExtMonomial, Exterior, FreeE};
use crate::monads::{FreeMonad, Mu, OmegaMonad};
use crate::scalars::Field;
use crate::symmetric::{PolyMatrix, Polynomials, SComplex};
use crate::tate::{CohomologyTable, TateWindow};

use super::parse::parse_poly;
use super::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub indices: Vec<usize>,
    pub coeff: String,
}

/// Terms per position; `maps[i]` goes from position `lo + i`, rows by target summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EComplexJson {
    pub field: String,
    pub v: usize,
    pub lo: i32,
    pub twists: Vec<Vec<i32>>,
    pub maps: Vec<Vec<Vec<Vec<TermJson>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateJson {
    pub trunc: Option<i32>,
    pub certified: bool,
    pub complex: EComplexJson,
}

/// Blocks between `Ω^p(p)` summands, `p` listed per position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaMonadJson {
    pub omega: EComplexJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeMonadJson {
    pub field: String,
    pub v: usize,
    pub lo: i32,
    /// Twists `a` of `S(-a)` per position.
    pub twists: Vec<Vec<i32>>,
    pub maps: Vec<Vec<Vec<String>>>,
    pub mu: Option<Vec<i32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRowJson {
    pub j: i32,
    pub twist_lo: i32,
    pub twist_hi: i32,
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyJson {
    pub rows: Vec<CohomologyRowJson>,
}

fn field_of(s: &str) -> Result<Field, CliError> {
    s.parse().map_err(|e: crate::scalars::ScalarError| CliError::Usage(e.to_string()))
}

fn ext_to_json(x: &ExtElement) -> Vec<TermJson> {
    x.terms().iter().map(|(m, c)| TermJson { indices: m.indices(), coeff: c.to_string() }).collect()
}

fn ext_from_json(alg: Exterior, t: &[TermJson]) -> Result<ExtElement, CliError> {
    let mut out = ExtElement::zero();
    for term in t {
        let m = ExtMonomial::from_indices(&term.indices).ok_or_else(|| CliError::Usage(format!("bad index list {:?}", term.indices)))?;
        let c = alg.field.parse_scalar(&term.coeff).map_err(|e| CliError::Usage(e.to_string()))?;
        out = out.add(&alg.monomial(&m.indices(), c)?);
    }
    Ok(out)
}

pub fn ecomplex_to_json(c: &EComplex) -> EComplexJson {
    EComplexJson {
        field: c.alg.field.to_string(),
        v: c.v(),
        lo: c.lo(),
        twists: c.terms().iter().map(|f| f.twists.clone()).collect(),
        maps: c.diffs().iter().map(|d| (0..d.rows()).map(|k| (0..d.cols()).map(|l| ext_to_json(d.entry(k, l))).collect()).collect()).collect(),
    }
}

pub fn ecomplex_from_json(j: &EComplexJson) -> Result<EComplex, CliError> {
    let alg = Exterior::new(field_of(&j.field)?, j.v)?;
    let terms: Vec<FreeE> = j.twists.iter().map(|t| FreeE::new(j.v, t.clone())).collect();
    if j.maps.len() + 1 != terms.len() {
        return Err(CliError::Usage(format!("{} terms need {} maps, found {}", terms.len(), terms.len().saturating_sub(1), j.maps.len())));
    }
    let mut diffs = Vec::new();
    for (i, m) in j.maps.iter().enumerate() {
        let rows = m.iter().map(|r| r.iter().map(|e| ext_from_json(alg, e)).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
        diffs.push(EMap::from_rows(alg, terms[i].clone(), terms[i + 1].clone(), rows)?);
    }
    Ok(EComplex::new(alg, j.lo, terms, diffs)?)
}

pub fn tate_to_json(t: &TateWindow) -> TateJson {
    TateJson { trunc: t.trunc, certified: t.certified, complex: ecomplex_to_json(&t.complex) }
}

pub fn tate_from_json(j: &TateJson) -> Result<TateWindow, CliError> {
    Ok(TateWindow { complex: ecomplex_from_json(&j.complex)?, trunc: j.trunc, certified: j.certified })
}

pub fn omega_monad_to_json(m: &OmegaMonad) -> OmegaMonadJson {
    OmegaMonadJson { omega: ecomplex_to_json(&m.complex) }
}

pub fn omega_monad_from_json(j: &OmegaMonadJson) -> Result<OmegaMonad, CliError> {
    Ok(OmegaMonad { complex: ecomplex_from_json(&j.omega)? })
}

pub fn free_monad_to_json(m: &FreeMonad) -> FreeMonadJson {
    let c = &m.complex;
    FreeMonadJson {
        field: c.ring.field.to_string(),
        v: c.ring.v,
        lo: c.lo(),
        twists: c.terms().to_vec(),
        maps: c.diffs().iter().map(|d| (0..d.rows).map(|r| d.row(r).iter().map(ToString::to_string).collect()).collect()).collect(),
        mu: m.mu.as_ref().map(|mu| mu.values().to_vec()),
    }
}

pub fn free_monad_from_json(j: &FreeMonadJson) -> Result<FreeMonad, CliError> {
    let ring = Polynomials::new(field_of(&j.field)?, j.v);
    let mut diffs = Vec::new();
    for (i, m) in j.maps.iter().enumerate() {
        let rows = j.twists.get(i + 1).map_or(0, Vec::len);
        let cols = j.twists[i].len();
        let entries = m.iter().flatten().map(|s| parse_poly(ring, s)).collect::<Result<Vec<_>, _>>()?;
        if entries.len() != rows * cols {
            return Err(CliError::Usage(format!("map {i}: expected {rows}x{cols} entries")));
        }
        diffs.push(PolyMatrix::from_entries(rows, cols, entries));
    }
    let complex = SComplex::new(ring, j.lo, j.twists.clone(), diffs)?;
    let mu = j.mu.clone().map(|m| Mu::new(m, j.v)).transpose()?;
    Ok(FreeMonad { complex, mu })
}

pub fn cohomology_to_json(t: &CohomologyTable) -> CohomologyJson {
    CohomologyJson {
        rows: t
            .ranges
            .iter()
            .map(|(&j, &(a, b))| CohomologyRowJson { j, twist_lo: a, twist_hi: b, values: (a..=b).map(|l| t.entries.get(&(j, l)).copied().unwrap_or(0)).collect() })
            .collect(),
    }
}

pub fn cohomology_from_json(j: &CohomologyJson) -> CohomologyTable {
    let mut t = CohomologyTable { ranges: Default::default(), entries: Default::default() };
    for r in &j.rows {
        t.ranges.insert(r.j, (r.twist_lo, r.twist_hi));
        for (l, &h) in (r.twist_lo..).zip(&r.values) {
            if h > 0 {
                t.entries.insert((r.j, l), h);
            }
        }
    }
    t
}
