//! Windows of Tate resolutions, built from a module slice or from a single exterior map,
//! and the sheaf and local cohomology they encode.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bgg::{functor_r, socle_dim, truncation_linearity_check, BggError, LinearityFailure};
use crate::exterior::{resolve_backward, resolve_forward, Betti, EComplex, EMap, ExteriorError};
use crate::symmetric::{GradedSlice, SymmetricError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TateError {
    #[error(transparent)]
    Bgg(#[from] BggError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Symmetric(#[from] SymmetricError),
    #[error("truncation at {d} is not linear: R(M) is inexact at position {} in degree {}", .failure.position, .failure.degree)]
    NotLinear { d: i32, failure: LinearityFailure },
    #[error("truncation at {d} keeps a socle of dimension {dim}; the sheaf does not see it")]
    Socle { d: i32, dim: usize },
    #[error("slice window [{have_lo}, {have_hi}] does not contain [{need_lo}, {need_hi}]")]
    SliceWindow { need_lo: i32, need_hi: i32, have_lo: i32, have_hi: i32 },
    #[error("h^{j}(F({l})) lies outside the computed window")]
    OutsideWindow { j: i32, l: i32 },
    #[error("row bound violated: row {row} is nonzero at position {position}")]
    RowBound { position: i32, row: i32 },
}

/// A window `[lo, hi]` of a minimal Tate resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateWindow {
    pub complex: EComplex,
    /// Truncation degree when built from a module.
    pub trunc: Option<i32>,
    /// False when the linearity check was skipped.
    pub certified: bool,
}

impl TateWindow {
    pub fn lo(&self) -> i32 {
        self.complex.lo()
    }

    pub fn hi(&self) -> i32 {
        self.complex.hi()
    }

    pub fn v(&self) -> usize {
        self.complex.v()
    }

    pub fn betti(&self) -> Betti {
        self.complex.betti()
    }

    /// Multiplicity of `ω(a)` in `T^e`.
    pub fn multiplicity(&self, e: i32, a: i32) -> usize {
        self.complex.term(e).twists.iter().filter(|&&x| x == a).count()
    }

    /// A narrower window of the same resolution.
    pub fn window(&self, lo: i32, hi: i32) -> Result<TateWindow, TateError> {
        Ok(TateWindow { complex: self.complex.window(lo, hi)?, ..self.clone() })
    }
}

/// `T(F)` on `[lo, hi]` from a slice of a module `M` with `F = M~`: `R(M_{≥d})` above `d`,
/// a minimal free resolution below. Unless `force` is set, checks that `R(M_{≥d})` is exact
/// at positions `d+1 ..= d+v+1`, which needs the slice up to `d+v+2`, and that no element of
/// `M_d` is killed by all variables.
pub fn tate_from_module(s: &GradedSlice, d: i32, lo: i32, hi: i32, force: bool) -> Result<TateWindow, TateError> {
    let top = hi.max(d + 1);
    if s.lo() > d || s.hi() < top {
        return Err(TateError::SliceWindow { need_lo: d, need_hi: top, have_lo: s.lo(), have_hi: s.hi() });
    }
    if !force {
        let w = s.v() as i32 + 1;
        if let Err(failure) = truncation_linearity_check(s, d, w)? {
            return Err(TateError::NotLinear { d, failure });
        }
        let dim = socle_dim(s, d)?;
        if dim > 0 {
            return Err(TateError::Socle { d, dim });
        }
    }
    let upper = functor_r(&s.restrict(d, top)?);
    let full = if lo < d { resolve_backward(&upper, (d - lo) as usize) } else { upper };
    Ok(TateWindow { complex: full.window(lo, hi)?, trunc: Some(d), certified: !force })
}

/// The Tate resolution through a single map `phi: T^pos → T^{pos+1}` on `[lo, hi]`.
pub fn tate_from_emap(phi: &EMap, pos: i32, lo: i32, hi: i32) -> Result<TateWindow, TateError> {
    let mut c = EComplex::from_map(phi.clone(), pos).minimize();
    if lo < pos {
        c = resolve_backward(&c, (pos - lo) as usize);
    }
    if hi > pos + 1 {
        c = resolve_forward(&c, (hi - pos - 1) as usize);
    }
    let (a, b) = (lo.max(c.lo()), hi.min(c.hi()));
    Ok(TateWindow { complex: c.window(a, b)?, trunc: None, certified: true })
}

/// `h^j(F(ℓ))` read from the multiplicity of `ω(j - e)` in `T^e`, `e = j + ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    /// Readable twists `[ℓ_lo, ℓ_hi]` per row.
    pub ranges: BTreeMap<i32, (i32, i32)>,
    /// Nonzero entries keyed by `(j, ℓ)`.
    pub entries: BTreeMap<(i32, i32), usize>,
}

impl CohomologyTable {
    pub fn get(&self, j: i32, l: i32) -> Result<usize, TateError> {
        match self.ranges.get(&j) {
            Some(&(a, b)) if (a..=b).contains(&l) => Ok(self.entries.get(&(j, l)).copied().unwrap_or(0)),
            _ => Err(TateError::OutsideWindow { j, l }),
        }
    }

    /// `Σ_j (-1)^j h^j(F(ℓ))` when every row is readable at `ℓ`.
    pub fn euler_characteristic(&self, l: i32) -> Option<i64> {
        self.ranges.keys().try_fold(0i64, |acc, &j| {
            let h = self.get(j, l).ok()? as i64;
            Some(if j % 2 == 0 { acc + h } else { acc - h })
        })
    }

    /// Rows `h^n` down to `h^0`, columns over `[l_lo, l_hi]`, unknown cells as `?`.
    pub fn render(&self, l_lo: i32, l_hi: i32) -> String {
        let mut out = String::new();
        let cells: Vec<Vec<String>> = self
            .ranges
            .keys()
            .rev()
            .map(|&j| (l_lo..=l_hi).map(|l| self.get(j, l).map_or("?".to_string(), |h| h.to_string())).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).chain((l_lo..=l_hi).map(|l| l.to_string().len())).max().unwrap_or(1);
        let _ = write!(out, "{:>5}", "l:");
        for l in l_lo..=l_hi {
            let _ = write!(out, " {:>width$}", l);
        }
        out.push('\n');
        for (&j, row) in self.ranges.keys().rev().zip(&cells) {
            let _ = write!(out, "{:>5}", format!("h^{j}:"));
            for c in row {
                let _ = write!(out, " {:>width$}", c);
            }
            out.push('\n');
        }
        out
    }
}

/// Rows `0 ..= n` (`n = v - 1`) with the twists readable from the window.
pub fn cohomology_table(t: &TateWindow) -> CohomologyTable {
    let n = t.v() as i32 - 1;
    let ranges = (0..=n).map(|j| (j, (t.lo() - j, t.hi() - j))).collect();
    let mut entries = BTreeMap::new();
    for ((e, a), m) in t.betti() {
        let j = e + a;
        *entries.entry((j, -a)).or_insert(0) += m;
    }
    CohomologyTable { ranges, entries }
}

/// `dim H^j_m(M)_t` for the module behind a window built by [`tate_from_module`]: each
/// `ω(a)` in `T^e` with `e < d` contributes to `H^{e+a+1}_m(M)_{-a}`.
pub fn local_cohomology_dims(t: &TateWindow) -> BTreeMap<(i32, i32), usize> {
    let d = t.trunc.unwrap_or(t.hi() + 1);
    let mut out = BTreeMap::new();
    for ((e, a), m) in t.betti() {
        if e < d {
            *out.entry((e + a + 1, -a)).or_insert(0) += m;
        }
    }
    out
}

/// The pivots used by [`row_bound_check`] and the band of rows certified to hold every
/// nonzero term of the whole resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowBounds {
    /// Position `p` and the top row `r` of `T^p`: rows above `r` vanish right of `p`, rows
    /// above `r + n` vanish left of it.
    pub upper: (i32, i32),
    /// Position `q` and the bottom row `s` of `T^q`: rows below `s` vanish left of `q`, rows
    /// below `s - n` vanish right of it.
    pub lower: (i32, i32),
    pub band: (i32, i32),
}

fn row_span(t: &EComplex, e: i32) -> Option<(i32, i32)> {
    let rows = t.term(e).twists.iter().map(|a| e + a).collect::<Vec<_>>();
    Some((*rows.iter().min()?, *rows.iter().max()?))
}

/// Propagates vanishing from chosen pivots (by default the position with the lowest top
/// row, rightmost on ties, and the one with the highest bottom row, leftmost on ties) and
/// checks every cell of the window against the propagated pattern.
pub fn row_bound_check(t: &EComplex, pivots: Option<(i32, i32)>) -> Result<RowBounds, TateError> {
    let n = t.v() as i32 - 1;
    let spans: Vec<(i32, (i32, i32))> = (t.lo()..=t.hi()).filter_map(|e| row_span(t, e).map(|s| (e, s))).collect();
    let Some(first) = spans.first() else {
        return Ok(RowBounds { upper: (t.lo(), 0), lower: (t.lo(), 0), band: (0, -1) });
    };
    let (p, q) = match pivots {
        Some(pq) => pq,
        None => {
            let mut p = *first;
            let mut q = *first;
            for &s in &spans {
                if s.1 .1 <= p.1 .1 {
                    p = s;
                }
                if s.1 .0 > q.1 .0 {
                    q = s;
                }
            }
            (p.0, q.0)
        }
    };
    let r = row_span(t, p).map_or(i32::MIN, |s| s.1);
    let s = row_span(t, q).map_or(i32::MAX, |s| s.0);
    for &(e, (lo_row, hi_row)) in &spans {
        let cap = if e > p { r } else if e < p { r + n } else { hi_row };
        if hi_row > cap {
            return Err(TateError::RowBound { position: e, row: hi_row });
        }
        let floor = if e < q { s } else if e > q { s - n } else { lo_row };
        if lo_row < floor {
            return Err(TateError::RowBound { position: e, row: lo_row });
        }
    }
    Ok(RowBounds { upper: (p, r), lower: (q, s), band: (s - n, r + n) })
}

/// Betti diagram with rows `j` (top row highest) and columns `e`; `T^e` has
/// `ω(j - e)^{entry}`; zero cells print as `.`.
pub fn render_betti(b: &Betti, lo: i32, hi: i32) -> String {
    let mut rows: BTreeMap<i32, BTreeMap<i32, usize>> = BTreeMap::new();
    for (&(e, a), &m) in b {
        if (lo..=hi).contains(&e) && m > 0 {
            *rows.entry(e + a).or_default().entry(e).or_insert(0) += m;
        }
    }
    let width = b.values().map(|m| m.to_string().len()).chain((lo..=hi).map(|e| e.to_string().len())).max().unwrap_or(1);
    let mut out = String::new();
    let _ = write!(out, "{:>4}", "e:");
    for e in lo..=hi {
        let _ = write!(out, " {:>width$}", e);
    }
    out.push('\n');
    for (j, cols) in rows.iter().rev() {
        let _ = write!(out, "{:>4}", format!("{j}:"));
        for e in lo..=hi {
            let c = cols.get(&e).map_or(".".to_string(), usize::to_string);
            let _ = write!(out, " {:>width$}", c);
        }
        out.push('\n');
    }
    out
}
