//! Named example inputs with validated parameters.

use std::collections::BTreeMap;

use crate::exterior::{EMap, ExtElement, Exterior, FreeE};
use crate::scalars::{DenseMatrix, Field};
use crate::symmetric::{omega_module, slice, GradedSlice, Polynomials, PresentedS};

use super::CliError;

pub const NAMES: &[&str] = &["hm", "elliptic-quartic", "rnc", "omega", "o", "point", "unit-cancel"];

/// A module known through a presentation, a fixed slice, or a rule for every degree.
#[derive(Clone, Debug)]
pub enum ModuleSource {
    Presented(PresentedS),
    Slice(GradedSlice),
    /// `⊕_{m≥0} H^0(O_{P^1}(k + m d))` over the coordinate ring of the degree `d` curve.
    Rnc { ring: Polynomials, d: i32, k: i32 },
}

impl ModuleSource {
    pub fn ring(&self) -> Polynomials {
        match self {
            ModuleSource::Presented(p) => p.ring,
            ModuleSource::Slice(s) => Polynomials::new(s.field(), s.v()),
            ModuleSource::Rnc { ring, .. } => *ring,
        }
    }

    /// Lowest degree worth trying as a truncation.
    pub fn floor(&self) -> i32 {
        match self {
            ModuleSource::Presented(p) => p.target.iter().copied().min().unwrap_or(0),
            ModuleSource::Slice(s) => s.lo(),
            ModuleSource::Rnc { .. } => 0,
        }
    }

    pub fn slice(&self, lo: i32, hi: i32) -> Result<GradedSlice, CliError> {
        match self {
            ModuleSource::Presented(p) => Ok(slice(p, lo, hi)?),
            ModuleSource::Slice(s) => {
                if s.lo() > lo || s.hi() < hi {
                    return Err(CliError::Usage(format!("slice file covers [{}, {}], need [{lo}, {hi}]", s.lo(), s.hi())));
                }
                Ok(s.restrict(lo, hi)?)
            }
            ModuleSource::Rnc { ring, d, k } => Ok(rnc_slice(*ring, *d, *k, lo, hi)?),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Source {
    Module(ModuleSource),
    /// A map `T^pos → T^{pos+1}` of a Tate resolution.
    Map { phi: EMap, pos: i32 },
}

/// `key=value` parameters with per-generator validation.
pub struct Params {
    values: BTreeMap<String, String>,
    used: Vec<String>,
}

impl Params {
    pub fn parse(raw: &[String]) -> Result<Params, CliError> {
        let mut values = BTreeMap::new();
        for r in raw {
            let (k, v) = r.split_once('=').ok_or_else(|| CliError::Usage(format!("parameter '{r}' is not key=value")))?;
            values.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Params { values, used: Vec::new() })
    }

    pub fn set_default(&mut self, key: &str, value: String) {
        self.values.entry(key.to_string()).or_insert(value);
    }

    pub fn int(&mut self, key: &str, default: Option<i64>) -> Result<i64, CliError> {
        self.used.push(key.to_string());
        match (self.values.get(key), default) {
            (Some(s), _) => s.parse().map_err(|_| CliError::Usage(format!("parameter {key}={s} is not an integer"))),
            (None, Some(d)) => Ok(d),
            (None, None) => Err(CliError::Usage(format!("missing parameter {key}"))),
        }
    }

    fn finish(&self, name: &str) -> Result<(), CliError> {
        match self.values.keys().find(|k| !self.used.contains(k)) {
            Some(k) => Err(CliError::Usage(format!("builtin {name} has no parameter '{k}'"))),
            None => Ok(()),
        }
    }
}

fn ext(alg: Exterior, idx: &[usize]) -> ExtElement {
    alg.monomial(idx, alg.field.one()).expect("valid indices")
}

/// The 2×5 matrix of quadrics, placed as `T^{-1} → T^0`.
pub fn horrocks_mumford(field: Field) -> Result<(EMap, i32), CliError> {
    let a = Exterior::new(field, 5)?;
    let p = |i, j| ext(a, &[i, j]);
    let rows = vec![vec![p(1, 4), p(2, 0), p(3, 1), p(4, 2), p(0, 3)], vec![p(2, 3), p(3, 4), p(4, 0), p(0, 1), p(1, 2)]];
    Ok((EMap::from_rows(a, FreeE::new(5, vec![4; 5]), FreeE::new(5, vec![2; 2]), rows)?, -1))
}

pub fn elliptic_quartic(field: Field, lambda: i64) -> Result<PresentedS, CliError> {
    let r = Polynomials::new(field, 4);
    let x = |i| r.var(i);
    let l = r.constant(lambda);
    let q1 = x(0).mul(&x(0)).add(&x(2).mul(&x(2))).add(&l.mul(&x(1)).mul(&x(3)));
    let q2 = x(1).mul(&x(1)).add(&x(3).mul(&x(3))).add(&l.mul(&x(0)).mul(&x(2)));
    let m = PresentedS::quotient(r, vec![q1, q2])?;
    let s = slice(&m, 1, 6)?;
    for (t, dim) in s.hilbert() {
        if dim != 4 * t as usize {
            return Err(CliError::Usage(format!("lambda={lambda}: Hilbert function is {dim} in degree {t}, not {}", 4 * t)));
        }
    }
    Ok(m)
}

/// Basis `s^{N-j} t^j` of `H^0(O_{P^1}(N))`; `x_i` multiplies by `s^{d-i} t^i`.
pub fn rnc_slice(ring: Polynomials, d: i32, k: i32, lo: i32, hi: i32) -> Result<GradedSlice, crate::symmetric::SymmetricError> {
    let dim = |m: i32| if m < 0 && k < d { 0 } else { (k + m * d + 1).max(0) as usize };
    let dims: Vec<usize> = (lo..=hi).map(dim).collect();
    let mult = (lo..hi)
        .map(|m| {
            (0..ring.v)
                .map(|i| {
                    let (src, tgt) = (dim(m), dim(m + 1));
                    let mut a = DenseMatrix::zeros(ring.field, tgt, src);
                    for j in 0..src {
                        if j + i < tgt {
                            a.set(j + i, j, &ring.field.one());
                        }
                    }
                    a
                })
                .collect()
        })
        .collect();
    GradedSlice::direct(ring, lo, dims, mult)
}

/// Builds a named input; `field` overrides the generator's default field.
pub fn builtin(name: &str, raw: &[String], field: Option<Field>, v: Option<usize>) -> Result<Source, CliError> {
    let mut p = Params::parse(raw)?;
    let src = match name {
        "hm" => {
            let (phi, pos) = horrocks_mumford(field.unwrap_or(Field::Prime(32003)))?;
            Source::Map { phi, pos }
        }
        "elliptic-quartic" => {
            let lambda = p.int("lambda", Some(2))?;
            Source::Module(ModuleSource::Presented(elliptic_quartic(field.unwrap_or(Field::Prime(101)), lambda)?))
        }
        "rnc" => {
            let d = p.int("d", None)?;
            let k = p.int("k", None)?;
            if !(1..=12).contains(&d) || k < -1 {
                return Err(CliError::Usage("rnc needs 1 <= d <= 12 and k >= -1".into()));
            }
            let ring = Polynomials::new(field.unwrap_or(Field::Prime(32003)), d as usize + 1);
            Source::Module(ModuleSource::Rnc { ring, d: d as i32, k: k as i32 })
        }
        "omega" => {
            let v = v.unwrap_or(p.int("v", Some(4))? as usize);
            let i = p.int("p", None)?;
            if v < 2 || i < 0 || i >= v as i64 {
                return Err(CliError::Usage(format!("omega needs 0 <= p < v, got p={i}, v={v}")));
            }
            let ring = Polynomials::new(field.unwrap_or(Field::Prime(32003)), v);
            Source::Module(ModuleSource::Presented(omega_module(ring, i as i32)?))
        }
        "o" => {
            let v = v.unwrap_or(p.int("v", Some(3))? as usize);
            let k = p.int("twist", Some(0))?;
            let ring = Polynomials::new(field.unwrap_or(Field::Prime(32003)), v);
            Source::Module(ModuleSource::Presented(PresentedS::free(ring, vec![-k as i32])))
        }
        "point" => {
            let v = v.unwrap_or(p.int("v", Some(2))? as usize);
            let ring = Polynomials::new(field.unwrap_or(Field::Prime(32003)), v);
            Source::Module(ModuleSource::Presented(PresentedS::quotient(ring, (1..v).map(|i| ring.var(i)).collect())?))
        }
        "unit-cancel" => {
            let a = Exterior::new(field.unwrap_or(Field::Prime(32003)), 2)?;
            let rows = vec![vec![ext(a, &[0]), a.constant(1)], vec![ExtElement::zero(), ext(a, &[1])]];
            Source::Map { phi: EMap::from_rows(a, FreeE::new(2, vec![3, 2]), FreeE::new(2, vec![2, 1]), rows)?, pos: 0 }
        }
        other => return Err(CliError::Usage(format!("unknown builtin '{other}'; known: {}", NAMES.join(", ")))),
    };
    if name != "omega" && name != "o" && name != "point" {
        if let Some(v0) = v {
            let want = match &src {
                Source::Module(m) => m.ring().v,
                Source::Map { phi, .. } => phi.alg.v,
            };
            if v0 != want {
                return Err(CliError::Usage(format!("builtin {name} lives in v = {want}, not {v0}")));
            }
        }
    }
    p.finish(name)?;
    Ok(src)
}
