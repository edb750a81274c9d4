//! Command-line front end: argument model, input loading and the subcommands.

pub mod builtins;
pub mod json;
pub mod parse;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bgg::{linear_part, socle_dim, linear_part_via_homology, truncation_linearity_check, BggError};
use crate::exterior::{EComplex, ExteriorError};
use crate::monads::{beilinson, free_monad, monad_checks, verify_omega_monad, walter_mu, FreeMonad, MonadError, Mu};
use crate::scalars::Field;
use crate::symmetric::{SComplex, SymmetricError};
use crate::tate::{cohomology_table, local_cohomology_dims, render_betti, row_bound_check, tate_from_emap, tate_from_module, TateError, TateWindow};

use builtins::{ModuleSource, Source};
use parse::{parse_input, ParseError, ParsedInput};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Symmetric(#[from] SymmetricError),
    #[error(transparent)]
    Bgg(#[from] BggError),
    #[error(transparent)]
    Tate(#[from] TateError),
    #[error(transparent)]
    Monad(#[from] MonadError),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 2 for failed verifications, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) | CliError::Tate(TateError::NotLinear { .. } | TateError::Socle { .. } | TateError::RowBound { .. }) | CliError::Monad(MonadError::Homology { .. }) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "tate", version, about = "Sheaf cohomology via Tate resolutions, and Beilinson and partition monads")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone, Debug, Default)]
pub struct InputArgs {
    /// Input file (`kind presentation|slice|exterior`).
    pub file: Option<PathBuf>,
    /// One of: hm, elliptic-quartic, rnc, omega, o, point, unit-cancel.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Builtin parameter `key=value`; repeatable.
    #[arg(long = "param")]
    pub params: Vec<String>,
    /// A prime or `Q`.
    #[arg(long)]
    pub field: Option<String>,
    /// Number of variables, for builtins that take one.
    #[arg(long)]
    pub v: Option<usize>,
    /// Shorthand for `--param p=...`.
    #[arg(long)]
    pub p: Option<i64>,
    /// Truncation degree; searched for when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub trunc: Option<i32>,
    /// Skip the linearity and socle checks at the truncation degree; output is marked uncertified.
    #[arg(long = "force-trunc")]
    pub force_trunc: bool,
    /// Positions `lo:hi` of the Tate window.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of h^j(F(l)).
    Cohomology {
        #[command(flatten)]
        input: InputArgs,
        /// Twists `lo:hi`.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
    },
    /// A window of the Tate resolution.
    Tate {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Betti table and total ranks of the window.
    Betti {
        #[command(flatten)]
        input: InputArgs,
    },
    /// The Beilinson monad.
    Beilinson {
        #[command(flatten)]
        input: InputArgs,
        /// Check the monad's homology in degrees `lo:hi` against the module.
        #[arg(long, allow_hyphen_values = true)]
        verify: Option<String>,
    },
    /// A free monad: partition `--mu m0,..,mn`, Walter `--walter c`, or Beilinson's by default.
    Monad {
        #[command(flatten)]
        input: InputArgs,
        /// Nondecreasing `m0,..,mn`.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// The cut row `c` of Walter's sequence.
        #[arg(long, allow_hyphen_values = true)]
        walter: Option<i32>,
        /// The large bound used by `--walter`.
        #[arg(long, default_value_t = 1)]
        big: i32,
    },
    /// Linear part by strand erasure and by homology.
    Lin {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Local cohomology of the module.
    Localcoh {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Linearity at the truncation, exactness of the window and the row bound.
    Check {
        #[command(flatten)]
        input: InputArgs,
    },
}

/// Rendered output and whether every verification passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

pub fn parse_range(s: &str) -> Result<(i32, i32), CliError> {
    let bad = || CliError::Usage(format!("range '{s}' is not lo:hi"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let (a, b): (i32, i32) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(CliError::Usage(format!("empty range {a}:{b}")));
    }
    Ok((a, b))
}

pub fn parse_mu(s: &str, v: usize) -> Result<Mu, CliError> {
    let vals = s.split(',').map(|x| x.trim().parse::<i32>().map_err(|_| CliError::Usage(format!("bad entry '{x}' in --mu")))).collect::<Result<Vec<_>, _>>()?;
    Ok(Mu::new(vals, v)?)
}

/// The input named by the arguments.
pub fn load(input: &InputArgs) -> Result<Source, CliError> {
    let field = input.field.as_deref().map(|f| f.parse::<Field>().map_err(|e| CliError::Usage(e.to_string()))).transpose()?;
    match (&input.builtin, &input.file) {
        (Some(_), Some(_)) => Err(CliError::Usage("give either a file or --builtin".into())),
        (None, None) => Err(CliError::Usage("no input: give a file or --builtin".into())),
        (Some(name), None) => {
            let mut params = input.params.clone();
            if let Some(p) = input.p {
                params.push(format!("p={p}"));
            }
            builtins::builtin(name, &params, field, input.v)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), msg: e.to_string() })?;
            Ok(match parse_input(&text)? {
                ParsedInput::Presented(p) => Source::Module(ModuleSource::Presented(p)),
                ParsedInput::Slice(s) => Source::Module(ModuleSource::Slice(s)),
                ParsedInput::Map { phi, pos } => Source::Map { phi, pos },
            })
        }
    }
}

/// Smallest degree from the source's floor where the linearity check passes and `M_d` has no socle.
pub fn find_truncation(m: &ModuleSource) -> Result<i32, CliError> {
    let v = m.ring().v as i32;
    let floor = m.floor();
    for d in floor..floor + 24 {
        let s = m.slice(d, d + v + 2)?;
        if truncation_linearity_check(&s, d, v + 1)?.is_ok() && socle_dim(&s, d)? == 0 {
            return Ok(d);
        }
    }
    Err(CliError::Verification(format!("no linear truncation in [{floor}, {}]", floor + 23)))
}

/// The Tate window for `input`, widened to contain `need` when given.
pub fn tate_window(input: &InputArgs, src: &Source, need: Option<(i32, i32)>) -> Result<TateWindow, CliError> {
    let given = input.window.as_deref().map(parse_range).transpose()?;
    let widen = |(lo, hi): (i32, i32)| need.map_or((lo, hi), |(a, b)| (lo.min(a), hi.max(b)));
    match src {
        Source::Module(m) => {
            let v = m.ring().v as i32;
            let d = match input.trunc {
                Some(d) => d,
                None if input.force_trunc => return Err(CliError::Usage("--force-trunc needs --trunc".into())),
                None => find_truncation(m)?,
            };
            let (lo, hi) = widen(given.unwrap_or((-(v + 1), d + v + 1)));
            let s = m.slice(d, hi.max(d + v + 2) + 1)?;
            Ok(tate_from_module(&s, d, lo, hi, input.force_trunc)?)
        }
        Source::Map { phi, pos } => {
            let v = phi.alg.v as i32;
            let (lo, hi) = widen(given.unwrap_or((pos - v - 1, pos + v + 2)));
            Ok(tate_from_emap(phi, *pos, lo, hi)?)
        }
    }
}

fn module_of(src: &Source) -> Result<&ModuleSource, CliError> {
    match src {
        Source::Module(m) => Ok(m),
        Source::Map { .. } => Err(CliError::Usage("this command needs a module input".into())),
    }
}

fn json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable") + "\n"
}

fn header(t: &TateWindow) -> String {
    let mut s = format!("window [{}, {}]", t.lo(), t.hi());
    if let Some(d) = t.trunc {
        let _ = write!(s, ", truncation {d}");
    }
    if !t.certified {
        s.push_str(", uncertified");
    }
    s + "\n"
}

fn render_scomplex(c: &SComplex) -> String {
    let mut out = String::new();
    for e in c.lo()..=c.hi() {
        let mut counts = std::collections::BTreeMap::new();
        for &a in c.term(e) {
            *counts.entry(a).or_insert(0usize) += 1;
        }
        let terms: Vec<String> = counts.iter().map(|(a, m)| if *m == 1 { format!("S({})", -a) } else { format!("S({})^{m}", -a) }).collect();
        let _ = writeln!(out, "{e:>3}: {}", if terms.is_empty() { "0".to_string() } else { terms.join(" + ") });
    }
    for e in c.lo()..c.hi() {
        let d = c.diff(e).expect("inside");
        if d.rows * d.cols == 0 {
            continue;
        }
        let _ = writeln!(out, "d{e}:");
        for r in 0..d.rows {
            let row: Vec<String> = d.row(r).iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
    }
    out
}

fn run_monad(input: &InputArgs, src: &Source, mu: Option<&str>, walter: Option<i32>, big: i32) -> Result<Outcome, CliError> {
    let v = match src {
        Source::Module(m) => m.ring().v,
        Source::Map { phi, .. } => phi.alg.v,
    };
    let n = v as i32 - 1;
    let mu = match (mu, walter) {
        (Some(_), Some(_)) => return Err(CliError::Usage("give --mu or --walter, not both".into())),
        (Some(s), None) => parse_mu(s, v)?,
        (None, Some(c)) => {
            let t = tate_window(input, src, None)?;
            walter_mu(&cohomology_table(&t), c, big)?
        }
        (None, None) => Mu::beilinson(v),
    };
    let (m0, mn) = (mu.m(0), mu.m(n));
    let (d_lo, d_hi) = (m0 - n - 1, mn + 1);
    let t = tate_window(input, src, Some((d_lo.min(m0), d_hi + n)))?;
    let fm: FreeMonad = free_monad(&t, &mu)?;
    let table = cohomology_table(&t);
    let bad = monad_checks(&fm.complex, &mu, &table, d_lo, d_hi)?;
    let text = match input.format {
        Format::Json => json(&json::free_monad_to_json(&fm)),
        Format::Text => {
            let mut s = header(&t);
            let _ = writeln!(s, "mu = {:?}", mu.values());
            s.push_str(&render_scomplex(&fm.complex));
            if bad.is_empty() {
                let _ = writeln!(s, "checks passed for twists [{d_lo}, {d_hi}]");
            } else {
                for b in &bad {
                    let _ = writeln!(s, "violation: {b:?}");
                }
            }
            s
        }
    };
    Ok(Outcome { text, passed: bad.is_empty() })
}

fn lin_report(c: &EComplex, format: Format) -> Result<Outcome, CliError> {
    let lin = linear_part(c);
    let via = linear_part_via_homology(c)?;
    let mut agree = lin.betti() == via.betti();
    if let Some((a, b)) = lin.degree_range() {
        for e in lin.lo()..lin.hi() {
            for d in a..=b {
                let r1 = lin.diff(e).map_or(0, |m| m.matrix_in_degree(d).rank());
                let r2 = via.diff(e).map_or(0, |m| m.matrix_in_degree(d).rank());
                agree &= r1 == r2;
            }
        }
    }
    let text = match format {
        Format::Json => json(&json::ecomplex_to_json(&lin)),
        Format::Text => {
            let mut s = render_betti(&lin.betti(), lin.lo(), lin.hi());
            let zero = lin.diffs().iter().all(|d| d.is_zero());
            let _ = writeln!(s, "differential {}", if zero { "zero" } else { "nonzero" });
            let _ = writeln!(s, "methods {}", if agree { "agree" } else { "disagree" });
            s
        }
    };
    Ok(Outcome { text, passed: agree })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Tate { input } => {
            let t = tate_window(input, &load(input)?, None)?;
            Ok(Outcome::ok(match input.format {
                Format::Json => json(&json::tate_to_json(&t)),
                Format::Text => header(&t) + &render_betti(&t.betti(), t.lo(), t.hi()),
            }))
        }
        Command::Betti { input } => {
            let t = tate_window(input, &load(input)?, None)?;
            let ranks: Vec<(i32, usize)> = (t.lo()..=t.hi()).map(|e| (e, t.complex.term(e).rank())).collect();
            Ok(Outcome::ok(match input.format {
                Format::Json => json(&ranks),
                Format::Text => {
                    let mut s = header(&t) + &render_betti(&t.betti(), t.lo(), t.hi());
                    let r: Vec<String> = ranks.iter().map(|(_, r)| r.to_string()).collect();
                    let _ = writeln!(s, "ranks: {}", r.join(" "));
                    s
                }
            }))
        }
        Command::Cohomology { input, range } => {
            let src = load(input)?;
            let range = range.as_deref().map(parse_range).transpose()?;
            let n = match &src {
                Source::Module(m) => m.ring().v as i32 - 1,
                Source::Map { phi, .. } => phi.alg.v as i32 - 1,
            };
            let t = tate_window(input, &src, range.map(|(a, b)| (a, b + n)))?;
            let table = cohomology_table(&t);
            let (a, b) = range.unwrap_or((t.lo(), t.hi() - n));
            Ok(Outcome::ok(match input.format {
                Format::Json => json(&json::cohomology_to_json(&table)),
                Format::Text => header(&t) + &table.render(a, b),
            }))
        }
        Command::Localcoh { input } => {
            let src = load(input)?;
            module_of(&src)?;
            let t = tate_window(input, &src, None)?;
            let lc = local_cohomology_dims(&t);
            let rows: Vec<(i32, i32, usize)> = lc.iter().map(|(&(j, d), &m)| (j, d, m)).collect();
            Ok(Outcome::ok(match input.format {
                Format::Json => json(&rows),
                Format::Text => {
                    let mut s = header(&t);
                    for (j, d, m) in rows {
                        let _ = writeln!(s, "H^{j}_m(M)_{d} = {m}");
                    }
                    s
                }
            }))
        }
        Command::Lin { input } => match load(input)? {
            Source::Map { phi, pos } if input.window.is_none() => lin_report(&EComplex::from_map(phi, pos), input.format),
            src => {
                let t = tate_window(input, &src, None)?;
                lin_report(&t.complex, input.format)
            }
        },
        Command::Beilinson { input, verify } => {
            let src = load(input)?;
            let n = match &src {
                Source::Module(m) => m.ring().v as i32 - 1,
                Source::Map { phi, .. } => phi.alg.v as i32 - 1,
            };
            let t = tate_window(input, &src, Some((-n, n)))?;
            let m = beilinson(&t)?;
            let mut passed = true;
            let mut note = String::new();
            if let Some(r) = verify {
                let (a, b) = parse_range(r)?;
                let reference = module_of(&src)?.slice(a, b)?;
                match verify_omega_monad(&m, &reference, a, b) {
                    Ok(()) => note = format!("homology verified in degrees [{a}, {b}]\n"),
                    Err(e @ MonadError::Homology { .. }) => {
                        passed = false;
                        note = format!("verification failed: {e}\n");
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            let text = match input.format {
                Format::Json => json(&json::omega_monad_to_json(&m)),
                Format::Text => {
                    let mut s = header(&t);
                    for (e, d) in m.describe() {
                        let _ = writeln!(s, "{e:>3}: {d}");
                    }
                    s + &note
                }
            };
            Ok(Outcome { text, passed })
        }
        Command::Monad { input, mu, walter, big } => {
            let src = load(input)?;
            run_monad(input, &src, mu.as_deref(), *walter, *big)
        }
        Command::Check { input } => {
            let src = load(input)?;
            let t = tate_window(input, &src, None)?;
            let mut s = header(&t);
            let mut passed = t.certified;
            let _ = writeln!(s, "linearity at truncation: {}", if t.certified { "certified" } else { "skipped" });
            let exact = t.complex.first_inexact(t.lo() + 1, t.hi() - 1);
            match exact {
                None => s.push_str("window exact\n"),
                Some((e, d)) => {
                    passed = false;
                    let _ = writeln!(s, "window inexact at position {e}, degree {d}");
                }
            }
            match row_bound_check(&t.complex, None) {
                Ok(rb) => {
                    let _ = writeln!(s, "row bound: rows {}..={} (pivots {} and {})", rb.band.0, rb.band.1, rb.upper.0, rb.lower.0);
                }
                Err(e) => {
                    passed = false;
                    let _ = writeln!(s, "row bound failed: {e}");
                }
            }
            Ok(Outcome { text: s, passed })
        }
    }
}
