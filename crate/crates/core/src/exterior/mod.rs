//! The exterior algebra `E = ∧V`, graded free `E`-modules in ω-twist form, homogeneous
//! maps and complexes, and the resolution toolkit built on degreewise linear algebra.
//!
//! Conventions: `ω_E(a)` has its generator in internal degree `v - a` and socle in degree
//! `-a`; a map acts by `g_l ↦ Σ_k g_k X_{kl}` so composition is the matrix product.

mod algebra;
mod complex;
mod module;
mod resolve;

use thiserror::Error;

pub use algebra::{ExtElement, ExtMonomial, Exterior, MAX_VARS};
pub use complex::{Betti, EComplex};
pub use module::{EMap, FreeE, PieceIndex, PieceLayout};
pub use resolve::{kernel_min_generators, minimal_cover, resolve_backward, resolve_forward, KernelGenerator};

pub(crate) use algebra::subset_table;
pub(crate) use module::binomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    #[error("variable index {index} out of range [0, {v})")]
    IndexOutOfRange { index: usize, v: usize },
    #[error("unsupported number of variables {0}")]
    VariableCount(usize),
    #[error("entry ({row}, {col}) = {entry} is not homogeneous of word length {expected}")]
    Inhomogeneous { row: usize, col: usize, expected: i32, entry: String },
    #[error("expected a {}x{} matrix, found {found} entries", expected.0, expected.1)]
    Shape { expected: (usize, usize), found: usize },
    #[error("maps are not composable")]
    Composition,
    #[error("malformed complex: {0}")]
    ComplexShape(String),
    #[error("maps at positions {0} and {} do not compose to zero", .0 + 1)]
    NotAComplex(i32),
    #[error("complex is not minimal")]
    NotMinimal,
    #[error("window [{lo}, {hi}] not inside [{}, {}]", have.0, have.1)]
    Window { lo: i32, hi: i32, have: (i32, i32) },
}
