//! The polynomial ring `S = Sym(W)`: polynomials, finitely presented graded modules,
//! degreewise slices of them, Koszul homology and complexes of free `S`-modules.

mod poly;
mod presented;
mod scomplex;
mod slice;

use thiserror::Error;

pub use poly::{MonomialBasis, Poly, Polynomials, SMonomial};
pub use presented::{omega_module, PresentedS};
pub use scomplex::{PolyMatrix, SComplex};
pub use slice::{slice, GradedSlice};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymmetricError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("entry ({row}, {col}) = {entry} is not homogeneous of degree {expected}")]
    Inhomogeneous { row: usize, col: usize, expected: i32, entry: String },
    #[error("polynomial {0} uses a variable outside the ring")]
    VariableOutOfRange(String),
    #[error("x{i} and x{j} do not commute on degree {degree}")]
    NotCommutative { i: usize, j: usize, degree: i32 },
    #[error("degree {degree} outside the slice window [{lo}, {hi}]")]
    OutsideWindow { degree: i32, lo: i32, hi: i32 },
    #[error("Ω^{i} is undefined for v = {v}")]
    OmegaIndex { i: i32, v: usize },
    #[error("maps at positions {0} and {} do not compose to zero", .0 + 1)]
    NotAComplex(i32),
}
