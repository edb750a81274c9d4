//! Sheaf cohomology on projective space through exterior-algebra syzygies.
//!
//! A coherent sheaf on `P(W)` is encoded by its Tate resolution, a doubly infinite exact
//! complex of free modules over the exterior algebra `E = ∧V`. Finite windows of it are
//! computed here with exact linear algebra, and read off as cohomology tables, Beilinson
//! monads and free monads.

pub mod bgg;
pub mod cli;
pub mod exterior;
pub mod monads;
pub mod scalars;
pub mod symmetric;
pub mod tate;
