//! The Horrocks-Mumford bundle from a single 2×5 matrix of exterior quadrics.

use std::error::Error;

use tate_core::cli::builtins::horrocks_mumford;
use tate_core::scalars::Field;
use tate_core::tate::{cohomology_table, render_betti, row_bound_check, tate_from_emap};

fn main() -> Result<(), Box<dyn Error>> {
    let (phi, pos) = horrocks_mumford(Field::Prime(32003))?;
    let t = tate_from_emap(&phi, pos, -6, 6)?;
    println!("{}", render_betti(&t.betti(), -6, 6));
    let bounds = row_bound_check(&t.window(-5, 5)?.complex, None)?;
    println!("every term of the full resolution lies in rows {}..={}", bounds.band.0, bounds.band.1);
    println!("\n{}", cohomology_table(&t).render(-2, 2));
    Ok(())
}
