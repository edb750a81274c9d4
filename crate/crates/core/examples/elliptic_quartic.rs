//! Tate resolution and cohomology table of the elliptic normal quartic in P^3.

use std::error::Error;

use tate_core::cli::builtins::elliptic_quartic;
use tate_core::scalars::Field;
use tate_core::symmetric::slice;
use tate_core::tate::{cohomology_table, render_betti, tate_from_module};

fn main() -> Result<(), Box<dyn Error>> {
    let m = elliptic_quartic(Field::Prime(101), 2)?;
    let d = 2;
    let t = tate_from_module(&slice(&m, d, 9)?, d, -4, 6, false)?;
    println!("Betti diagram:\n{}", render_betti(&t.betti(), -4, 6));
    for e in -1..=2 {
        println!("T^{e}: twists {:?}", t.complex.term(e).twists);
    }
    println!("\ncohomology table:\n{}", cohomology_table(&t).render(-3, 3));
    Ok(())
}
