//! `O_{P^1}(k)` pushed forward along the rational normal curve of degree `d`.

use std::error::Error;

use tate_core::cli::builtins::rnc_slice;
use tate_core::cli::find_truncation;
use tate_core::cli::builtins::ModuleSource;
use tate_core::scalars::Field;
use tate_core::symmetric::Polynomials;
use tate_core::tate::{cohomology_table, render_betti, tate_from_module};

fn main() -> Result<(), Box<dyn Error>> {
    let d = 3;
    let ring = Polynomials::new(Field::Prime(32003), d as usize + 1);
    for k in [-1, 0, 2] {
        let trunc = find_truncation(&ModuleSource::Rnc { ring, d, k })?;
        let s = rnc_slice(ring, d, k, trunc, trunc + 8)?;
        let t = tate_from_module(&s, trunc, -3, 3, false)?;
        println!("(d, k) = ({d}, {k}), truncation {trunc}\n{}", render_betti(&t.betti(), -3, 3));
        println!("{}", cohomology_table(&t).render(-2, 2));
    }
    Ok(())
}
