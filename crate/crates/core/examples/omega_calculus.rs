//! Tate resolutions and cohomology of the sheaves of differentials `Ω^p` on P^3.

use std::error::Error;

use tate_core::scalars::Field;
use tate_core::symmetric::{omega_module, slice, Polynomials};
use tate_core::tate::{cohomology_table, tate_from_module};

fn main() -> Result<(), Box<dyn Error>> {
    let v = 4;
    let ring = Polynomials::new(Field::Prime(32003), v);
    for p in 0..v as i32 {
        let m = omega_module(ring, p)?;
        let d = p + 1;
        let t = tate_from_module(&slice(&m, d, d + 10)?, d, p - 3, p + 3, false)?;
        let ranks: Vec<usize> = (p - 3..=p + 3).map(|e| t.complex.term(e).rank()).collect();
        println!("p = {p}: ranks on [{}, {}] = {ranks:?}", p - 3, p + 3);
        println!("{}", cohomology_table(&t).render(-2, 2));
    }
    Ok(())
}
