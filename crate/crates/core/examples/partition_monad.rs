//! Free monads from partition subcomplexes: Beilinson's sequence and Walter's.

use std::error::Error;

use tate_core::cli::builtins::elliptic_quartic;
use tate_core::monads::{free_monad, monad_checks, walter_mu, Mu};
use tate_core::scalars::Field;
use tate_core::symmetric::slice;
use tate_core::tate::{cohomology_table, tate_from_module};

fn main() -> Result<(), Box<dyn Error>> {
    let m = elliptic_quartic(Field::Prime(101), 2)?;
    let t = tate_from_module(&slice(&m, 2, 14)?, 2, -6, 8, false)?;
    let table = cohomology_table(&t);

    let mu = Mu::beilinson(4);
    let fm = free_monad(&t, &mu)?;
    println!("mu = {:?}: {:?}", mu.values(), fm.complex.shape());
    println!("violations: {:?}", monad_checks(&fm.complex, &mu, &table, -2, 3)?);

    let mu = Mu::new(vec![0, 1, 2, 4], 4)?;
    let fm = free_monad(&t, &mu)?;
    println!("mu = {:?}: {:?}", mu.values(), fm.complex.shape());

    let mu = walter_mu(&table, 0, 1)?;
    let fm = free_monad(&t, &mu)?;
    println!("Walter mu = {:?}: {:?}", mu.values(), fm.complex.shape());
    println!("violations: {:?}", monad_checks(&fm.complex, &mu, &table, -2, 3)?);
    Ok(())
}
