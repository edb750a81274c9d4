//! Beilinson monad of the elliptic quartic, checked against its own module.

use std::error::Error;

use tate_core::cli::builtins::elliptic_quartic;
use tate_core::monads::{beilinson, omega_monad_homology, verify_omega_monad};
use tate_core::scalars::Field;
use tate_core::symmetric::slice;
use tate_core::tate::tate_from_module;

fn main() -> Result<(), Box<dyn Error>> {
    let m = elliptic_quartic(Field::Prime(101), 2)?;
    let s = slice(&m, 2, 12)?;
    let t = tate_from_module(&s, 2, -4, 5, false)?;
    let bm = beilinson(&t)?;
    for (e, term) in bm.describe() {
        println!("{e:>3}: {term}");
    }
    verify_omega_monad(&bm, &s, 2, 6)?;
    println!("homology in degree 2..6 matches the module");
    for ((e, deg), h) in omega_monad_homology(&bm, 0, 2) {
        println!("H^{e} in degree {deg}: {h}");
    }
    Ok(())
}
