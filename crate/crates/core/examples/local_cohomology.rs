//! Local cohomology of `M_{≥d}` read off the part of its Tate resolution below `d`.
//! It agrees with that of `M` in degrees `≥ d`, and for `H^j_m` with `j ≥ 2` in every degree.

use std::error::Error;

use tate_core::scalars::Field;
use tate_core::symmetric::{slice, Polynomials, PresentedS};
use tate_core::tate::{local_cohomology_dims, tate_from_module};

fn main() -> Result<(), Box<dyn Error>> {
    let ring = Polynomials::new(Field::Prime(32003), 3);
    let x = |i| ring.var(i);
    let m = PresentedS::quotient(ring, vec![x(0).mul(&x(1)), x(0).mul(&x(2))])?;
    let d = 2;
    let t = tate_from_module(&slice(&m, d, 10)?, d, -4, 4, false)?;
    for ((j, deg), dim) in local_cohomology_dims(&t) {
        println!("H^{j}_m(M_>={d})_{deg} = {dim}");
    }
    Ok(())
}
