//! The functors `R` and `L` on a small module and the Koszul reciprocity between them.

use std::error::Error;

use tate_core::bgg::{functor_l, functor_r};
use tate_core::scalars::Field;
use tate_core::symmetric::{slice, Polynomials, PresentedS};

fn main() -> Result<(), Box<dyn Error>> {
    let ring = Polynomials::new(Field::Prime(32003), 3);
    let m = PresentedS::quotient(ring, vec![ring.var(0).mul(&ring.var(1)), ring.var(2).mul(&ring.var(2))])?;
    let s = slice(&m, 0, 4)?;
    println!("Hilbert function on [0, 4]: {:?}", s.hilbert());

    let r = functor_r(&s);
    println!("R(M): positions {}..{}, betti {:?}", r.lo(), r.hi(), r.betti());
    for e in r.lo() + 1..r.hi() {
        for deg in e..=e + 3 {
            let h = r.homology_dim(e, deg);
            if h > 0 {
                println!("  H^{e}(R(M))_{deg} = {h}, Tor_{}(M, K)_{deg} = {}", deg - e, s.koszul_tor((deg - e) as usize, deg)?);
            }
        }
    }

    let l = functor_l(&r);
    println!("L(R(M)) shape {:?}", l.shape());
    Ok(())
}
