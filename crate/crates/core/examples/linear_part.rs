//! Linear part of a minimal exterior resolution, computed two ways.

use std::error::Error;

use tate_core::bgg::{linear_part, linear_part_via_homology};
use tate_core::exterior::{resolve_backward, EComplex, EMap, Exterior, FreeE};
use tate_core::scalars::Field;

fn main() -> Result<(), Box<dyn Error>> {
    let alg = Exterior::new(Field::Prime(32003), 3)?;
    let e = |i: usize| alg.monomial(&[i], Field::Prime(32003).one());
    let ee = alg.monomial(&[0, 1], Field::Prime(32003).one())?;
    let phi = EMap::from_rows(alg, FreeE::new(3, vec![0, 0]), FreeE::new(3, vec![-1, -2]), vec![vec![e(0)?, e(2)?], vec![ee, e(1)?.mul(&e(2)?)]])?;
    let c = resolve_backward(&EComplex::from_map(phi, 0), 4).minimize();
    println!("betti {:?}", c.betti());
    let lin = linear_part(&c);
    let via = linear_part_via_homology(&c)?;
    println!("same Betti table: {}", lin.betti() == via.betti());
    let (lo, hi) = lin.degree_range().unwrap_or((0, 0));
    for e in lin.lo()..lin.hi() {
        let rank = |x: &EComplex| -> Vec<usize> { (lo..=hi).map(|d| x.diff(e).map_or(0, |f| f.matrix_in_degree(d).rank())).collect() };
        println!("position {e}: ranks by degree {:?} and {:?}", rank(&lin), rank(&via));
    }
    Ok(())
}
