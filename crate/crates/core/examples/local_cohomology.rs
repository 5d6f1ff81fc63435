//! Multigraded local cohomology of a Stanley–Reisner ring at arbitrary
//! integer degrees, read off the first Nakayama iterate.
//!
//! `cargo run --example local_cohomology`

use nakayama::degree::Multidegree;
use nakayama::formulas::local_cohomology;
use nakayama::ideal::MonomialIdeal;
use nakayama::linalg::PrimeField;

fn main() -> nakayama::Result<()> {
    let field = PrimeField::new(2)?;
    // S/(xyz) is the coordinate ring of the boundary of a triangle.
    let ideal = MonomialIdeal::from_exponents(&[[1, 1, 1]]);
    let t = Multidegree::from([1, 1, 1]);
    for z in [[0, 0, 0], [-1, 0, 0], [-2, -1, -3], [-1, 0, 1]] {
        let z = Multidegree::from(z);
        let dims: Vec<usize> = (0..=3)
            .map(|i| local_cohomology(&ideal, &t, i, &z, &field))
            .collect::<nakayama::Result<_>>()?;
        println!("z = {z}: dim H^0..H^3 = {dims:?}");
    }
    Ok(())
}
