//! Peaks, indents and the vanishing of the lowest and highest cohomology.
//!
//! `cargo run --example vanishing`

use nakayama::degree::Multidegree;
use nakayama::formulas::{
    cohomology_table_formula, nonvanishing_witness, vanishing_h0, vanishing_top,
};
use nakayama::ideal::MonomialIdeal;
use nakayama::linalg::PrimeField;

fn main() -> nakayama::Result<()> {
    let field = PrimeField::new(2)?;
    let ideal = MonomialIdeal::from_exponents(&[[2, 0], [0, 2]]);
    let t = Multidegree::from([2, 2]);
    println!(
        "S/{ideal}: peaks {:?}, indents {:?}",
        ideal.peaks(&t)?,
        ideal.indents(&t)?
    );
    for k in [[1, 1], [2, 2], [3, 3]] {
        let k = Multidegree::from(k);
        println!(
            "k = {k}: H^0 vanishes {}, H^3 vanishes {}, degrees {:?}",
            vanishing_h0(&ideal, &t, &k)?,
            vanishing_top(&ideal, &t, &k)?,
            cohomology_table_formula(&ideal, &t, &k, &field)?.degrees()
        );
        for w in nonvanishing_witness(&ideal, &t, &k)? {
            println!("  H^{} is nonzero ({:?} at {})", w.i, w.reason, w.y);
        }
    }
    Ok(())
}
