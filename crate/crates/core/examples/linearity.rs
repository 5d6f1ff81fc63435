//! c-linear Betti tables of Nakayama iterates, and support-linearity of the
//! Alexander dual against a single local cohomology group.
//!
//! `cargo run --example linearity`

use nakayama::degree::{DegreeBox, Multidegree};
use nakayama::formulas::{
    betti_table_formula, cohomology_table_formula, dual_betti_table_formula, is_c_linear,
    is_support_linear, two_var_linearity_predicted,
};
use nakayama::ideal::MonomialIdeal;
use nakayama::linalg::PrimeField;

fn main() -> nakayama::Result<()> {
    let field = PrimeField::new(2)?;
    let t = Multidegree::from([2, 2]);
    let ideal = MonomialIdeal::from_exponents(&[[2, 2]]);
    for k in DegreeBox::new(Multidegree::ones(2), t.clone()).iter() {
        let betti = betti_table_formula(&ideal, &t, &t.add_scalar(1).sub(&k), &field)?;
        println!(
            "S/{ideal}, k = {k}: linear {}, predicted {}",
            is_c_linear(&betti, &t.sub(&k), 2),
            two_var_linearity_predicted(&ideal, &t, &k)?
        );
    }

    let t = Multidegree::ones(3);
    for gens in [
        &[[1, 1, 0], [1, 0, 1], [0, 1, 1]][..],
        &[[1, 0, 1], [0, 1, 1]],
    ] {
        let ideal = MonomialIdeal::from_exponents(gens);
        let groups = cohomology_table_formula(&ideal, &t, &t, &field)?.degrees();
        let linear = is_support_linear(&dual_betti_table_formula(&ideal, &t, &field)?);
        println!("S/{ideal}: local cohomology in {groups:?}, dual support-linear {linear}");
    }
    Ok(())
}
