//! Cohomology of the iterated Nakayama functor on `S/I`, from the closed
//! formula and from the complex itself.
//!
//! `cargo run --example cohomology_table`

use nakayama::degree::Multidegree;
use nakayama::formulas::cohomology_table_formula_with_mult;
use nakayama::ideal::MonomialIdeal;
use nakayama::linalg::PrimeField;
use nakayama::modrep::{cohomology_table, quotient_module, ComplexOfReps};

fn main() -> nakayama::Result<()> {
    let field = PrimeField::new(2)?;
    let ideal = MonomialIdeal::from_exponents(&[[1, 1, 1]]);
    let t = Multidegree::from([1, 1, 1]);
    let k = Multidegree::from([1, 2, 1]);

    let formula = cohomology_table_formula_with_mult(&ideal, &t, &k, &field)?;
    println!("S/{ideal}, t = {t}, k = {k}\n{formula}");

    let complex = ComplexOfReps::concentrated(quotient_module(&ideal, &t)?, 0).nakayama(&k)?;
    let oracle = cohomology_table(&complex, &field, true);
    println!(
        "complex has {} cells; tables agree: {}",
        complex.cells(),
        formula == oracle
    );
    Ok(())
}
