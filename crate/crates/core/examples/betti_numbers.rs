//! Betti tables of the iterated Nakayama functor. At `k = 0` they are the
//! multigraded Betti numbers of `S/I`.
//!
//! `cargo run --example betti_numbers`

use nakayama::degree::Multidegree;
use nakayama::formulas::betti_table_formula;
use nakayama::ideal::MonomialIdeal;
use nakayama::linalg::Rationals;
use nakayama::modrep::{cohomology_table, quotient_module, ComplexOfReps};

fn main() -> nakayama::Result<()> {
    let ideal = MonomialIdeal::from_exponents(&[[1, 1, 0], [1, 0, 1], [0, 1, 1]]);
    let t = Multidegree::from([1, 1, 1]);

    let betti = betti_table_formula(&ideal, &t, &Multidegree::zero(3), &Rationals)?;
    println!("S/{ideal}:");
    for e in betti.entries() {
        println!("  beta_{} at {}: {}", -e.i, e.r, e.dim);
    }

    let k = Multidegree::from([2, 1, 0]);
    let formula = betti_table_formula(&ideal, &t, &k, &Rationals)?;
    let koszul = ComplexOfReps::concentrated(quotient_module(&ideal, &t)?, 0)
        .nakayama(&k)?
        .koszul_tensor()?;
    println!(
        "k = {k}\n{formula}agrees with the Koszul complex: {}",
        formula == cohomology_table(&koszul, &Rationals, false)
    );
    Ok(())
}
