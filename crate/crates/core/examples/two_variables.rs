//! In two variables each cohomology group has a combinatorial vanishing
//! test, and at most one group survives in three shapes of ideal.
//!
//! `cargo run --example two_variables`

use nakayama::degree::Multidegree;
use nakayama::formulas::two_var_report;
use nakayama::ideal::all_t_determined;

fn main() -> nakayama::Result<()> {
    let t = Multidegree::from([2, 2]);
    let k = Multidegree::from([2, 1]);
    for ideal in all_t_determined(&t).iter().filter(|i| !i.is_unit()) {
        let r = two_var_report(ideal, &t, &k)?;
        let alive: Vec<usize> = [r.h0_vanishes, r.h1_vanishes, r.h2_vanishes, r.h3_vanishes]
            .iter()
            .enumerate()
            .filter(|(_, v)| !**v)
            .map(|(i, _)| i)
            .collect();
        println!(
            "{:<16} nonzero H^i for i in {alive:?} case {:?}",
            ideal.to_string(),
            r.case
        );
    }
    Ok(())
}
