//! Alexander duality on ideals and on positively determined modules.
//!
//! `cargo run --example alexander_duality`

use nakayama::degree::{DegreeBox, Multidegree};
use nakayama::ideal::MonomialIdeal;
use nakayama::modrep::{alexander_dual_module, interval_module, quotient_module};

fn main() -> nakayama::Result<()> {
    let t = Multidegree::from([2, 1]);
    let ideal = MonomialIdeal::from_exponents(&[[2, 0], [1, 1]]);
    let dual = ideal.alexander_dual(&t)?;
    println!(
        "dual of {ideal} in [0,{t}] is {dual}, and back: {}",
        dual.alexander_dual(&t)?
    );

    let m = alexander_dual_module(&quotient_module(&ideal, &t)?);
    for a in DegreeBox::up_to(&t).iter() {
        println!(
            "  degree {a}: dual module {}, S/dual {}",
            m.dim(&a),
            usize::from(!dual.contains(&a))
        );
    }

    let t = Multidegree::from([4]);
    let k = interval_module(&t, &Multidegree::from([1]), &Multidegree::from([2]))?;
    let expected = interval_module(&t, &Multidegree::from([2]), &Multidegree::from([3]))?;
    println!(
        "K{{1,2}} dualizes to K{{2,3}} for t = 4: {}",
        alexander_dual_module(&k) == expected
    );
    Ok(())
}
