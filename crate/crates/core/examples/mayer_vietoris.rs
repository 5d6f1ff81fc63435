//! The simplicial complexes behind the formulas and a Mayer–Vietoris
//! connecting map between their reduced cohomologies.
//!
//! `cargo run --example mayer_vietoris`

use nakayama::degree::Multidegree;
use nakayama::ideal::MonomialIdeal;
use nakayama::linalg::Rationals;
use nakayama::simplicial::{delta_complex, reduced_cohomology_dims, MvSquare};

fn main() -> nakayama::Result<()> {
    let t = Multidegree::from([1, 1]);
    let profile = MonomialIdeal::from_exponents(&[[1, 1]]).support_profile(&t)?;
    let (a, b) = (Multidegree::from([0, 0]), Multidegree::from([0, 0]));
    let delta = delta_complex(&profile, &a, &b)?;
    println!(
        "faces {:?}, reduced cohomology {:?}",
        delta.face_lists(),
        reduced_cohomology_dims(&Rationals, &delta)
    );

    let square = MvSquare::new(&profile, &a, &b, 1, 1, 0)?;
    for (name, c) in [
        ("left", &square.left),
        ("right", &square.right),
        ("meet", &square.meet),
    ] {
        println!("{name}: {:?}", reduced_cohomology_dims(&Rationals, c));
    }
    println!(
        "connecting ranks {:?}",
        square.connecting(&Rationals)?.ranks(&Rationals)
    );
    Ok(())
}
