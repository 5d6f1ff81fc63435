//! Compare every closed formula with the chain-complex oracle over all
//! ideals in a small box, over GF(2) and over Q.
//!
//! `cargo run --release --example verify_sweep -- n=2,tmax=2`

use nakayama::linalg::{PrimeField, Rationals};
use nakayama::verify::{exhaustive_cases, run_sweep, Summary, SweepSpec};

fn report(name: &str, summary: &Summary) {
    println!(
        "{name}: {} checks, {} failed",
        summary.checked, summary.failed
    );
    if let Some(f) = &summary.first_failure {
        println!(
            "  first: {} I={} t={} k={}: {}",
            f.check, f.ideal, f.t, f.k, f.detail
        );
    }
}

fn main() -> nakayama::Result<()> {
    let spec: SweepSpec = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("n=2,tmax=1")
        .parse()?;
    let cases = exhaustive_cases(spec);
    println!("{} cases for n={} tmax={}", cases.len(), spec.n, spec.tmax);
    report("GF(2)", &run_sweep(&cases, &PrimeField::new(2)?)?);
    report("Q", &run_sweep(&cases, &Rationals)?);
    Ok(())
}
