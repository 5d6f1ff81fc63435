//! Formula against oracle over whole families of ideals.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::degree::{DegreeBox, Multidegree};
use crate::error::{Error, Result};
use crate::formulas::{
    betti_table_formula, cohomology_table_formula_with_mult, is_c_linear, nonvanishing_witness,
    two_var_linearity_predicted, two_var_report, vanishing_h0, vanishing_top,
};
use crate::ideal::{all_t_determined, MonomialIdeal};
use crate::linalg::Field;
use crate::modrep::{cohomology_table, quotient_module, CohomologyTable, ComplexOfReps};

/// `n=2,tmax=2`: every ideal determined in `tmax·𝟙`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub n: usize,
    pub tmax: i32,
}

impl FromStr for SweepSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut tmax = None;
        for part in s.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in {s:?}")))?;
            let bad = |_| Error::Parse(format!("bad value in {part:?}"));
            match key.trim() {
                "n" => n = Some(value.trim().parse::<usize>().map_err(bad)?),
                "tmax" => tmax = Some(value.trim().parse::<i32>().map_err(bad)?),
                other => return Err(Error::Parse(format!("unknown key {other:?}"))),
            }
        }
        match (n, tmax) {
            (Some(n), Some(tmax)) if n >= 1 && tmax >= 0 => Ok(SweepSpec { n, tmax }),
            _ => Err(Error::Parse(format!("need n ≥ 1 and tmax ≥ 0 in {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub ideal: MonomialIdeal,
    pub t: Multidegree,
    pub k: Multidegree,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I={} t={} k={}", self.ideal, self.t, self.k)
    }
}

/// All ideals determined in `t = tmax·𝟙` and all `k ∈ [0, t+𝟙]`.
pub fn exhaustive_cases(spec: SweepSpec) -> Vec<Case> {
    let t = Multidegree::ones(spec.n).scaled_by(spec.tmax);
    let ks: Vec<Multidegree> = DegreeBox::up_to(&t.add_scalar(1)).iter().collect();
    all_t_determined(&t)
        .into_iter()
        .flat_map(|ideal| {
            let t = t.clone();
            ks.iter().map(move |k| Case {
                ideal: ideal.clone(),
                t: t.clone(),
                k: k.clone(),
            })
        })
        .collect()
}

/// `count` cases with `t ≤ tmax·𝟙`, up to three random generators and `k`
/// ranging over more than one period.
pub fn random_cases(spec: SweepSpec, count: usize, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let t = Multidegree::new(
                (0..spec.n)
                    .map(|_| rng.gen_range(spec.tmax.min(1)..=spec.tmax))
                    .collect(),
            );
            let gens: Vec<Multidegree> = (0..rng.gen_range(0..=3))
                .map(|_| {
                    Multidegree::new((0..spec.n).map(|j| rng.gen_range(0..=t.get(j))).collect())
                })
                .collect();
            let ideal = MonomialIdeal::minimalize(spec.n, &gens)
                .expect("random generators are nonnegative");
            let k = Multidegree::new(
                (0..spec.n)
                    .map(|j| rng.gen_range(0..=2 * t.get(j) + 3))
                    .collect(),
            );
            Case { ideal, t, k }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub ideal: String,
    pub t: Multidegree,
    pub k: Multidegree,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checked: usize,
    pub failed: usize,
    pub first_failure: Option<Failure>,
}

struct Recorder<'a> {
    case: &'a Case,
    checked: usize,
    failures: Vec<Failure>,
}

impl Recorder<'_> {
    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                check: name.into(),
                ideal: self.case.ideal.to_string(),
                t: self.case.t.clone(),
                k: self.case.k.clone(),
                detail: detail(),
            });
        }
    }
}

fn describe_diff(formula: &CohomologyTable, oracle: &CohomologyTable) -> String {
    let rows: Vec<String> = formula
        .diff(oracle)
        .into_iter()
        .take(4)
        .map(|(i, r, a, b)| format!("i={i} r={r}: formula {a}, oracle {b}"))
        .collect();
    rows.join("; ")
}

fn oracle_complex(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
) -> Result<ComplexOfReps> {
    ComplexOfReps::concentrated(quotient_module(ideal, t)?, 0).nakayama(k)
}

/// Runs every applicable comparison for one case and returns the number of
/// checks made with the failures among them.
pub fn check_case<F: Field>(case: &Case, field: &F) -> Result<(usize, Vec<Failure>)> {
    let Case { ideal, t, k } = case;
    let n = t.len();
    let mut rec = Recorder {
        case,
        checked: 0,
        failures: Vec::new(),
    };

    let complex = oracle_complex(ideal, t, k)?;
    let oracle = cohomology_table(&complex, field, true);
    let formula = cohomology_table_formula_with_mult(ideal, t, k, field)?;
    rec.check("cohomology_table", formula.dims == oracle.dims, || {
        describe_diff(&formula, &oracle)
    });
    rec.check("multiplication_ranks", formula.mult == oracle.mult, || {
        format!("formula {:?}, oracle {:?}", formula.mult, oracle.mult)
    });

    let betti_oracle = cohomology_table(&complex.koszul_tensor()?, field, false);
    let betti = betti_table_formula(ideal, t, k, field)?;
    rec.check("betti_table", betti == betti_oracle, || {
        describe_diff(&betti, &betti_oracle)
    });

    let in_window = Multidegree::ones(n).leq(k) && k.leq(&t.add_scalar(1));
    if !in_window {
        return Ok((rec.checked, rec.failures));
    }
    let top = 2 * n as i32 - 1;
    let nonzero = |i: i32| oracle.total(i) > 0;
    rec.check(
        "degree_bounds",
        oracle.degrees().iter().all(|&i| (0..=top).contains(&i)),
        || format!("nonzero degrees {:?}", oracle.degrees()),
    );
    if ideal.is_unit() {
        // S/S = 0 has a vacuous indent at 0; the peak and indent criteria
        // are about nonzero quotients.
        return Ok((rec.checked, rec.failures));
    }
    let h0 = vanishing_h0(ideal, t, k)?;
    rec.check("h0_vanishing", h0 == !nonzero(0), || {
        format!("predicted {h0}, oracle H^0 total {}", oracle.total(0))
    });
    let ht = vanishing_top(ideal, t, k)?;
    rec.check("top_vanishing", ht == !nonzero(top), || {
        format!("predicted {ht}, oracle H^{top} total {}", oracle.total(top))
    });
    for w in nonvanishing_witness(ideal, t, k)? {
        rec.check("witness", nonzero(w.i), || {
            format!("{w:?} but oracle H^{} = 0", w.i)
        });
    }

    if n == 2 {
        let report = two_var_report(ideal, t, k)?;
        let predicted = [
            report.h0_vanishes,
            report.h1_vanishes,
            report.h2_vanishes,
            report.h3_vanishes,
        ];
        for (i, vanishes) in predicted.into_iter().enumerate() {
            let i = i as i32;
            rec.check(&format!("two_var_h{i}"), vanishes == !nonzero(i), || {
                format!(
                    "predicted vanishing {vanishes}, oracle total {}",
                    oracle.total(i)
                )
            });
        }
        let single = oracle.degrees().len() <= 1;
        rec.check(
            "two_var_single",
            report.single_nonvanishing == single,
            || format!("report {report:?}, oracle degrees {:?}", oracle.degrees()),
        );

        if k.leq(t) {
            let steps = t.add_scalar(1).sub(k);
            let c = t.sub(k);
            let resolved = cohomology_table(
                &oracle_complex(ideal, t, &steps)?.koszul_tensor()?,
                field,
                false,
            );
            let linear = is_c_linear(&resolved, &c, n);
            let predicted = two_var_linearity_predicted(ideal, t, k)?;
            rec.check("two_var_linearity", predicted == linear, || {
                format!(
                    "predicted {predicted}, oracle {linear}; Betti {:?}",
                    resolved.dims
                )
            });
        }
    }
    Ok((rec.checked, rec.failures))
}

/// Checks every case in parallel and merges results in case order.
pub fn run_sweep<F: Field>(cases: &[Case], field: &F) -> Result<Summary> {
    let results = cases
        .par_iter()
        .map(|case| check_case(case, field))
        .collect::<Result<Vec<_>>>()?;
    let mut summary = Summary::default();
    for (checked, failures) in results {
        summary.checked += checked;
        summary.failed += failures.len();
        if summary.first_failure.is_none() {
            summary.first_failure = failures.into_iter().next();
        }
    }
    Ok(summary)
}

/// Every failure of a sweep, in case order.
pub fn sweep_failures<F: Field>(cases: &[Case], field: &F) -> Result<Vec<Failure>> {
    let results = cases
        .par_iter()
        .map(|case| check_case(case, field))
        .collect::<Result<Vec<_>>>()?;
    Ok(results.into_iter().flat_map(|(_, f)| f).collect())
}
