//! Acceptance criteria, one PASS/FAIL line each. Every closed formula is
//! compared with the brute-force complexes of modules.

use std::time::Instant;

use nakayama::degree::{q_map_vec, DegreeBox, Multidegree};
use nakayama::formulas::{
    betti_table_formula, cohomology_table_formula, cohomology_table_formula_with_mult,
    dual_betti_table_formula, is_c_linear, is_support_linear, local_cohomology,
    nonvanishing_witness, two_var_linearity_predicted, two_var_report, vanishing_h0, vanishing_top,
};
use nakayama::ideal::{all_t_determined, MonomialIdeal};
use nakayama::linalg::{Field, PrimeField, Rationals};
use nakayama::modrep::{
    alexander_dual_module, cohomology_table, interval_module, quotient_module, CohomologyTable,
    ComplexOfReps,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn md<const N: usize>(c: [i32; N]) -> Multidegree {
    Multidegree::from(c)
}

fn gf2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_complex(ideal: &MonomialIdeal, t: &Multidegree, k: &Multidegree) -> ComplexOfReps {
    ComplexOfReps::concentrated(quotient_module(ideal, t).unwrap(), 0)
        .nakayama(k)
        .unwrap()
}

fn oracle<F: Field>(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
    field: &F,
) -> CohomologyTable {
    cohomology_table(&oracle_complex(ideal, t, k), field, false)
}

fn oracle_betti<F: Field>(c: &ComplexOfReps, field: &F) -> CohomologyTable {
    cohomology_table(&c.koszul_tensor().unwrap(), field, false)
}

struct Family {
    t: Multidegree,
    kmax: Multidegree,
    ideals: Vec<MonomialIdeal>,
}

/// All ideals in `[0,(2,2)]` with `k ≤ (3,3)`, and all squarefree ideals
/// in three variables with `k ≤ (2,2,2)`.
fn families() -> Vec<Family> {
    [md([2, 2]), md([1, 1, 1])]
        .into_iter()
        .map(|t| Family {
            kmax: t.add_scalar(1),
            ideals: all_t_determined(&t),
            t,
        })
        .collect()
}

fn cases() -> Vec<(MonomialIdeal, Multidegree, Multidegree)> {
    let mut out = Vec::new();
    for fam in families() {
        assert_eq!(fam.ideals.len(), 20, "t = {}", fam.t);
        for ideal in &fam.ideals {
            for k in DegreeBox::up_to(&fam.kmax).iter() {
                out.push((ideal.clone(), fam.t.clone(), k));
            }
        }
    }
    out
}

fn describe(a: &CohomologyTable, b: &CohomologyTable) -> String {
    format!("{:?}", a.diff(b).into_iter().take(3).collect::<Vec<_>>())
}

fn both_fields(
    mut f: impl FnMut(&dyn Fn() -> Box<dyn FieldCheck>) -> Result<(), String>,
) -> Result<(), String> {
    f(&|| Box::new(gf2()))?;
    f(&|| Box::new(Rationals))
}

/// Object-safe wrapper so one body can run over both fields.
trait FieldCheck {
    fn name(&self) -> String;
    fn formula(
        &self,
        i: &MonomialIdeal,
        t: &Multidegree,
        k: &Multidegree,
        mult: bool,
    ) -> CohomologyTable;
    fn betti(&self, i: &MonomialIdeal, t: &Multidegree, k: &Multidegree) -> CohomologyTable;
    fn oracle(&self, c: &ComplexOfReps, mult: bool) -> CohomologyTable;
}

impl<F: Field> FieldCheck for F {
    fn name(&self) -> String {
        self.spec().to_string()
    }
    fn formula(
        &self,
        i: &MonomialIdeal,
        t: &Multidegree,
        k: &Multidegree,
        mult: bool,
    ) -> CohomologyTable {
        if mult {
            cohomology_table_formula_with_mult(i, t, k, self).unwrap()
        } else {
            cohomology_table_formula(i, t, k, self).unwrap()
        }
    }
    fn betti(&self, i: &MonomialIdeal, t: &Multidegree, k: &Multidegree) -> CohomologyTable {
        betti_table_formula(i, t, k, self).unwrap()
    }
    fn oracle(&self, c: &ComplexOfReps, mult: bool) -> CohomologyTable {
        cohomology_table(c, self, mult)
    }
}

fn cohomology_tables() -> Outcome {
    let cases = cases();
    both_fields(|make| {
        let field = make();
        for (ideal, t, k) in &cases {
            let f = field.formula(ideal, t, k, false);
            let o = field.oracle(&oracle_complex(ideal, t, k), false);
            ensure(f == o, || {
                format!(
                    "{} I={ideal} t={t} k={k}: {}",
                    field.name(),
                    describe(&f, &o)
                )
            })?;
        }
        Ok(())
    })?;
    Ok(format!("{} cases over GF(2) and Q", cases.len()))
}

fn betti_tables() -> Outcome {
    let cases = cases();
    both_fields(|make| {
        let field = make();
        for (ideal, t, k) in &cases {
            let f = field.betti(ideal, t, k);
            let o = field.oracle(&oracle_complex(ideal, t, k).koszul_tensor().unwrap(), false);
            ensure(f == o, || {
                format!(
                    "{} I={ideal} t={t} k={k}: {}",
                    field.name(),
                    describe(&f, &o)
                )
            })?;
        }
        Ok(())
    })?;
    // S/(xy): β₀ = 1 at 0 and β₁ = 1 at (1,1).
    let mut xy = CohomologyTable::empty(&md([1, 1]));
    xy.set(0, md([0, 0]), 1);
    xy.set(-1, md([1, 1]), 1);
    // S/(xy,xz,yz): 1, 3, 2.
    let mut tri = CohomologyTable::empty(&md([1, 1, 1]));
    tri.set(0, md([0, 0, 0]), 1);
    for r in [md([1, 1, 0]), md([1, 0, 1]), md([0, 1, 1])] {
        tri.set(-1, r, 1);
    }
    tri.set(-2, md([1, 1, 1]), 2);
    for (ideal, expected) in [
        (MonomialIdeal::from_exponents(&[[1, 1]]), xy),
        (
            MonomialIdeal::from_exponents(&[[1, 1, 0], [1, 0, 1], [0, 1, 1]]),
            tri,
        ),
    ] {
        let t = expected.t.clone();
        let zero = Multidegree::zero(t.len());
        let f = betti_table_formula(&ideal, &t, &zero, &gf2()).unwrap();
        let o = oracle_betti(&oracle_complex(&ideal, &t, &zero), &gf2());
        ensure(f == expected && o == expected, || {
            format!("classical Betti numbers of S/{ideal}")
        })?;
    }
    Ok(format!(
        "{} cases over GF(2) and Q, classical examples",
        cases.len()
    ))
}

fn multiplication_ranks() -> Outcome {
    let cases = cases();
    let mut ranks = 0;
    both_fields(|make| {
        let field = make();
        for (ideal, t, k) in &cases {
            let f = field.formula(ideal, t, k, true);
            let o = field.oracle(&oracle_complex(ideal, t, k), true);
            ranks += o.mult.as_ref().map_or(0, |m| m.len());
            ensure(f.mult == o.mult, || {
                format!(
                    "{} I={ideal} t={t} k={k}: formula {:?} oracle {:?}",
                    field.name(),
                    f.mult,
                    o.mult
                )
            })?;
        }
        Ok(())
    })?;
    Ok(format!("{} cases, {ranks} nonzero ranks", cases.len()))
}

fn local_oracle(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    table: &CohomologyTable,
    i: i32,
    z: &Multidegree,
) -> usize {
    if (0..t.len()).any(|j| z.get(j) >= t.get(j)) {
        return 0;
    }
    let _ = ideal;
    table.get(
        i,
        &Multidegree::max(&z.add_scalar(1), &Multidegree::zero(t.len())),
    )
}

fn local_cohomology_window() -> Outcome {
    let ideal = MonomialIdeal::from_exponents(&[[1, 1, 1]]);
    let t = md([1, 1, 1]);
    let wide = md([2, 2, 2]);
    let ones = Multidegree::ones(3);
    let at =
        |t: &Multidegree, i, z: &Multidegree| local_cohomology(&ideal, t, i, z, &gf2()).unwrap();
    ensure(at(&t, 2, &md([0, 0, 0])) == 1, || {
        "H^2 at 0 is not 1".into()
    })?;
    let narrow_table = oracle(&ideal, &t, &ones, &gf2());
    let wide_table = oracle(&ideal, &wide, &ones, &gf2());
    let mut queried = 0;
    for z in DegreeBox::up_to(&md([4, 4, 4]))
        .iter()
        .map(|p| p.add_scalar(-3))
    {
        for i in -1..=4 {
            let narrow = at(&t, i, &z);
            let extended = at(&wide, i, &z);
            if z.coords().iter().any(|&c| c >= 1) {
                ensure(narrow == 0, || format!("H^{i} at {z} should vanish"))?;
            }
            ensure(narrow == extended, || {
                format!("H^{i} at {z}: t gives {narrow}, t' gives {extended}")
            })?;
            let o1 = local_oracle(&ideal, &t, &narrow_table, i, &z);
            let o2 = local_oracle(&ideal, &wide, &wide_table, i, &z);
            ensure(narrow == o1 && narrow == o2, || {
                format!("H^{i} at {z}: formula {narrow}, oracle {o1}/{o2}")
            })?;
            queried += 1;
        }
    }
    Ok(format!("{queried} queries in [-3,1]^3 agree for t and t'"))
}

fn periodicity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut checked = 0;
    for _ in 0..50 {
        let n = rng.gen_range(1..=2);
        let t = Multidegree::new((0..n).map(|_| rng.gen_range(0..=2)).collect());
        let ideal = all_t_determined(&t).choose(&mut rng).unwrap().clone();
        let k = Multidegree::new((0..n).map(|j| rng.gen_range(0..=t.get(j) + 1)).collect());
        for start in [Multidegree::zero(n), k] {
            let base = ComplexOfReps::concentrated(quotient_module(&ideal, &t).unwrap(), 0)
                .nakayama(&start)
                .unwrap();
            for j in 0..n {
                let period = Multidegree::unit(n, j).scaled_by(t.get(j) + 2);
                let far = base.nakayama(&period).unwrap();
                for field in [&gf2() as &dyn FieldCheck, &Rationals] {
                    let a = field.oracle(&far, false);
                    let b = field.oracle(&base, false).shifted(2);
                    ensure(a == b, || {
                        format!(
                            "I={ideal} t={t} from k={start}, j={j}: {}",
                            describe(&a, &b)
                        )
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("50 random ideals, {checked} comparisons"))
}

/// `S/(I + (x_j^{t_j+1} : r_j > 0))`: the module the window-stretching
/// argument actually produces.
fn truncated(ideal: &MonomialIdeal, t: &Multidegree, r: &Multidegree) -> MonomialIdeal {
    let mut gens = ideal.gens().to_vec();
    for j in (0..t.len()).filter(|&j| r.get(j) > 0) {
        gens.push(Multidegree::unit(t.len(), j).scaled_by(t.get(j) + 1));
    }
    MonomialIdeal::minimalize(t.len(), &gens).unwrap()
}

fn stretch_agrees(
    stretched: &MonomialIdeal,
    ideal: &MonomialIdeal,
    t: &Multidegree,
    r: &Multidegree,
    k: &Multidegree,
) -> Option<String> {
    let big = t.add(r);
    let lhs = oracle(stretched, &big, &k.add_scalar(1).add(r), &gf2());
    let rhs = oracle(ideal, t, &k.add_scalar(1), &gf2());
    for d in DegreeBox::up_to(&big).iter() {
        let q = q_map_vec(k, r, &d);
        for i in -1..=4 {
            let (a, b) = (lhs.get(i, &d), rhs.get(i, &q));
            if a != b {
                return Some(format!("I={ideal} k={k} i={i} d={d}: {a} vs {b} at {q}"));
            }
        }
    }
    None
}

fn independence_of_t() -> Outcome {
    let t = md([1, 1]);
    let r = md([1, 1]);
    let mut cases = 0;
    let mut literal = Vec::new();
    let mut corrected = Vec::new();
    for ideal in all_t_determined(&t) {
        for k in DegreeBox::up_to(&t).iter() {
            cases += 1;
            literal.extend(stretch_agrees(&ideal, &ideal, &t, &r, &k));
            corrected.extend(stretch_agrees(
                &truncated(&ideal, &t, &r),
                &ideal,
                &t,
                &r,
                &k,
            ));
        }
    }
    let note = format!(
        "with S/I itself {} of {cases} cases disagree; with S/I truncated at t, {} disagree",
        literal.len(),
        corrected.len()
    );
    match literal.first() {
        None => Ok(format!("{cases} cases")),
        Some(first) => Err(format!("{note}; first: {first}")),
    }
}

fn vanishing() -> Outcome {
    let mut checked = 0;
    let mut families: Vec<(Multidegree, Vec<MonomialIdeal>)> =
        families().into_iter().map(|f| (f.t, f.ideals)).collect();
    for tt in 0..=4 {
        families.push((md([tt]), all_t_determined(&md([tt]))));
    }
    for (t, ideals) in &families {
        let n = t.len() as i32;
        for ideal in ideals {
            for k in DegreeBox::new(Multidegree::ones(t.len()), t.add_scalar(1)).iter() {
                let table = oracle(ideal, t, &k, &gf2());
                let degrees = table.degrees();
                ensure(degrees.iter().all(|&i| (0..2 * n).contains(&i)), || {
                    format!("I={ideal} t={t} k={k}: nonzero degrees {degrees:?}")
                })?;
                if ideal.is_unit() {
                    continue;
                }
                let h0 = vanishing_h0(ideal, t, &k).unwrap();
                let top = vanishing_top(ideal, t, &k).unwrap();
                ensure(h0 == (table.total(0) == 0), || {
                    format!("H^0 I={ideal} t={t} k={k}: predicted {h0}")
                })?;
                ensure(top == (table.total(2 * n - 1) == 0), || {
                    format!("top I={ideal} t={t} k={k}: predicted {top}")
                })?;
                for w in nonvanishing_witness(ideal, t, &k).unwrap() {
                    ensure(table.total(w.i) > 0, || {
                        format!("I={ideal} t={t} k={k}: {w:?}")
                    })?;
                }
                checked += 1;
            }
        }
    }
    // The one-variable exception: S itself has nonzero top cohomology.
    let t = md([2]);
    ensure(
        !vanishing_top(&MonomialIdeal::zero(1), &t, &md([1])).unwrap(),
        || "exception".into(),
    )?;
    ensure(
        oracle(&MonomialIdeal::zero(1), &t, &md([1]), &gf2()).total(1) > 0,
        || "exception oracle".into(),
    )?;

    let mut two_var = 0;
    for t in DegreeBox::up_to(&md([2, 2])).iter() {
        for ideal in all_t_determined(&t).iter().filter(|i| !i.is_unit()) {
            for k in DegreeBox::new(Multidegree::ones(2), t.add_scalar(1)).iter() {
                let table = oracle(ideal, &t, &k, &gf2());
                let report = two_var_report(ideal, &t, &k).unwrap();
                let vanishes = [
                    report.h0_vanishes,
                    report.h1_vanishes,
                    report.h2_vanishes,
                    report.h3_vanishes,
                ];
                for (i, v) in vanishes.into_iter().enumerate() {
                    ensure(v == (table.total(i as i32) == 0), || {
                        format!("H^{i} I={ideal} t={t} k={k}: predicted vanishing {v}")
                    })?;
                }
                ensure(
                    report.single_nonvanishing == (table.degrees().len() <= 1),
                    || {
                        format!(
                            "single group I={ideal} t={t} k={k}: {report:?} vs {:?}",
                            table.degrees()
                        )
                    },
                )?;
                two_var += 1;
            }
        }
    }
    Ok(format!(
        "{checked} peak/indent cases, {two_var} two-variable cases"
    ))
}

fn duality() -> Outcome {
    let mut checked = 0;
    for fam in families() {
        let t = &fam.t;
        for ideal in &fam.ideals {
            let dual = ideal.alexander_dual(t).unwrap();
            ensure(&dual.alexander_dual(t).unwrap() == ideal, || {
                format!("involution fails for {ideal}")
            })?;
            let module_dual = alexander_dual_module(&quotient_module(ideal, t).unwrap());
            for a in DegreeBox::up_to(t).iter() {
                // (I)_{t−a} against (S/I^[t])_a, and A_t(S/I)_a = (S/I)_{t−a}^*.
                let in_ideal = usize::from(ideal.contains(&t.sub(&a)));
                let in_quotient = usize::from(!dual.contains(&a));
                ensure(in_ideal == in_quotient, || format!("I={ideal} a={a}"))?;
                ensure(
                    module_dual.dim(&a) == usize::from(!ideal.contains(&t.sub(&a))),
                    || format!("module dual of S/{ideal} at {a}"),
                )?;
                checked += 1;
            }
        }
    }
    for tt in 0..=4 {
        let t = md([tt]);
        for a in 0..=tt {
            for b in a..=tt {
                let m = interval_module(&t, &md([a]), &md([b])).unwrap();
                let expected = interval_module(&t, &md([tt - b]), &md([tt - a])).unwrap();
                ensure(alexander_dual_module(&m) == expected, || {
                    format!("K{{{a},{b}}} with t={tt}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} checks"))
}

fn linearity() -> Outcome {
    let mut checked = 0;
    let mut agree_linear = 0;
    for t in DegreeBox::new(md([1, 1]), md([2, 2])).iter() {
        for ideal in all_t_determined(&t) {
            for k in DegreeBox::new(md([1, 1]), t.clone()).iter() {
                // 𝒩^{−k−1} is T^{2n}𝒩^{t+1−k}; the shift moves p uniformly.
                let c = oracle_complex(&ideal, &t, &t.add_scalar(1).sub(&k)).shift(4);
                let betti = oracle_betti(&c, &gf2());
                let linear = is_c_linear(&betti, &t.sub(&k), 2);
                let predicted = two_var_linearity_predicted(&ideal, &t, &k).unwrap();
                ensure(linear == predicted, || {
                    format!("I={ideal} t={t} k={k}: predicted {predicted}, oracle {linear}")
                })?;
                checked += 1;
                agree_linear += usize::from(linear);
            }
        }
    }
    let x2y2 = MonomialIdeal::from_exponents(&[[2, 2]]);
    let t = md([2, 2]);
    let betti = oracle_betti(&oracle_complex(&x2y2, &t, &t).shift(4), &gf2());
    ensure(is_c_linear(&betti, &md([1, 1]), 2), || {
        "(x^2y^2) example".into()
    })?;

    // Cohen–Macaulay ⇔ one local cohomology group ⇔ A_t(S/I) support-linear.
    let spot = [
        (MonomialIdeal::from_exponents(&[[1, 1]]), md([1, 1]), true),
        (
            MonomialIdeal::from_exponents(&[[1, 1, 0], [1, 0, 1], [0, 1, 1]]),
            md([1, 1, 1]),
            true,
        ),
        (
            MonomialIdeal::from_exponents(&[[1, 1, 1]]),
            md([1, 1, 1]),
            true,
        ),
        (
            MonomialIdeal::from_exponents(&[[1, 0, 1], [0, 1, 1]]),
            md([1, 1, 1]),
            false,
        ),
        (
            MonomialIdeal::from_exponents(&[[2, 0], [1, 1]]),
            md([2, 1]),
            false,
        ),
    ];
    for (ideal, t, cm) in &spot {
        let single = oracle(ideal, t, &Multidegree::ones(t.len()), &gf2())
            .degrees()
            .len()
            == 1;
        let m = ComplexOfReps::concentrated(
            alexander_dual_module(&quotient_module(ideal, t).unwrap()),
            0,
        );
        let support = is_support_linear(&oracle_betti(&m, &gf2()));
        ensure(single == *cm && support == *cm, || {
            format!("S/{ideal}: CM {cm}, one group {single}, support-linear {support}")
        })?;
    }
    let mut miller = 0;
    for fam in families() {
        for ideal in &fam.ideals {
            let t = &fam.t;
            let single = oracle(ideal, t, &Multidegree::ones(t.len()), &gf2())
                .degrees()
                .len()
                <= 1;
            let m = ComplexOfReps::concentrated(
                alexander_dual_module(&quotient_module(ideal, t).unwrap()),
                0,
            );
            let support = is_support_linear(&oracle_betti(&m, &gf2()));
            let formula = is_support_linear(&dual_betti_table_formula(ideal, t, &gf2()).unwrap());
            ensure(single == support && support == formula, || {
                format!(
                    "S/{ideal}: one group {single}, support-linear {support}, formula {formula}"
                )
            })?;
            miller += 1;
        }
    }
    Ok(format!(
        "{checked} classification cases ({agree_linear} linear), 5 spot checks, {miller} ideals both ways"
    ))
}

fn soundness() -> Outcome {
    let mut steps = 0;
    for fam in families() {
        for ideal in &fam.ideals {
            for k in DegreeBox::up_to(&fam.kmax).iter() {
                let Some(j) = (0..k.len()).find(|&j| k.get(j) > 0) else {
                    continue;
                };
                let prev = oracle_complex(ideal, &fam.t, &k.shifted(j, -1));
                let next = prev.nakayama_step(j).map_err(|e| e.to_string())?;
                next.check().map_err(|e| format!("I={ideal} k={k}: {e}"))?;
                next.koszul_tensor()
                    .and_then(|c| c.check())
                    .map_err(|e| format!("Koszul I={ideal} k={k}: {e}"))?;
                ensure(next == oracle_complex(ideal, &fam.t, &k), || {
                    format!("step order I={ideal} k={k}")
                })?;
                for r in DegreeBox::up_to(&fam.t).iter() {
                    let below = r.shifted(j, -1);
                    let before = if below.is_nonnegative() {
                        prev.slice(&below).euler_characteristic()
                    } else {
                        0
                    };
                    let expect =
                        before - prev.slice(&r.with(j, fam.t.get(j))).euler_characteristic();
                    let got = next.slice(&r).euler_characteristic();
                    ensure(got == expect, || {
                        format!("Euler I={ideal} k={k} r={r}: {got} vs {expect}")
                    })?;
                }
                steps += 1;
            }
        }
    }
    let mut intervals = 0;
    for tt in 0..=4 {
        let t = md([tt]);
        for a in 0..=tt {
            for b in a..=tt {
                let m = interval_module(&t, &md([a]), &md([b])).unwrap();
                let table = cohomology_table(
                    &ComplexOfReps::concentrated(m, 0).nakayama_step(0).unwrap(),
                    &gf2(),
                    false,
                );
                let (lo, hi, i) = if b < tt { (a + 1, b + 1, 0) } else { (0, a, 1) };
                let mut expected = CohomologyTable::empty(&t);
                for r in lo..=hi {
                    expected.set(i, md([r]), 1);
                }
                ensure(table == expected, || {
                    format!("interval {{{a},{b}}} with t={tt}")
                })?;
                intervals += 1;
            }
        }
    }
    Ok(format!("{steps} checked steps, {intervals} interval rules"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "cohomology tables", cohomology_tables),
        (2, "Betti tables", betti_tables),
        (3, "multiplication ranks", multiplication_ranks),
        (
            4,
            "local cohomology and window extension",
            local_cohomology_window,
        ),
        (5, "periodicity", periodicity),
        (6, "independence of t", independence_of_t),
        (7, "vanishing", vanishing),
        (8, "Alexander duality", duality),
        (9, "linearity", linearity),
        (10, "internal soundness", soundness),
    ];
    let mut failed = 0;
    for (number, name, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {number} ({name}): {detail} [{secs:.1}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {number} ({name}): {detail} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
