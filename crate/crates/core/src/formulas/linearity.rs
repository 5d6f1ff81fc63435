//! Linearity of Betti tables. Tables use the cohomological index `i`; the
//! homological index is `p = −i`.

use crate::degree::{support_size, Multidegree};
use crate::error::{precondition, Result};
use crate::ideal::MonomialIdeal;
use crate::modrep::CohomologyTable;

fn count_at_least(b: &Multidegree, c: &Multidegree) -> i32 {
    (0..b.len()).filter(|&j| b.get(j) >= c.get(j)).count() as i32
}

fn fits(p: i32, count: i32, p0: i32, n: i32) -> bool {
    let expected = (p - p0).clamp(0, n);
    count == expected
}

/// Whether some `p₀` makes every nonzero `B_p` at degree `b` satisfy
/// `|{j : bⱼ ≥ cⱼ}| = clamp(p − p₀, 0, n)`.
pub fn is_c_linear(betti: &CohomologyTable, c: &Multidegree, n: usize) -> bool {
    let n = n as i32;
    let entries: Vec<(i32, i32)> = betti
        .dims
        .keys()
        .map(|(i, b)| (-i, count_at_least(b, c)))
        .collect();
    let Some(min_p) = entries.iter().map(|e| e.0).min() else {
        return true;
    };
    let max_p = entries.iter().map(|e| e.0).max().unwrap();
    (min_p - n..=max_p).any(|p0| entries.iter().all(|&(p, count)| fits(p, count, p0, n)))
}

/// Whether all minimal generators have support of one size `d` with
/// `d ≥ |supp b| − p` for every nonzero `β_{p,b}`.
pub fn is_support_linear(betti: &CohomologyTable) -> bool {
    let mut gens = betti
        .dims
        .keys()
        .filter(|(i, _)| *i == 0)
        .map(|(_, b)| support_size(b) as i32);
    let bound = betti
        .dims
        .keys()
        .map(|(i, b)| support_size(b) as i32 + i)
        .max();
    match gens.next() {
        None => true,
        Some(d) => gens.all(|e| e == d) && bound.is_none_or(|m| d >= m),
    }
}

/// Betti table of an ideal `J` from that of `S/J`: drop `β₀ = 1` at `0` and
/// move everything else up one homological step. `J = S` has `β₀` at `0`.
pub fn ideal_betti_from_quotient(quotient: &CohomologyTable) -> CohomologyTable {
    let t = quotient.t.clone();
    let mut out = CohomologyTable::empty(&t);
    if quotient.is_empty() {
        out.set(0, Multidegree::zero(t.len()), 1);
        return out;
    }
    for ((i, b), &d) in &quotient.dims {
        if *i < 0 {
            out.set(i + 1, b.clone(), d);
        }
    }
    out
}

/// The predicted answer to whether `𝒩^{−k−1}_t(S/I)` is `(t−k)`-linear in
/// two variables, for `1 ≤ k ≤ t`: `I` is `k`-determined, or `I = (xᵃyᵇ)`
/// with `(a,b) ≥ k`, or `I` contains powers of both variables and every
/// nonzero exponent of `xⱼ` lies in `[kⱼ, tⱼ]`.
pub fn two_var_linearity_predicted(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
) -> Result<bool> {
    if t.len() != 2 || k.len() != 2 {
        return precondition("the two-variable classification needs n = 2");
    }
    if !Multidegree::ones(2).leq(k) || !k.leq(t) {
        return precondition(format!("need 1 ≤ k ≤ t, got k = {k}, t = {t}"));
    }
    ideal.require_t_determined(t)?;
    let gens = ideal.gens();
    if ideal.is_t_determined(k) {
        return Ok(true);
    }
    if gens.len() == 1 && gens[0].geq(k) {
        return Ok(true);
    }
    let pure = |j: usize| gens.iter().any(|g| g.get(j) > 0 && g.get(1 - j) == 0);
    let in_range = gens
        .iter()
        .all(|g| (0..2).all(|j| g.get(j) == 0 || (k.get(j) <= g.get(j) && g.get(j) <= t.get(j))));
    Ok(pure(0) && pure(1) && in_range)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md<const N: usize>(c: [i32; N]) -> Multidegree {
        Multidegree::from(c)
    }

    #[test]
    fn empty_and_single_entries() {
        let t = md([1, 1]);
        let empty = CohomologyTable::empty(&t);
        assert!(is_c_linear(&empty, &md([1, 1]), 2));
        assert!(is_support_linear(&empty));
        let mut one = CohomologyTable::empty(&t);
        one.set(-3, md([0, 0]), 1);
        assert!(is_c_linear(&one, &md([1, 1]), 2));
        let mut jump = CohomologyTable::empty(&t);
        jump.set(0, md([0, 0]), 1);
        jump.set(-1, md([0, 0]), 1);
        jump.set(-2, md([1, 1]), 1);
        assert!(!is_c_linear(&jump, &md([1, 1]), 2));
    }

    #[test]
    fn support_linear_examples() {
        let t = md([1, 1]);
        let mut b = CohomologyTable::empty(&t);
        b.set(0, md([0, 0]), 1);
        assert!(is_support_linear(&b));
        b.set(-1, md([1, 1]), 1);
        assert!(!is_support_linear(&b));
        let mut c = CohomologyTable::empty(&t);
        c.set(0, md([1, 0]), 1);
        c.set(0, md([0, 1]), 1);
        c.set(-1, md([1, 1]), 1);
        assert!(is_support_linear(&c));
    }

    #[test]
    fn ideal_from_quotient() {
        let t = md([1, 1]);
        let mut q = CohomologyTable::empty(&t);
        q.set(0, md([0, 0]), 1);
        q.set(-1, md([1, 0]), 1);
        q.set(-1, md([0, 1]), 1);
        q.set(-2, md([1, 1]), 1);
        let mut j = CohomologyTable::empty(&t);
        j.set(0, md([1, 0]), 1);
        j.set(0, md([0, 1]), 1);
        j.set(-1, md([1, 1]), 1);
        assert_eq!(ideal_betti_from_quotient(&q), j);
        let mut unit = CohomologyTable::empty(&t);
        unit.set(0, md([0, 0]), 1);
        assert_eq!(ideal_betti_from_quotient(&CohomologyTable::empty(&t)), unit);
    }

    #[test]
    fn prediction_cases() {
        let t = md([2, 2]);
        let k = md([1, 1]);
        let x2y2 = MonomialIdeal::from_exponents(&[[2, 2]]);
        assert!(two_var_linearity_predicted(&x2y2, &t, &k).unwrap());
        let pure = MonomialIdeal::from_exponents(&[[2, 0], [1, 1], [0, 2]]);
        assert!(two_var_linearity_predicted(&pure, &t, &k).unwrap());
        let mixed = MonomialIdeal::from_exponents(&[[2, 1], [1, 2]]);
        assert!(!two_var_linearity_predicted(&mixed, &t, &k).unwrap());
    }
}
