//! Cohomology and Betti tables read off the `Δᵇₐ` complexes, with no
//! complex of modules in sight.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::degree::{DegreeBox, Multidegree};
use crate::error::{precondition, Result};
use crate::ideal::{MonomialIdeal, SupportProfile};
use crate::linalg::Field;
use crate::modrep::CohomologyTable;
use crate::simplicial::{delta_complex, mv_connecting, reduced_cohomology_dims, restriction_map};

use super::params::{betti_params, guv, reduce_k, thecalc1_params};

fn check_inputs(ideal: &MonomialIdeal, t: &Multidegree, k: &Multidegree) -> Result<SupportProfile> {
    if k.len() != t.len() || !k.is_nonnegative() {
        return precondition(format!("k = {k} must be a degree in ℕ^{}", t.len()));
    }
    ideal.support_profile(t)
}

fn table_from_rows(
    t: &Multidegree,
    rows: Vec<(Multidegree, BTreeMap<i32, usize>)>,
) -> CohomologyTable {
    let mut table = CohomologyTable::empty(t);
    for (r, dims) in rows {
        for (i, d) in dims {
            table.set(i, r.clone(), d);
        }
    }
    table
}

/// `Hⁱ𝒩ᵏ_t(S/I)_r = H̃^{i−γ−1}(Δᵛᵤ)` for every `r ∈ [0,t]`.
pub fn cohomology_table_formula<F: Field>(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
    field: &F,
) -> Result<CohomologyTable> {
    let profile = check_inputs(ideal, t, k)?;
    let points: Vec<Multidegree> = DegreeBox::up_to(t).iter().collect();
    let rows = points
        .par_iter()
        .map(|r| {
            let g = thecalc1_params(k, t, r)?;
            let delta = delta_complex(&profile, &g.u, &g.v)?;
            let dims = reduced_cohomology_dims(field, &delta)
                .into_iter()
                .map(|(d, dim)| (d + g.gamma + 1, dim))
                .collect();
            Ok((r.clone(), dims))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(table_from_rows(t, rows))
}

/// `Bⁱ(𝒩ᵏ_t(S/I))_r = H̃^{i−γ−1}(Δᵇₐ)` for every `r ∈ [0,t]`. For `k = 0`
/// the classical `β_p` sits at `i = −p`.
pub fn betti_table_formula<F: Field>(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
    field: &F,
) -> Result<CohomologyTable> {
    let profile = check_inputs(ideal, t, k)?;
    let points: Vec<Multidegree> = DegreeBox::up_to(t).iter().collect();
    let rows = points
        .par_iter()
        .map(|r| {
            let p = betti_params(k, t, r)?;
            let delta = delta_complex(&profile, &p.a, &p.b)?;
            let dims = reduced_cohomology_dims(field, &delta)
                .into_iter()
                .map(|(d, dim)| (d + p.gamma + 1, dim))
                .collect();
            Ok((r.clone(), dims))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(table_from_rows(t, rows))
}

/// Betti table of `A_t(S/I)`, which is the ideal `I^[t]` as a module.
pub fn dual_betti_table_formula<F: Field>(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    field: &F,
) -> Result<CohomologyTable> {
    let dual = ideal.alexander_dual(t)?;
    let quotient = betti_table_formula(&dual, t, &Multidegree::zero(t.len()), field)?;
    Ok(super::linearity::ideal_betti_from_quotient(&quotient))
}

/// `dim Hⁱ_𝔪(S/I)_z` for any `z ∈ ℤⁿ`.
pub fn local_cohomology<F: Field>(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    i: i32,
    z: &Multidegree,
    field: &F,
) -> Result<usize> {
    let profile = ideal.support_profile(t)?;
    if z.len() != t.len() {
        return precondition(format!("z = {z} must have length {}", t.len()));
    }
    if (0..t.len()).any(|j| z.get(j) >= t.get(j)) {
        return Ok(0);
    }
    let r = Multidegree::max(&z.add_scalar(1), &Multidegree::zero(t.len()));
    let g = guv(&Multidegree::ones(t.len()), t, &r)?;
    let delta = delta_complex(&profile, &g.u, &g.v)?;
    Ok(reduced_cohomology_dims(field, &delta)
        .get(&(i - g.gamma - 1))
        .copied()
        .unwrap_or(0))
}

/// Ranks of `xⱼ : Hⁱ𝒩ᵏ_t(S/I)_{r−εⱼ} → Hⁱ𝒩ᵏ_t(S/I)_r` for every `i`, as a
/// restriction map of `Δ` complexes when `kⱼ ≠ rⱼ` and as a Mayer–Vietoris
/// connecting map when `kⱼ = rⱼ` (after reducing `k`). Zero ranks are omitted.
pub fn multiplication_ranks_formula<F: Field>(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
    r: &Multidegree,
    j: usize,
    field: &F,
) -> Result<BTreeMap<i32, usize>> {
    let profile = check_inputs(ideal, t, k)?;
    if j >= t.len() {
        return precondition(format!("direction {j} out of range for n = {}", t.len()));
    }
    if r.len() != t.len() || r.get(j) < 1 || !r.is_nonnegative() || !r.leq(t) {
        return precondition(format!("need ε_j ≤ r ≤ t, got r = {r}, j = {j}"));
    }
    let (k0, periods) = reduce_k(k, t);
    let below = r.shifted(j, -1);
    let here = guv(&k0, t, r)?;
    let there = guv(&k0, t, &below)?;
    let small = delta_complex(&profile, &here.u, &here.v)?;
    let (map, offset) = if k0.get(j) != r.get(j) {
        debug_assert_eq!(here.gamma, there.gamma);
        let big = delta_complex(&profile, &there.u, &there.v)?;
        (restriction_map(field, &small, &big)?, here.gamma + 1)
    } else {
        let alpha = t.get(j) - r.get(j) + 1;
        let beta = r.get(j);
        (
            mv_connecting(field, &profile, &here.u, &here.v, alpha, beta, j)?,
            here.gamma + 2,
        )
    };
    Ok(map
        .ranks(field)
        .into_iter()
        .filter(|&(_, rank)| rank > 0)
        .map(|(d, rank)| (d + offset + 2 * periods, rank))
        .collect())
}

/// A single rank from [`multiplication_ranks_formula`].
pub fn multiplication_rank_formula<F: Field>(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
    i: i32,
    r: &Multidegree,
    j: usize,
    field: &F,
) -> Result<usize> {
    Ok(multiplication_ranks_formula(ideal, t, k, r, j, field)?
        .get(&i)
        .copied()
        .unwrap_or(0))
}

/// [`cohomology_table_formula`] together with every multiplication rank.
pub fn cohomology_table_formula_with_mult<F: Field>(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
    field: &F,
) -> Result<CohomologyTable> {
    let mut table = cohomology_table_formula(ideal, t, k, field)?;
    let mut jobs: Vec<(Multidegree, usize)> = Vec::new();
    for r in DegreeBox::up_to(t).iter() {
        for j in (0..t.len()).filter(|&j| r.get(j) > 0) {
            jobs.push((r.clone(), j));
        }
    }
    let ranks = jobs
        .par_iter()
        .map(|(r, j)| {
            Ok((
                r.clone(),
                *j,
                multiplication_ranks_formula(ideal, t, k, r, *j, field)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut mult = BTreeMap::new();
    for (r, j, rs) in ranks {
        for (i, rank) in rs {
            mult.insert((i, r.clone(), j), rank);
        }
    }
    table.mult = Some(mult);
    Ok(table)
}
