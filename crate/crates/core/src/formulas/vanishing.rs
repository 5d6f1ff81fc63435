//! Vanishing of the extreme cohomology groups in terms of peaks and
//! indents, and the complete picture in two variables.

use serde::Serialize;

use crate::degree::{support_size, DegreeBox, Multidegree};
use crate::error::{precondition, Result};
use crate::ideal::{MonomialIdeal, SupportProfile};

fn check_k(t: &Multidegree, k: &Multidegree) -> Result<()> {
    if k.len() != t.len() || !Multidegree::ones(t.len()).leq(k) || !k.leq(&t.add_scalar(1)) {
        return precondition(format!("need 1 ≤ k ≤ t + 1, got k = {k}, t = {t}"));
    }
    Ok(())
}

/// Whether `H⁰𝒩ᵏ_t(S/I) = 0`: no peak lies in `[0, t−k]`.
pub fn vanishing_h0(ideal: &MonomialIdeal, t: &Multidegree, k: &Multidegree) -> Result<bool> {
    check_k(t, k)?;
    let top = t.sub(k);
    Ok(!ideal.peaks(t)?.iter().any(|y| y.leq(&top)))
}

/// Whether `H^{2n−1}𝒩ᵏ_t(S/I) = 0`: no indent is `≥ t+2−k`, except for
/// `S` itself in one variable.
pub fn vanishing_top(ideal: &MonomialIdeal, t: &Multidegree, k: &Multidegree) -> Result<bool> {
    check_k(t, k)?;
    if ideal.n() == 1 && ideal.is_zero() {
        return Ok(false);
    }
    let bottom = t.add_scalar(2).sub(k);
    Ok(!ideal.indents(t)?.iter().any(|y| y.geq(&bottom)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Peak,
    Indent,
}

/// `Hⁱ𝒩ᵏ_t(S/I) ≠ 0` because of the peak or indent `y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub i: i32,
    pub reason: WitnessKind,
    pub y: Multidegree,
}

/// Every peak `y ≤ w` and indent `y ≥ w`, `w = t+1−k`, with the degree it
/// forces to be nonzero: `n−m` for a peak and `n−1+m` for an indent, `m`
/// counting the coordinates where `y` and `w` differ.
pub fn nonvanishing_witness(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
) -> Result<Vec<Witness>> {
    check_k(t, k)?;
    let n = t.len() as i32;
    let w = t.add_scalar(1).sub(k);
    let mut out = Vec::new();
    for y in ideal.peaks(t)? {
        if y.leq(&w) {
            let m = support_size(&w.sub(&y)) as i32;
            out.push(Witness {
                i: n - m,
                reason: WitnessKind::Peak,
                y,
            });
        }
    }
    for y in ideal.indents(t)? {
        if y.geq(&w) {
            let m = support_size(&y.sub(&w)) as i32;
            out.push(Witness {
                i: n - 1 + m,
                reason: WitnessKind::Indent,
                y,
            });
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TwoVarCase {
    /// The support lies in `[0, t−k]`.
    A,
    /// The support inside `[t+1−k, t]` is a nonempty box.
    B,
    /// The support inside `[0, t+1−k]` is the complement of a nonempty box.
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoVarReport {
    pub h0_vanishes: bool,
    pub h1_vanishes: bool,
    pub h2_vanishes: bool,
    pub h3_vanishes: bool,
    /// Whether at most one `Hⁱ` is nonzero, and which case says so.
    pub single_nonvanishing: bool,
    pub case: Option<TwoVarCase>,
}

/// A finite set of degrees is a box when it equals `[min, max]`.
fn is_box(points: &[Multidegree]) -> bool {
    let Some(first) = points.first() else {
        return true;
    };
    let lo = points
        .iter()
        .fold(first.clone(), |acc, p| Multidegree::min(&acc, p));
    let hi = points
        .iter()
        .fold(first.clone(), |acc, p| Multidegree::max(&acc, p));
    DegreeBox::new(lo, hi).volume() == points.len()
}

fn support_in(
    profile: &SupportProfile,
    lo: &Multidegree,
    hi: &Multidegree,
    inside: bool,
) -> Vec<Multidegree> {
    DegreeBox::new(lo.clone(), hi.clone())
        .iter()
        .filter(|a| profile.nonzero(a) == inside)
        .collect()
}

/// The four vanishing criteria for `n = 2` and which of the three cases of
/// the single-group criterion applies.
pub fn two_var_report(
    ideal: &MonomialIdeal,
    t: &Multidegree,
    k: &Multidegree,
) -> Result<TwoVarReport> {
    if t.len() != 2 {
        return precondition("the two-variable report needs n = 2");
    }
    check_k(t, k)?;
    let profile = ideal.support_profile(t)?;
    let zero = Multidegree::zero(2);
    let w = t.add_scalar(1).sub(k);
    let top = t.sub(k);
    let support = profile.support();
    let within_top =
        top.is_nonnegative() && support.iter().all(|a| a.leq(&top)) || support.is_empty();

    let missing_below = support_in(&profile, &zero, &w, false);
    let present_above = support_in(&profile, &w, t, true);
    let nonzero_at_w = profile.nonzero(&w);

    let h0_vanishes = is_box(&missing_below);
    let h3_vanishes = is_box(&present_above);
    let h2_vanishes = !nonzero_at_w;
    let h1_vanishes = nonzero_at_w || within_top;

    let case = if within_top {
        Some(TwoVarCase::A)
    } else if !present_above.is_empty() && is_box(&present_above) {
        Some(TwoVarCase::B)
    } else if !missing_below.is_empty() && is_box(&missing_below) {
        Some(TwoVarCase::C)
    } else {
        None
    };
    Ok(TwoVarReport {
        h0_vanishes,
        h1_vanishes,
        h2_vanishes,
        h3_vanishes,
        single_nonvanishing: case.is_some(),
        case,
    })
}
