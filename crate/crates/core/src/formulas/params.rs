//! The `(γ, u, v)` calculus and the interval bookkeeping behind it.

use serde::Serialize;

use crate::degree::Multidegree;
use crate::error::{precondition, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GuvTriple {
    pub gamma: i32,
    pub u: Multidegree,
    pub v: Multidegree,
}

fn check_lengths(k: &Multidegree, t: &Multidegree, r: &Multidegree) -> Result<()> {
    if k.len() != t.len() || r.len() != t.len() {
        return precondition("k, t and r must have the same length");
    }
    if !k.is_nonnegative() || !t.is_nonnegative() {
        return precondition("k and t must be nonnegative");
    }
    if !r.is_nonnegative() || !r.leq(t) {
        return precondition(format!("r = {r} must lie in [0, t = {t}]"));
    }
    Ok(())
}

/// Per coordinate: `(0, r−k, t−k)` when `k ≤ r`, else `(1, t−k+1, t−k+r+1)`.
/// Requires `k ≤ t + 𝟙`.
pub fn guv(k: &Multidegree, t: &Multidegree, r: &Multidegree) -> Result<GuvTriple> {
    check_lengths(k, t, r)?;
    if !k.leq(&t.add_scalar(1)) {
        return precondition(format!("k = {k} exceeds t + 1; reduce it first"));
    }
    let mut gamma = 0;
    let mut u = Vec::with_capacity(t.len());
    let mut v = Vec::with_capacity(t.len());
    for j in 0..t.len() {
        let (kj, tj, rj) = (k.get(j), t.get(j), r.get(j));
        if kj <= rj {
            u.push(rj - kj);
            v.push(tj - kj);
        } else {
            gamma += 1;
            u.push(tj - kj + 1);
            v.push(tj - kj + rj + 1);
        }
    }
    Ok(GuvTriple {
        gamma,
        u: u.into(),
        v: v.into(),
    })
}

/// Splits `k` into `k mod (t + 2)` and the number of whole periods; each
/// period shifts cohomology by two degrees.
pub fn reduce_k(k: &Multidegree, t: &Multidegree) -> (Multidegree, i32) {
    let mut periods = 0;
    let reduced = (0..t.len())
        .map(|j| {
            let p = t.get(j) + 2;
            periods += k.get(j) / p;
            k.get(j) % p
        })
        .collect::<Vec<_>>();
    (reduced.into(), periods)
}

/// `(γ, u, v)` for any `k ∈ ℕⁿ`.
pub fn thecalc1_params(k: &Multidegree, t: &Multidegree, r: &Multidegree) -> Result<GuvTriple> {
    check_lengths(k, t, r)?;
    let (k0, periods) = reduce_k(k, t);
    let mut g = guv(&k0, t, r)?;
    g.gamma += 2 * periods;
    Ok(g)
}

/// The single nonzero cohomology of `𝒩ᵏ_t(K_t{a,b})`: the interval module
/// `K_t{lo,hi}` in degree `gamma`, or nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalSummary {
    pub gamma: i32,
    pub interval: Option<(Multidegree, Multidegree)>,
}

/// Iterates `(a,b) ↦ (a+1,b+1)` when `b < t` and `(a,t) ↦ (0,a)` with a
/// degree shift, `kⱼ` times per coordinate.
pub fn interval_nakayama_summary(
    t: &Multidegree,
    k: &Multidegree,
    a: &Multidegree,
    b: &Multidegree,
) -> IntervalSummary {
    let n = t.len();
    assert!(
        k.len() == n && a.len() == n && b.len() == n,
        "length mismatch"
    );
    if !a.leq(b) {
        return IntervalSummary {
            gamma: 0,
            interval: None,
        };
    }
    let mut gamma = 0;
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for j in 0..n {
        let (mut x, mut y, tj) = (a.get(j), b.get(j), t.get(j));
        for _ in 0..k.get(j) {
            if y < tj {
                x += 1;
                y += 1;
            } else {
                (x, y) = (0, x);
                gamma += 1;
            }
        }
        lo.push(x);
        hi.push(y);
    }
    IntervalSummary {
        gamma,
        interval: Some((lo.into(), hi.into())),
    }
}

/// `(γ, a, b)` with `Bⁱ(𝒩ᵏ_t(S/I))_r ≅ H̃^{i−γ−1}(Δᵇₐ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiParams {
    pub gamma: i32,
    pub a: Multidegree,
    pub b: Multidegree,
}

/// The closed form for [`BettiParams`], after reducing `k`.
pub fn betti_params(k: &Multidegree, t: &Multidegree, r: &Multidegree) -> Result<BettiParams> {
    check_lengths(k, t, r)?;
    let (k0, periods) = reduce_k(k, t);
    let mut gamma = 2 * periods;
    let mut a = Vec::with_capacity(t.len());
    let mut b = Vec::with_capacity(t.len());
    for j in 0..t.len() {
        let (kj, tj, rj) = (k0.get(j), t.get(j), r.get(j));
        if kj < rj {
            gamma -= 1;
            a.push(rj - kj - 1);
            b.push(rj - kj - 1);
        } else if kj == rj {
            a.push(0);
            b.push(tj);
        } else {
            gamma += 1;
            a.push(tj - kj + rj + 1);
            b.push(tj - kj + rj + 1);
        }
    }
    Ok(BettiParams {
        gamma,
        a: a.into(),
        b: b.into(),
    })
}

/// The same parameters read off the interval recursion applied to
/// `K_t{t−r, t−r}` with `k + 𝟙` steps.
pub fn betti_params_recursive(
    k: &Multidegree,
    t: &Multidegree,
    r: &Multidegree,
) -> Result<BettiParams> {
    check_lengths(k, t, r)?;
    let n = t.len() as i32;
    let top = t.sub(r);
    let s = interval_nakayama_summary(t, &k.add_scalar(1), &top, &top);
    let (lo, hi) = s.interval.expect("a point interval is nonzero");
    Ok(BettiParams {
        gamma: s.gamma - n,
        a: t.sub(&hi),
        b: t.sub(&lo),
    })
}
