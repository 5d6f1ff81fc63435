//! Multidegrees, boxes of multidegrees and the reindexing maps used to move
//! between boxes.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A point of `ℤⁿ`. Most operations expect the `ℕⁿ` part and say so.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(Vec<i32>);

impl Multidegree {
    pub fn new(coords: Vec<i32>) -> Self {
        Multidegree(coords)
    }

    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        Multidegree(vec![1; n])
    }

    /// The unit vector `εⱼ` (0-based `j`).
    pub fn unit(n: usize, j: usize) -> Self {
        let mut c = vec![0; n];
        c[j] = 1;
        Multidegree(c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, j: usize) -> i32 {
        self.0[j]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Componentwise partial order.
    ///
    /// Panics when the lengths differ; comparing degrees from different
    /// ambient rings is a programming error.
    pub fn leq(&self, other: &Multidegree) -> bool {
        assert_eq!(self.len(), other.len(), "multidegree length mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn geq(&self, other: &Multidegree) -> bool {
        other.leq(self)
    }

    /// `self < other` in the product order (≤ and different).
    pub fn lt(&self, other: &Multidegree) -> bool {
        self.leq(other) && self != other
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.len(), other.len(), "multidegree length mismatch");
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.len(), other.len(), "multidegree length mismatch");
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled_by(&self, s: i32) -> Multidegree {
        Multidegree(self.0.iter().map(|a| a * s).collect())
    }

    pub fn add_scalar(&self, s: i32) -> Multidegree {
        Multidegree(self.0.iter().map(|a| a + s).collect())
    }

    /// Returns a copy with coordinate `j` shifted by `delta`.
    pub fn shifted(&self, j: usize, delta: i32) -> Multidegree {
        let mut c = self.0.clone();
        c[j] += delta;
        Multidegree(c)
    }

    /// Returns a copy with coordinate `j` replaced by `value`.
    pub fn with(&self, j: usize, value: i32) -> Multidegree {
        let mut c = self.0.clone();
        c[j] = value;
        Multidegree(c)
    }

    pub fn max(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn min(&self, other: &Multidegree) -> Multidegree {
        Multidegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn sum(&self) -> i32 {
        self.0.iter().sum()
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i32>> for Multidegree {
    fn from(v: Vec<i32>) -> Self {
        Multidegree(v)
    }
}

impl<const N: usize> From<[i32; N]> for Multidegree {
    fn from(v: [i32; N]) -> Self {
        Multidegree(v.to_vec())
    }
}

/// `a ≤ b` componentwise.
pub fn leq(a: &Multidegree, b: &Multidegree) -> bool {
    a.leq(b)
}

/// The truncation map `p_t`: componentwise `min(aᵢ, tᵢ)` on `ℕⁿ`.
pub fn p_clamp(t: &Multidegree, a: &Multidegree) -> Multidegree {
    assert!(
        a.is_nonnegative(),
        "p_clamp expects a degree in ℕⁿ, got {a}"
    );
    a.min(t)
}

/// The order preserving map of `ℕ` that collapses `[k, k+r]` onto `k`.
pub fn q_map(k: i32, r: i32, x: i32) -> i32 {
    debug_assert!(k >= 0 && r >= 0 && x >= 0);
    if x <= k {
        x
    } else if x <= k + r {
        k
    } else {
        x - r
    }
}

/// Componentwise [`q_map`].
pub fn q_map_vec(k: &Multidegree, r: &Multidegree, x: &Multidegree) -> Multidegree {
    assert_eq!(k.len(), r.len());
    assert_eq!(k.len(), x.len());
    Multidegree(
        (0..k.len())
            .map(|j| q_map(k.get(j), r.get(j), x.get(j)))
            .collect(),
    )
}

/// Indices `i` (0-based) with `aᵢ > 0`.
pub fn support(a: &Multidegree) -> Vec<usize> {
    a.coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, _)| i)
        .collect()
}

/// Number of nonzero coordinates.
pub fn support_size(a: &Multidegree) -> usize {
    a.coords().iter().filter(|&&c| c != 0).count()
}

/// The set of multidegrees `x` with `lo ≤ x ≤ hi`, with a dense row-major
/// index (last coordinate fastest).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBox {
    lo: Multidegree,
    hi: Multidegree,
}

impl DegreeBox {
    pub fn new(lo: Multidegree, hi: Multidegree) -> Self {
        assert_eq!(lo.len(), hi.len(), "box corners of different length");
        DegreeBox { lo, hi }
    }

    /// The box `[0, t]`.
    pub fn up_to(t: &Multidegree) -> Self {
        DegreeBox::new(Multidegree::zero(t.len()), t.clone())
    }

    pub fn lo(&self) -> &Multidegree {
        &self.lo
    }

    pub fn hi(&self) -> &Multidegree {
        &self.hi
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn is_empty(&self) -> bool {
        (0..self.dim()).any(|j| self.lo.get(j) > self.hi.get(j))
    }

    pub fn contains(&self, x: &Multidegree) -> bool {
        self.lo.leq(x) && x.leq(&self.hi)
    }

    fn extent(&self, j: usize) -> usize {
        (self.hi.get(j) - self.lo.get(j) + 1).max(0) as usize
    }

    pub fn volume(&self) -> usize {
        (0..self.dim()).map(|j| self.extent(j)).product()
    }

    /// Dense index of `x`, or `None` outside the box.
    pub fn index(&self, x: &Multidegree) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        let mut idx = 0;
        for j in 0..self.dim() {
            idx = idx * self.extent(j) + (x.get(j) - self.lo.get(j)) as usize;
        }
        Some(idx)
    }

    pub fn point(&self, mut idx: usize) -> Multidegree {
        let mut c = vec![0; self.dim()];
        for j in (0..self.dim()).rev() {
            let e = self.extent(j);
            c[j] = self.lo.get(j) + (idx % e) as i32;
            idx /= e;
        }
        Multidegree(c)
    }

    /// All points in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Multidegree> + '_ {
        let vol = if self.is_empty() { 0 } else { self.volume() };
        (0..vol).map(move |i| self.point(i))
    }
}
