use crate::degree::{DegreeBox, Multidegree};
use crate::error::{precondition, Result};
use crate::ideal::MonomialIdeal;
use crate::linalg::Matrix;

/// A positively `t`-determined module stored on the box `[0,t]`: a vector
/// space per degree and the multiplication maps between neighbours. The
/// map `xⱼ` out of a degree with `aⱼ = tⱼ` is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    bx: DegreeBox,
    dims: Vec<usize>,
    // mult[j][idx(a)] is xⱼ : M_a → M_{a+εⱼ}; unused where aⱼ = tⱼ.
    mult: Vec<Vec<Matrix<i64>>>,
}

impl ModuleRep {
    /// Builds from a dimension table and a rule for the multiplication maps,
    /// checking shapes and commuting squares.
    pub fn new(
        t: &Multidegree,
        dim: impl Fn(&Multidegree) -> usize,
        mult: impl Fn(usize, &Multidegree) -> Matrix<i64>,
    ) -> Result<Self> {
        if !t.is_nonnegative() {
            return precondition(format!("t = {t} must be nonnegative"));
        }
        let bx = DegreeBox::up_to(t);
        let dims: Vec<usize> = bx.iter().map(|a| dim(&a)).collect();
        let mult = (0..t.len())
            .map(|j| {
                bx.iter()
                    .map(|a| {
                        if a.get(j) < t.get(j) {
                            mult(j, &a)
                        } else {
                            Matrix::zeros(0, 0)
                        }
                    })
                    .collect()
            })
            .collect();
        let m = ModuleRep { bx, dims, mult };
        m.check()?;
        Ok(m)
    }

    pub(crate) fn from_parts(bx: DegreeBox, dims: Vec<usize>, mult: Vec<Vec<Matrix<i64>>>) -> Self {
        ModuleRep { bx, dims, mult }
    }

    /// Shapes of the multiplication maps and commuting squares.
    pub fn check(&self) -> Result<()> {
        let t = self.t();
        for a in self.bx.iter() {
            for j in 0..self.n() {
                if a.get(j) >= t.get(j) {
                    continue;
                }
                let m = self.mult(j, &a);
                let up = a.shifted(j, 1);
                if m.rows() != self.dim(&up) || m.cols() != self.dim(&a) {
                    return precondition(format!("x_{j} at {a} has the wrong shape"));
                }
                for i in 0..j {
                    if a.get(i) >= t.get(i) {
                        continue;
                    }
                    let ji = self.mult(j, &a.shifted(i, 1)).mul(&self.mult(i, &a));
                    let ij = self.mult(i, &up).mul(&m);
                    if ji != ij {
                        return precondition(format!("x_{i} and x_{j} do not commute at {a}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn t(&self) -> &Multidegree {
        self.bx.hi()
    }

    pub fn n(&self) -> usize {
        self.bx.dim()
    }

    pub fn degree_box(&self) -> &DegreeBox {
        &self.bx
    }

    /// `dim M_a`; zero for degrees with a negative coordinate and read
    /// through `min(a, t)` above the box.
    pub fn dim(&self, a: &Multidegree) -> usize {
        if !a.is_nonnegative() {
            return 0;
        }
        self.dims[self.bx.index(&a.min(self.t())).expect("clamped into box")]
    }

    /// `xⱼ : M_a → M_{a+εⱼ}` for `a ∈ [0,t]`.
    pub fn mult(&self, j: usize, a: &Multidegree) -> Matrix<i64> {
        if a.get(j) >= self.t().get(j) {
            return Matrix::identity(self.dim(a));
        }
        self.mult[j][self.bx.index(a).expect("degree inside the box")].clone()
    }

    /// `x_j^e` starting at `a`, composed inside the box.
    pub fn mult_power(&self, j: usize, a: &Multidegree, e: i32) -> Matrix<i64> {
        let mut acc = Matrix::identity(self.dim(a));
        let mut cur = a.clone();
        for _ in 0..e {
            if cur.get(j) >= self.t().get(j) {
                break;
            }
            acc = self.mult(j, &cur).mul(&acc);
            cur = cur.shifted(j, 1);
        }
        acc
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn zero(t: &Multidegree) -> Self {
        ModuleRep::new(t, |_| 0, |_, _| Matrix::zeros(0, 0)).expect("zero module")
    }
}

/// `S/I` on `[0,t]`.
pub fn quotient_module(ideal: &MonomialIdeal, t: &Multidegree) -> Result<ModuleRep> {
    ideal.require_t_determined(t)?;
    let dim = |a: &Multidegree| usize::from(!ideal.contains(a));
    ModuleRep::new(t, dim, |j, a| unit_or_zero(dim(a), dim(&a.shifted(j, 1))))
}

/// `K_t{a,b}`: `K` on `[a,b]`, zero elsewhere (and zero when `a ≰ b`).
pub fn interval_module(t: &Multidegree, a: &Multidegree, b: &Multidegree) -> Result<ModuleRep> {
    if a.len() != t.len() || b.len() != t.len() {
        return precondition("interval corners must have the length of t");
    }
    if !b.leq(t) {
        return precondition(format!("interval top {b} is not ≤ t = {t}"));
    }
    if !a.is_nonnegative() {
        return precondition(format!("interval bottom {a} must be nonnegative"));
    }
    let inside = DegreeBox::new(a.clone(), b.clone());
    let dim = |r: &Multidegree| usize::from(inside.contains(r));
    ModuleRep::new(t, dim, |j, r| unit_or_zero(dim(r), dim(&r.shifted(j, 1))))
}

fn unit_or_zero(from: usize, to: usize) -> Matrix<i64> {
    if from == 1 && to == 1 {
        Matrix::identity(1)
    } else {
        Matrix::zeros(to, from)
    }
}

/// `A_t(M)`: degree `a` holds the dual of `M_{t−a}` and multiplication is
/// the transposed multiplication of `M`.
pub fn alexander_dual_module(m: &ModuleRep) -> ModuleRep {
    let t = m.t().clone();
    ModuleRep::new(
        &t,
        |a| m.dim(&t.sub(a)),
        |j, a| m.mult(j, &t.sub(a).shifted(j, -1)).transpose(),
    )
    .expect("dual of a module is a module")
}
