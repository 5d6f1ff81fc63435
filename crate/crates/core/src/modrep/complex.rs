use crate::degree::{DegreeBox, Multidegree};
use crate::error::{precondition, Error, Result};
use crate::linalg::{CochainComplex, Matrix};

use super::ModuleRep;

/// Default cap on the number of matrix cells a construction may allocate.
pub const DEFAULT_MAX_CELLS: usize = 10_000_000;

/// The cell cap, overridable with `NAK_MAX_CELLS`.
pub fn max_cells() -> usize {
    std::env::var("NAK_MAX_CELLS")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CELLS)
}

/// A bounded cochain complex of `t`-determined modules,
/// `C^lo → … → C^hi`, with degree-preserving differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexOfReps {
    lo: i32,
    terms: Vec<ModuleRep>,
    // diffs[m][idx(r)] : C^{lo+m}_r → C^{lo+m+1}_r
    diffs: Vec<Vec<Matrix<i64>>>,
}

impl ComplexOfReps {
    /// Checks shapes, `d∘d = 0` and that each differential commutes with
    /// every multiplication map.
    pub fn new(lo: i32, terms: Vec<ModuleRep>, diffs: Vec<Vec<Matrix<i64>>>) -> Result<Self> {
        if terms.is_empty() {
            return precondition("a complex needs at least one term (use the zero module)");
        }
        let c = ComplexOfReps { lo, terms, diffs };
        c.validate()?;
        Ok(c)
    }

    /// `M` placed in cohomological degree `degree`.
    pub fn concentrated(m: ModuleRep, degree: i32) -> Self {
        ComplexOfReps {
            lo: degree,
            terms: vec![m],
            diffs: Vec::new(),
        }
    }

    /// Every term is a module, `d∘d = 0` and each differential commutes
    /// with the multiplication maps.
    pub fn check(&self) -> Result<()> {
        for m in &self.terms {
            m.check()?;
        }
        self.validate()
    }

    fn validate(&self) -> Result<()> {
        let t = self.t().clone();
        let bx = DegreeBox::up_to(&t);
        if self.terms.iter().any(|m| m.t() != &t) {
            return precondition("all terms must share the same t");
        }
        if self.diffs.len() != self.terms.len() - 1 {
            return Err(Error::NotAComplex(format!(
                "{} terms need {} differentials",
                self.terms.len(),
                self.terms.len() - 1
            )));
        }
        for (m, d) in self.diffs.iter().enumerate() {
            let (src, dst) = (&self.terms[m], &self.terms[m + 1]);
            let deg = self.lo + m as i32;
            if d.len() != bx.volume() {
                return Err(Error::NotAComplex(format!("d^{deg} is missing degrees")));
            }
            for r in bx.iter() {
                let dr = &d[bx.index(&r).unwrap()];
                if dr.rows() != dst.dim(&r) || dr.cols() != src.dim(&r) {
                    return Err(Error::NotAComplex(format!(
                        "d^{deg} at {r} has the wrong shape"
                    )));
                }
                if m + 1 < self.diffs.len() && !self.diff(deg + 1, &r).mul(dr).is_zero() {
                    return Err(Error::NotAComplex(format!("d∘d ≠ 0 at {r}, degree {deg}")));
                }
                for j in 0..t.len() {
                    if r.get(j) >= t.get(j) {
                        continue;
                    }
                    let up = r.shifted(j, 1);
                    if self.diff(deg, &up).mul(&src.mult(j, &r)) != dst.mult(j, &r).mul(dr) {
                        return Err(Error::NotAComplex(format!(
                            "d^{deg} does not commute with x_{j} at {r}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn t(&self) -> &Multidegree {
        self.terms[0].t()
    }

    pub fn n(&self) -> usize {
        self.t().len()
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn term(&self, i: i32) -> Option<&ModuleRep> {
        if i < self.lo {
            return None;
        }
        self.terms.get((i - self.lo) as usize)
    }

    pub fn dim(&self, i: i32, r: &Multidegree) -> usize {
        self.term(i).map_or(0, |m| m.dim(r))
    }

    /// `dⁱ` at degree `r ∈ [0,t]`.
    pub fn diff(&self, i: i32, r: &Multidegree) -> Matrix<i64> {
        if i >= self.lo && i < self.hi() {
            let idx = self.terms[0]
                .degree_box()
                .index(r)
                .expect("degree inside the box");
            self.diffs[(i - self.lo) as usize][idx].clone()
        } else {
            Matrix::zeros(self.dim(i + 1, r), self.dim(i, r))
        }
    }

    /// `xⱼ` on `Cⁱ` at `r`.
    pub fn mult(&self, i: i32, j: usize, r: &Multidegree) -> Matrix<i64> {
        match self.term(i) {
            Some(m) => m.mult(j, r),
            None => Matrix::zeros(0, 0),
        }
    }

    /// The complex of vector spaces in degree `r`.
    pub fn slice(&self, r: &Multidegree) -> CochainComplex {
        let dims = (self.lo..=self.hi()).map(|i| self.dim(i, r)).collect();
        let diffs = (self.lo..self.hi()).map(|i| self.diff(i, r)).collect();
        CochainComplex::new(self.lo, dims, diffs).expect("validated complex")
    }

    /// Total number of stored differential cells.
    pub fn cells(&self) -> usize {
        let bx = DegreeBox::up_to(self.t());
        (self.lo..self.hi())
            .map(|i| {
                bx.iter()
                    .map(|r| self.dim(i, &r) * self.dim(i + 1, &r))
                    .sum::<usize>()
            })
            .sum()
    }

    /// `T^m C`: `(T^m C)^i = C^{i+m}`, differential times `(−1)^m`.
    pub fn shift(&self, m: i32) -> ComplexOfReps {
        let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
        ComplexOfReps {
            lo: self.lo - m,
            terms: self.terms.clone(),
            diffs: self
                .diffs
                .iter()
                .map(|d| d.iter().map(|x| x.scaled(sign)).collect())
                .collect(),
        }
    }

    /// One Nakayama step in direction `j` (0-based).
    pub fn nakayama_step(&self, j: usize) -> Result<ComplexOfReps> {
        let t = self.t().clone();
        let n = t.len();
        if j >= n {
            return precondition(format!("direction {j} out of range for n = {n}"));
        }
        let bx = DegreeBox::up_to(&t);
        let tj = t.get(j);
        let below = |r: &Multidegree| r.shifted(j, -1);
        let top = |r: &Multidegree| r.with(j, tj);
        // Term m of the result is A^m ⊕ B^m with A^m_r = C^m_{r−εⱼ} and
        // B^m_r = C^{m−1}_{r̄}.
        let (lo, hi) = (self.lo, self.hi() + 1);
        let a_dim = |m: i32, r: &Multidegree| self.dim(m, &below(r));
        let b_dim = |m: i32, r: &Multidegree| self.dim(m - 1, &top(r));

        let cap = max_cells();
        let cells: usize = (lo..hi)
            .map(|m| {
                bx.iter()
                    .map(|r| (a_dim(m, &r) + b_dim(m, &r)) * (a_dim(m + 1, &r) + b_dim(m + 1, &r)))
                    .sum::<usize>()
            })
            .sum();
        if cells > cap {
            return Err(Error::SizeGuard { cells, cap });
        }

        let terms = (lo..=hi)
            .map(|m| {
                let dims = bx.iter().map(|r| a_dim(m, &r) + b_dim(m, &r)).collect();
                let mult = (0..n)
                    .map(|l| {
                        bx.iter()
                            .map(|r| {
                                if r.get(l) >= t.get(l) {
                                    return Matrix::zeros(0, 0);
                                }
                                let up = r.shifted(l, 1);
                                let a_part = if r.get(j) == 0 {
                                    Matrix::zeros(a_dim(m, &up), 0)
                                } else {
                                    self.mult(m, l, &below(&r))
                                };
                                let b_part = if l == j {
                                    Matrix::identity(b_dim(m, &r))
                                } else {
                                    self.mult(m - 1, l, &top(&r))
                                };
                                Matrix::block_diag(&[&a_part, &b_part])
                            })
                            .collect()
                    })
                    .collect();
                ModuleRep::from_parts(bx.clone(), dims, mult)
            })
            .collect();
        let diffs = (lo..hi)
            .map(|m| {
                bx.iter()
                    .map(|r| {
                        let (a0, b0) = (a_dim(m, &r), b_dim(m, &r));
                        let (a1, b1) = (a_dim(m + 1, &r), b_dim(m + 1, &r));
                        let mut d = Matrix::zeros(a1 + b1, a0 + b0);
                        if r.get(j) > 0 {
                            d.place(0, 0, &self.diff(m, &below(&r)));
                            // x_j^{tⱼ−rⱼ+1} from r−εⱼ up to r̄
                            let phi = match self.term(m) {
                                Some(c) => c.mult_power(j, &below(&r), tj - r.get(j) + 1),
                                None => Matrix::zeros(0, 0),
                            };
                            d.place(a1, 0, &phi);
                        }
                        d.place(a1, a0, &self.diff(m - 1, &top(&r)).scaled(-1));
                        d
                    })
                    .collect()
            })
            .collect();
        ComplexOfReps::new(lo, terms, diffs)
    }

    /// `𝒩ᵏ_t(C)`: `kⱼ` steps in each direction, the last direction first.
    pub fn nakayama(&self, k: &Multidegree) -> Result<ComplexOfReps> {
        let order: Vec<usize> = (0..self.n()).rev().collect();
        self.nakayama_ordered(k, &order)
    }

    /// As [`nakayama`](Self::nakayama) with an explicit direction order.
    pub fn nakayama_ordered(&self, k: &Multidegree, order: &[usize]) -> Result<ComplexOfReps> {
        if k.len() != self.n() || !k.is_nonnegative() {
            return precondition(format!(
                "k = {k} must be a nonnegative vector of length {}",
                self.n()
            ));
        }
        let mut c = self.clone();
        for &j in order {
            for _ in 0..k.get(j) {
                c = c.nakayama_step(j)?;
            }
        }
        Ok(c)
    }

    /// `F ⊗ C` for the Koszul resolution `F` of `K`; its cohomology in
    /// degree `−p` at `r` is the Betti number `β_{p,r}` when `C` is a module.
    pub fn koszul_tensor(&self) -> Result<ComplexOfReps> {
        let t = self.t().clone();
        let n = t.len();
        let bx = DegreeBox::up_to(&t);
        let subsets: Vec<u32> = (0..1u32 << n).collect();
        let shifted = |r: &Multidegree, e: u32| {
            Multidegree::new((0..n).map(|j| r.get(j) - ((e >> j) & 1) as i32).collect())
        };
        let size = |e: u32| e.count_ones() as i32;
        // component (E) of term m at r is C^{m+|E|}_{r−ε_E}
        let comp_dim = |m: i32, e: u32, r: &Multidegree| self.dim(m + size(e), &shifted(r, e));
        let offsets = |m: i32, r: &Multidegree| {
            let mut acc = 0;
            subsets
                .iter()
                .map(|&e| {
                    let o = acc;
                    acc += comp_dim(m, e, r);
                    o
                })
                .collect::<Vec<_>>()
        };
        let total =
            |m: i32, r: &Multidegree| subsets.iter().map(|&e| comp_dim(m, e, r)).sum::<usize>();
        let (lo, hi) = (self.lo - n as i32, self.hi());

        let cap = max_cells();
        let cells: usize = (lo..hi)
            .map(|m| {
                bx.iter()
                    .map(|r| total(m, &r) * total(m + 1, &r))
                    .sum::<usize>()
            })
            .sum();
        if cells > cap {
            return Err(Error::SizeGuard { cells, cap });
        }

        let terms = (lo..=hi)
            .map(|m| {
                let dims = bx.iter().map(|r| total(m, &r)).collect();
                let mult = (0..n)
                    .map(|l| {
                        bx.iter()
                            .map(|r| {
                                if r.get(l) >= t.get(l) {
                                    return Matrix::zeros(0, 0);
                                }
                                let up = r.shifted(l, 1);
                                let blocks: Vec<Matrix<i64>> = subsets
                                    .iter()
                                    .map(|&e| {
                                        let s = shifted(&r, e);
                                        if s.is_nonnegative() {
                                            self.mult(m + size(e), l, &s)
                                        } else {
                                            Matrix::zeros(comp_dim(m, e, &up), 0)
                                        }
                                    })
                                    .collect();
                                let refs: Vec<&Matrix<i64>> = blocks.iter().collect();
                                Matrix::block_diag(&refs)
                            })
                            .collect()
                    })
                    .collect();
                ModuleRep::from_parts(bx.clone(), dims, mult)
            })
            .collect();
        let diffs = (lo..hi)
            .map(|m| {
                bx.iter()
                    .map(|r| {
                        let (src, dst) = (offsets(m, &r), offsets(m + 1, &r));
                        let mut d = Matrix::zeros(total(m + 1, &r), total(m, &r));
                        for (ei, &e) in subsets.iter().enumerate() {
                            let s = shifted(&r, e);
                            if comp_dim(m, e, &r) == 0 {
                                continue;
                            }
                            let deg = m + size(e);
                            // internal part: (−1)^{|E|} d_C
                            let sign = if size(e) % 2 == 0 { 1 } else { -1 };
                            d.place(dst[ei], src[ei], &self.diff(deg, &s).scaled(sign));
                            // Koszul part: e_E ↦ Σ_{j∈E} (−1)^{#{i∈E : i<j}} x_j e_{E∖j}
                            for j in 0..n {
                                if e & (1 << j) == 0 {
                                    continue;
                                }
                                let f = e & !(1 << j);
                                let before = (e & ((1 << j) - 1)).count_ones();
                                let sign = if before % 2 == 0 { 1 } else { -1 };
                                let block = self.mult(deg, j, &s).scaled(sign);
                                d.place(dst[f as usize], src[ei], &block);
                            }
                        }
                        d
                    })
                    .collect()
            })
            .collect();
        ComplexOfReps::new(lo, terms, diffs)
    }
}
