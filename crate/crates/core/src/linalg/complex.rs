//! Finite cochain complexes over a field, their cohomology with explicit
//! bases, induced maps and the connecting map of a short exact sequence.

use std::collections::BTreeMap;

use super::elim::{apply, kernel_basis, matmul, rref, solve};
use super::{Field, Matrix};
use crate::error::{Error, Result};

/// `C^lo → C^{lo+1} → … → C^hi`, with integer structure matrices that are
/// read in whatever field the cohomology is taken over. Degrees outside
/// `[lo, hi]` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainComplex {
    lo: i32,
    dims: Vec<usize>,
    diffs: Vec<Matrix<i64>>,
}

impl CochainComplex {
    /// `diffs[k]` maps degree `lo+k` to `lo+k+1`. Shapes and `d∘d = 0` are
    /// checked over ℤ.
    pub fn new(lo: i32, dims: Vec<usize>, diffs: Vec<Matrix<i64>>) -> Result<Self> {
        if diffs.len() != dims.len().saturating_sub(1) {
            return Err(Error::NotAComplex(format!(
                "{} terms need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.rows() != dims[k + 1] || d.cols() != dims[k] {
                return Err(Error::NotAComplex(format!(
                    "d^{} is {}x{}, expected {}x{}",
                    lo + k as i32,
                    d.rows(),
                    d.cols(),
                    dims[k + 1],
                    dims[k]
                )));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].mul(&diffs[k - 1]).is_zero() {
                return Err(Error::NotAComplex(format!(
                    "d^{} ∘ d^{} is nonzero",
                    lo + k as i32,
                    lo + k as i32 - 1
                )));
            }
        }
        Ok(CochainComplex { lo, dims, diffs })
    }

    /// The complex that is `K^dim` in a single degree.
    pub fn concentrated(degree: i32, dim: usize) -> Self {
        CochainComplex {
            lo: degree,
            dims: vec![dim],
            diffs: Vec::new(),
        }
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Top degree; below `lo` when the complex has no terms.
    pub fn hi(&self) -> i32 {
        self.lo + self.dims.len() as i32 - 1
    }

    pub fn dim(&self, i: i32) -> usize {
        if i < self.lo || i > self.hi() {
            0
        } else {
            self.dims[(i - self.lo) as usize]
        }
    }

    /// `dⁱ : Cⁱ → Cⁱ⁺¹`, a zero matrix of the right shape outside the range.
    pub fn diff(&self, i: i32) -> Matrix<i64> {
        if i >= self.lo && i < self.hi() {
            self.diffs[(i - self.lo) as usize].clone()
        } else {
            Matrix::zeros(self.dim(i + 1), self.dim(i))
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        (self.lo..=self.hi())
            .map(|i| sign(i) * self.dim(i) as i64)
            .sum()
    }

    /// Cohomology dimensions from ranks only.
    pub fn cohomology_dims<F: Field>(&self, field: &F) -> BTreeMap<i32, usize> {
        let ranks: Vec<usize> = (self.lo - 1..=self.hi())
            .map(|i| {
                let d = self.diff(i);
                if d.rows() == 0 || d.cols() == 0 {
                    0
                } else {
                    field.rank_int(&d)
                }
            })
            .collect();
        (self.lo..=self.hi())
            .map(|i| {
                let k = (i - self.lo) as usize;
                (i, self.dim(i) - ranks[k + 1] - ranks[k])
            })
            .collect()
    }
}

fn sign(i: i32) -> i64 {
    if i.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A basis of `Hⁱ` in one degree: representative cocycles as columns of
/// `reps`, and `proj` taking any cocycle to its class coordinates.
#[derive(Clone, Debug)]
pub struct CohomologyDegree<E> {
    pub reps: Matrix<E>,
    pub proj: Matrix<E>,
}

impl<E> CohomologyDegree<E> {
    pub fn dim(&self) -> usize {
        self.reps.cols()
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyBasis<E> {
    lo: i32,
    degrees: Vec<CohomologyDegree<E>>,
}

impl<E: Clone> CohomologyBasis<E> {
    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.degrees.len() as i32 - 1
    }

    pub fn degree(&self, i: i32) -> Option<&CohomologyDegree<E>> {
        if i < self.lo {
            return None;
        }
        self.degrees.get((i - self.lo) as usize)
    }

    pub fn dim(&self, i: i32) -> usize {
        self.degree(i).map_or(0, |d| d.dim())
    }

    pub fn dims(&self) -> BTreeMap<i32, usize> {
        (self.lo..=self.hi()).map(|i| (i, self.dim(i))).collect()
    }
}

/// Left inverse of a matrix with independent columns.
fn left_inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let (rows, k) = (m.rows(), m.cols());
    // Pick k independent rows via the pivots of the transpose.
    let pivot_rows = rref(field, &m.transpose()).pivots;
    debug_assert_eq!(pivot_rows.len(), k, "columns are not independent");
    let square = m.select_rows(&pivot_rows);
    let mut aug = square.hstack(&Matrix::from_fn(k, k, |i, j| {
        if i == j {
            field.one()
        } else {
            field.zero()
        }
    }));
    aug = rref(field, &aug).matrix;
    let mut out = Matrix::filled(k, rows, field.zero());
    for (c, &r) in pivot_rows.iter().enumerate() {
        for i in 0..k {
            out.set(i, r, aug.get(i, k + c).clone());
        }
    }
    out
}

pub fn cohomology<F: Field>(field: &F, c: &CochainComplex) -> CohomologyBasis<F::Elem> {
    let degrees = (c.lo..=c.hi())
        .map(|i| {
            let n = c.dim(i);
            let incoming = field.lift(&c.diff(i - 1));
            let outgoing = field.lift(&c.diff(i));
            let cocycles = kernel_basis(field, &outgoing);
            // Boundaries first, then cocycles; new pivots among the cocycles
            // extend a basis of the boundaries to one of the cocycles.
            let boundary_cols = rref(field, &incoming).pivots;
            let boundaries = incoming.select_columns(&boundary_cols);
            let z = Matrix::from_columns(n, &cocycles);
            let both = boundaries.hstack(&z);
            let nb = boundaries.cols();
            let reps_idx: Vec<usize> = rref(field, &both)
                .pivots
                .into_iter()
                .filter(|&p| p >= nb)
                .map(|p| p - nb)
                .collect();
            let reps = z.select_columns(&reps_idx);
            let full = boundaries.hstack(&reps);
            let linv = left_inverse(field, &full);
            let h = reps.cols();
            let proj = linv.select_rows(&(nb..nb + h).collect::<Vec<_>>());
            CohomologyDegree { reps, proj }
        })
        .collect();
    CohomologyBasis { lo: c.lo, degrees }
}

/// Degreewise integer matrices `fⁱ : Cⁱ → Dⁱ`, starting at degree `lo`.
/// Missing degrees are zero maps.
#[derive(Clone, Debug)]
pub struct ChainMap {
    lo: i32,
    maps: Vec<Matrix<i64>>,
}

impl ChainMap {
    pub fn new(lo: i32, maps: Vec<Matrix<i64>>) -> Self {
        ChainMap { lo, maps }
    }

    /// Builds the map over the union of the two complexes' ranges.
    pub fn from_fn(
        source: &CochainComplex,
        target: &CochainComplex,
        f: impl Fn(i32) -> Matrix<i64>,
    ) -> Self {
        let lo = source.lo().min(target.lo());
        let hi = source.hi().max(target.hi());
        ChainMap {
            lo,
            maps: (lo..=hi).map(f).collect(),
        }
    }

    pub fn at(&self, i: i32, source: &CochainComplex, target: &CochainComplex) -> Matrix<i64> {
        if i >= self.lo {
            if let Some(m) = self.maps.get((i - self.lo) as usize) {
                return m.clone();
            }
        }
        Matrix::zeros(target.dim(i), source.dim(i))
    }

    fn check<F: Field>(&self, field: &F, c: &CochainComplex, d: &CochainComplex) -> Result<()> {
        let lo = c.lo().min(d.lo()) - 1;
        let hi = c.hi().max(d.hi());
        for i in lo..=hi {
            let f = self.at(i, c, d);
            if f.rows() != d.dim(i) || f.cols() != c.dim(i) {
                return Err(Error::NotAChainMap(format!(
                    "f^{i} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    d.dim(i),
                    c.dim(i)
                )));
            }
            let left = self.at(i + 1, c, d).mul(&c.diff(i));
            let right = d.diff(i).mul(&f);
            let diff = field.lift(&left.sub(&right));
            if (0..diff.rows()).any(|r| diff.row(r).iter().any(|x| !field.is_zero(x))) {
                return Err(Error::NotAChainMap(format!(
                    "f and d do not commute in degree {i}"
                )));
            }
        }
        Ok(())
    }
}

/// A linear map between cohomologies, one matrix per degree in class
/// coordinates.
#[derive(Clone, Debug)]
pub struct CohomologyMap<E> {
    pub maps: BTreeMap<i32, Matrix<E>>,
}

impl<E: Clone> CohomologyMap<E> {
    pub fn rank<F: Field<Elem = E>>(&self, field: &F, i: i32) -> usize {
        self.maps.get(&i).map_or(0, |m| super::elim::rank(field, m))
    }

    pub fn ranks<F: Field<Elem = E>>(&self, field: &F) -> BTreeMap<i32, usize> {
        self.maps
            .iter()
            .map(|(&i, m)| (i, super::elim::rank(field, m)))
            .collect()
    }
}

fn push_classes<F: Field>(
    field: &F,
    f: &Matrix<i64>,
    from: Option<&CohomologyDegree<F::Elem>>,
    to: Option<&CohomologyDegree<F::Elem>>,
) -> Matrix<F::Elem> {
    let (Some(from), Some(to)) = (from, to) else {
        return Matrix::filled(
            to.map_or(0, |t| t.dim()),
            from.map_or(0, |s| s.dim()),
            field.zero(),
        );
    };
    let image = matmul(field, &field.lift(f), &from.reps);
    matmul(field, &to.proj, &image)
}

/// The map `Hⁱ(C) → Hⁱ(D)` induced by a chain map, after checking that it
/// commutes with the differentials.
pub fn induced_map<F: Field>(
    field: &F,
    c: &CochainComplex,
    d: &CochainComplex,
    f: &ChainMap,
) -> Result<CohomologyMap<F::Elem>> {
    f.check(field, c, d)?;
    let hc = cohomology(field, c);
    let hd = cohomology(field, d);
    Ok(induced_map_with(field, c, d, f, &hc, &hd))
}

/// As [`induced_map`] with precomputed bases and no chain-map check.
pub fn induced_map_with<F: Field>(
    field: &F,
    c: &CochainComplex,
    d: &CochainComplex,
    f: &ChainMap,
    hc: &CohomologyBasis<F::Elem>,
    hd: &CohomologyBasis<F::Elem>,
) -> CohomologyMap<F::Elem> {
    let maps = (c.lo()..=c.hi())
        .map(|i| {
            (
                i,
                push_classes(field, &f.at(i, c, d), hc.degree(i), hd.degree(i)),
            )
        })
        .collect();
    CohomologyMap { maps }
}

/// `0 → A → B → C → 0`, degreewise exact.
pub struct ShortExactSequence<'a> {
    pub sub: &'a CochainComplex,
    pub mid: &'a CochainComplex,
    pub quot: &'a CochainComplex,
    pub inc: &'a ChainMap,
    pub surj: &'a ChainMap,
}

impl ShortExactSequence<'_> {
    pub fn check<F: Field>(&self, field: &F) -> Result<()> {
        self.inc.check(field, self.sub, self.mid)?;
        self.surj.check(field, self.mid, self.quot)?;
        let lo = self.sub.lo().min(self.mid.lo()).min(self.quot.lo());
        let hi = self.sub.hi().max(self.mid.hi()).max(self.quot.hi());
        for i in lo..=hi {
            let inc = self.inc.at(i, self.sub, self.mid);
            let surj = self.surj.at(i, self.mid, self.quot);
            let comp = field.lift(&surj.mul(&inc));
            if (0..comp.rows()).any(|r| comp.row(r).iter().any(|x| !field.is_zero(x))) {
                return Err(Error::NotExact(format!("s∘i is nonzero in degree {i}")));
            }
            let ri = field.rank_int(&inc);
            let rs = field.rank_int(&surj);
            let (a, b, c) = (self.sub.dim(i), self.mid.dim(i), self.quot.dim(i));
            if ri != a {
                return Err(Error::NotExact(format!("i is not injective in degree {i}")));
            }
            if rs != c {
                return Err(Error::NotExact(format!(
                    "s is not surjective in degree {i}"
                )));
            }
            if ri + rs != b {
                return Err(Error::NotExact(format!("ker s ≠ im i in degree {i}")));
            }
        }
        Ok(())
    }
}

/// `δⁱ : Hⁱ(quot) → Hⁱ⁺¹(sub)` for every degree of the quotient, by the
/// usual lift, differentiate and pull back.
pub fn connecting_map<F: Field>(
    field: &F,
    ses: &ShortExactSequence<'_>,
) -> Result<CohomologyMap<F::Elem>> {
    ses.check(field)?;
    let hq = cohomology(field, ses.quot);
    let ha = cohomology(field, ses.sub);
    let mut maps = BTreeMap::new();
    for i in ses.quot.lo()..=ses.quot.hi() {
        let target_dim = ha.dim(i + 1);
        let Some(classes) = hq.degree(i) else {
            continue;
        };
        let s = field.lift(&ses.surj.at(i, ses.mid, ses.quot));
        let d_mid = field.lift(&ses.mid.diff(i));
        let inc_next = field.lift(&ses.inc.at(i + 1, ses.sub, ses.mid));
        let mut cols = Vec::with_capacity(classes.dim());
        for k in 0..classes.dim() {
            let z = classes.reps.column(k);
            let y = solve(field, &s, &z).expect("surjection has a preimage");
            let dy = apply(field, &d_mid, &y);
            let x = solve(field, &inc_next, &dy).expect("d of a lift lies in the image of i");
            let coords = match ha.degree(i + 1) {
                Some(deg) => apply(field, &deg.proj, &x),
                None => Vec::new(),
            };
            cols.push(coords);
        }
        maps.insert(i, Matrix::from_columns(target_dim, &cols));
    }
    Ok(CohomologyMap { maps })
}
