//! Gaussian elimination over an arbitrary [`Field`].

use super::{Field, Matrix};

/// Reduced row echelon form together with the pivot columns.
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a.get(p, j).clone();
                a.set(p, j, a.get(r, j).clone());
                a.set(r, j, tmp);
            }
        }
        let inv = field.inv(a.get(r, c));
        for j in c..cols {
            let v = field.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || field.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..cols {
                let v = field.sub(a.get(i, j), &field.mul(&factor, a.get(r, j)));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { matrix: a, pivots }
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    rref(field, m).pivots.len()
}

/// A basis of the null space, one vector per free column.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let cols = m.cols();
    let Rref { matrix, pivots } = rref(field, m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(matrix.get(row, free));
        }
        basis.push(v);
    }
    basis
}

/// Some `x` with `m x = b`, or `None` when `b` is outside the column space.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows(), b.len(), "right-hand side has the wrong length");
    let cols = m.cols();
    let aug = m.hstack(&Matrix::from_columns(m.rows(), &[b.to_vec()]));
    let Rref { matrix, pivots } = rref(field, &aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = matrix.get(row, cols).clone();
    }
    Some(x)
}

/// `m · v` over the field.
pub fn apply<F: Field>(field: &F, m: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(m.cols(), v.len(), "vector has the wrong length");
    (0..m.rows())
        .map(|i| {
            let mut acc = field.zero();
            for (a, x) in m.row(i).iter().zip(v) {
                if !field.is_zero(a) && !field.is_zero(x) {
                    acc = field.add(&acc, &field.mul(a, x));
                }
            }
            acc
        })
        .collect()
}

/// Matrix product over the field.
pub fn matmul<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols(), b.rows(), "shape mismatch in matmul");
    let mut out = Matrix::filled(a.rows(), b.cols(), field.zero());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            if field.is_zero(x) {
                continue;
            }
            for j in 0..b.cols() {
                let v = field.add(out.get(i, j), &field.mul(x, b.get(k, j)));
                out.set(i, j, v);
            }
        }
    }
    out
}
