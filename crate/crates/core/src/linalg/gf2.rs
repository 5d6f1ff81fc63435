//! Rank over GF(2) with rows packed into 64-bit words.

use super::Matrix;

pub fn rank(m: &Matrix<i64>) -> usize {
    let words = m.cols().div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..m.rows())
        .map(|i| {
            let mut w = vec![0u64; words];
            for (j, &x) in m.row(i).iter().enumerate() {
                if x & 1 != 0 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let (word, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][word] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[word] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot).skip(word) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
