//! Exact rank of integer matrices.

use num_bigint::BigInt;

/// Rank over the rationals, by fraction-free elimination.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let height = a.len();
    let width = a.first().map_or(0, Vec::len);
    let zero = BigInt::from(0);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..width {
        let Some(pivot) = (r..height).find(|&i| a[i][c] != zero) else { continue };
        a.swap(r, pivot);
        for i in r + 1..height {
            for j in c + 1..width {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = zero.clone();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == height {
            break;
        }
    }
    r
}
