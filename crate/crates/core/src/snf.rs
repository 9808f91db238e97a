//! Smith normal form over arbitrary-precision integers.
//!
//! Only the invariant factors are computed; the unimodular transforms are
//! not tracked. Pivots are chosen by least absolute value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero invariant factors `d_1 | d_2 | ...` (all positive) of an integer
/// matrix given as rows. Their count is the rank.
pub fn invariant_factors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = least_entry(&a, t..m, t..n) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..m {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    sub_row(&mut a, i, t, &q);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    sub_col(&mut a, j, t, &q);
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                // a smaller remainder appeared in row or column t: move it to the pivot
                let (mut bi, mut bj) = (t, t);
                for i in t + 1..m {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[bi][bj].abs() {
                        (bi, bj) = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[bi][bj].abs() {
                        (bi, bj) = (t, j);
                    }
                }
                a.swap(t, bi);
                swap_cols(&mut a, t, bj);
                continue;
            }
            // divisibility of the remaining block by the pivot
            let pivot = a[t][t].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&a[i][j] % &pivot).is_zero()));
            match bad {
                Some(i) => {
                    for j in t..n {
                        let x = a[i][j].clone();
                        a[t][j] += x;
                    }
                }
                None => break,
            }
        }
        t += 1;
    }
    (0..t).map(|i| a[i][i].abs()).collect()
}

fn least_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
                if a[i][j].abs() == BigInt::from(1) {
                    return best;
                }
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

fn sub_row(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    let (lo, hi) = a.split_at_mut(target.max(source));
    let (tgt, src) = if target > source {
        (&mut hi[0], &lo[source])
    } else {
        (&mut lo[target], &hi[0])
    };
    for (x, y) in tgt.iter_mut().zip(src.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn sub_col(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[source].is_zero() {
            let d = q * &row[source];
            row[target] -= d;
        }
    }
}
