#![allow(dead_code)]

use gemkit::complex::PseudoComplex;
use gemkit::ColoredGraph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_matching<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut m = vec![0; n];
    for pair in order.chunks(2) {
        m[pair[0]] = pair[1];
        m[pair[1]] = pair[0];
    }
    m
}

/// A connected `(d+1)`-colored graph of order `n`, resampled until connected.
pub fn random_connected<R: Rng>(d: usize, n: usize, rng: &mut R) -> ColoredGraph {
    loop {
        let m = (0..=d).map(|_| random_matching(n, rng)).collect();
        let g = ColoredGraph::new(d, m).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Rank of an integer matrix over `F_p` (`p = 0` for the rationals, done
/// with a large prime that no small example's torsion divides).
pub fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let p = if p == 0 { 1_000_000_007 } else { p };
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p)).collect())
        .collect();
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..m).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_pow(a[rank][col], p - 2, p);
        for j in 0..n {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for i in 0..m {
            if i != rank && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..n {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Dimension of `H_i(K; F_p)` for each `i`, from ranks of the boundary
/// matrices over `F_p`.
pub fn betti_mod(g: &ColoredGraph, p: i64) -> Vec<usize> {
    let k = PseudoComplex::build(g).unwrap();
    let d = g.dimension();
    let f = k.f_vector();
    let ranks: Vec<usize> = (0..=d + 1)
        .map(|h| {
            if h == 0 || h > d {
                0
            } else {
                rank_mod(&k.boundary_matrix(h), p)
            }
        })
        .collect();
    (0..=d).map(|i| f[i] - ranks[i] - ranks[i + 1]).collect()
}

/// Number of `Z_{p^a}` summands in `H_1` with `p` prime, i.e. the jump of
/// `dim H_1(F_p)` over the rational Betti number, corrected for `H_0`.
pub fn torsion_count_h1(g: &ColoredGraph, p: i64) -> usize {
    let q = betti_mod(g, 0);
    let fp = betti_mod(g, p);
    fp[1] - q[1]
}

/// Face lengths at vertex `x` for the consecutive pairs of `eps`, walked
/// directly on the matchings.
pub fn faces_at(g: &ColoredGraph, eps: &[usize], x: usize) -> Vec<usize> {
    let k = eps.len();
    (0..k)
        .map(|i| {
            let (a, b) = (eps[i], eps[(i + 1) % k]);
            let mut v = x;
            let mut len = 0;
            loop {
                v = g.neighbor(v, a);
                v = g.neighbor(v, b);
                len += 2;
                if v == x {
                    break len;
                }
            }
        })
        .collect()
}

/// Brute-force solutions of `1 - d/2 + Σ 1/q_i = chi / p` with three even
/// faces in `[4, q_max]`, as `(sorted faces, order)` with `order = 0` for
/// any order. Integer arithmetic on a common denominator.
pub fn brute_types_3(chi: i64, q_max: i64) -> Vec<(Vec<i64>, i64)> {
    let mut out = Vec::new();
    for a in (4..=q_max).step_by(2) {
        for b in (a..=q_max).step_by(2) {
            for c in (b..=q_max).step_by(2) {
                let den = 2 * a * b * c;
                let num = -a * b * c + 2 * (b * c + a * c + a * b);
                if chi == 0 {
                    if num == 0 {
                        out.push((vec![a, b, c], 0));
                    }
                } else if num != 0 && (chi * den) % num == 0 {
                    let p = chi * den / num;
                    if p > 0 && p % 2 == 0 && p >= c {
                        out.push((vec![a, b, c], p));
                    }
                }
            }
        }
    }
    out
}

pub fn brute_types_4_torus(q_max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in (4..=q_max).step_by(2) {
        for b in (a..=q_max).step_by(2) {
            for c in (b..=q_max).step_by(2) {
                for e in (c..=q_max).step_by(2) {
                    // 1 - 2 + Σ 1/q = 0
                    let prod = a * b * c * e;
                    if b * c * e + a * c * e + a * b * e + a * b * c == prod {
                        out.push(vec![a, b, c, e]);
                    }
                }
            }
        }
    }
    out
}
