//! Cayley graphs of small permutation groups generated by involutions.
//!
//! A group generated by involutions `s_0, .., s_d` gives a `(d+1)`-colored
//! graph whose vertices are the group elements and whose `c`-edges join `x`
//! and `x s_c`. The `{a, b}`-colored cycles have length `2 ord(s_a s_b)`.
//! Spherical and projective-plane gems come from finite reflection groups
//! written as (rotation group) × {±1}.

use std::collections::HashMap;

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;

pub(crate) type Perm = Vec<u8>;

fn compose(a: &[u8], b: &[u8]) -> Perm {
    // (a b)(x) = b(a(x)): right action, matching x -> x s
    a.iter().map(|&x| b[x as usize]).collect()
}

fn identity(m: usize) -> Perm {
    (0..m as u8).collect()
}

fn order_of(p: &[u8]) -> usize {
    let id = identity(p.len());
    let mut x = p.to_vec();
    let mut k = 1;
    while x != id {
        x = compose(&x, p);
        k += 1;
    }
    k
}

fn is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for i in 0..p.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = p[j] as usize;
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn all_perms(m: usize) -> Vec<Perm> {
    crate::perm::permutations(m)
        .into_iter()
        .map(|p| p.into_iter().map(|x| x as u8).collect())
        .collect()
}

fn group_order(gens: &[Perm]) -> usize {
    let m = gens[0].len();
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![identity(m)];
    seen.insert(identity(m));
    while let Some(x) = stack.pop() {
        for s in gens {
            let y = compose(&x, s);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

/// Lexicographically first triple of involutions in `S_m` (or `A_m`) with
/// the given pairwise product orders `[ord(s0 s1), ord(s1 s2), ord(s0 s2)]`
/// generating a group of order `target`.
pub(crate) fn involution_triple(
    m: usize,
    even_only: bool,
    orders: [usize; 3],
    target: usize,
) -> Option<[Perm; 3]> {
    let invols: Vec<Perm> = all_perms(m)
        .into_iter()
        .filter(|p| order_of(p) == 2 && (!even_only || is_even(p)))
        .collect();
    for a in &invols {
        for b in &invols {
            if order_of(&compose(a, b)) != orders[0] {
                continue;
            }
            for c in &invols {
                if order_of(&compose(b, c)) == orders[1]
                    && order_of(&compose(a, c)) == orders[2]
                    && group_order(&[a.clone(), b.clone(), c.clone()]) == target
                {
                    return Some([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    None
}

/// Cayley graph of the group generated by `gens`. With `signed`, each
/// generator is paired with `-1`, i.e. the group is taken inside
/// `S_m × {±1}`.
pub(crate) fn cayley_gem(gens: &[Perm], signed: bool) -> Result<ColoredGraph> {
    let m = gens[0].len();
    let start = (identity(m), false);
    let mut index: HashMap<(Perm, bool), usize> = HashMap::new();
    let mut elements = vec![start.clone()];
    index.insert(start, 0);
    let mut head = 0;
    while head < elements.len() {
        let (x, sign) = elements[head].clone();
        head += 1;
        for s in gens {
            let y = (compose(&x, s), sign ^ signed);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    let mut matchings = vec![vec![0; n]; gens.len()];
    for (i, (x, sign)) in elements.iter().enumerate() {
        for (c, s) in gens.iter().enumerate() {
            matchings[c][i] = index[&(compose(x, s), sign ^ signed)];
        }
    }
    ColoredGraph::new(gens.len() - 1, matchings).map_err(|e| GemError::Validation {
        family: "cayley".into(),
        reason: e.to_string(),
    })
}

/// Coxeter-type gem with face lengths `2 * orders` for the pairs
/// `(0,1), (1,2), (0,2)`, realized in `S_m` (or `A_m`), optionally signed.
pub(crate) fn reflection_gem(
    m: usize,
    even_only: bool,
    orders: [usize; 3],
    rotation_order: usize,
    signed: bool,
) -> Result<ColoredGraph> {
    let gens = involution_triple(m, even_only, orders, rotation_order).ok_or_else(|| {
        GemError::SearchExhausted(format!(
            "involutions with product orders {orders:?} in S_{m}"
        ))
    })?;
    cayley_gem(&gens, signed)
}
