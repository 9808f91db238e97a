//! Face types compatible with a regular embedding of given Euler
//! characteristic.
//!
//! A semi-equivelar embedding of order `p` whose vertices see faces of
//! lengths `q_1, .., q_{d'}` has `V = p`, `E = p d' / 2` and
//! `F = Σ p / q_i`, so `1 - d'/2 + Σ 1/q_i = χ / p`.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::embedding::format_runs;

/// Order of the embeddings realizing a type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum TypeOrder {
    Fixed(u64),
    /// `factor * q` for the free face length `q`.
    PerFreeFace(u64),
    /// `χ = 0`: any order.
    Unconstrained,
}

impl fmt::Display for TypeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeOrder::Fixed(p) => write!(f, "{p}"),
            TypeOrder::PerFreeFace(1) => write!(f, "q"),
            TypeOrder::PerFreeFace(c) => write!(f, "{c}q"),
            TypeOrder::Unconstrained => write!(f, "any"),
        }
    }
}

/// One admissible type. `faces` is sorted ascending; with `free_face` an
/// extra face of any even length `q >= 6` completes the type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeSolution {
    pub faces: Vec<usize>,
    pub free_face: bool,
    pub degree: usize,
    pub order: TypeOrder,
    pub chi: i64,
}

impl TypeSolution {
    /// Run-length form, e.g. `(4^2,q)` or `(4,6^2)`.
    pub fn condensed(&self) -> String {
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &q in &self.faces {
            match runs.last_mut() {
                Some((r, k)) if *r == q => *k += 1,
                _ => runs.push((q, 1)),
            }
        }
        let s = format_runs(&runs);
        if self.free_face {
            format!("{},q)", &s[..s.len() - 1])
        } else {
            s
        }
    }

    /// Re-evaluates the defining equation, for a concrete free face `q` if
    /// the type has one.
    pub fn satisfies(&self, q: Option<usize>) -> bool {
        let mut faces = self.faces.clone();
        if self.free_face {
            match q {
                Some(q) => faces.push(q),
                None => return false,
            }
        }
        let lhs = lhs(&faces);
        match self.order {
            TypeOrder::Unconstrained => lhs == Ratio::from_integer(0) && self.chi == 0,
            TypeOrder::Fixed(p) => lhs == Ratio::new(self.chi, p as i64),
            TypeOrder::PerFreeFace(c) => {
                lhs == Ratio::new(self.chi, (c as usize * q.unwrap_or(0)) as i64)
            }
        }
    }
}

impl fmt::Display for TypeSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} order {}", self.condensed(), self.order)
    }
}

fn lhs(faces: &[usize]) -> Ratio<i64> {
    let d = faces.len() as i64;
    faces.iter().fold(Ratio::new(2 - d, 2), |acc, &q| {
        acc + Ratio::new(1, q as i64)
    })
}

/// Largest degree admitting a solution: `Σ 1/q_i <= d'/4` forces
/// `1 - d'/4 >= χ / p`, with `p >= 1` for `χ < 0`.
fn max_degree(chi: i64) -> usize {
    if chi > 0 {
        3
    } else {
        (4 - 4 * chi) as usize
    }
}

fn multisets(
    len: usize,
    values: &[usize],
    out: &mut Vec<Vec<usize>>,
    cur: &mut Vec<usize>,
    from: usize,
) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for i in from..values.len() {
        cur.push(values[i]);
        multisets(len, values, out, cur, i);
        cur.pop();
    }
}

/// All types with even face lengths in `[4, q_max]` and an even order at
/// least the longest face. For `χ > 0` the family `(4,4,q)`, `q >= 6`, is
/// reported once with a free face.
pub fn enumerate_embedding_types(chi: i64, q_max: usize) -> Vec<TypeSolution> {
    let values: Vec<usize> = (4..=q_max).step_by(2).collect();
    let mut out = Vec::new();
    for degree in 3..=max_degree(chi) {
        let mut sets = Vec::new();
        multisets(degree, &values, &mut sets, &mut Vec::new(), 0);
        for faces in sets {
            if chi > 0 && degree == 3 && faces[0] == 4 && faces[1] == 4 && faces[2] >= 6 {
                continue;
            }
            let s = lhs(&faces);
            let order = if chi == 0 {
                if s != Ratio::from_integer(0) {
                    continue;
                }
                TypeOrder::Unconstrained
            } else {
                if s == Ratio::from_integer(0) {
                    continue;
                }
                let p = Ratio::from_integer(chi) / s;
                if !p.is_integer() || *p.numer() <= 0 || p.numer() % 2 != 0 {
                    continue;
                }
                let p = *p.numer() as u64;
                if (p as usize) < *faces.last().unwrap() {
                    continue;
                }
                TypeOrder::Fixed(p)
            };
            out.push(TypeSolution {
                faces,
                free_face: false,
                degree,
                order,
                chi,
            });
        }
    }
    if chi > 0 {
        out.push(TypeSolution {
            faces: vec![4, 4],
            free_face: true,
            degree: 3,
            order: TypeOrder::PerFreeFace(chi as u64),
            chi,
        });
    }
    out.sort_by(|a, b| (a.degree, &a.faces, a.free_face).cmp(&(b.degree, &b.faces, b.free_face)));
    out
}
