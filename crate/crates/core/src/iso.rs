//! Isomorphism testing and canonical forms of colored graphs.
//!
//! In a connected colored graph an isomorphism is pinned down by the image of a
//! single vertex once the color map is fixed, since every colored edge has a
//! unique image. Both the direct search and the canonical form exploit this:
//! the search propagates from one seed pair, and the canonical form is the
//! lexicographically least breadth-first code over all seeds and color maps
//! that survive invariant pruning.

use serde::{Deserialize, Serialize};

use crate::graph::{ColorSet, ColoredGraph};
use crate::perm::{invert, permutations};

/// Whether an isomorphism may rename colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ColorMode {
    ColorFixed,
    ColorPermuting,
}

/// A vertex bijection together with a color bijection.
///
/// `uv` is a `c`-edge of the source iff `vertex_map[u] vertex_map[v]` is a
/// `color_map[c]`-edge of the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    pub vertex_map: Vec<usize>,
    pub color_map: Vec<usize>,
}

impl Isomorphism {
    pub fn verify(&self, source: &ColoredGraph, target: &ColoredGraph) -> bool {
        if source.dimension() != target.dimension()
            || source.order() != target.order()
            || self.vertex_map.len() != source.order()
            || self.color_map.len() != source.color_count()
            || !crate::graph::is_permutation(&self.vertex_map)
            || !crate::graph::is_permutation(&self.color_map)
        {
            return false;
        }
        (0..source.color_count()).all(|c| {
            (0..source.order()).all(|u| {
                target.neighbor(self.vertex_map[u], self.color_map[c])
                    == self.vertex_map[source.neighbor(u, c)]
            })
        })
    }
}

/// Bicolored cycle lengths through each vertex, indexed `[v][a][b]`.
fn cycle_table(g: &ColoredGraph) -> Vec<Vec<Vec<usize>>> {
    let k = g.color_count();
    (0..g.order())
        .map(|v| {
            (0..k)
                .map(|a| (0..k).map(|b| g.bicolored_cycle_length(v, a, b)).collect())
                .collect()
        })
        .collect()
}

fn pair_counts(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let k = g.color_count();
    (0..k)
        .map(|a| {
            (0..k)
                .map(|b| g.g(ColorSet::EMPTY.with(a).with(b)))
                .collect()
        })
        .collect()
}

/// Color maps to try: identity only, or all maps `old -> new`.
fn color_maps(k: usize, mode: ColorMode) -> Vec<Vec<usize>> {
    match mode {
        ColorMode::ColorFixed => vec![(0..k).collect()],
        ColorMode::ColorPermuting => permutations(k),
    }
}

/// Searches for an isomorphism `a -> b`.
///
/// Connected inputs are handled by seed propagation; disconnected ones go
/// through canonical labelings.
pub fn isomorphic(a: &ColoredGraph, b: &ColoredGraph, mode: ColorMode) -> Option<Isomorphism> {
    if a.dimension() != b.dimension() || a.order() != b.order() {
        return None;
    }
    if a.component_count() != b.component_count() {
        return None;
    }
    if a.component_count() > 1 {
        let la = canonical_labeling(a, mode);
        let lb = canonical_labeling(b, mode);
        if la.code != lb.code {
            return None;
        }
        let inv_v = invert(&lb.vertex_map);
        let inv_c = invert(&lb.color_map);
        let iso = Isomorphism {
            vertex_map: la.vertex_map.iter().map(|&x| inv_v[x]).collect(),
            color_map: la.color_map.iter().map(|&x| inv_c[x]).collect(),
        };
        debug_assert!(iso.verify(a, b));
        return Some(iso);
    }

    let k = a.color_count();
    let n = a.order();
    let ga = pair_counts(a);
    let gb = pair_counts(b);
    let ca = cycle_table(a);
    let cb = cycle_table(b);
    for sigma in color_maps(k, mode) {
        let compatible = (0..k).all(|x| (0..k).all(|y| ga[x][y] == gb[sigma[x]][sigma[y]]));
        if !compatible {
            continue;
        }
        let seed_inv: Vec<usize> = (0..k * k).map(|i| ca[0][i / k][i % k]).collect();
        'targets: for w0 in 0..n {
            for x in 0..k {
                for y in 0..k {
                    if seed_inv[x * k + y] != cb[w0][sigma[x]][sigma[y]] {
                        continue 'targets;
                    }
                }
            }
            if let Some(map) = propagate(a, b, &sigma, 0, w0) {
                return Some(Isomorphism {
                    vertex_map: map,
                    color_map: sigma,
                });
            }
        }
    }
    None
}

fn propagate(
    a: &ColoredGraph,
    b: &ColoredGraph,
    sigma: &[usize],
    v0: usize,
    w0: usize,
) -> Option<Vec<usize>> {
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[v0] = w0;
    used[w0] = true;
    let mut stack = vec![v0];
    while let Some(v) = stack.pop() {
        let w = map[v];
        for (c, &sc) in sigma.iter().enumerate() {
            let v2 = a.neighbor(v, c);
            let w2 = b.neighbor(w, sc);
            if map[v2] == usize::MAX {
                if used[w2] {
                    return None;
                }
                map[v2] = w2;
                used[w2] = true;
                stack.push(v2);
            } else if map[v2] != w2 {
                return None;
            }
        }
    }
    if map.contains(&usize::MAX) {
        return None;
    }
    Some(map)
}

/// A canonical labeling: `code` is the canonical form, `vertex_map` sends
/// each vertex to its canonical label and `color_map` each color to its
/// canonical color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLabeling {
    pub code: Vec<u32>,
    pub vertex_map: Vec<usize>,
    pub color_map: Vec<usize>,
}

impl CanonicalLabeling {
    pub fn bytes(&self) -> Vec<u8> {
        self.code.iter().flat_map(|x| x.to_be_bytes()).collect()
    }
}

/// Canonical form as a byte string: equal iff the graphs are isomorphic in
/// the given mode.
pub fn canonical_form(g: &ColoredGraph, mode: ColorMode) -> Vec<u8> {
    canonical_labeling(g, mode).bytes()
}

pub fn canonical_labeling(g: &ColoredGraph, mode: ColorMode) -> CanonicalLabeling {
    let k = g.color_count();
    let n = g.order();
    let counts = pair_counts(g);
    let cycles = cycle_table(g);
    let residue = g.residue_unchecked(g.all_colors());
    let components = residue.components();

    // graph-level pruning: keep color maps with the least pair-count profile
    let mut candidates: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut best_profile: Option<Vec<usize>> = None;
    for sigma in color_maps(k, mode) {
        let inv = invert(&sigma);
        let profile: Vec<usize> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .map(|(i, j)| counts[inv[i]][inv[j]])
            .collect();
        match &best_profile {
            Some(p) if profile > *p => continue,
            Some(p) if profile < *p => candidates.clear(),
            _ => {}
        }
        best_profile = Some(profile);
        candidates.push((sigma, inv));
    }

    let mut best: Option<CanonicalLabeling> = None;
    for (sigma, inv) in candidates {
        let vertex_inv = |v: usize| -> Vec<usize> {
            (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .map(|(i, j)| cycles[v][inv[i]][inv[j]])
                .collect()
        };
        let mut comp_codes: Vec<(Vec<u32>, Vec<usize>)> = Vec::with_capacity(components.len());
        for comp in components {
            let invs: Vec<Vec<usize>> = comp.iter().map(|&v| vertex_inv(v)).collect();
            let least = invs.iter().min().unwrap().clone();
            let mut comp_best: Option<(Vec<u32>, Vec<usize>)> = None;
            for (&v, inv_v) in comp.iter().zip(&invs) {
                if *inv_v != least {
                    continue;
                }
                if let Some(res) = bfs_code(
                    g,
                    v,
                    &inv,
                    comp.len(),
                    comp_best.as_ref().map(|b| b.0.as_slice()),
                ) {
                    comp_best = Some(res);
                }
            }
            comp_codes.push(comp_best.unwrap());
        }
        comp_codes.sort_by(|x, y| (x.0.len(), &x.0).cmp(&(y.0.len(), &y.0)));

        let mut code = vec![(k - 1) as u32, n as u32, comp_codes.len() as u32];
        let mut vertex_map = vec![0; n];
        let mut offset = 0;
        for (c, order) in &comp_codes {
            code.push(order.len() as u32);
            code.extend(c.iter().map(|&x| x + offset as u32));
            for (label, &v) in order.iter().enumerate() {
                vertex_map[v] = label + offset;
            }
            offset += order.len();
        }
        if best.as_ref().is_none_or(|b| code < b.code) {
            best = Some(CanonicalLabeling {
                code,
                vertex_map,
                color_map: sigma,
            });
        }
    }
    best.expect("at least one color map")
}

/// Breadth-first code of the component containing `start`, visiting colors
/// in canonical order. Returns `None` as soon as the code exceeds `bound`.
/// On success returns the code and the vertices in label order.
fn bfs_code(
    g: &ColoredGraph,
    start: usize,
    color_inv: &[usize],
    size: usize,
    bound: Option<&[u32]>,
) -> Option<(Vec<u32>, Vec<usize>)> {
    let n = g.order();
    let k = color_inv.len();
    let mut label = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(size);
    let mut code = Vec::with_capacity(size * k);
    label[start] = 0;
    order.push(start);
    let mut head = 0;
    let mut tight = bound.is_some();
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &old in color_inv {
            let w = g.neighbor(v, old);
            if label[w] == u32::MAX {
                label[w] = order.len() as u32;
                order.push(w);
            }
            let x = label[w];
            if tight {
                let b = bound.unwrap()[code.len()];
                if x > b {
                    return None;
                }
                if x < b {
                    tight = false;
                }
            }
            code.push(x);
        }
    }
    if tight {
        // equal to the bound; keep the earlier one
        return None;
    }
    Some((code, order))
}
