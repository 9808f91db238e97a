//! Regular edge-colored multigraphs stored as one perfect matching per color.
//!
//! A `(d+1)`-colored graph on `n` vertices is a family of `d+1` fixed-point-free
//! involutions of `{0, .., n-1}`. Parallel edges of distinct colors (2-gons) are
//! allowed, loops are not. Residues, bipartiteness and contractedness are all
//! computed by walking these involutions.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GemError, Result};

/// A set of colors, stored as a bitmask. Colors are `0..=31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u32);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn all(dimension: usize) -> ColorSet {
        ColorSet(((1u64 << (dimension + 1)) - 1) as u32)
    }

    pub fn from_bits(bits: u32) -> ColorSet {
        ColorSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, color: usize) -> bool {
        color < 32 && self.0 & (1 << color) != 0
    }

    pub fn with(self, color: usize) -> ColorSet {
        ColorSet(self.0 | (1 << color))
    }

    pub fn without(self, color: usize) -> ColorSet {
        ColorSet(self.0 & !(1 << color))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, dimension: usize) -> ColorSet {
        ColorSet(ColorSet::all(dimension).0 & !self.0)
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Colors in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&c| self.0 & (1 << c) != 0)
    }

    pub fn max_color(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(31 - self.0.leading_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ColorSet::EMPTY, ColorSet::with)
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A regular `(d+1)`-colored multigraph without loops.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "crate::io::GemFile", into = "crate::io::GemFile")]
pub struct ColoredGraph {
    dimension: usize,
    matchings: Vec<Vec<usize>>,
}

impl ColoredGraph {
    /// Builds a graph from one involution per color, checking that every
    /// matching is perfect and loop free.
    pub fn new(dimension: usize, matchings: Vec<Vec<usize>>) -> Result<Self> {
        if dimension == 0 {
            return Err(GemError::InvalidGraph(
                "dimension must be at least 1".into(),
            ));
        }
        if dimension > 31 {
            return Err(GemError::InvalidGraph(
                "at most 32 colors are supported".into(),
            ));
        }
        if matchings.len() != dimension + 1 {
            return Err(GemError::InvalidGraph(format!(
                "expected {} matchings, got {}",
                dimension + 1,
                matchings.len()
            )));
        }
        let n = matchings[0].len();
        if n < 2 || !n.is_multiple_of(2) {
            return Err(GemError::InvalidGraph(format!(
                "order must be even and at least 2, got {n}"
            )));
        }
        for (c, m) in matchings.iter().enumerate() {
            if m.len() != n {
                return Err(GemError::InvalidGraph(format!(
                    "matching of color {c} has length {}, expected {n}",
                    m.len()
                )));
            }
            for (v, &w) in m.iter().enumerate() {
                if w >= n {
                    return Err(GemError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
                if w == v {
                    return Err(GemError::InvalidGraph(format!(
                        "loop at vertex {v} in color {c}"
                    )));
                }
                if m[w] != v {
                    return Err(GemError::InvalidGraph(format!(
                        "color {c} is not an involution at vertex {v}"
                    )));
                }
            }
        }
        Ok(ColoredGraph {
            dimension,
            matchings,
        })
    }

    /// Builds a graph from an edge list `(u, v, color)`.
    pub fn from_edges(
        dimension: usize,
        order: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<Self> {
        let mut matchings = vec![vec![usize::MAX; order]; dimension + 1];
        for &(u, v, c) in edges {
            if c > dimension {
                return Err(GemError::ColorOutOfRange {
                    color: c,
                    dimension,
                });
            }
            for x in [u, v] {
                if x >= order {
                    return Err(GemError::VertexOutOfRange { vertex: x, order });
                }
            }
            if u == v {
                return Err(GemError::InvalidGraph(format!(
                    "loop at vertex {u} in color {c}"
                )));
            }
            if matchings[c][u] != usize::MAX || matchings[c][v] != usize::MAX {
                return Err(GemError::InvalidGraph(format!(
                    "two edges of color {c} meet at edge {u}-{v}"
                )));
            }
            matchings[c][u] = v;
            matchings[c][v] = u;
        }
        for (c, m) in matchings.iter().enumerate() {
            if let Some(v) = m.iter().position(|&w| w == usize::MAX) {
                return Err(GemError::InvalidGraph(format!(
                    "vertex {v} has no edge of color {c}"
                )));
            }
        }
        ColoredGraph::new(dimension, matchings)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn order(&self) -> usize {
        self.matchings[0].len()
    }

    pub fn color_count(&self) -> usize {
        self.dimension + 1
    }

    pub fn all_colors(&self) -> ColorSet {
        ColorSet::all(self.dimension)
    }

    #[inline]
    pub fn neighbor(&self, v: usize, color: usize) -> usize {
        self.matchings[color][v]
    }

    pub fn matching(&self, color: usize) -> &[usize] {
        &self.matchings[color]
    }

    pub fn matchings(&self) -> &[Vec<usize>] {
        &self.matchings
    }

    /// All edges as `(u, v, color)` with `u < v`, sorted by color then `u`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.order() * self.color_count() / 2);
        for (c, m) in self.matchings.iter().enumerate() {
            for (u, &v) in m.iter().enumerate() {
                if u < v {
                    out.push((u, v, c));
                }
            }
        }
        out
    }

    /// Re-checks the perfect-matching invariant of every color.
    pub fn check_invariants(&self) -> bool {
        self.matchings
            .iter()
            .all(|m| m.iter().enumerate().all(|(v, &w)| w != v && m[w] == v))
    }

    pub fn check_color(&self, color: usize) -> Result<()> {
        if color > self.dimension {
            Err(GemError::ColorOutOfRange {
                color,
                dimension: self.dimension,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_colors(&self, colors: ColorSet) -> Result<()> {
        match colors.max_color() {
            Some(c) if c > self.dimension => Err(GemError::ColorOutOfRange {
                color: c,
                dimension: self.dimension,
            }),
            _ => Ok(()),
        }
    }

    /// Partition of the vertices into connected components of the subgraph
    /// spanned by the colors in `colors`.
    pub fn residue(&self, colors: ColorSet) -> Result<ResiduePartition> {
        self.check_colors(colors)?;
        Ok(self.residue_unchecked(colors))
    }

    pub(crate) fn residue_unchecked(&self, colors: ColorSet) -> ResiduePartition {
        let n = self.order();
        let cols: Vec<usize> = colors.iter().collect();
        let mut component_of = vec![usize::MAX; n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = vec![start];
            component_of[start] = id;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &c in &cols {
                    let w = self.matchings[c][v];
                    if component_of[w] == usize::MAX {
                        component_of[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        ResiduePartition {
            colors,
            components,
            component_of,
        }
    }

    /// Number of components of the residue on `colors` (the `g_C` count).
    pub fn g(&self, colors: ColorSet) -> usize {
        self.residue_unchecked(colors).count()
    }

    /// Convenience for `g` over a slice of colors.
    pub fn g_of(&self, colors: &[usize]) -> usize {
        self.g(colors.iter().copied().collect())
    }

    pub fn component_count(&self) -> usize {
        self.g(self.all_colors())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let components = self.component_count();
        if components == 1 {
            Ok(())
        } else {
            Err(GemError::Disconnected { components })
        }
    }

    /// A proper 2-coloring of the vertices, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let s = side[v].unwrap();
                for m in &self.matchings {
                    let w = m[v];
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True iff every residue on `Δ_d \ {c}` is connected.
    pub fn is_contracted(&self) -> Result<bool> {
        self.require_connected()?;
        let all = self.all_colors();
        Ok((0..=self.dimension).all(|c| self.g(all.without(c)) == 1))
    }

    /// Length (vertex count) of the `{a, b}`-colored cycle through `v`.
    pub fn bicolored_cycle_length(&self, v: usize, a: usize, b: usize) -> usize {
        if a == b {
            return 2;
        }
        let mut len = 0;
        let mut x = v;
        loop {
            x = self.matchings[a][x];
            x = self.matchings[b][x];
            len += 2;
            if x == v {
                return len;
            }
        }
    }

    /// Renames vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<ColoredGraph> {
        let n = self.order();
        if perm.len() != n || !is_permutation(perm) {
            return Err(GemError::InvalidGraph(
                "relabeling is not a permutation".into(),
            ));
        }
        let matchings = self
            .matchings
            .iter()
            .map(|m| {
                let mut out = vec![0; n];
                for v in 0..n {
                    out[perm[v]] = perm[m[v]];
                }
                out
            })
            .collect();
        Ok(ColoredGraph {
            dimension: self.dimension,
            matchings,
        })
    }

    /// Renames colors: color `c` becomes `perm[c]`.
    pub fn permute_colors(&self, perm: &[usize]) -> Result<ColoredGraph> {
        if perm.len() != self.color_count() || !is_permutation(perm) {
            return Err(GemError::InvalidGraph(
                "color map is not a permutation".into(),
            ));
        }
        let mut matchings = vec![Vec::new(); self.color_count()];
        for (c, m) in self.matchings.iter().enumerate() {
            matchings[perm[c]] = m.clone();
        }
        Ok(ColoredGraph {
            dimension: self.dimension,
            matchings,
        })
    }

    /// The `|colors|`-colored graph induced on `vertices` by the edges with
    /// colors in `colors`, colors renumbered in ascending order and vertices
    /// renumbered by their position in `vertices`.
    ///
    /// `vertices` must be closed under the chosen colors (a union of residue
    /// components); `colors` needs at least two elements.
    pub fn residue_graph(&self, colors: ColorSet, vertices: &[usize]) -> Result<ColoredGraph> {
        self.check_colors(colors)?;
        if colors.len() < 2 {
            return Err(GemError::InvalidGraph(
                "a residue graph needs at least two colors".into(),
            ));
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut matchings = Vec::with_capacity(colors.len());
        for c in colors.iter() {
            let mut m = Vec::with_capacity(vertices.len());
            for &v in vertices {
                let w = index[self.matchings[c][v]];
                if w == usize::MAX {
                    return Err(GemError::InvalidGraph(
                        "vertex set is not closed under the residue colors".into(),
                    ));
                }
                m.push(w);
            }
            matchings.push(m);
        }
        ColoredGraph::new(colors.len() - 1, matchings)
    }
}

impl fmt::Debug for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoredGraph")
            .field("dimension", &self.dimension)
            .field("order", &self.order())
            .field("matchings", &self.matchings)
            .finish()
    }
}

pub(crate) fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return false;
        }
        seen[p] = true;
    }
    true
}

/// Components of a residue `Γ_C`, ordered by their minimum vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduePartition {
    colors: ColorSet,
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl ResiduePartition {
    pub fn colors(&self) -> ColorSet {
        self.colors
    }

    /// The component count `g_C`.
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Sorted vertex lists, one per component.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn component_ids(&self) -> &[usize] {
        &self.component_of
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(d: usize) -> ColoredGraph {
        ColoredGraph::new(d, vec![vec![1, 0]; d + 1]).unwrap()
    }

    #[test]
    fn rejects_loops_and_non_involutions() {
        assert!(ColoredGraph::new(1, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(ColoredGraph::new(1, vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).is_err());
        assert!(ColoredGraph::new(1, vec![vec![1, 0], vec![1, 0, 3, 2]]).is_err());
        assert!(ColoredGraph::new(2, vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(ColoredGraph::new(1, vec![vec![1, 0, 2], vec![1, 0, 2]]).is_err());
    }

    #[test]
    fn from_edges_detects_missing_and_double_edges() {
        assert!(ColoredGraph::from_edges(1, 2, &[(0, 1, 0)]).is_err());
        assert!(ColoredGraph::from_edges(1, 4, &[(0, 1, 0), (0, 2, 0)]).is_err());
        assert!(ColoredGraph::from_edges(1, 2, &[(0, 1, 0), (0, 1, 2)]).is_err());
        let g = ColoredGraph::from_edges(1, 2, &[(0, 1, 0), (1, 0, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1, 0), (0, 1, 1)]);
    }

    #[test]
    fn sphere_residues() {
        let g = sphere(3);
        let r = g.residue([0, 1].into_iter().collect()).unwrap();
        assert_eq!(r.count(), 1);
        assert_eq!(r.components(), &[vec![0, 1]]);
        assert!(g.is_bipartite());
        assert!(g.is_contracted().unwrap());
        assert_eq!(
            g.residue(ColorSet::EMPTY.with(4)),
            Err(GemError::ColorOutOfRange {
                color: 4,
                dimension: 3
            })
        );
    }

    #[test]
    fn single_color_residue_has_half_the_vertices() {
        // a hexagon with a third antipodal color
        let g = ColoredGraph::from_edges(
            2,
            6,
            &[
                (0, 1, 0),
                (2, 3, 0),
                (4, 5, 0),
                (1, 2, 1),
                (3, 4, 1),
                (5, 0, 1),
                (0, 3, 2),
                (1, 4, 2),
                (2, 5, 2),
            ],
        )
        .unwrap();
        for c in 0..3 {
            assert_eq!(g.g(ColorSet::EMPTY.with(c)), 3);
        }
        assert_eq!(g.bicolored_cycle_length(0, 0, 1), 6);
        assert!(g.is_bipartite());
    }

    #[test]
    fn contractedness_requires_connected_input() {
        let g = ColoredGraph::new(1, vec![vec![1, 0, 3, 2], vec![1, 0, 3, 2]]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(
            g.is_contracted(),
            Err(GemError::Disconnected { components: 2 })
        );
    }

    #[test]
    fn residue_graph_renumbers_colors() {
        let g = sphere(3);
        let r = g
            .residue_graph(ColorSet::all(3).without(1), &[0, 1])
            .unwrap();
        assert_eq!(r.dimension(), 2);
        assert_eq!(r.order(), 2);
    }
}
