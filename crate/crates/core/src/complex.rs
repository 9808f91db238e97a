//! The simplicial cell complex `K(Γ)` of a colored graph.
//!
//! One `d`-simplex with vertices labeled `0..=d` is taken per graph vertex
//! and two simplices are glued along the facet opposite label `c` whenever
//! they are joined by a `c`-edge. After gluing, the `h`-cells with label set
//! `C` (`|C| = h + 1`) are exactly the components of the residue on the
//! complementary colors, which is how the complex is built here.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::embedding::{self, CyclicPermutation};
use crate::error::{GemError, Result};
use crate::graph::{ColorSet, ColoredGraph};
use crate::snf::invariant_factors;

/// An `h`-cell: label set plus the residue component it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub labels: Vec<usize>,
    /// Index of the component in the residue on the complementary colors.
    pub component: usize,
    /// Facets as `(index among (h-1)-cells, sign)`, one per label.
    pub facets: Vec<(usize, i8)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoComplex {
    pub dimension: usize,
    /// `cells[h]` lists the `h`-cells.
    pub cells: Vec<Vec<Cell>>,
}

impl PseudoComplex {
    /// Builds `K(Γ)` for a connected graph.
    pub fn build(g: &ColoredGraph) -> Result<PseudoComplex> {
        g.require_connected()?;
        let d = g.dimension();
        let full = g.all_colors();
        let masks: Vec<ColorSet> = {
            let mut v: Vec<ColorSet> = (1..=full.bits()).map(ColorSet::from_bits).collect();
            v.sort_by(|a, b| {
                (a.len(), a.iter().collect::<Vec<_>>())
                    .cmp(&(b.len(), b.iter().collect::<Vec<_>>()))
            });
            v
        };
        // residue on the complement of each label set
        let mut residues = vec![None; full.bits() as usize + 1];
        let mut offsets = vec![0usize; full.bits() as usize + 1];
        let mut counts = vec![0usize; d + 1];
        for &mask in &masks {
            let r = g.residue_unchecked(mask.complement(d));
            let h = mask.len() - 1;
            offsets[mask.bits() as usize] = counts[h];
            counts[h] += r.count();
            residues[mask.bits() as usize] = Some(r);
        }
        let mut cells: Vec<Vec<Cell>> = (0..=d).map(|h| Vec::with_capacity(counts[h])).collect();
        for &mask in &masks {
            let h = mask.len() - 1;
            let r = residues[mask.bits() as usize].as_ref().unwrap();
            let labels: Vec<usize> = mask.iter().collect();
            for (k, comp) in r.components().iter().enumerate() {
                let rep = comp[0];
                let facets = if h == 0 {
                    Vec::new()
                } else {
                    labels
                        .iter()
                        .enumerate()
                        .map(|(pos, &c)| {
                            let face = mask.without(c);
                            let fr = residues[face.bits() as usize].as_ref().unwrap();
                            let idx = offsets[face.bits() as usize] + fr.component_of(rep);
                            (idx, if pos % 2 == 0 { 1 } else { -1 })
                        })
                        .collect()
                };
                cells[h].push(Cell {
                    labels: labels.clone(),
                    component: k,
                    facets,
                });
            }
        }
        Ok(PseudoComplex {
            dimension: d,
            cells,
        })
    }

    /// Cell counts `(f_0, .., f_d)`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Alternating sum of the cell counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(h, c)| {
                if h % 2 == 0 {
                    c.len() as i64
                } else {
                    -(c.len() as i64)
                }
            })
            .sum()
    }

    /// Matrix of `∂_h : C_h -> C_{h-1}`, rows indexed by `(h-1)`-cells.
    pub fn boundary_matrix(&self, h: usize) -> Vec<Vec<i64>> {
        assert!(h >= 1 && h <= self.dimension);
        let mut m = vec![vec![0i64; self.cells[h].len()]; self.cells[h - 1].len()];
        for (j, cell) in self.cells[h].iter().enumerate() {
            for &(i, s) in &cell.facets {
                m[i][j] += s as i64;
            }
        }
        m
    }

    /// Checks `∂_{h} ∘ ∂_{h+1} = 0` for every `h`.
    pub fn boundary_squared_is_zero(&self) -> bool {
        (1..self.dimension).all(|h| {
            let lower = self.boundary_matrix(h);
            let upper = self.boundary_matrix(h + 1);
            let mid = upper.len();
            (0..lower.len()).all(|i| {
                (0..upper.first().map_or(0, Vec::len))
                    .all(|j| (0..mid).map(|k| lower[i][k] * upper[k][j]).sum::<i64>() == 0)
            })
        })
    }

    /// Integral homology from the Smith normal forms of the boundary maps.
    pub fn homology(&self) -> HomologyProfile {
        let d = self.dimension;
        // factors[h] = invariant factors of ∂_h, h = 1..=d
        let mut factors: Vec<Vec<u64>> = vec![Vec::new(); d + 2];
        for h in 1..=d {
            factors[h] = invariant_factors(&self.boundary_matrix(h))
                .iter()
                .map(|x| x.to_u64().expect("torsion coefficient fits in u64"))
                .collect();
        }
        let groups = (0..=d)
            .map(|h| {
                let rank_out = factors[h].len();
                let rank_in = factors[h + 1].len();
                let torsion: Vec<u64> = factors[h + 1].iter().copied().filter(|&x| x > 1).collect();
                HomologyGroup {
                    rank: self.cells[h].len() - rank_out - rank_in,
                    torsion,
                }
            })
            .collect();
        HomologyProfile(groups)
    }
}

/// One homology group `Z^rank ⊕ Z_{t_1} ⊕ ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        HomologyGroup {
            rank: 0,
            torsion: vec![order],
        }
    }

    pub fn new(rank: usize, torsion: Vec<u64>) -> Self {
        HomologyGroup { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z_{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Homology groups `H_0, .., H_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyProfile(pub Vec<HomologyGroup>);

impl HomologyProfile {
    pub fn groups(&self) -> &[HomologyGroup] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &HomologyGroup {
        &self.0[i]
    }

    /// Homology of the `d`-sphere.
    pub fn sphere(d: usize) -> HomologyProfile {
        HomologyProfile(
            (0..=d)
                .map(|i| {
                    if i == 0 || i == d {
                        HomologyGroup::free(1)
                    } else {
                        HomologyGroup::free(0)
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "H{i}={g}")?;
        }
        Ok(())
    }
}

/// Integral homology of `K(Γ)`.
pub fn homology(g: &ColoredGraph) -> Result<HomologyProfile> {
    Ok(PseudoComplex::build(g)?.homology())
}

/// A connected gem's surface is orientable iff the graph is bipartite.
pub fn orientable(g: &ColoredGraph) -> Result<bool> {
    g.require_connected()?;
    Ok(g.is_bipartite())
}

/// Outcome of [`manifold_check`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum ManifoldVerdict {
    /// `d = 1`: a connected 2-colored graph is a cycle.
    CertifiedCurve,
    /// `d = 2`: every connected 3-colored graph encodes a closed surface.
    CertifiedSurface,
    /// `d = 3`: every residue component is a 2-sphere.
    Certified3Manifold,
    /// `d ≥ 4`: residues pass the lower-dimensional checks and have sphere
    /// homology. Necessary conditions only.
    HomologyCertified,
    Failed {
        color: usize,
        component: usize,
        reason: String,
    },
}

impl ManifoldVerdict {
    pub fn passed(&self) -> bool {
        !matches!(self, ManifoldVerdict::Failed { .. })
    }
}

impl fmt::Display for ManifoldVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldVerdict::CertifiedCurve => write!(f, "certified-curve"),
            ManifoldVerdict::CertifiedSurface => write!(f, "certified-surface"),
            ManifoldVerdict::Certified3Manifold => write!(f, "certified-3-manifold"),
            ManifoldVerdict::HomologyCertified => write!(f, "homology-certified"),
            ManifoldVerdict::Failed {
                color,
                component,
                reason,
            } => {
                write!(f, "failed (color {color}, component {component}: {reason})")
            }
        }
    }
}

/// Checks that every residue `Γ_ĉ` represents a `(d-1)`-sphere, as far as
/// can be certified.
pub fn manifold_check(g: &ColoredGraph) -> Result<ManifoldVerdict> {
    g.require_connected()?;
    Ok(check_connected(g))
}

fn check_connected(g: &ColoredGraph) -> ManifoldVerdict {
    let d = g.dimension();
    match d {
        1 => return ManifoldVerdict::CertifiedCurve,
        2 => return ManifoldVerdict::CertifiedSurface,
        _ => {}
    }
    let all = g.all_colors();
    for c in 0..=d {
        let colors = all.without(c);
        let r = g.residue_unchecked(colors);
        for (k, comp) in r.components().iter().enumerate() {
            let sub = g
                .residue_graph(colors, comp)
                .expect("residue components are closed");
            if d == 3 {
                let chi = surface_chi(&sub);
                if chi != 2 {
                    return ManifoldVerdict::Failed {
                        color: c,
                        component: k,
                        reason: format!("residue has Euler characteristic {chi}, not a 2-sphere"),
                    };
                }
            } else {
                let inner = check_connected(&sub);
                if let ManifoldVerdict::Failed {
                    color,
                    component,
                    reason,
                } = inner
                {
                    return ManifoldVerdict::Failed {
                        color: c,
                        component: k,
                        reason: format!("residue fails its own check (color {color}, component {component}: {reason})"),
                    };
                }
                let h = PseudoComplex::build(&sub).expect("connected").homology();
                if h != HomologyProfile::sphere(d - 1) {
                    return ManifoldVerdict::Failed {
                        color: c,
                        component: k,
                        reason: format!("residue homology {h} is not that of S^{}", d - 1),
                    };
                }
            }
        }
    }
    if d == 3 {
        ManifoldVerdict::Certified3Manifold
    } else {
        ManifoldVerdict::HomologyCertified
    }
}

/// `g_{01} + g_{02} + g_{12} - n/2` of a connected 3-colored graph.
fn surface_chi(g: &ColoredGraph) -> i64 {
    (g.g_of(&[0, 1]) + g.g_of(&[0, 2]) + g.g_of(&[1, 2])) as i64 - g.order() as i64 / 2
}

/// Both Euler characteristics of a 3-colored graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceConsistency {
    pub chi_complex: i64,
    pub chi_embedding: i64,
}

impl SurfaceConsistency {
    pub fn holds(&self) -> bool {
        self.chi_complex == self.chi_embedding
    }
}

/// Compares `χ(K(Γ))` with `χ_ε(Γ)` for the single permutation class of a
/// 3-colored graph.
pub fn consistency_surface(g: &ColoredGraph) -> Result<SurfaceConsistency> {
    if g.dimension() != 2 {
        return Err(GemError::WrongDimension {
            expected: 2,
            actual: g.dimension(),
        });
    }
    let chi_complex = PseudoComplex::build(g)?.euler_characteristic();
    let chi_embedding = embedding::euler_characteristic(g, &CyclicPermutation::identity(2))?;
    Ok(SurfaceConsistency {
        chi_complex,
        chi_embedding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere(d: usize) -> ColoredGraph {
        ColoredGraph::new(d, vec![vec![1, 0]; d + 1]).unwrap()
    }

    #[test]
    fn sphere_complexes() {
        let k = PseudoComplex::build(&sphere(2)).unwrap();
        assert_eq!(k.f_vector(), vec![3, 3, 2]);
        assert_eq!(k.euler_characteristic(), 2);
        assert!(k.boundary_squared_is_zero());
        for d in 1..=5 {
            let k = PseudoComplex::build(&sphere(d)).unwrap();
            assert_eq!(k.euler_characteristic(), if d % 2 == 0 { 2 } else { 0 });
            assert_eq!(k.homology(), HomologyProfile::sphere(d));
        }
    }

    #[test]
    fn homology_display() {
        assert_eq!(
            HomologyProfile::sphere(3).to_string(),
            "H0=Z H1=0 H2=0 H3=Z"
        );
        assert_eq!(HomologyGroup::new(2, vec![2]).to_string(), "Z^2+Z_2");
    }

    #[test]
    fn verdicts_for_spheres() {
        assert_eq!(
            manifold_check(&sphere(1)).unwrap(),
            ManifoldVerdict::CertifiedCurve
        );
        assert_eq!(
            manifold_check(&sphere(2)).unwrap(),
            ManifoldVerdict::CertifiedSurface
        );
        assert_eq!(
            manifold_check(&sphere(3)).unwrap(),
            ManifoldVerdict::Certified3Manifold
        );
        assert_eq!(
            manifold_check(&sphere(5)).unwrap(),
            ManifoldVerdict::HomologyCertified
        );
    }

    #[test]
    fn consistency_needs_surfaces() {
        assert_eq!(
            consistency_surface(&sphere(3)),
            Err(GemError::WrongDimension {
                expected: 2,
                actual: 3
            })
        );
        let c = consistency_surface(&sphere(2)).unwrap();
        assert!(c.holds());
        assert_eq!(c.chi_complex, 2);
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = ColoredGraph::new(2, vec![vec![1, 0, 3, 2]; 3]).unwrap();
        assert!(matches!(
            PseudoComplex::build(&g),
            Err(GemError::Disconnected { .. })
        ));
    }
}
