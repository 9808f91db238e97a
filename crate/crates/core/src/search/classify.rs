//! Exhaustive classification of `(4^4)`-type 4-colored graphs.

use serde::{Deserialize, Serialize};

use crate::complex::{self, HomologyGroup, HomologyProfile, ManifoldVerdict};
use crate::error::{GemError, Result};
use crate::generators::lens_gem;
use crate::graph::ColoredGraph;
use crate::io::GemFile;
use crate::iso::{isomorphic, ColorMode};

use super::engine::{find_gems, SearchSpec};

/// One `(4^4)` graph up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedGem {
    pub order: usize,
    pub canonical: String,
    pub bipartite: bool,
    pub verdict: ManifoldVerdict,
    pub homology: HomologyProfile,
    /// `(p, q, k)` of a lens gem isomorphic to this one (colors permuted).
    pub lens: Option<(usize, usize, usize)>,
    pub graph: GemFile,
}

impl ClassifiedGem {
    pub fn is_manifold(&self) -> bool {
        self.verdict.passed()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub order: usize,
    pub hits: usize,
    pub bipartite: usize,
    pub bipartite_manifolds: usize,
    pub nonbipartite_manifolds: usize,
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub order_max: usize,
    pub exhaustive: bool,
    pub per_order: Vec<OrderSummary>,
    pub gems: Vec<ClassifiedGem>,
    /// Every bipartite manifold hit is isomorphic to a lens gem.
    pub bipartite_manifolds_are_lens: bool,
    /// Every bipartite hit is isomorphic to a lens gem.
    pub bipartite_hits_are_lens: bool,
    pub no_nonbipartite_manifold: bool,
    /// No hit has `H_1 = Z`, as `S^2 × S^1` and its twisted version do.
    pub no_sphere_times_circle: bool,
}

fn lens_match(g: &ColoredGraph) -> Result<Option<(usize, usize, usize)>> {
    let n = g.order();
    for k in (2..=n / 2).step_by(2) {
        if !n.is_multiple_of(2 * k) {
            continue;
        }
        let p = n / (2 * k);
        for q in 0..p {
            let l = lens_gem(p, q, k)?;
            if isomorphic(g, &l, ColorMode::ColorPermuting).is_some() {
                return Ok(Some((p, q, k)));
            }
        }
    }
    Ok(None)
}

/// Classifies every connected 4-colored graph of order at most `order_max`
/// having, for some cyclic permutation of the colors, all consecutive-pair
/// faces of length 4.
pub fn classify_4_4(order_max: usize, order_budget: usize) -> Result<ClassificationReport> {
    if order_max > order_budget {
        return Err(GemError::BudgetExceeded(format!(
            "order {order_max} exceeds the classification budget {order_budget}"
        )));
    }
    let mut per_order = Vec::new();
    let mut gems = Vec::new();
    for order in (4..=order_max).step_by(4) {
        let mut spec = SearchSpec::uniform(4, order, &[4]);
        spec.order_budget = order_budget;
        let report = find_gems(&spec)?;
        let mut summary = OrderSummary {
            order,
            hits: report.hit_count,
            bipartite: 0,
            bipartite_manifolds: 0,
            nonbipartite_manifolds: 0,
            exhaustive: report.exhaustive,
        };
        for hit in report.hits {
            let g = hit.graph();
            let verdict = complex::manifold_check(&g)?;
            let homology = complex::homology(&g)?;
            let lens = if hit.bipartite { lens_match(&g)? } else { None };
            if hit.bipartite {
                summary.bipartite += 1;
                if verdict.passed() {
                    summary.bipartite_manifolds += 1;
                }
            } else if verdict.passed() {
                summary.nonbipartite_manifolds += 1;
            }
            gems.push(ClassifiedGem {
                order,
                canonical: hit.canonical,
                bipartite: hit.bipartite,
                verdict,
                homology,
                lens,
                graph: hit.graph,
            });
        }
        per_order.push(summary);
    }
    Ok(ClassificationReport {
        order_max,
        exhaustive: per_order.iter().all(|s| s.exhaustive),
        bipartite_manifolds_are_lens: gems
            .iter()
            .filter(|g| g.bipartite && g.is_manifold())
            .all(|g| g.lens.is_some()),
        bipartite_hits_are_lens: gems
            .iter()
            .filter(|g| g.bipartite)
            .all(|g| g.lens.is_some()),
        no_nonbipartite_manifold: gems.iter().all(|g| g.bipartite || !g.is_manifold()),
        no_sphere_times_circle: gems
            .iter()
            .all(|g| *g.homology.get(1) != HomologyGroup::free(1)),
        per_order,
        gems,
    })
}
