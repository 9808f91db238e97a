//! Small embedded gems of the projective plane, the sphere, the torus and the
//! Klein bottle, each validated against its face type, order, Euler
//! characteristic and orientability.

use serde::{Deserialize, Serialize};

use crate::embedding::BigonPolicy;
use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::search::{find_first, BipartiteFilter, FaceConstraint, SearchSpec};

use super::groups::{cayley_gem, reflection_gem};
use super::{cached, rp2_sum_gem, ExpectedInvariants, FamilySpec};

/// A named parameter with its admissible range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterRange {
    pub name: String,
    pub min: i64,
    pub max: Option<i64>,
    pub even: bool,
    pub description: String,
}

/// How a catalog entry is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    Explicit,
    Cayley,
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub surface: String,
    /// Face type under the identity permutation; `0` stands for the
    /// parametric face.
    pub signature: Vec<usize>,
    /// Order, or for parametric entries the factor multiplying `p`.
    pub order: usize,
    pub parametric_order: bool,
    pub chi: i64,
    pub orientable: bool,
    pub parameter: Option<ParameterRange>,
    pub construction: Construction,
    /// Entries too large for the default search budget are off by default.
    pub default_enabled: bool,
}

impl CatalogEntry {
    fn fixed(
        name: &str,
        surface: &str,
        sig: &[usize],
        order: usize,
        chi: i64,
        orientable: bool,
        how: Construction,
    ) -> Self {
        CatalogEntry {
            name: name.into(),
            surface: surface.into(),
            signature: sig.to_vec(),
            order,
            parametric_order: false,
            chi,
            orientable,
            parameter: None,
            construction: how,
            default_enabled: true,
        }
    }

    fn resolve(&self, p: Option<usize>) -> Result<(Vec<usize>, usize)> {
        match &self.parameter {
            None => Ok((self.signature.clone(), self.order)),
            Some(range) => {
                let p = p.ok_or_else(|| GemError::InvalidParameters {
                    family: self.name.clone(),
                    reason: format!("parameter {} is required", range.name),
                })?;
                let ok = p as i64 >= range.min
                    && range.max.is_none_or(|m| p as i64 <= m)
                    && (!range.even || p % 2 == 0);
                if !ok {
                    return Err(GemError::InvalidParameters {
                        family: self.name.clone(),
                        reason: format!("{} = {p} out of range", range.name),
                    });
                }
                let face = if self.name == "rp2-4.4.2p" { 2 * p } else { p };
                let sig = self
                    .signature
                    .iter()
                    .map(|&q| if q == 0 { face } else { q })
                    .collect();
                Ok((sig, self.order * p))
            }
        }
    }

    /// The validation spec for parameter `p`.
    pub fn spec(&self, p: Option<usize>) -> Result<FamilySpec> {
        let (sig, order) = self.resolve(p)?;
        let mut params = Vec::new();
        if let (Some(r), Some(p)) = (&self.parameter, p) {
            params.push((r.name.clone(), p as i64));
        }
        Ok(FamilySpec {
            family: self.name.clone(),
            params,
            expected: ExpectedInvariants {
                order: Some(order),
                bipartite: Some(self.orientable),
                signature: Some(sig),
                bigons: BigonPolicy::Exclude,
                chi: Some(self.chi),
                ..Default::default()
            },
        })
    }
}

fn all_entries() -> Vec<CatalogEntry> {
    use Construction::*;
    let mut v = vec![
        CatalogEntry::fixed(
            "rp2-4.4.4",
            "projective plane",
            &[4, 4, 4],
            4,
            1,
            false,
            Explicit,
        ),
        CatalogEntry {
            name: "rp2-4.4.2p".into(),
            surface: "projective plane".into(),
            signature: vec![4, 4, 0],
            order: 2,
            parametric_order: true,
            chi: 1,
            orientable: false,
            parameter: Some(ParameterRange {
                name: "p".into(),
                min: 2,
                max: None,
                even: true,
                description: "half the length of the long face".into(),
            }),
            construction: Explicit,
            default_enabled: true,
        },
        CatalogEntry::fixed(
            "rp2-4.6.8",
            "projective plane",
            &[6, 8, 4],
            24,
            1,
            false,
            Cayley,
        ),
        CatalogEntry::fixed("s2-4.4.4", "sphere", &[4, 4, 4], 8, 2, true, Explicit),
        CatalogEntry {
            name: "s2-4.4.p".into(),
            surface: "sphere".into(),
            signature: vec![4, 4, 0],
            order: 2,
            parametric_order: true,
            chi: 2,
            orientable: true,
            parameter: Some(ParameterRange {
                name: "p".into(),
                min: 4,
                max: None,
                even: true,
                description: "length of the two long faces".into(),
            }),
            construction: Explicit,
            default_enabled: true,
        },
        CatalogEntry::fixed("s2-6.6.4", "sphere", &[6, 6, 4], 24, 2, true, Cayley),
        CatalogEntry::fixed("torus-6.6.6", "torus", &[6, 6, 6], 12, 0, true, Search),
        CatalogEntry::fixed("torus-4.8.8", "torus", &[4, 8, 8], 16, 0, true, Search),
        CatalogEntry::fixed("torus-4.6.12", "torus", &[4, 6, 12], 24, 0, true, Search),
        CatalogEntry::fixed(
            "klein-6.6.6",
            "Klein bottle",
            &[6, 6, 6],
            12,
            0,
            false,
            Search,
        ),
        CatalogEntry::fixed(
            "klein-4.8.8",
            "Klein bottle",
            &[4, 8, 8],
            16,
            0,
            false,
            Search,
        ),
        CatalogEntry::fixed(
            "klein-4.6.12",
            "Klein bottle",
            &[4, 6, 12],
            24,
            0,
            false,
            Search,
        ),
    ];
    for (name, surface, sig, order, chi, orientable) in [
        ("s2-4.6.8", "sphere", [6, 8, 4], 48, 2, true),
        ("s2-4.6.10", "sphere", [6, 10, 4], 120, 2, true),
        ("rp2-4.6.10", "projective plane", [6, 10, 4], 60, 1, false),
    ] {
        let mut e = CatalogEntry::fixed(name, surface, &sig, order, chi, orientable, Cayley);
        e.default_enabled = false;
        v.push(e);
    }
    v
}

/// Entries built by default.
pub fn catalog_entries() -> Vec<CatalogEntry> {
    all_entries()
        .into_iter()
        .filter(|e| e.default_enabled)
        .collect()
}

/// Every entry, including the large optional ones.
pub fn catalog_entries_all() -> Vec<CatalogEntry> {
    all_entries()
}

pub fn catalog_entry(name: &str) -> Result<CatalogEntry> {
    all_entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| GemError::UnknownName(name.into()))
}

/// The `(4,4,2p)` gem on `Z_{2p}`: color 0 on `(2t, 2t+1)`, color 2 on
/// `(2t+1, 2t+2)`, color 1 the antipodal map.
fn rp2_44_2p(p: usize) -> Result<ColoredGraph> {
    let n = 2 * p;
    let m0 = (0..n).map(|i| i ^ 1).collect();
    let m1 = (0..n).map(|i| (i + p) % n).collect();
    let m2 = (0..n)
        .map(|i| {
            if i % 2 == 1 {
                (i + 1) % n
            } else {
                (i + n - 1) % n
            }
        })
        .collect();
    ColoredGraph::new(2, vec![m0, m1, m2])
}

/// Two `{0,2}`-cycles of length `p` joined by a color-1 prism matching.
fn s2_44_p(p: usize) -> Result<ColoredGraph> {
    let n = 2 * p;
    let mut edges = Vec::new();
    for half in [0, p] {
        for j in 0..p {
            let color = if j % 2 == 0 { 0 } else { 2 };
            edges.push((half + j, half + (j + 1) % p, color));
        }
    }
    for j in 0..p {
        edges.push((j, p + j, 1));
    }
    ColoredGraph::from_edges(2, n, &edges)
}

fn searched(entry: &CatalogEntry) -> Result<ColoredGraph> {
    let mut spec = SearchSpec::new(3, entry.order);
    spec.faces = FaceConstraint::PerPair(entry.signature.iter().map(|&q| vec![q]).collect());
    spec.bipartite = if entry.orientable {
        BipartiteFilter::Only
    } else {
        BipartiteFilter::None
    };
    spec.chi = Some(entry.chi);
    spec.order_budget = entry.order;
    find_first(&spec)?
        .ok_or_else(|| GemError::SearchExhausted(format!("no witness for {}", entry.name)))
}

fn build(entry: &CatalogEntry, p: Option<usize>) -> Result<ColoredGraph> {
    match entry.name.as_str() {
        "rp2-4.4.4" => rp2_sum_gem(1),
        "rp2-4.4.2p" => rp2_44_2p(p.unwrap_or(0)),
        "s2-4.4.4" => s2_44_p(4),
        "s2-4.4.p" => s2_44_p(p.unwrap_or(0)),
        // transpositions (01), (12), (23) of S_4
        "s2-6.6.4" => cayley_gem(
            &[vec![1, 0, 2, 3], vec![0, 2, 1, 3], vec![0, 1, 3, 2]],
            false,
        ),
        "rp2-4.6.8" => reflection_gem(4, false, [3, 4, 2], 24, false),
        "s2-4.6.8" => reflection_gem(4, false, [3, 4, 2], 24, true),
        "rp2-4.6.10" => reflection_gem(5, true, [3, 5, 2], 60, false),
        "s2-4.6.10" => reflection_gem(5, true, [3, 5, 2], 60, true),
        _ => cached(&entry.name, 0, || searched(entry)),
    }
}

/// Builds and validates the named entry. Parametric entries need `p`.
pub fn catalog(name: &str, p: Option<usize>) -> Result<ColoredGraph> {
    let entry = catalog_entry(name)?;
    let spec = entry.spec(p)?;
    let g = build(&entry, p)?;
    spec.validate(&g)?;
    Ok(g)
}

/// Parameter schema of a generator family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySchema {
    pub name: String,
    pub description: String,
    pub parameters: Vec<ParameterRange>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogManifest {
    pub families: Vec<FamilySchema>,
    pub entries: Vec<CatalogEntry>,
}

fn param(name: &str, min: i64, max: Option<i64>, even: bool, description: &str) -> ParameterRange {
    ParameterRange {
        name: name.into(),
        min,
        max,
        even,
        description: description.into(),
    }
}

/// Names, parameter ranges and expected invariants of every family and
/// catalog entry.
pub fn catalog_manifest() -> CatalogManifest {
    let families = vec![
        FamilySchema {
            name: "sphere".into(),
            description: "two-vertex crystallization of the d-sphere".into(),
            parameters: vec![param("d", 1, None, false, "dimension")],
        },
        FamilySchema {
            name: "lens".into(),
            description: "bipartite (4^4) gem of L(p,q), S^3 when q = 0".into(),
            parameters: vec![
                param("p", 1, None, false, "half the length of the {0,2}-cycles"),
                param("q", 0, None, false, "closing shift 2q, below p"),
                param("k", 2, None, true, "number of {0,2}-cycles"),
            ],
        },
        FamilySchema {
            name: "lens-nonbipartite".into(),
            description: "(4^4) construction with an odd closing shift; never a manifold".into(),
            parameters: vec![
                param("p", 1, None, false, "half the length of the {0,2}-cycles"),
                param("k", 2, None, true, "number of {0,2}-cycles"),
                param(
                    "r",
                    0,
                    None,
                    true,
                    "index joined to the first vertex, below 2p",
                ),
            ],
        },
        FamilySchema {
            name: "rp2-sum".into(),
            description: "((2n+2)^3) gem of the sum of n projective planes".into(),
            parameters: vec![param("n", 1, None, false, "number of summands")],
        },
        FamilySchema {
            name: "torus-sum".into(),
            description: "((4n+2)^3) gem of the sum of n tori".into(),
            parameters: vec![param("n", 1, None, false, "number of summands")],
        },
        FamilySchema {
            name: "sphere-times-circle".into(),
            description: "(2^(d-2),6^3) gem of S^(d-1) x S^1 or its twisted version".into(),
            parameters: vec![
                param("d", 3, None, false, "dimension"),
                param(
                    "twisted",
                    0,
                    Some(1),
                    false,
                    "1 for the nonorientable bundle",
                ),
            ],
        },
    ];
    CatalogManifest {
        families,
        entries: all_entries(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_entries() {
        for p in [2, 4, 6] {
            catalog("rp2-4.4.2p", Some(p)).unwrap();
        }
        for p in [4, 6, 8] {
            catalog("s2-4.4.p", Some(p)).unwrap();
        }
        assert!(matches!(
            catalog("rp2-4.4.2p", Some(3)),
            Err(GemError::InvalidParameters { .. })
        ));
        assert!(matches!(
            catalog("rp2-4.4.2p", None),
            Err(GemError::InvalidParameters { .. })
        ));
        assert!(matches!(
            catalog("nope", None),
            Err(GemError::UnknownName(_))
        ));
    }

    #[test]
    fn cayley_entries() {
        assert_eq!(catalog("s2-6.6.4", None).unwrap().order(), 24);
        assert_eq!(catalog("rp2-4.6.8", None).unwrap().order(), 24);
    }
}
