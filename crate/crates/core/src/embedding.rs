//! Regular embeddings of colored graphs.
//!
//! Each cyclic arrangement `ε` of the colors determines a surface in which
//! every face is bounded by an `{ε_i, ε_{i+1}}`-colored cycle. Its Euler
//! characteristic is `Σ g_{ε_i ε_{i+1}} + (1 - d) n / 2` and its (half-)genus
//! is `1 - χ/2`, stored doubled so no fractions are needed.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GemError, Result};
use crate::graph::{ColorSet, ColoredGraph};
use crate::perm::next_permutation;

/// A half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_int(x: i64) -> Self {
        HalfInt(2 * x)
    }

    pub fn doubled(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Whether faces bounded by 2-gons are admitted when deciding semi-equivelarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum BigonPolicy {
    Include,
    #[default]
    Exclude,
}

/// A cyclic arrangement of `{0, .., d}` up to rotation and reflection, stored
/// with `ε_0 = 0` and `ε_1 < ε_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CyclicPermutation(Vec<usize>);

impl CyclicPermutation {
    /// Canonicalizes any arrangement of `0..=d`.
    pub fn new(arrangement: Vec<usize>) -> Result<Self> {
        let k = arrangement.len();
        if k < 2 || !crate::graph::is_permutation(&arrangement) {
            return Err(GemError::InvalidGraph(format!(
                "{arrangement:?} is not an arrangement of 0..={}",
                k.saturating_sub(1)
            )));
        }
        let start = arrangement.iter().position(|&x| x == 0).unwrap();
        let mut rotated: Vec<usize> = (0..k).map(|i| arrangement[(start + i) % k]).collect();
        if k > 2 && rotated[1] > rotated[k - 1] {
            rotated[1..].reverse();
        }
        Ok(CyclicPermutation(rotated))
    }

    pub fn identity(dimension: usize) -> Self {
        CyclicPermutation((0..=dimension).collect())
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    /// The consecutive color pairs `(ε_i, ε_{i+1})` for `i` in `Z_{d+1}`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }

    /// Image under a color bijection, re-canonicalized.
    pub fn map_colors(&self, color_map: &[usize]) -> Self {
        CyclicPermutation::new(self.0.iter().map(|&c| color_map[c]).collect()).expect("bijection")
    }
}

impl TryFrom<Vec<usize>> for CyclicPermutation {
    type Error = GemError;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        CyclicPermutation::new(v)
    }
}

impl From<CyclicPermutation> for Vec<usize> {
    fn from(p: CyclicPermutation) -> Self {
        p.0
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// All canonical cyclic permutations of `{0, .., d}`, sorted lexicographically:
/// `d!/2` of them for `d ≥ 2`, one for `d = 1`.
pub fn all_cyclic_permutations(dimension: usize) -> Vec<CyclicPermutation> {
    if dimension == 0 {
        return Vec::new();
    }
    let mut rest: Vec<usize> = (1..=dimension).collect();
    let mut out = Vec::new();
    loop {
        if rest.len() < 2 || rest[0] < rest[rest.len() - 1] {
            let mut e = vec![0];
            e.extend_from_slice(&rest);
            out.push(CyclicPermutation(e));
        }
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out
}

/// Per-pair component counts `g_{ε_i ε_{i+1}}`.
pub fn pair_g_values(g: &ColoredGraph, eps: &CyclicPermutation) -> Vec<usize> {
    eps.pairs()
        .map(|(a, b)| g.g(ColorSet::EMPTY.with(a).with(b)))
        .collect()
}

fn check_eps(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<()> {
    if eps.dimension() != g.dimension() {
        return Err(GemError::WrongDimension {
            expected: g.dimension(),
            actual: eps.dimension(),
        });
    }
    Ok(())
}

/// `χ_ε(Γ) = Σ_i g_{ε_i ε_{i+1}} + (1 - d) n / 2`.
pub fn euler_characteristic(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<i64> {
    g.require_connected()?;
    check_eps(g, eps)?;
    let faces: usize = pair_g_values(g, eps).iter().sum();
    let d = g.dimension() as i64;
    Ok(faces as i64 + (1 - d) * (g.order() as i64) / 2)
}

/// The same quantity counted as `V - E + F` of the embedded graph.
pub fn euler_characteristic_vef(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<i64> {
    g.require_connected()?;
    check_eps(g, eps)?;
    let v = g.order() as i64;
    let e = (g.order() * g.color_count() / 2) as i64;
    let mut f = 0i64;
    for (a, b) in eps.pairs() {
        let mut seen = vec![false; g.order()];
        for x in 0..g.order() {
            if !seen[x] {
                f += 1;
                let mut y = x;
                loop {
                    seen[y] = true;
                    y = g.neighbor(y, a);
                    seen[y] = true;
                    y = g.neighbor(y, b);
                    if y == x {
                        break;
                    }
                }
            }
        }
    }
    Ok(v - e + f)
}

/// `ρ_ε = 1 - χ_ε/2`.
pub fn rho(chi: i64) -> HalfInt {
    HalfInt(2 - chi)
}

/// Interpretation of the regular genus of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenusMeaning {
    /// Bipartite: the genus of an orientable surface.
    Genus,
    /// Non-bipartite: half the genus of a non-orientable surface.
    HalfNonorientableGenus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularGenus {
    pub rho: HalfInt,
    pub witnesses: Vec<CyclicPermutation>,
    pub meaning: GenusMeaning,
}

/// Minimum of `ρ_ε` over every cyclic permutation, with every minimizer.
pub fn regular_genus(g: &ColoredGraph) -> Result<RegularGenus> {
    g.require_connected()?;
    let mut best: Option<HalfInt> = None;
    let mut witnesses = Vec::new();
    for eps in all_cyclic_permutations(g.dimension()) {
        let r = rho(euler_characteristic(g, &eps)?);
        match best.map(|b| r.cmp(&b)) {
            Some(Ordering::Greater) => continue,
            Some(Ordering::Less) | None => {
                best = Some(r);
                witnesses.clear();
            }
            Some(Ordering::Equal) => {}
        }
        witnesses.push(eps);
    }
    let meaning = if g.is_bipartite() {
        GenusMeaning::Genus
    } else {
        GenusMeaning::HalfNonorientableGenus
    };
    Ok(RegularGenus {
        rho: best.expect("d >= 1 has a permutation"),
        witnesses,
        meaning,
    })
}

/// A face-cycle type `(f_0, .., f_d)`, compared up to rotation and reflection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeSignature(Vec<usize>);

impl TypeSignature {
    pub fn new(faces: Vec<usize>) -> Self {
        TypeSignature(faces)
    }

    pub fn faces(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Least rotation or reflection of the tuple.
    pub fn canonical(&self) -> Vec<usize> {
        canonical_cyclic(&self.0)
    }

    pub fn equivalent(&self, other: &TypeSignature) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    /// Multiset equality: strictly weaker than `equivalent`.
    pub fn same_multiset(&self, other: &TypeSignature) -> bool {
        let mut a = self.0.clone();
        let mut b = other.0.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    pub fn has_bigon(&self) -> bool {
        self.0.contains(&2)
    }

    /// Maximal cyclic runs `(q, k)` read from the canonical tuple, starting
    /// at a run boundary.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        condensed_runs(&self.canonical())
    }

    /// Condensed notation such as `(4^2,8)`.
    pub fn condensed(&self) -> String {
        format_runs(&self.runs())
    }
}

impl fmt::Display for TypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn canonical_cyclic(xs: &[usize]) -> Vec<usize> {
    let k = xs.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..k {
        for dir in [false, true] {
            let cand: Vec<usize> = (0..k)
                .map(|i| {
                    if dir {
                        xs[(start + k - i) % k]
                    } else {
                        xs[(start + i) % k]
                    }
                })
                .collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

pub(crate) fn condensed_runs(xs: &[usize]) -> Vec<(usize, usize)> {
    let k = xs.len();
    if k == 0 {
        return Vec::new();
    }
    if xs.iter().all(|&x| x == xs[0]) {
        return vec![(xs[0], k)];
    }
    // start right after a change so no run wraps around
    let start = (0..k).find(|&i| xs[i] != xs[(i + k - 1) % k]).unwrap();
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for i in 0..k {
        let x = xs[(start + i) % k];
        match runs.last_mut() {
            Some((q, n)) if *q == x => *n += 1,
            _ => runs.push((x, 1)),
        }
    }
    runs
}

pub(crate) fn format_runs(runs: &[(usize, usize)]) -> String {
    let parts: Vec<String> = runs
        .iter()
        .map(|&(q, k)| {
            if k == 1 {
                q.to_string()
            } else {
                format!("{q}^{k}")
            }
        })
        .collect();
    format!("({})", parts.join(","))
}

/// Lengths of the `{ε_i, ε_{i+1}}`-cycles through `x`, in `ε` order.
pub fn face_cycle_type(
    g: &ColoredGraph,
    eps: &CyclicPermutation,
    x: usize,
) -> Result<TypeSignature> {
    check_eps(g, eps)?;
    if x >= g.order() {
        return Err(GemError::VertexOutOfRange {
            vertex: x,
            order: g.order(),
        });
    }
    Ok(TypeSignature(
        eps.pairs()
            .map(|(a, b)| g.bicolored_cycle_length(x, a, b))
            .collect(),
    ))
}

/// The common face-cycle type of every vertex under `ε`, if there is one.
///
/// The returned tuple is the one seen at vertex 0. With
/// [`BigonPolicy::Exclude`] any 2-gon face disqualifies the embedding.
pub fn semi_equivelar_type(
    g: &ColoredGraph,
    eps: &CyclicPermutation,
    bigons: BigonPolicy,
) -> Result<Option<TypeSignature>> {
    g.require_connected()?;
    let first = face_cycle_type(g, eps, 0)?;
    if bigons == BigonPolicy::Exclude && first.has_bigon() {
        return Ok(None);
    }
    let canon = first.canonical();
    for x in 1..g.order() {
        if face_cycle_type(g, eps, x)?.canonical() != canon {
            return Ok(None);
        }
    }
    Ok(Some(first))
}

/// Weaker diagnostic: do all vertices see the same multiset of face lengths?
pub fn same_face_multiset(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<bool> {
    let first = face_cycle_type(g, eps, 0)?;
    for x in 1..g.order() {
        if !face_cycle_type(g, eps, x)?.same_multiset(&first) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Everything known about one regular embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub epsilon: CyclicPermutation,
    pub g_values: Vec<usize>,
    pub chi: i64,
    pub rho_times_2: i64,
    pub orientable: bool,
    #[serde(rename = "type")]
    pub signature: Option<Vec<usize>>,
    pub condensed: Option<String>,
    pub bigons: BigonPolicy,
}

impl EmbeddingReport {
    pub fn rho(&self) -> HalfInt {
        HalfInt(self.rho_times_2)
    }

    pub fn is_semi_equivelar(&self) -> bool {
        self.signature.is_some()
    }
}

pub fn embedding_report(
    g: &ColoredGraph,
    eps: &CyclicPermutation,
    bigons: BigonPolicy,
) -> Result<EmbeddingReport> {
    let chi = euler_characteristic(g, eps)?;
    let sig = semi_equivelar_type(g, eps, bigons)?;
    Ok(EmbeddingReport {
        epsilon: eps.clone(),
        g_values: pair_g_values(g, eps),
        chi,
        rho_times_2: rho(chi).doubled(),
        orientable: g.is_bipartite(),
        condensed: sig.as_ref().map(TypeSignature::condensed),
        signature: sig.map(|s| s.0),
        bigons,
    })
}

/// One report per cyclic permutation plus the least `ρ_ε` among the
/// semi-equivelar ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiEquivelarReport {
    pub reports: Vec<EmbeddingReport>,
    /// Least `ρ_ε` (doubled) over semi-equivelar embeddings; an upper bound
    /// for the semi-equivelar genus of the represented manifold.
    pub witness_rho_times_2: Option<i64>,
    pub witness_epsilon: Option<CyclicPermutation>,
    pub regular_genus_times_2: i64,
}

impl SemiEquivelarReport {
    pub fn witness(&self) -> Option<HalfInt> {
        self.witness_rho_times_2.map(HalfInt)
    }

    pub fn witness_report(&self) -> Option<&EmbeddingReport> {
        let eps = self.witness_epsilon.as_ref()?;
        self.reports.iter().find(|r| &r.epsilon == eps)
    }
}

pub fn semi_equivelar_report(g: &ColoredGraph, bigons: BigonPolicy) -> Result<SemiEquivelarReport> {
    g.require_connected()?;
    let mut reports = all_cyclic_permutations(g.dimension())
        .iter()
        .map(|eps| embedding_report(g, eps, bigons))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| (a.rho_times_2, &a.epsilon).cmp(&(b.rho_times_2, &b.epsilon)));
    let witness = reports.iter().find(|r| r.is_semi_equivelar());
    Ok(SemiEquivelarReport {
        witness_rho_times_2: witness.map(|r| r.rho_times_2),
        witness_epsilon: witness.map(|r| r.epsilon.clone()),
        regular_genus_times_2: reports[0].rho_times_2,
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(all_cyclic_permutations(1).len(), 1);
        assert_eq!(all_cyclic_permutations(2).len(), 1);
        let three: Vec<Vec<usize>> = all_cyclic_permutations(3)
            .into_iter()
            .map(Vec::from)
            .collect();
        assert_eq!(
            three,
            vec![vec![0, 1, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 1, 3]]
        );
        assert_eq!(all_cyclic_permutations(4).len(), 12);
        assert_eq!(all_cyclic_permutations(5).len(), 60);
    }

    #[test]
    fn canonicalization_kills_rotation_and_reflection() {
        let a = CyclicPermutation::new(vec![2, 3, 0, 1]).unwrap();
        let b = CyclicPermutation::new(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.colors(), &[0, 1, 2, 3]);
        assert!(CyclicPermutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn half_integers_display() {
        assert_eq!(HalfInt(2).to_string(), "1");
        assert_eq!(HalfInt(1).to_string(), "1/2");
        assert_eq!(rho(1), HalfInt(1));
        assert_eq!(rho(-2), HalfInt(4));
    }

    #[test]
    fn condensed_notation() {
        assert_eq!(TypeSignature::new(vec![6, 6, 6, 2]).condensed(), "(2,6^3)");
        assert_eq!(
            TypeSignature::new(vec![6, 2, 2, 6, 6]).condensed(),
            "(2^2,6^3)"
        );
        assert_eq!(TypeSignature::new(vec![4, 4, 4, 4]).condensed(), "(4^4)");
        assert_eq!(TypeSignature::new(vec![8, 4, 8]).condensed(), "(4,8^2)");
        assert_eq!(TypeSignature::new(vec![12, 4, 6]).condensed(), "(4,6,12)");
        assert_eq!(
            TypeSignature::new(vec![4, 6, 4, 6]).condensed(),
            "(4,6,4,6)"
        );
    }

    #[test]
    fn signature_equivalence_is_cyclic_not_multiset() {
        let a = TypeSignature::new(vec![4, 4, 6, 6]);
        let b = TypeSignature::new(vec![6, 4, 4, 6]);
        let c = TypeSignature::new(vec![4, 6, 4, 6]);
        assert!(a.equivalent(&b));
        assert!(!a.equivalent(&c));
        assert!(a.same_multiset(&c));
    }
}
