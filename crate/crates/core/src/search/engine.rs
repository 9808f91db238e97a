//! Depth-first construction of colored graphs with prescribed face lengths.
//!
//! Color 0 is fixed to the matching `(2t, 2t+1)` and the color-1 partner of
//! vertex 1 is restricted to `{0, 2}`; every graph is isomorphic to one of
//! this shape. Remaining matchings are filled color by color, smallest free
//! vertex first. After each edge the alternating walks through it are
//! followed: a closed face must have an admissible length and an open path
//! already too long for any admissible face is cut. Leaves are re-verified
//! and deduplicated by color-permuting canonical form.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embedding::{self, BigonPolicy, CyclicPermutation, TypeSignature};
use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::io::GemFile;
use crate::iso::{canonical_form, canonical_labeling, ColorMode};

const UNSET: usize = usize::MAX;

/// Face-length constraints, relative to the spec's cyclic permutation.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FaceConstraint {
    #[default]
    Any,
    /// Admissible lengths for the faces of each consecutive pair
    /// `(ε_i, ε_{i+1})`; an empty list admits every length.
    PerPair(Vec<Vec<usize>>),
    /// Every vertex sees this tuple up to rotation and reflection.
    Signature(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BipartiteFilter {
    #[default]
    Any,
    Only,
    None,
}

fn default_order_budget() -> usize {
    24
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    pub colors: usize,
    pub order: usize,
    #[serde(default)]
    pub epsilon: Option<Vec<usize>>,
    #[serde(default)]
    pub faces: FaceConstraint,
    #[serde(default)]
    pub chi: Option<i64>,
    #[serde(default)]
    pub bipartite: BipartiteFilter,
    #[serde(default)]
    pub bigons: BigonPolicy,
    #[serde(default = "default_order_budget")]
    pub order_budget: usize,
    #[serde(default)]
    pub node_budget: Option<u64>,
    /// Stop after this many distinct hits. Makes the search sequential.
    #[serde(default)]
    pub limit: Option<usize>,
}

impl SearchSpec {
    pub fn new(colors: usize, order: usize) -> Self {
        SearchSpec {
            colors,
            order,
            epsilon: None,
            faces: FaceConstraint::Any,
            chi: None,
            bipartite: BipartiteFilter::Any,
            bigons: BigonPolicy::Exclude,
            order_budget: default_order_budget(),
            node_budget: None,
            limit: None,
        }
    }

    /// Every face of every consecutive pair has one of `lengths`.
    pub fn uniform(colors: usize, order: usize, lengths: &[usize]) -> Self {
        let mut s = SearchSpec::new(colors, order);
        s.faces = FaceConstraint::PerPair(vec![lengths.to_vec(); colors]);
        s
    }

    pub fn signature(colors: usize, order: usize, sig: &[usize]) -> Self {
        let mut s = SearchSpec::new(colors, order);
        s.faces = FaceConstraint::Signature(sig.to_vec());
        s
    }

    fn cyclic(&self) -> Result<CyclicPermutation> {
        match &self.epsilon {
            Some(e) => CyclicPermutation::new(e.clone()),
            None => Ok(CyclicPermutation::identity(self.colors - 1)),
        }
    }

    fn check(&self) -> Result<()> {
        let bad = |reason: &str| GemError::InvalidParameters {
            family: "search".into(),
            reason: reason.into(),
        };
        if !(3..=4).contains(&self.colors) {
            return Err(bad("color count must be 3 or 4"));
        }
        if self.order == 0 || !self.order.is_multiple_of(2) {
            return Err(bad("order must be positive and even"));
        }
        if self.order > self.order_budget {
            return Err(GemError::BudgetExceeded(format!(
                "order {} exceeds the order budget {}",
                self.order, self.order_budget
            )));
        }
        let lengths: Vec<usize> = match &self.faces {
            FaceConstraint::Any => vec![],
            FaceConstraint::PerPair(v) => {
                if v.len() != self.colors {
                    return Err(bad(
                        "per-pair constraint needs one entry per consecutive pair",
                    ));
                }
                v.iter().flatten().copied().collect()
            }
            FaceConstraint::Signature(s) => {
                if s.len() != self.colors {
                    return Err(bad("signature needs one entry per consecutive pair"));
                }
                s.clone()
            }
        };
        if lengths.iter().any(|&l| l < 2 || l % 2 != 0) {
            return Err(bad("face lengths must be even and at least 2"));
        }
        if self.bigons == BigonPolicy::Exclude && lengths.contains(&2) {
            return Err(bad("2-gon faces requested with bigons excluded"));
        }
        if let Some(e) = &self.epsilon {
            if e.len() != self.colors {
                return Err(bad("epsilon must list every color"));
            }
        }
        Ok(())
    }
}

/// One distinct graph found, with its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub canonical: String,
    pub bipartite: bool,
    pub chi: i64,
    pub signature: Vec<usize>,
    pub graph: GemFile,
}

impl SearchHit {
    pub fn graph(&self) -> ColoredGraph {
        ColoredGraph::try_from(self.graph.clone()).expect("search hits are valid graphs")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub spec: SearchSpec,
    /// True when every branch was explored, i.e. neither the node budget nor
    /// the hit limit cut the search short.
    pub exhaustive: bool,
    pub nodes: u64,
    pub hit_count: usize,
    pub hits: Vec<SearchHit>,
}

impl SearchReport {
    pub fn graphs(&self) -> Vec<ColoredGraph> {
        self.hits.iter().map(SearchHit::graph).collect()
    }
}

struct Problem {
    k: usize,
    n: usize,
    /// `(a, b)` per constrained face pair.
    pairs: Vec<(usize, usize)>,
    /// `allowed[i][l]` for pair `i` and length `l`.
    allowed: Vec<Vec<bool>>,
    max_len: Vec<usize>,
    /// Per-length multiplicity of the signature.
    sig_counts: Option<Vec<usize>>,
    node_budget: Option<u64>,
}

#[derive(Clone)]
struct State {
    m: Vec<Vec<usize>>,
    /// `counts[v][l]`: closed faces of length `l` at `v` (signature mode).
    counts: Vec<Vec<u8>>,
    trail: Vec<(usize, usize)>,
}

enum Walk {
    Closed(usize),
    Open(usize),
}

impl Problem {
    fn build(spec: &SearchSpec) -> Result<(Problem, CyclicPermutation)> {
        spec.check()?;
        let eps = spec.cyclic()?;
        let n = spec.order;
        let pairs: Vec<(usize, usize)> = eps.pairs().collect();
        let no_bigon = spec.bigons == BigonPolicy::Exclude;
        let mut allowed = Vec::new();
        let mut sig_counts = None;
        match &spec.faces {
            FaceConstraint::Any => {
                for _ in &pairs {
                    allowed.push(
                        (0..=n)
                            .map(|l| l % 2 == 0 && l >= 2 && !(no_bigon && l == 2))
                            .collect(),
                    );
                }
            }
            FaceConstraint::PerPair(v) => {
                for lens in v {
                    allowed.push(
                        (0..=n)
                            .map(|l| {
                                l % 2 == 0
                                    && l >= 2
                                    && !(no_bigon && l == 2)
                                    && (lens.is_empty() || lens.contains(&l))
                            })
                            .collect(),
                    );
                }
            }
            FaceConstraint::Signature(sig) => {
                let mut c = vec![0; n + 1];
                for &l in sig {
                    if l <= n {
                        c[l] += 1;
                    }
                }
                for _ in &pairs {
                    allowed.push((0..=n).map(|l| c[l] > 0).collect());
                }
                sig_counts = Some(c);
            }
        }
        let max_len = allowed
            .iter()
            .map(|a: &Vec<bool>| a.iter().rposition(|&x| x).unwrap_or(0))
            .collect();
        Ok((
            Problem {
                k: spec.colors,
                n,
                pairs,
                allowed,
                max_len,
                sig_counts,
                node_budget: spec.node_budget,
            },
            eps,
        ))
    }

    fn initial(&self) -> State {
        let mut m = vec![vec![UNSET; self.n]; self.k];
        for v in 0..self.n {
            m[0][v] = v ^ 1;
        }
        State {
            m,
            counts: vec![vec![0; self.n + 1]; self.n],
            trail: Vec::new(),
        }
    }

    fn walk(&self, st: &State, v: usize, c: usize, o: usize) -> Walk {
        let mut x = v;
        let mut cur = c;
        let mut len = 0;
        loop {
            let y = st.m[cur][x];
            if y == UNSET {
                break;
            }
            len += 1;
            x = y;
            cur = if cur == c { o } else { c };
            if x == v {
                return Walk::Closed(len);
            }
        }
        // extend backwards from v, starting with color o
        let mut x = v;
        let mut cur = o;
        loop {
            let y = st.m[cur][x];
            if y == UNSET {
                break;
            }
            len += 1;
            x = y;
            cur = if cur == c { o } else { c };
        }
        Walk::Open(len)
    }

    /// Adds edge `v w` of color `c`; on failure the state is left for the
    /// caller to roll back with [`Problem::remove`].
    fn add(&self, st: &mut State, v: usize, w: usize, c: usize) -> bool {
        st.m[c][v] = w;
        st.m[c][w] = v;
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            let o = if a == c {
                b
            } else if b == c {
                a
            } else {
                continue;
            };
            match self.walk(st, v, c, o) {
                Walk::Closed(len) => {
                    if !self.allowed[i][len] {
                        return false;
                    }
                    if let Some(sig) = &self.sig_counts {
                        let mut x = v;
                        let mut cur = c;
                        for _ in 0..len {
                            st.counts[x][len] += 1;
                            st.trail.push((x, len));
                            if st.counts[x][len] as usize > sig[len] {
                                return false;
                            }
                            x = st.m[cur][x];
                            cur = if cur == c { o } else { c };
                        }
                    }
                }
                Walk::Open(edges) => {
                    if edges + 1 > self.max_len[i] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn remove(&self, st: &mut State, v: usize, w: usize, c: usize, trail_len: usize) {
        st.m[c][v] = UNSET;
        st.m[c][w] = UNSET;
        while st.trail.len() > trail_len {
            let (x, l) = st.trail.pop().unwrap();
            st.counts[x][l] -= 1;
        }
    }

    /// Next decision: `(color, vertex)` to match, or `None` when complete.
    fn next_slot(&self, st: &State) -> Option<(usize, usize)> {
        for c in 1..self.k {
            if c == 1 && self.n > 1 && st.m[1][1] == UNSET {
                return Some((1, 1));
            }
            if let Some(v) = st.m[c].iter().position(|&x| x == UNSET) {
                return Some((c, v));
            }
        }
        None
    }

    fn candidates(&self, st: &State, c: usize, v: usize) -> Vec<usize> {
        if c == 1 && v == 1 && st.m[1].iter().all(|&x| x == UNSET) {
            return [0, 2].into_iter().filter(|&w| w < self.n).collect();
        }
        (0..self.n)
            .filter(|&w| w != v && st.m[c][w] == UNSET)
            .collect()
    }
}

struct Shared<'a> {
    problem: &'a Problem,
    nodes: AtomicU64,
    cut: AtomicBool,
}

impl Shared<'_> {
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(b) = self.problem.node_budget {
            if n > b {
                self.cut.store(true, Ordering::Relaxed);
                return false;
            }
        }
        !self.cut.load(Ordering::Relaxed)
    }
}

fn dfs<F: FnMut(&State) -> bool>(sh: &Shared, st: &mut State, leaf: &mut F) -> bool {
    if !sh.tick() {
        return false;
    }
    let p = sh.problem;
    let Some((c, v)) = p.next_slot(st) else {
        return leaf(st);
    };
    for w in p.candidates(st, c, v) {
        let t = st.trail.len();
        if p.add(st, v, w, c) && !dfs(sh, st, leaf) {
            p.remove(st, v, w, c, t);
            return false;
        }
        p.remove(st, v, w, c, t);
    }
    true
}

/// Expands the tree breadth-first until there are enough independent
/// subtrees to share between threads.
fn frontier(p: &Problem, target: usize) -> Vec<State> {
    let mut level = vec![p.initial()];
    while level.len() < target {
        let mut next = Vec::new();
        let mut progressed = false;
        for st in level {
            let Some((c, v)) = p.next_slot(&st) else {
                next.push(st);
                continue;
            };
            progressed = true;
            for w in p.candidates(&st, c, v) {
                let mut s = st.clone();
                let t = s.trail.len();
                if p.add(&mut s, v, w, c) {
                    next.push(s);
                } else {
                    p.remove(&mut s, v, w, c, t);
                }
            }
        }
        level = next;
        if !progressed {
            break;
        }
    }
    level
}

struct LeafCheck<'a> {
    spec: &'a SearchSpec,
    eps: &'a CyclicPermutation,
    k: usize,
}

impl LeafCheck<'_> {
    fn accept(&self, st: &State) -> Option<(ColoredGraph, i64, Vec<usize>)> {
        let g = ColoredGraph::new(self.k - 1, st.m.clone()).ok()?;
        if !g.is_connected() {
            return None;
        }
        let bip = g.is_bipartite();
        match self.spec.bipartite {
            BipartiteFilter::Only if !bip => return None,
            BipartiteFilter::None if bip => return None,
            _ => {}
        }
        let chi = embedding::euler_characteristic(&g, self.eps).ok()?;
        if self.spec.chi.is_some_and(|c| c != chi) {
            return None;
        }
        let sig = match &self.spec.faces {
            FaceConstraint::Signature(s) => {
                let got = embedding::semi_equivelar_type(&g, self.eps, self.spec.bigons).ok()??;
                if !got.equivalent(&TypeSignature::new(s.clone())) {
                    return None;
                }
                got.faces().to_vec()
            }
            _ => embedding::face_cycle_type(&g, self.eps, 0)
                .ok()?
                .faces()
                .to_vec(),
        };
        Some((g, chi, sig))
    }
}

type Found = (Vec<u8>, ColoredGraph, i64, Vec<usize>);

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Color-fixed canonical bytes, relabeled graph, chi and vertex-0 type.
type Representative = (Vec<u8>, ColoredGraph, i64, Vec<usize>);

/// Runs the search described by `spec`.
pub fn find_gems(spec: &SearchSpec) -> Result<SearchReport> {
    let (problem, eps) = Problem::build(spec)?;
    let sh = Shared {
        problem: &problem,
        nodes: AtomicU64::new(0),
        cut: AtomicBool::new(false),
    };
    let check = LeafCheck {
        spec,
        eps: &eps,
        k: spec.colors,
    };
    // canonical (color-permuting) -> graph found
    let mut found: Vec<Found> = Vec::new();
    let mut limited = false;

    if let Some(limit) = spec.limit {
        let mut seen = HashSet::new();
        let mut st = problem.initial();
        dfs(&sh, &mut st, &mut |st: &State| {
            if let Some((g, chi, sig)) = check.accept(st) {
                let cf = canonical_form(&g, ColorMode::ColorPermuting);
                if seen.insert(cf.clone()) {
                    found.push((cf, g, chi, sig));
                    if found.len() >= limit {
                        limited = true;
                        return false;
                    }
                }
            }
            true
        });
    } else {
        let roots = frontier(&problem, 256);
        let parts: Vec<Vec<Found>> = roots
            .into_par_iter()
            .map(|mut st| {
                let mut seen = HashSet::new();
                let mut local = Vec::new();
                dfs(&sh, &mut st, &mut |st: &State| {
                    if let Some((g, chi, sig)) = check.accept(st) {
                        let cf = canonical_form(&g, ColorMode::ColorPermuting);
                        if seen.insert(cf.clone()) {
                            local.push((cf, g, chi, sig));
                        }
                    }
                    true
                });
                local
            })
            .collect();
        found = parts.into_iter().flatten().collect();
    }

    // one representative per class: the least color-fixed canonical relabeling
    let mut classes: BTreeMap<Vec<u8>, Representative> = BTreeMap::new();
    for (cf, g, chi, _) in found {
        let lab = canonical_labeling(&g, ColorMode::ColorFixed);
        let fixed = lab.bytes();
        let rep = g.relabel(&lab.vertex_map)?;
        let sig = embedding::face_cycle_type(&rep, &eps, 0)?.faces().to_vec();
        match classes.get(&cf) {
            Some((f, ..)) if *f <= fixed => {}
            _ => {
                classes.insert(cf, (fixed, rep, chi, sig));
            }
        }
    }
    let hits: Vec<SearchHit> = classes
        .into_iter()
        .map(|(cf, (_, g, chi, sig))| SearchHit {
            canonical: hex(&cf),
            bipartite: g.is_bipartite(),
            chi,
            signature: sig,
            graph: GemFile::from(g),
        })
        .collect();
    Ok(SearchReport {
        spec: spec.clone(),
        exhaustive: !sh.cut.load(Ordering::Relaxed) && !limited,
        nodes: sh.nodes.load(Ordering::Relaxed),
        hit_count: hits.len(),
        hits,
    })
}

/// First graph satisfying `spec`, if any.
pub fn find_first(spec: &SearchSpec) -> Result<Option<ColoredGraph>> {
    let mut s = spec.clone();
    s.limit = Some(1);
    Ok(find_gems(&s)?.graphs().into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rp2_order_four_is_unique() {
        let r = find_gems(&SearchSpec::uniform(3, 4, &[4])).unwrap();
        assert!(r.exhaustive);
        assert_eq!(r.hit_count, 1);
        assert!(!r.hits[0].bipartite);
        assert_eq!(r.hits[0].chi, 1);
    }

    #[test]
    fn budgets() {
        let mut s = SearchSpec::uniform(3, 26, &[6]);
        assert!(matches!(find_gems(&s), Err(GemError::BudgetExceeded(_))));
        s.order = 12;
        s.node_budget = Some(10);
        let r = find_gems(&s).unwrap();
        assert!(!r.exhaustive);
    }

    #[test]
    fn hexagonal_torus() {
        let mut s = SearchSpec::uniform(3, 12, &[6]);
        s.bipartite = BipartiteFilter::Only;
        let r = find_gems(&s).unwrap();
        assert!(r.exhaustive);
        assert!(r.hit_count >= 1);
        for h in &r.hits {
            assert_eq!(h.chi, 0);
            assert!(h.bipartite);
        }
    }
}
