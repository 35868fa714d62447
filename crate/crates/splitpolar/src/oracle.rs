//! Brute-force ground truth for polarity and (k,l)-colorings.
//!
//! Everything here decides by exhaustive enumeration over vertex subsets and
//! is kept independent of the degree-sequence deciders it validates. The
//! subset sweeps are O(2^n) with word-sized per-subset work, which is why
//! the entry points carry hard order caps.

use crate::graph::{mask_to_vec, Bits, Graph};
use crate::{Error, Result};

/// Order cap for the polarity oracle (2^n subset sweep).
pub const ORACLE_POLAR_MAX: usize = 16;
/// Order cap for the coloring oracle (3^n chromatic table).
pub const ORACLE_COLORING_MAX: usize = 14;

/// A part/clique count bound: a finite cap or no cap at all.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Count {
    Finite(u32),
    Unbounded,
}

impl Count {
    /// Does a side with `used` parts satisfy this cap?
    pub fn allows(self, used: usize) -> bool {
        match self {
            Count::Finite(c) => used <= c as usize,
            Count::Unbounded => true,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Count::Finite(_))
    }

    /// The cap clamped to `n`; `Unbounded` never binds on an n-vertex graph.
    pub fn clamp(self, n: usize) -> usize {
        match self {
            Count::Finite(c) => (c as usize).min(n),
            Count::Unbounded => n,
        }
    }
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Count::Finite(c) => write!(f, "{}", c),
            Count::Unbounded => write!(f, "inf"),
        }
    }
}

impl std::fmt::Debug for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::str::FromStr for Count {
    type Err = Error;
    fn from_str(s: &str) -> Result<Count> {
        match s {
            "inf" | "infinity" | "unbounded" => Ok(Count::Unbounded),
            _ => s
                .parse::<u32>()
                .map(Count::Finite)
                .map_err(|_| Error::InvalidParameter(format!("bad count '{}'", s))),
        }
    }
}

/// The pair (s, k): at most `s` independent parts on the complete
/// multipartite side, at most `k` cliques on the cluster side.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct PolarityParams {
    pub s: Count,
    pub k: Count,
}

impl PolarityParams {
    pub fn new(s: Count, k: Count) -> PolarityParams {
        PolarityParams { s, k }
    }

    pub fn finite(s: u32, k: u32) -> PolarityParams {
        PolarityParams::new(Count::Finite(s), Count::Finite(k))
    }

    /// Parameters of the complementary problem.
    pub fn swapped(self) -> PolarityParams {
        PolarityParams { s: self.k, k: self.s }
    }

    /// Deciders built on the degree characterizations require s + k >= 1
    /// when both caps are finite.
    pub fn check_nontrivial(self) -> Result<()> {
        if self.s == Count::Finite(0) && self.k == Count::Finite(0) {
            return Err(Error::InvalidParameter(
                "(0,0)-polarity is not a supported query; s + k must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

impl std::fmt::Display for PolarityParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.s, self.k)
    }
}

impl std::fmt::Debug for PolarityParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

/// Witness for an (s,k)-polar partition: the independent parts of the
/// complete multipartite side and the clique components of the cluster side,
/// as sorted vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarPartition {
    pub a_parts: Vec<Vec<usize>>,
    pub b_cliques: Vec<Vec<usize>>,
}

impl PolarPartition {
    pub fn a_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.a_parts.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn b_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.b_cliques.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    /// Full structural validation against `g` and the caps: the listed sets
    /// partition the vertex set, the A side is complete multipartite with
    /// exactly these parts, the B side is a cluster with exactly these
    /// clique components, and the counts satisfy `params`.
    pub fn is_valid_for(&self, g: &Graph, params: PolarityParams) -> bool {
        let mut seen = 0u64;
        let mut a_mask = 0u64;
        let mut b_mask = 0u64;
        for part in &self.a_parts {
            if part.is_empty() {
                return false;
            }
            for &v in part {
                if v >= g.n() || seen >> v & 1 == 1 {
                    return false;
                }
                seen |= 1 << v;
                a_mask |= 1 << v;
            }
        }
        for clique in &self.b_cliques {
            if clique.is_empty() {
                return false;
            }
            for &v in clique {
                if v >= g.n() || seen >> v & 1 == 1 {
                    return false;
                }
                seen |= 1 << v;
                b_mask |= 1 << v;
            }
        }
        if seen != g.full_mask() {
            return false;
        }
        if !params.s.allows(self.a_parts.len()) || !params.k.allows(self.b_cliques.len()) {
            return false;
        }
        let side = classify_side_mask(g, a_mask);
        if side.multipartite_parts != Some(self.a_parts.len()) {
            return false;
        }
        for part in &self.a_parts {
            let pm = part.iter().fold(0u64, |m, &v| m | 1 << v);
            if !g.is_independent_set(pm) || !g.completely_adjacent(pm, a_mask & !pm) {
                return false;
            }
        }
        let side = classify_side_mask(g, b_mask);
        if side.cluster_components != Some(self.b_cliques.len()) {
            return false;
        }
        for clique in &self.b_cliques {
            let cm = clique.iter().fold(0u64, |m, &v| m | 1 << v);
            if !g.is_clique(cm) || !g.completely_nonadjacent(cm, b_mask & !cm) {
                return false;
            }
        }
        true
    }
}

/// What the vertex set `W` induces: a complete multipartite graph (with its
/// part count), a cluster (with its component count), both, or neither.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SideReport {
    pub multipartite_parts: Option<usize>,
    pub cluster_components: Option<usize>,
}

pub fn classify_side(g: &Graph, verts: &[usize]) -> Result<SideReport> {
    let mut mask = 0u64;
    for &v in verts {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v, g.n()));
        }
        mask |= 1 << v;
    }
    Ok(classify_side_mask(g, mask))
}

pub(crate) fn classify_side_mask(g: &Graph, mask: u64) -> SideReport {
    SideReport {
        multipartite_parts: multipartite_parts(g, mask),
        cluster_components: cluster_components(g, mask),
    }
}

/// Part count if `G[mask]` is complete multipartite. Parts are the classes
/// of equal non-neighborhood within the set; the graph is complete
/// multipartite exactly when those classes are well defined.
pub(crate) fn multipartite_parts(g: &Graph, mask: u64) -> Option<usize> {
    let mut rest = mask;
    let mut parts = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let part = mask & !g.neighbors(v);
        for u in Bits(part) {
            if mask & !g.neighbors(u) != part {
                return None;
            }
        }
        parts += 1;
        rest &= !part;
    }
    Some(parts)
}

/// Component count if `G[mask]` is a disjoint union of cliques.
pub(crate) fn cluster_components(g: &Graph, mask: u64) -> Option<usize> {
    let mut rest = mask;
    let mut comps = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let comp = mask & (g.neighbors(v) | 1 << v);
        for u in Bits(comp) {
            if mask & (g.neighbors(u) | 1 << u) != comp {
                return None;
            }
        }
        comps += 1;
        rest &= !comp;
    }
    Some(comps)
}

/// Per-subset classification tables for one graph: for every vertex subset,
/// the multipartite part count and the cluster component count (255 when the
/// subset does not induce that structure). Built once, then every
/// (s,k)-polarity query is answered from the `frontier` array.
pub struct PolarityOracle {
    g: Graph,
    n: usize,
    full: u64,
    cm: Vec<u8>,
    cl: Vec<u8>,
    /// frontier[a] = least cluster component count of the complement of any
    /// subset inducing a complete multipartite graph with at most `a` parts.
    frontier: Vec<u8>,
}

const INVALID: u8 = u8::MAX;

impl PolarityOracle {
    pub fn new(g: &Graph) -> Result<PolarityOracle> {
        let n = g.n();
        if n > ORACLE_POLAR_MAX {
            return Err(Error::OracleTooLarge(n, ORACLE_POLAR_MAX));
        }
        let full = g.full_mask();
        let size = 1usize << n;
        let mut cm = vec![INVALID; size];
        let mut cl = vec![INVALID; size];
        for mask in 0..size as u64 {
            if let Some(p) = multipartite_parts(g, mask) {
                cm[mask as usize] = p as u8;
            }
            if let Some(c) = cluster_components(g, mask) {
                cl[mask as usize] = c as u8;
            }
        }
        let mut frontier = vec![INVALID; n + 1];
        for mask in 0..size as u64 {
            let parts = cm[mask as usize];
            if parts == INVALID {
                continue;
            }
            let comps = cl[(full & !mask) as usize];
            if comps == INVALID {
                continue;
            }
            let slot = &mut frontier[parts as usize];
            *slot = (*slot).min(comps);
        }
        for a in 1..=n {
            frontier[a] = frontier[a].min(frontier[a - 1]);
        }
        Ok(PolarityOracle {
            g: g.clone(),
            n,
            full,
            cm,
            cl,
            frontier,
        })
    }

    /// Is the graph (s,k)-polar?
    pub fn decide(&self, params: PolarityParams) -> bool {
        let s = params.s.clamp(self.n);
        let k = params.k.clamp(self.n);
        self.frontier[s] as usize <= k
    }

    /// First witness in A-side bitmask order, if any.
    pub fn witness(&self, params: PolarityParams) -> Option<PolarPartition> {
        let s = params.s.clamp(self.n);
        let k = params.k.clamp(self.n);
        for mask in 0..=self.full {
            let parts = self.cm[mask as usize];
            if parts == INVALID || parts as usize > s {
                continue;
            }
            let b = self.full & !mask;
            let comps = self.cl[b as usize];
            if comps == INVALID || comps as usize > k {
                continue;
            }
            return Some(extract_partition(&self.g, mask, b));
        }
        None
    }
}

fn extract_partition(g: &Graph, a_mask: u64, b_mask: u64) -> PolarPartition {
    let mut a_parts = Vec::new();
    let mut rest = a_mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let part = a_mask & !g.neighbors(v);
        a_parts.push(mask_to_vec(part));
        rest &= !part;
    }
    let mut b_cliques = Vec::new();
    let mut rest = b_mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let comp = b_mask & (g.neighbors(v) | 1 << v);
        b_cliques.push(mask_to_vec(comp));
        rest &= !comp;
    }
    PolarPartition { a_parts, b_cliques }
}

/// Decide (s,k)-polarity and return the first witness in subset order.
pub fn oracle_polar(g: &Graph, params: PolarityParams) -> Result<Option<PolarPartition>> {
    Ok(PolarityOracle::new(g)?.witness(params))
}

/// True (with the n vertex-deleted witnesses) iff `g` is not (s,k)-polar but
/// every vertex-deleted subgraph is.
pub fn oracle_minimal_obstruction(
    g: &Graph,
    params: PolarityParams,
) -> Result<Option<Vec<PolarPartition>>> {
    if PolarityOracle::new(g)?.decide(params) {
        return Ok(None);
    }
    let mut witnesses = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let sub = g.induced_mask(g.full_mask() & !(1 << v));
        match oracle_polar(&sub, params)? {
            Some(w) => witnesses.push(w),
            None => return Ok(None),
        }
    }
    Ok(Some(witnesses))
}

/// Witness for a (k,l)-coloring: `k` independent classes and `l` cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringWitness {
    pub indep_classes: Vec<Vec<usize>>,
    pub clique_classes: Vec<Vec<usize>>,
}

/// Exact chromatic numbers of all induced subgraphs of one graph, for both
/// the graph and its complement. chi[mask] is the chromatic number of
/// G[mask]; cover[mask] the clique cover number.
pub struct ColoringOracle {
    n: usize,
    full: u64,
    adj: Vec<u64>,
    co_adj: Vec<u64>,
    chi: Vec<u8>,
    cover: Vec<u8>,
}

fn chi_table(adj: &[u64], n: usize) -> Vec<u8> {
    let size = 1usize << n;
    let mut chi = vec![0u8; size];
    // dfs over independent sets that contain the lowest vertex of the mask
    fn explore(chi: &[u8], adj: &[u64], m: u64, cur: u64, cand: u64, best: &mut u8) {
        let residual = chi[(m & !cur) as usize];
        if residual + 1 < *best {
            *best = residual + 1;
        }
        let mut c = cand;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            c &= c - 1;
            explore(chi, adj, m, cur | 1 << u, c & !adj[u], best);
        }
    }
    for m in 1..size as u64 {
        let v = m.trailing_zeros() as usize;
        let mut best = u8::MAX;
        let cand = m & !adj[v] & !((1 << v) | ((1 << v) - 1));
        explore(&chi, adj, m, 1 << v, cand, &mut best);
        chi[m as usize] = best;
    }
    chi
}

impl ColoringOracle {
    pub fn new(g: &Graph) -> Result<ColoringOracle> {
        let n = g.n();
        if n > ORACLE_COLORING_MAX {
            return Err(Error::OracleTooLarge(n, ORACLE_COLORING_MAX));
        }
        let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
        let co = g.complement();
        let co_adj: Vec<u64> = (0..n).map(|v| co.neighbors(v)).collect();
        let chi = chi_table(&adj, n);
        let cover = chi_table(&co_adj, n);
        Ok(ColoringOracle {
            n,
            full: g.full_mask(),
            adj,
            co_adj,
            chi,
            cover,
        })
    }

    pub fn chromatic_number(&self) -> usize {
        self.chi[self.full as usize] as usize
    }

    pub fn clique_cover_number(&self) -> usize {
        self.cover[self.full as usize] as usize
    }

    /// Is there a partition into at most `k` independent sets and `l` cliques?
    pub fn colorable(&self, k: usize, l: usize) -> bool {
        self.split_mask(k, l).is_some()
    }

    fn split_mask(&self, k: usize, l: usize) -> Option<u64> {
        let k = k.min(self.n) as u8;
        let l = l.min(self.n) as u8;
        (0..=self.full)
            .find(|&m| self.chi[m as usize] <= k && self.cover[(self.full & !m) as usize] <= l)
    }

    /// First witness in A-side subset order, if any.
    pub fn witness(&self, k: usize, l: usize) -> Option<ColoringWitness> {
        let m = self.split_mask(k, l)?;
        Some(ColoringWitness {
            indep_classes: decompose(&self.chi, &self.adj, m),
            clique_classes: decompose(&self.cover, &self.co_adj, self.full & !m),
        })
    }

    /// All (i, z-i) splits colorable.
    pub fn bicolorable(&self, z: usize) -> bool {
        (0..=z).all(|i| self.colorable(i, z - i))
    }

    pub fn cochromatic_number(&self) -> usize {
        (0..=self.n)
            .find(|&z| (0..=z).any(|i| self.colorable(i, z - i)))
            .unwrap()
    }

    pub fn bichromatic_number(&self) -> usize {
        (0..=self.n).find(|&z| self.bicolorable(z)).unwrap()
    }
}

/// Greedy walk down the chromatic table: peel one class at a time, always
/// the first workable independent set containing the lowest vertex.
fn decompose(chi: &[u8], adj: &[u64], mut m: u64) -> Vec<Vec<usize>> {
    let mut classes = Vec::new();
    while m != 0 {
        let budget = chi[m as usize] - 1;
        let v = m.trailing_zeros() as usize;
        let mut found = None;
        fn search(
            chi: &[u8],
            adj: &[u64],
            m: u64,
            cur: u64,
            cand: u64,
            budget: u8,
            found: &mut Option<u64>,
        ) {
            if found.is_some() {
                return;
            }
            if chi[(m & !cur) as usize] <= budget {
                *found = Some(cur);
                return;
            }
            let mut c = cand;
            while c != 0 {
                let u = c.trailing_zeros() as usize;
                c &= c - 1;
                search(chi, adj, m, cur | 1 << u, c & !adj[u], budget, found);
                if found.is_some() {
                    return;
                }
            }
        }
        let cand = m & !adj[v] & !((1 << v) | ((1 << v) - 1));
        search(chi, adj, m, 1 << v, cand, budget, &mut found);
        let class = found.expect("table-consistent decomposition");
        classes.push(mask_to_vec(class));
        m &= !class;
    }
    classes
}

/// Decide (k,l)-colorability with a witness.
pub fn oracle_coloring(g: &Graph, k: usize, l: usize) -> Result<Option<ColoringWitness>> {
    Ok(ColoringOracle::new(g)?.witness(k, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, complete, cycle, edgeless, Graph};

    #[test]
    fn c5_polarity() {
        let c5 = cycle(5).unwrap();
        assert!(oracle_polar(&c5, PolarityParams::finite(1, 1))
            .unwrap()
            .is_none());
        let w = oracle_polar(&c5, PolarityParams::finite(1, 2))
            .unwrap()
            .unwrap();
        assert_eq!(w.a_parts.len(), 1);
        assert_eq!(w.a_parts[0].len(), 2);
        assert!(w.is_valid_for(&c5, PolarityParams::finite(1, 2)));
        let w = oracle_polar(&c5, PolarityParams::finite(2, 1))
            .unwrap()
            .unwrap();
        assert!(w.is_valid_for(&c5, PolarityParams::finite(2, 1)));
    }

    #[test]
    fn empty_graph_zero_params() {
        let g = Graph::new(0).unwrap();
        let w = oracle_polar(&g, PolarityParams::finite(0, 0)).unwrap().unwrap();
        assert!(w.a_parts.is_empty() && w.b_cliques.is_empty());
        let k1 = complete(1).unwrap();
        assert!(oracle_polar(&k1, PolarityParams::finite(0, 0))
            .unwrap()
            .is_none());
    }

    #[test]
    fn minimal_obstructions() {
        let c5 = cycle(5).unwrap();
        let ws = oracle_minimal_obstruction(&c5, PolarityParams::finite(1, 1))
            .unwrap()
            .unwrap();
        assert_eq!(ws.len(), 5);
        let c4 = cycle(4).unwrap();
        assert!(oracle_minimal_obstruction(&c4, PolarityParams::finite(1, 1))
            .unwrap()
            .is_some());
        let k1_c5 = complete(1).unwrap().join(&c5).unwrap();
        assert!(
            oracle_minimal_obstruction(&k1_c5, PolarityParams::finite(1, 2))
                .unwrap()
                .is_some()
        );
        // polar graphs are not obstructions
        assert!(oracle_minimal_obstruction(&c5, PolarityParams::finite(1, 2))
            .unwrap()
            .is_none());
    }

    #[test]
    fn side_classification() {
        let c5 = cycle(5).unwrap();
        let all: Vec<usize> = (0..5).collect();
        let r = classify_side(&c5, &all).unwrap();
        assert_eq!(r.multipartite_parts, None);
        assert_eq!(r.cluster_components, None);
        let k3 = complete(3).unwrap();
        let r = classify_side(&k3, &[0, 1, 2]).unwrap();
        assert_eq!(r.multipartite_parts, Some(3));
        assert_eq!(r.cluster_components, Some(1));
        let r = classify_side(&build_named("2K2").unwrap(), &[0, 1, 2, 3]).unwrap();
        assert_eq!(r.multipartite_parts, None);
        assert_eq!(r.cluster_components, Some(2));
        let r = classify_side(&c5, &[]).unwrap();
        assert_eq!(r.multipartite_parts, Some(0));
        assert_eq!(r.cluster_components, Some(0));
    }

    #[test]
    fn coloring_oracle_basics() {
        let c5 = cycle(5).unwrap();
        assert!(oracle_coloring(&c5, 1, 1).unwrap().is_none());
        let w = oracle_coloring(&c5, 1, 2).unwrap().unwrap();
        assert!(w.indep_classes.len() <= 1 && w.clique_classes.len() <= 2);
        let k4 = complete(4).unwrap();
        assert!(oracle_coloring(&k4, 4, 0).unwrap().is_some());
        assert!(oracle_coloring(&k4, 3, 0).unwrap().is_none());
        let o = ColoringOracle::new(&c5).unwrap();
        assert_eq!(o.chromatic_number(), 3);
        assert_eq!(o.clique_cover_number(), 3);
        assert_eq!(o.cochromatic_number(), 3);
        assert_eq!(o.bichromatic_number(), 3);
        let e = ColoringOracle::new(&edgeless(4).unwrap()).unwrap();
        assert_eq!(e.chromatic_number(), 1);
        assert_eq!(e.clique_cover_number(), 4);
    }

    #[test]
    fn size_caps() {
        let g = Graph::new(17).unwrap();
        assert!(matches!(
            oracle_polar(&g, PolarityParams::finite(1, 1)),
            Err(Error::OracleTooLarge(17, 16))
        ));
        let g = Graph::new(15).unwrap();
        assert!(oracle_coloring(&g, 1, 0).is_err());
    }
}
