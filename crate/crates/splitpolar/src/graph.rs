//! Simple undirected graphs on at most 62 labeled vertices.
//!
//! Adjacency is stored as one 64-bit neighborhood mask per vertex, so every
//! set operation the recognizers and the oracle need (neighborhood
//! intersections, completeness checks, subset sweeps) is a handful of word
//! operations. The 62-vertex limit keeps the graph6 header a single byte.

use crate::{Error, Result};

/// Largest supported graph order (single-byte graph6 header).
pub const MAX_VERTICES: usize = 62;

/// An immutable simple graph with vertex set `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Iterator over the vertices in a bitmask, ascending.
#[derive(Clone)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    Bits(mask).collect()
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u != v {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    pub(crate) fn from_adj(adj: Vec<u64>) -> Graph {
        Graph { n: adj.len(), adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Open neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Bitmask of all vertices.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] >> u >> 1).map(|w| w + u + 1) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph::from_adj(adj)
    }

    /// Subgraph induced by `verts`, relabeled in increasing original order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in verts {
            if v >= self.n {
                return Err(Error::VertexOutOfRange(v, self.n));
            }
            mask |= 1 << v;
        }
        Ok(self.induced_mask(mask))
    }

    pub(crate) fn induced_mask(&self, mask: u64) -> Graph {
        let verts = mask_to_vec(mask);
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph::from_adj(adj)
    }

    /// Disjoint union; vertices of `other` are relabeled after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph::from_adj(adj))
    }

    /// Join: disjoint union plus all edges between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        let right = g.full_mask() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Relabel by `perm` (`perm[old] = new`); `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            for u in Bits(self.adj[v]) {
                adj[perm[v]] |= 1 << perm[u];
            }
        }
        Graph::from_adj(adj)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut order: Vec<usize> = (0..self.n).collect();
        // nonincreasing degree, ties broken by ascending vertex index
        order.sort_by_key(|&v| (usize::MAX - self.degree(v), v));
        let degrees = order.iter().map(|&v| self.degree(v)).collect();
        DegreeSequence { degrees, order }
    }

    pub fn is_clique(&self, mask: u64) -> bool {
        Bits(mask).all(|v| mask & !self.adj[v] & !(1 << v) == 0)
    }

    pub fn is_independent_set(&self, mask: u64) -> bool {
        Bits(mask).all(|v| mask & self.adj[v] == 0)
    }

    /// Every vertex of `a` adjacent to every vertex of `b` (disjoint sets).
    pub fn completely_adjacent(&self, a: u64, b: u64) -> bool {
        Bits(a).all(|v| b & !self.adj[v] == 0)
    }

    pub fn completely_nonadjacent(&self, a: u64, b: u64) -> bool {
        Bits(a).all(|v| b & self.adj[v] == 0)
    }
}

/// Degree sequence sorted nonincreasing, together with the vertex
/// permutation that realizes the order (ties by ascending vertex index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    pub degrees: Vec<usize>,
    pub order: Vec<usize>,
}

/// The three graphs `H` for which strict `H`-split structure is hereditary.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum HKind {
    TwoK2,
    C4,
    C5,
}

impl HKind {
    pub fn order(self) -> usize {
        match self {
            HKind::TwoK2 | HKind::C4 => 4,
            HKind::C5 => 5,
        }
    }

    /// Degree of every vertex of `H` (all three are regular).
    pub fn regular_degree(self) -> usize {
        match self {
            HKind::TwoK2 => 1,
            HKind::C4 | HKind::C5 => 2,
        }
    }

    pub fn graph(self) -> Graph {
        match self {
            HKind::TwoK2 => Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
            HKind::C4 => cycle(4).unwrap(),
            HKind::C5 => cycle(5).unwrap(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HKind::TwoK2 => "2K2",
            HKind::C4 => "C4",
            HKind::C5 => "C5",
        }
    }
}

/// Strict `H`-split graph from its defining data: a clique of size `c`
/// completely adjacent to a copy of `H`, an independent set of size `i`
/// completely nonadjacent to it, and an arbitrary bipartite pattern between
/// clique and independent side. Bit `a * i + b` of `pattern` is the edge
/// between clique vertex `a` and independent vertex `b`.
///
/// Vertices are labeled clique first (`0..c`), then the `H`-copy, then the
/// independent side.
pub fn h_split_family(h: HKind, c: usize, i: usize, pattern: u64) -> Result<Graph> {
    let hn = h.order();
    let n = c + hn + i;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge(n));
    }
    if i * c < 64 && pattern >> (i * c) != 0 {
        return Err(Error::InvalidParameter(format!(
            "pattern {:#x} has bits outside the {}x{} grid",
            pattern, c, i
        )));
    }
    let mut edges = Vec::new();
    for a in 0..c {
        for b in a + 1..c {
            edges.push((a, b));
        }
        for s in c..c + hn {
            edges.push((a, s));
        }
        for b in 0..i {
            if pattern >> (a * i + b) & 1 == 1 {
                edges.push((a, c + hn + b));
            }
        }
    }
    for (u, v) in h.graph().edges() {
        edges.push((c + u, c + v));
    }
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let g = Graph::new(n)?;
    Ok(g.complement())
}

pub fn edgeless(n: usize) -> Result<Graph> {
    Graph::new(n)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {}",
            n
        )));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// `k` disjoint copies of `g`.
pub fn disjoint_copies(k: usize, g: &Graph) -> Result<Graph> {
    let mut out = Graph::new(0)?;
    for _ in 0..k {
        out = out.disjoint_union(g)?;
    }
    Ok(out)
}

/// Triangle with a two-edge tail (complement of the banner graph).
pub fn co_banner() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4), (4, 0), (3, 0)]).unwrap()
}

/// The seven minimal graphs whose absence as induced subgraphs
/// characterizes 2K2-split graphs, with their conventional names.
pub fn two_k2_split_obstructions() -> Vec<(&'static str, Graph)> {
    let k2 = complete(2).unwrap();
    vec![
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("K2+P3", k2.disjoint_union(&path(3).unwrap()).unwrap()),
        ("K2+K3", k2.disjoint_union(&complete(3).unwrap()).unwrap()),
        ("P5", path(5).unwrap()),
        ("co-banner", co_banner()),
        ("3K2", disjoint_copies(3, &k2).unwrap()),
    ]
}

/// Parse a graph family name: `K<n>`, `P<n>`, `C<n>`, `<m>K<n>` (disjoint
/// copies), plus the special names `co-banner`, `K2+P3` and `K2+K3`.
pub fn build_named(name: &str) -> Result<Graph> {
    let bad = || Error::InvalidParameter(format!("unknown graph name '{}'", name));
    match name {
        "co-banner" => return Ok(co_banner()),
        "K2+P3" => {
            return complete(2)?.disjoint_union(&path(3)?);
        }
        "K2+K3" => {
            return complete(2)?.disjoint_union(&complete(3)?);
        }
        _ => {}
    }
    let parse = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if let Some(rest) = name.strip_prefix('P') {
        return path(parse(rest)?);
    }
    if let Some(rest) = name.strip_prefix('C') {
        return cycle(parse(rest)?);
    }
    if let Some(pos) = name.find('K') {
        let copies = if pos == 0 { 1 } else { parse(&name[..pos])? };
        let order = parse(&name[pos + 1..])?;
        return disjoint_copies(copies, &complete(order)?);
    }
    Err(bad())
}

/// Search for an induced copy of `h` in `g`; returns the matched vertex set
/// (in `h`-vertex order) when one exists. Backtracking with degree pruning;
/// intended for small `h` (at most ~8 vertices).
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    if h.n() == 0 {
        return Some(Vec::new());
    }
    // order h-vertices so each one (after the first) touches the prefix
    let mut order: Vec<usize> = Vec::with_capacity(h.n());
    let mut placed = 0u64;
    while order.len() < h.n() {
        let next = (0..h.n())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((h.neighbors(v) & placed).count_ones(), h.degree(v)))
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }

    let mut assign = vec![usize::MAX; h.n()];
    let mut used = 0u64;
    fn go(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        depth: usize,
        assign: &mut [usize],
        used: &mut u64,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let hv = order[depth];
        'cand: for gv in 0..g.n() {
            if *used >> gv & 1 == 1 || g.degree(gv) < h.degree(hv) {
                continue;
            }
            for &hu in &order[..depth] {
                let want = h.has_edge(hv, hu);
                if g.has_edge(gv, assign[hu]) != want {
                    continue 'cand;
                }
            }
            assign[hv] = gv;
            *used |= 1 << gv;
            if go(g, h, order, depth + 1, assign, used) {
                return true;
            }
            *used &= !(1 << gv);
            assign[hv] = usize::MAX;
        }
        false
    }
    if go(g, h, &order, 0, &mut assign, &mut used) {
        Some(assign)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        assert_eq!(cycle(5).unwrap().degree_sequence().degrees, vec![2; 5]);
        let g = build_named("3K2").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 3);
        // triangle plus a two-edge tail, read off the defining drawing
        assert_eq!(co_banner().degree_sequence().degrees, vec![3, 2, 2, 2, 1]);
        assert!(build_named("Q7").is_err());
        assert!(cycle(2).is_err());
        assert_eq!(build_named("4K1").unwrap().edge_count(), 0);
    }

    #[test]
    fn join_and_union() {
        let w = complete(1).unwrap().join(&cycle(5).unwrap()).unwrap();
        assert_eq!(w.degree_sequence().degrees, vec![5, 3, 3, 3, 3, 3]);
        let g = cycle(4).unwrap();
        let u = g.disjoint_union(&Graph::new(0).unwrap()).unwrap();
        assert_eq!(u, g);
        // the minimal 2K2-split monopolar obstruction
        let m = complete(2)
            .unwrap()
            .join(&build_named("2K2").unwrap())
            .unwrap();
        assert_eq!(m.n(), 6);
        assert_eq!(m.degree_sequence().degrees, vec![5, 5, 3, 3, 3, 3]);
        // order overflow is rejected
        let big = complete(40).unwrap();
        assert!(big.disjoint_union(&big).is_err());
        assert!(big.join(&big).is_err());
        assert!(complete(63).is_err());
    }

    #[test]
    fn complement_involution() {
        let g = path(4).unwrap();
        assert_eq!(g.complement().complement(), g);
        let c5 = cycle(5).unwrap();
        // C5 is self-complementary up to relabeling: same degree sequence
        assert_eq!(
            c5.complement().degree_sequence().degrees,
            c5.degree_sequence().degrees
        );
        assert_eq!(
            build_named("2K2").unwrap().complement().edges(),
            cycle(4).unwrap().relabel(&[0, 2, 1, 3]).edges()
        );
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle(5).unwrap();
        let p4 = c5.induced_subgraph(&[1, 2, 3, 4]).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.degree_sequence().degrees, vec![2, 2, 1, 1]);
        assert!(c5.induced_subgraph(&[5]).is_err());
        let w = complete(1).unwrap().join(&c5).unwrap();
        assert_eq!(w.induced_subgraph(&[1, 2, 3, 4, 5]).unwrap(), c5);
    }

    #[test]
    fn degree_sequence_ties_ascending() {
        let g = Graph::from_edges(4, &[(2, 3)]).unwrap();
        let ds = g.degree_sequence();
        assert_eq!(ds.degrees, vec![1, 1, 0, 0]);
        assert_eq!(ds.order, vec![2, 3, 0, 1]);
    }

    #[test]
    fn induced_copy_search() {
        let c5 = cycle(5).unwrap();
        assert!(contains_induced(&c5, &build_named("2K2").unwrap()).is_none());
        assert!(contains_induced(&c5, &path(4).unwrap()).is_some());
        let w = contains_induced(&path(5).unwrap(), &build_named("2K2").unwrap()).unwrap();
        let sub = path(5).unwrap().induced_subgraph(&w).unwrap();
        assert_eq!(sub.degree_sequence().degrees, vec![1, 1, 1, 1]);
        // witness really induces the pattern
        let h = complete(3).unwrap();
        let g = complete(1).unwrap().join(&cycle(5).unwrap()).unwrap();
        let w = contains_induced(&g, &h).unwrap();
        assert!(g.induced_subgraph(&w).unwrap().is_clique(0b111));
    }

    #[test]
    fn family_layout() {
        // clique of 2 complete to a C5, one independent vertex, full pattern
        let g = h_split_family(HKind::C5, 2, 1, 0b11).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.degree_sequence().degrees, vec![7, 7, 4, 4, 4, 4, 4, 2]);
        let h = h_split_family(HKind::TwoK2, 0, 2, 0).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(h_split_family(HKind::C5, 2, 1, 0b100).is_err());
    }
}
