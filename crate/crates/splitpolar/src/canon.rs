//! Canonical forms for small graphs.
//!
//! The canonical code of a graph is the lexicographically minimal packing of
//! the upper adjacency triangle, minimized over all vertex permutations.
//! Equal codes are equivalent to isomorphism. The search is branch-and-bound
//! over partial permutations with prefix pruning plus twin elimination
//! (interchangeable vertices are tried only once per level), which is fast
//! for the structured graphs handled here but is still a factorial-time
//! procedure, hence the order cap.

use crate::graph::{Bits, Graph};
use crate::{Error, Result};

/// Largest order accepted by [`canonical_code`].
pub const CANONICAL_MAX: usize = 12;

/// Total-order key deciding isomorphism for graphs of order at most 12.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode {
    n: usize,
    bits: u128,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Hex rendering; distinct codes render distinctly for a given order.
    pub fn to_hex(&self) -> String {
        format!("{:02}:{:x}", self.n, self.bits)
    }
}

/// Pack the upper triangle in the order (0,1),(0,2),(1,2),(0,3),(1,3),...
/// with the first pair in the most significant position, so integer order
/// is lexicographic order on the bit string.
fn encode_perm(g: &Graph, pos_of: &[usize]) -> u128 {
    let n = g.n();
    let total = n * (n - 1) / 2;
    let mut bits = 0u128;
    let mut at = vec![0usize; n];
    for v in 0..n {
        at[pos_of[v]] = v;
    }
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(at[i], at[j]) {
                bits |= 1 << (total - 1 - idx);
            }
            idx += 1;
        }
    }
    bits
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total: usize,
    best: u128,
    placed: Vec<usize>,
    prefix: u128,
    prefix_len: usize,
}

impl Search<'_> {
    fn run(&mut self, used: u64) {
        let depth = self.placed.len();
        if depth == self.n {
            if self.prefix < self.best {
                self.best = self.prefix;
            }
            return;
        }
        let mut tried = 0u64;
        for v in 0..self.n {
            if used >> v & 1 == 1 {
                continue;
            }
            // twins of an already-tried candidate lead to the same subtree
            let mut skip = false;
            for u in Bits(tried) {
                let nu = self.g.neighbors(u) & !(1 << v);
                let nv = self.g.neighbors(v) & !(1 << u);
                if nu == nv {
                    skip = true;
                    break;
                }
            }
            tried |= 1 << v;
            if skip {
                continue;
            }
            let mut block = 0u128;
            for (i, &u) in self.placed.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    block |= 1 << (depth - 1 - i);
                }
            }
            let new_len = self.prefix_len + depth;
            let cand = self.prefix | block << (self.total - new_len);
            if new_len < self.total {
                // compare against the best code's prefix of the same length
                if cand >> (self.total - new_len) > self.best >> (self.total - new_len) {
                    continue;
                }
            } else if cand > self.best {
                continue;
            }
            let (old_prefix, old_len) = (self.prefix, self.prefix_len);
            self.prefix = cand;
            self.prefix_len = new_len;
            self.placed.push(v);
            self.run(used | 1 << v);
            self.placed.pop();
            self.prefix = old_prefix;
            self.prefix_len = old_len;
        }
    }
}

/// Canonical code of `g`; rejects graphs with more than 12 vertices.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.n();
    if n > CANONICAL_MAX {
        return Err(Error::TooLarge(n));
    }
    if n < 2 {
        return Ok(CanonicalCode { n, bits: 0 });
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut search = Search {
        g,
        n,
        total: n * (n - 1) / 2,
        best: encode_perm(g, &identity),
        placed: Vec::with_capacity(n),
        prefix: 0,
        prefix_len: 0,
    };
    search.run(0);
    Ok(CanonicalCode {
        n,
        bits: search.best,
    })
}

/// All graphs of order exactly `n` up to isomorphism, built by extending the
/// order-(n-1) classes with every possible attachment neighborhood. Capped
/// at `n <= 8`; the class counts grow too fast beyond that for this method.
pub fn enumerate_all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 8 {
        return Err(Error::TooLarge(n));
    }
    if n == 0 {
        return Ok(vec![Graph::new(0)?]);
    }
    let mut level = vec![Graph::new(1)?];
    for m in 2..=n {
        let mut seen = std::collections::BTreeMap::new();
        for g in &level {
            for nbrs in 0u64..1 << (m - 1) {
                let mut edges = g.edges();
                for u in Bits(nbrs) {
                    edges.push((u, m - 1));
                }
                let ext = Graph::from_edges(m, &edges)?;
                let code = canonical_code(&ext)?;
                seen.entry(code).or_insert(ext);
            }
        }
        level = seen.into_values().collect();
    }
    Ok(level)
}
