//! Degree-sequence recognition of split, H-split and pseudo-split graphs,
//! the forbidden-subgraph route for 2K2-split graphs, and the k-cluster test
//! for split graphs.
//!
//! Every recognizer that produces a partition re-validates it against the
//! actual adjacency before returning; a partition that fails validation is
//! treated as a non-member.

use crate::graph::{contains_induced, two_k2_split_obstructions, Graph, HKind};
use crate::oracle::Count;
use crate::{Error, Result};

/// A split partition: `clique` induces a complete graph, `independent` an
/// edgeless one. `p` is the clique size read off the degree sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
    pub p: usize,
}

impl SplitPartition {
    pub fn clique_mask(&self) -> u64 {
        self.clique.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn independent_mask(&self) -> u64 {
        self.independent.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// An H-split partition (C, S, I): `clique` completely adjacent to the
/// H-copy `core`, `independent` completely nonadjacent to it. For split
/// graphs `core` is empty and `strict` is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSplitPartition {
    pub kind: HKind,
    pub clique: Vec<usize>,
    pub core: Vec<usize>,
    pub independent: Vec<usize>,
    pub q: usize,
    pub h: usize,
    pub strict: bool,
}

impl HSplitPartition {
    pub fn clique_mask(&self) -> u64 {
        self.clique.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn core_mask(&self) -> u64 {
        self.core.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn independent_mask(&self) -> u64 {
        self.independent.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// Sorted-degree split test: p = max{i : d_i >= i-1}, then the sum identity
/// over the sorted sequence. The first p vertices in sorted order form the
/// clique.
pub fn recognize_split(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    let ds = g.degree_sequence();
    let p = (1..=n).filter(|&i| ds.degrees[i - 1] >= i - 1).max().unwrap_or(0);
    let head: usize = ds.degrees[..p].iter().sum();
    let tail: usize = ds.degrees[p..].iter().sum();
    // p = 0 only for the null graph, which is split with two empty sides
    if p > 0 && head != p * (p - 1) + tail {
        return None;
    }
    let clique: Vec<usize> = {
        let mut v = ds.order[..p].to_vec();
        v.sort_unstable();
        v
    };
    let independent: Vec<usize> = {
        let mut v = ds.order[p..].to_vec();
        v.sort_unstable();
        v
    };
    let part = SplitPartition { clique, independent, p };
    if !g.is_clique(part.clique_mask()) || !g.is_independent_set(part.independent_mask()) {
        return None;
    }
    Some(part)
}

/// H-split recognition from the degree sequence: a graph is H-split iff it
/// is split (empty core) or the strict degree conditions hold, in which case
/// the sorted order yields the partition directly. For the three supported
/// H the two cases are mutually exclusive.
pub fn recognize_h_split(g: &Graph, kind: HKind) -> Option<HSplitPartition> {
    if let Some(sp) = recognize_split(g) {
        return Some(HSplitPartition {
            kind,
            q: sp.p,
            clique: sp.clique,
            core: Vec::new(),
            independent: sp.independent,
            h: 0,
            strict: false,
        });
    }
    let n = g.n();
    let h = kind.order();
    let d_star = kind.regular_degree();
    let ds = g.degree_sequence();
    let q = (1..=n)
        .filter(|&i| ds.degrees[i - 1] >= i - 1 + h)
        .max()
        .unwrap_or(0);
    if n < q + h {
        return None;
    }
    if (1..=h).any(|i| ds.degrees[q + i - 1] != q + d_star) {
        return None;
    }
    let head: usize = ds.degrees[..q].iter().sum();
    let tail: usize = ds.degrees[q + h..].iter().sum();
    if head != q * (q.max(1) - 1) + q * h + tail {
        return None;
    }
    let sorted = |r: &[usize]| {
        let mut v = r.to_vec();
        v.sort_unstable();
        v
    };
    let part = HSplitPartition {
        kind,
        clique: sorted(&ds.order[..q]),
        core: sorted(&ds.order[q..q + h]),
        independent: sorted(&ds.order[q + h..]),
        q,
        h,
        strict: true,
    };
    let (cm, sm, im) = (part.clique_mask(), part.core_mask(), part.independent_mask());
    // the three supported H are exactly the d_star-regular graphs of order h
    let core_ok = part
        .core
        .iter()
        .all(|&v| (g.neighbors(v) & sm).count_ones() as usize == d_star);
    if !core_ok
        || !g.is_clique(cm)
        || !g.is_independent_set(im)
        || !g.completely_adjacent(cm, sm)
        || !g.completely_nonadjacent(im, sm)
    {
        return None;
    }
    Some(part)
}

/// Outcome of pseudo-split recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoSplitClass {
    Split(SplitPartition),
    Imperfect(ImperfectPseudoSplit),
    NotPseudoSplit,
}

/// Strict C5-split structure together with the parameters that come for
/// free from the degree sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImperfectPseudoSplit {
    pub partition: HSplitPartition,
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub independence_number: usize,
    pub clique_cover_number: usize,
}

pub fn recognize_pseudo_split(g: &Graph) -> PseudoSplitClass {
    if let Some(sp) = recognize_split(g) {
        return PseudoSplitClass::Split(sp);
    }
    match recognize_h_split(g, HKind::C5) {
        Some(part) => {
            let q = part.q;
            let n = g.n();
            PseudoSplitClass::Imperfect(ImperfectPseudoSplit {
                partition: part,
                clique_number: q + 2,
                chromatic_number: q + 3,
                independence_number: n - q - 3,
                clique_cover_number: n - q - 2,
            })
        }
        None => PseudoSplitClass::NotPseudoSplit,
    }
}

impl PseudoSplitClass {
    pub fn is_pseudo_split(&self) -> bool {
        !matches!(self, PseudoSplitClass::NotPseudoSplit)
    }
}

/// Result of the forbidden-subgraph route for 2K2-split recognition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoK2ObstructionCheck {
    pub is_two_k2_split: bool,
    /// Name and vertex set of the first forbidden induced subgraph found.
    pub witness: Option<(&'static str, Vec<usize>)>,
}

/// A graph is 2K2-split iff it contains none of the seven minimal
/// obstructions (C4, C5, K2+P3, K2+K3, P5, co-banner, 3K2) as an induced
/// subgraph. Backtracking search; intended for n up to ~20.
pub fn recognize_2k2_split_by_obstructions(g: &Graph) -> TwoK2ObstructionCheck {
    for (name, h) in two_k2_split_obstructions() {
        if let Some(mut w) = contains_induced(g, &h) {
            w.sort_unstable();
            return TwoK2ObstructionCheck {
                is_two_k2_split: false,
                witness: Some((name, w)),
            };
        }
    }
    TwoK2ObstructionCheck {
        is_two_k2_split: true,
        witness: None,
    }
}

/// Is the split graph `g` a disjoint union of at most `k` cliques?
///
/// Uses the canonical split partition (clique side = maximum clique K):
/// every independent-side vertex must have neighborhood either empty or all
/// of K, at most one may be non-isolated, and the number of isolated
/// independent-side vertices is capped by k-1 (or k when K is empty).
pub fn recognize_k_cluster_split(g: &Graph, k: Count) -> Result<bool> {
    let sp = recognize_split(g).ok_or(Error::NotSplit)?;
    let km = sp.clique_mask();
    let isolated: Vec<usize> = sp
        .independent
        .iter()
        .copied()
        .filter(|&w| g.neighbors(w) == 0)
        .collect();
    for &w in &sp.independent {
        let nb = g.neighbors(w);
        if nb != 0 && nb != km {
            return Ok(false);
        }
    }
    if sp.independent.len() - isolated.len() > 1 {
        return Ok(false);
    }
    let cap_ok = match k {
        Count::Unbounded => true,
        Count::Finite(k) => {
            if km != 0 {
                isolated.len() + 1 <= k as usize
            } else {
                isolated.len() <= k as usize
            }
        }
    };
    Ok(cap_ok)
}

/// Connected-component structure of a split graph under the k-cluster lemma:
/// the isolated independent-side vertices plus at most one component holding
/// the clique side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClusterAnalysis {
    /// Independent-side vertices completely nonadjacent to the clique side.
    pub isolated_independent: Vec<usize>,
    pub component_count: usize,
}

pub fn k_cluster_analysis(g: &Graph) -> Result<KClusterAnalysis> {
    let sp = recognize_split(g).ok_or(Error::NotSplit)?;
    let km = sp.clique_mask();
    let isolated: Vec<usize> = sp
        .independent
        .iter()
        .copied()
        .filter(|&w| g.neighbors(w) & km == 0)
        .collect();
    let component_count = if km != 0 {
        1 + isolated.len()
    } else {
        isolated.len()
    };
    Ok(KClusterAnalysis {
        isolated_independent: isolated,
        component_count,
    })
}
