//! (s,k)-polarity on pseudo-split graphs from the degree sequence.
//!
//! For an imperfect pseudo-split graph with partition (C, S, I) everything
//! is driven by four numbers: c = |C|, i = |I|, and the counts M_C (vertices
//! of degree c+4, the C-vertices completely nonadjacent to I) and M_I
//! (vertices of degree c, the I-vertices completely adjacent to C). Split
//! inputs reduce to complete-multipartite / k-cluster checks.

use crate::graph::{mask_to_vec, Bits, Graph};
use crate::oracle::{Count, PolarPartition, PolarityParams};
use crate::recognition::{
    recognize_k_cluster_split, recognize_pseudo_split, HSplitPartition, PseudoSplitClass,
    SplitPartition,
};
use crate::{Error, Result};

/// The degree-sequence profile driving all pseudo-split deciders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoSplitProfile {
    pub c: usize,
    pub i: usize,
    /// Vertices of degree exactly c+4: C-vertices completely nonadjacent to I.
    pub m_c: usize,
    /// Vertices of degree exactly c: I-vertices completely adjacent to C.
    pub m_i: usize,
    pub partition: HSplitPartition,
}

/// Profile of an imperfect pseudo-split graph, read off the degree sequence
/// and cross-checked against adjacency.
pub fn ps_profile(g: &Graph) -> Result<PseudoSplitProfile> {
    match recognize_pseudo_split(g) {
        PseudoSplitClass::Imperfect(ips) => Ok(profile_of(g, ips.partition)),
        _ => Err(Error::NotImperfectPseudoSplit),
    }
}

fn profile_of(g: &Graph, partition: HSplitPartition) -> PseudoSplitProfile {
    let c = partition.clique.len();
    let i = partition.independent.len();
    let m_c = (0..g.n()).filter(|&v| g.degree(v) == c + 4).count();
    let m_i = (0..g.n()).filter(|&v| g.degree(v) == c).count();
    // the degree reading must match the adjacency reading
    let im = partition.independent_mask();
    let cm = partition.clique_mask();
    debug_assert_eq!(
        m_c,
        partition
            .clique
            .iter()
            .filter(|&&v| g.neighbors(v) & im == 0)
            .count()
    );
    debug_assert_eq!(
        m_i,
        partition
            .independent
            .iter()
            .filter(|&&w| g.neighbors(w) & cm == cm)
            .count()
    );
    PseudoSplitProfile { c, i, m_c, m_i, partition }
}

/// Decide (s,k)-polarity of a pseudo-split graph.
pub fn ps_decide(g: &Graph, params: PolarityParams) -> Result<bool> {
    match recognize_pseudo_split(g) {
        PseudoSplitClass::NotPseudoSplit => Err(Error::NotPseudoSplit),
        PseudoSplitClass::Split(_) => split_decide(g, params),
        PseudoSplitClass::Imperfect(ips) => {
            params.check_nontrivial()?;
            if params.s == Count::Unbounded && params.k.is_finite() {
                // self-complementary class: unbounded s via the complement
                return ps_decide(&g.complement(), params.swapped());
            }
            Ok(imperfect_decide(&profile_of(g, ips.partition), params))
        }
    }
}

fn imperfect_decide(p: &PseudoSplitProfile, params: PolarityParams) -> bool {
    let (c, i, m_c, m_i) = (p.c, p.i, p.m_c, p.m_i);
    match (params.s, params.k) {
        (Count::Unbounded, Count::Unbounded) => true,
        (Count::Finite(s), Count::Unbounded) => {
            let s = s as usize;
            s > c || (s >= 2 && s + m_c >= c + 2)
        }
        (Count::Unbounded, Count::Finite(_)) => {
            unreachable!("unbounded s handled by complementing")
        }
        (Count::Finite(s), Count::Finite(k)) => {
            let (s, k) = (s as usize, k as usize);
            (k >= i + 1 && s + m_c >= c + 2) || (s >= c + 1 && k + m_i >= i + 2)
        }
    }
}

/// Split-graph polarity: positive caps are free, a zero cap degenerates to
/// the k-cluster test (on the graph or its complement).
pub(crate) fn split_decide(g: &Graph, params: PolarityParams) -> Result<bool> {
    params.check_nontrivial()?;
    match (params.s, params.k) {
        (Count::Finite(0), k) => recognize_k_cluster_split(g, k),
        (s, Count::Finite(0)) => recognize_k_cluster_split(&g.complement(), s),
        _ => Ok(true),
    }
}

fn normalize(mut parts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.retain(|p| !p.is_empty());
    parts.sort();
    parts
}

/// Clique components of `G[mask]`; caller guarantees it is a cluster.
fn clique_components_of(g: &Graph, mask: u64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let comp = mask & (g.neighbors(v) | 1 << v);
        out.push(mask_to_vec(comp));
        rest &= !comp;
    }
    out
}

/// Independent parts of the complete multipartite `G[mask]`.
fn multipartite_parts_of(g: &Graph, mask: u64) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let part = mask & !g.neighbors(v);
        out.push(mask_to_vec(part));
        rest &= !part;
    }
    out
}

pub(crate) fn split_witness(
    g: &Graph,
    sp: &SplitPartition,
    params: PolarityParams,
) -> Result<Option<PolarPartition>> {
    if !split_decide(g, params)? {
        return Ok(None);
    }
    let pp = match (params.s, params.k) {
        (Count::Finite(0), _) => PolarPartition {
            a_parts: Vec::new(),
            b_cliques: normalize(clique_components_of(g, g.full_mask())),
        },
        (_, Count::Finite(0)) => PolarPartition {
            a_parts: normalize(multipartite_parts_of(g, g.full_mask())),
            b_cliques: Vec::new(),
        },
        _ => PolarPartition {
            a_parts: normalize(vec![sp.independent.clone()]),
            b_cliques: normalize(vec![sp.clique.clone()]),
        },
    };
    debug_assert!(pp.is_valid_for(g, params));
    Ok(Some(pp))
}

fn least_core_pair(g: &Graph, core: &[usize], adjacent: bool) -> (usize, usize) {
    for (ix, &u) in core.iter().enumerate() {
        for &v in &core[ix + 1..] {
            if g.has_edge(u, v) == adjacent {
                return (u, v);
            }
        }
    }
    unreachable!("C5 has both edges and non-edges")
}

/// Explicit (s,k)-polar partition of a pseudo-split graph, following the
/// constructions that prove the degree characterizations. Returns `None`
/// exactly when `ps_decide` is false.
pub fn ps_witness(g: &Graph, params: PolarityParams) -> Result<Option<PolarPartition>> {
    match recognize_pseudo_split(g) {
        PseudoSplitClass::NotPseudoSplit => Err(Error::NotPseudoSplit),
        PseudoSplitClass::Split(sp) => split_witness(g, &sp, params),
        PseudoSplitClass::Imperfect(ips) => {
            params.check_nontrivial()?;
            if params.s == Count::Unbounded && params.k.is_finite() {
                // complement both the graph and the sides of its witness
                return Ok(ps_witness(&g.complement(), params.swapped())?.map(|w| {
                    let pp = PolarPartition {
                        a_parts: w.b_cliques,
                        b_cliques: w.a_parts,
                    };
                    debug_assert!(pp.is_valid_for(g, params));
                    pp
                }));
            }
            let p = profile_of(g, ips.partition);
            if !imperfect_decide(&p, params) {
                return Ok(None);
            }
            let pp = imperfect_witness(g, &p, params);
            debug_assert!(pp.is_valid_for(g, params));
            Ok(Some(pp))
        }
    }
}

fn imperfect_witness(g: &Graph, p: &PseudoSplitProfile, params: PolarityParams) -> PolarPartition {
    let part = &p.partition;
    let im = part.independent_mask();
    let cm = part.clique_mask();
    let c_nonadj: Vec<usize> = part
        .clique
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v) & im == 0)
        .collect();
    let i_full: Vec<usize> = part
        .independent
        .iter()
        .copied()
        .filter(|&w| g.neighbors(w) & cm == cm)
        .collect();

    // true when the partition routes the clique side into A with an
    // independent pair of the core, false for the edge-into-B routing
    let use_clique_route = match (params.s, params.k) {
        (Count::Unbounded, Count::Unbounded) => true,
        (Count::Finite(s), Count::Unbounded) => (s as usize) > p.c,
        (Count::Finite(s), Count::Finite(k)) => {
            let (s, k) = (s as usize, k as usize);
            // prefer the case-1 routing when it applies
            if k >= p.i + 1 && s + p.m_c >= p.c + 2 {
                false
            } else {
                debug_assert!(s >= p.c + 1 && k + p.m_i >= p.i + 2);
                true
            }
        }
        (Count::Unbounded, Count::Finite(_)) => unreachable!(),
    };

    if use_clique_route {
        // A = one independent core pair + all of C (+ the M_I vertices),
        // B = the rest of the core (an edge and a vertex) + remaining I
        let (a, b) = least_core_pair(g, &part.core, false);
        let joined: Vec<usize> = [a, b].iter().copied().chain(i_full.iter().copied()).collect();
        let mut a_parts = vec![joined];
        a_parts.extend(part.clique.iter().map(|&v| vec![v]));
        let rest_core = part.core_mask() & !(1 << a) & !(1 << b);
        let mut b_cliques = clique_components_of(g, rest_core);
        let i_full_mask: u64 = i_full.iter().fold(0, |m, &v| m | 1 << v);
        b_cliques.extend(Bits(im & !i_full_mask).map(|v| vec![v]));
        PolarPartition {
            a_parts: normalize(a_parts),
            b_cliques: normalize(b_cliques),
        }
    } else {
        // A = a P3 of the core + the C-vertices with I-neighbors,
        // B = one core edge merged with the isolated part of C + all of I
        let (x, y) = least_core_pair(g, &part.core, true);
        let rest_core = part.core_mask() & !(1 << x) & !(1 << y);
        let mut a_parts = multipartite_parts_of(g, rest_core);
        a_parts.extend(
            part.clique
                .iter()
                .filter(|v| !c_nonadj.contains(v))
                .map(|&v| vec![v]),
        );
        let mut edge_clique = vec![x, y];
        edge_clique.extend(c_nonadj.iter().copied());
        let mut b_cliques = vec![edge_clique];
        b_cliques.extend(Bits(im).map(|v| vec![v]));
        PolarPartition {
            a_parts: normalize(a_parts),
            b_cliques: normalize(b_cliques),
        }
    }
}

/// (monopolar, unipolar) for a pseudo-split graph: monopolar iff the core or
/// the clique side is empty, unipolar iff the graph is split.
pub fn ps_monopolar_unipolar(g: &Graph) -> Result<(bool, bool)> {
    match recognize_pseudo_split(g) {
        PseudoSplitClass::NotPseudoSplit => Err(Error::NotPseudoSplit),
        PseudoSplitClass::Split(_) => Ok((true, true)),
        PseudoSplitClass::Imperfect(ips) => Ok((ips.partition.clique.is_empty(), false)),
    }
}

/// Named imperfect pseudo-split graphs used as obstruction catalogs.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PsCatalogName {
    /// |C| = s, one independent vertex completely adjacent to C.
    Gs0,
    /// `Gs0` minus one edge at the independent vertex.
    Gs1,
    /// |C| = s-1, |I| = k-1, a matching injection from C into I.
    Hsk,
    /// |C| = s, |I| = s-1, a matching injection from I into C.
    Fs,
    /// The join of a single vertex with the 5-cycle.
    K1JoinC5,
}

impl std::str::FromStr for PsCatalogName {
    type Err = Error;
    fn from_str(s: &str) -> Result<PsCatalogName> {
        match s {
            "G_s0" => Ok(PsCatalogName::Gs0),
            "G_s1" => Ok(PsCatalogName::Gs1),
            "H_sk" => Ok(PsCatalogName::Hsk),
            "F_s" => Ok(PsCatalogName::Fs),
            "K1_join_C5" => Ok(PsCatalogName::K1JoinC5),
            _ => Err(Error::InvalidParameter(format!(
                "unknown pseudo-split catalog name '{}'",
                s
            ))),
        }
    }
}

pub fn ps_catalog(name: PsCatalogName, s: u32, k: u32) -> Result<Graph> {
    use crate::graph::{h_split_family, HKind};
    let s = s as usize;
    let k = k as usize;
    let need = |ok: bool, msg: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(msg.to_string()))
        }
    };
    match name {
        PsCatalogName::Gs0 => {
            need(s >= 1, "G_s0 needs s >= 1")?;
            h_split_family(HKind::C5, s, 1, (1u64 << s) - 1)
        }
        PsCatalogName::Gs1 => {
            need(s >= 1, "G_s1 needs s >= 1")?;
            h_split_family(HKind::C5, s, 1, ((1u64 << s) - 1) & !1)
        }
        PsCatalogName::Hsk => {
            need(k >= s && s >= 1, "H_sk needs k >= s >= 1")?;
            let mut pattern = 0u64;
            for a in 0..s - 1 {
                pattern |= 1 << (a * (k - 1) + a);
            }
            h_split_family(HKind::C5, s - 1, k - 1, pattern)
        }
        PsCatalogName::Fs => {
            need(s >= 2, "F_s needs s >= 2")?;
            let mut pattern = 0u64;
            for a in 0..s - 1 {
                pattern |= 1 << (a * (s - 1) + a);
            }
            h_split_family(HKind::C5, s, s - 1, pattern)
        }
        PsCatalogName::K1JoinC5 => h_split_family(HKind::C5, 1, 0, 0),
    }
}

/// Per-vertex data of the minimality test for imperfect pseudo-split graphs
/// with |C| = s: for each independent vertex v, the C-vertices missing v and
/// the C-vertices completely nonadjacent to every other independent vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsMinimalityEntry {
    pub vertex: usize,
    pub c_v: Vec<usize>,
    pub c_prime_v: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsMinimalityAnalysis {
    pub entries: Vec<PsMinimalityEntry>,
    /// True iff the graph is a minimal (s,k)-polar obstruction, by the
    /// per-vertex criterion |C'_v| >= 2 and |C_v /\ C'_v| <= 1.
    pub verdict: bool,
}

/// Minimality test for imperfect pseudo-split graphs with |C| = s and
/// 0 < |I| < k-1 (s, k finite positive); rejects inputs outside that range.
pub fn ps_minimality_analysis(g: &Graph, params: PolarityParams) -> Result<PsMinimalityAnalysis> {
    let (s, k) = match (params.s, params.k) {
        (Count::Finite(s), Count::Finite(k)) if s >= 1 && k >= 1 => (s as usize, k as usize),
        _ => {
            return Err(Error::InvalidParameter(
                "minimality analysis needs finite positive s and k".into(),
            ))
        }
    };
    let p = ps_profile(g)?;
    if p.c != s || p.i == 0 || p.i + 1 >= k {
        return Err(Error::InvalidParameter(format!(
            "minimality analysis needs |C| = s and 0 < |I| < k-1, got |C| = {}, |I| = {}",
            p.c, p.i
        )));
    }
    let cm = p.partition.clique_mask();
    let im = p.partition.independent_mask();
    let mut entries = Vec::with_capacity(p.i);
    let mut verdict = true;
    for &v in &p.partition.independent {
        let c_v = cm & !g.neighbors(v);
        let others = im & !(1 << v);
        let c_prime_v: u64 = Bits(cm)
            .filter(|&u| g.neighbors(u) & others == 0)
            .fold(0, |m, u| m | 1 << u);
        verdict &= c_prime_v.count_ones() >= 2 && (c_v & c_prime_v).count_ones() <= 1;
        entries.push(PsMinimalityEntry {
            vertex: v,
            c_v: mask_to_vec(c_v),
            c_prime_v: mask_to_vec(c_prime_v),
        });
    }
    Ok(PsMinimalityAnalysis { entries, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edgeless};
    use crate::oracle::oracle_polar;

    fn c5() -> Graph {
        cycle(5).unwrap()
    }

    #[test]
    fn profiles() {
        let p = ps_profile(&c5()).unwrap();
        assert_eq!((p.c, p.i, p.m_c, p.m_i), (0, 0, 0, 0));
        let g0 = ps_catalog(PsCatalogName::Gs0, 2, 0).unwrap();
        let p = ps_profile(&g0).unwrap();
        assert_eq!((p.c, p.i, p.m_c, p.m_i), (2, 1, 0, 1));
        let g1 = ps_catalog(PsCatalogName::Gs1, 2, 0).unwrap();
        let p = ps_profile(&g1).unwrap();
        assert_eq!((p.c, p.i, p.m_c, p.m_i), (2, 1, 1, 0));
        assert!(ps_profile(&complete(3).unwrap()).is_err());
    }

    #[test]
    fn decide_catalog_cases() {
        let g0 = ps_catalog(PsCatalogName::Gs0, 2, 0).unwrap();
        assert!(!ps_decide(&g0, PolarityParams::finite(2, 2)).unwrap());
        assert!(ps_decide(&g0, PolarityParams::finite(3, 2)).unwrap());
        assert!(ps_decide(&c5(), PolarityParams::finite(1, 2)).unwrap());
        assert!(!ps_decide(&c5(), PolarityParams::finite(1, 1)).unwrap());
        let f3 = ps_catalog(PsCatalogName::Fs, 3, 0).unwrap();
        assert_eq!(f3.n(), 10);
        for k in 0..7 {
            assert!(!ps_decide(&f3, PolarityParams::finite(3, k)).unwrap());
        }
        assert!(!ps_decide(&f3, PolarityParams::new(Count::Finite(3), Count::Unbounded)).unwrap());
        assert!(ps_decide(&f3, PolarityParams::new(Count::Finite(4), Count::Unbounded)).unwrap());
    }

    #[test]
    fn witnesses_validate() {
        for (s, k) in [(1, 2), (2, 1), (2, 2), (5, 1), (1, 5)] {
            let params = PolarityParams::finite(s, k);
            let w = ps_witness(&c5(), params).unwrap();
            assert_eq!(w.is_some(), ps_decide(&c5(), params).unwrap());
            if let Some(w) = w {
                assert!(w.is_valid_for(&c5(), params));
            }
        }
        let w = ps_witness(&c5(), PolarityParams::finite(2, 1)).unwrap().unwrap();
        assert_eq!(w.a_parts.iter().map(Vec::len).sum::<usize>(), 3);
        assert_eq!(w.b_cliques.len(), 1);
        let g0 = ps_catalog(PsCatalogName::Gs0, 2, 0).unwrap();
        let params = PolarityParams::finite(3, 2);
        let w = ps_witness(&g0, params).unwrap().unwrap();
        assert!(w.is_valid_for(&g0, params));
        assert_eq!(
            oracle_polar(&g0, params).unwrap().is_some(),
            ps_decide(&g0, params).unwrap()
        );
        // split graph: the split partition is the witness
        let k3 = complete(3).unwrap();
        let w = ps_witness(&k3, PolarityParams::finite(1, 1)).unwrap().unwrap();
        assert!(w.is_valid_for(&k3, PolarityParams::finite(1, 1)));
    }

    #[test]
    fn unbounded_sides() {
        let k1c5 = ps_catalog(PsCatalogName::K1JoinC5, 0, 0).unwrap();
        // monopolar means (1, inf)-polar
        let mono = PolarityParams::new(Count::Finite(1), Count::Unbounded);
        assert!(!ps_decide(&k1c5, mono).unwrap());
        assert!(ps_decide(&c5(), mono).unwrap());
        // (inf,1)-polarity is weaker than unipolarity: C5 splits into a P3
        // and an edge, yet has no clique whose removal leaves a cluster
        let uni = PolarityParams::new(Count::Unbounded, Count::Finite(1));
        assert!(ps_decide(&c5(), uni).unwrap());
        assert_eq!(ps_monopolar_unipolar(&k1c5).unwrap(), (false, false));
        assert_eq!(ps_monopolar_unipolar(&c5()).unwrap(), (true, false));
        let scattered = edgeless(3).unwrap().disjoint_union(&c5()).unwrap();
        assert!(ps_monopolar_unipolar(&scattered).unwrap().0);
        let w = ps_witness(&c5(), mono).unwrap().unwrap();
        assert!(w.is_valid_for(&c5(), mono));
        let w = ps_witness(&k1c5, PolarityParams::new(Count::Unbounded, Count::Finite(2)))
            .unwrap()
            .unwrap();
        assert!(w.is_valid_for(&k1c5, PolarityParams::new(Count::Unbounded, Count::Finite(2))));
    }

    #[test]
    fn param_validation() {
        assert!(ps_decide(&c5(), PolarityParams::finite(0, 0)).is_err());
        assert!(ps_decide(&complete(2).unwrap(), PolarityParams::finite(0, 0)).is_err());
    }

    #[test]
    fn minimality_analysis_cases() {
        let f3 = ps_catalog(PsCatalogName::Fs, 3, 0).unwrap();
        let a = ps_minimality_analysis(&f3, PolarityParams::finite(3, 5)).unwrap();
        assert!(a.verdict);
        assert_eq!(a.entries.len(), 2);
        // out of range: i = 1 is not strictly below k-1 = 1
        let g0 = ps_catalog(PsCatalogName::Gs0, 3, 0).unwrap();
        assert!(ps_minimality_analysis(&g0, PolarityParams::finite(3, 2)).is_err());
        // a C-vertex nonadjacent to all of I twice over makes the graph polar
        let g = crate::graph::h_split_family(crate::graph::HKind::C5, 3, 1, 0b001).unwrap();
        let a = ps_minimality_analysis(&g, PolarityParams::finite(3, 4)).unwrap();
        assert!(!a.verdict);
    }

    #[test]
    fn catalog_shapes() {
        let f = ps_catalog(PsCatalogName::Fs, 3, 0).unwrap();
        assert_eq!(f.n(), 2 * 3 + 4);
        // order s + k + 3: clique side s-1, independent side k-1
        let h = ps_catalog(PsCatalogName::Hsk, 2, 2).unwrap();
        assert_eq!(h.n(), 7);
        assert!(ps_catalog(PsCatalogName::Hsk, 3, 2).is_err());
        assert!(ps_catalog(PsCatalogName::Fs, 1, 0).is_err());
        let ds = ps_catalog(PsCatalogName::Gs0, 2, 0).unwrap().degree_sequence();
        assert_eq!(ds.degrees, vec![7, 7, 4, 4, 4, 4, 4, 2]);
    }
}
