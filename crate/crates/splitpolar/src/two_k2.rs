//! (s,k)-polarity on 2K2-split and C4-split graphs.
//!
//! Unlike the pseudo-split case, the degree sequence alone cannot settle
//! (s,k)-polarity here: the decision needs the sets I*_v of independent
//! vertices whose neighborhood is exactly C minus one fixed vertex v. The
//! decider follows a fixed case ladder: split reduction, the special cases
//! with an empty clique or independent side or a cap below 2, then the
//! eight-case characterization for s, k >= 2. C4-split graphs are handled
//! through the complement, which is 2K2-split.

use crate::graph::{h_split_family, mask_to_vec, Bits, Graph, HKind};
use crate::oracle::{Count, PolarPartition, PolarityParams};
use crate::ps_polarity::{split_decide, split_witness};
use crate::recognition::{recognize_h_split, recognize_split, HSplitPartition};
use crate::{Error, Result};

/// Structure of a strict 2K2-split graph that the polarity cases consume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoK2Analysis {
    pub c: usize,
    pub i: usize,
    /// C-vertices completely nonadjacent to I (degree exactly c+3).
    pub nonadj_c: Vec<usize>,
    /// I-vertices completely adjacent to C (degree exactly c).
    pub full_adj_i: Vec<usize>,
    /// For each v in C, the I-vertices w with N(w) = C minus v.
    pub i_star_v: Vec<(usize, Vec<usize>)>,
    pub partition: HSplitPartition,
}

impl TwoK2Analysis {
    pub fn max_i_star(&self) -> usize {
        self.i_star_v.iter().map(|(_, ws)| ws.len()).max().unwrap_or(0)
    }

    fn best_star(&self) -> Option<(usize, &[usize])> {
        self.i_star_v
            .iter()
            .max_by_key(|(v, ws)| (ws.len(), usize::MAX - v))
            .filter(|(_, ws)| !ws.is_empty())
            .map(|(v, ws)| (*v, ws.as_slice()))
    }
}

/// Analyze a strict 2K2-split graph; degree-based and adjacency-based
/// readings of the marker sets must agree.
pub fn twok2_analysis(g: &Graph) -> Result<TwoK2Analysis> {
    let partition = recognize_h_split(g, HKind::TwoK2).ok_or(Error::NotTwoK2Split)?;
    if !partition.strict {
        return Err(Error::NotTwoK2Split);
    }
    Ok(analysis_of(g, partition))
}

fn analysis_of(g: &Graph, partition: HSplitPartition) -> TwoK2Analysis {
    let c = partition.clique.len();
    let i = partition.independent.len();
    let cm = partition.clique_mask();
    let im = partition.independent_mask();
    let nonadj_c: Vec<usize> = partition
        .clique
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v) & im == 0)
        .collect();
    let full_adj_i: Vec<usize> = partition
        .independent
        .iter()
        .copied()
        .filter(|&w| g.neighbors(w) & cm == cm)
        .collect();
    debug_assert_eq!(
        nonadj_c.len(),
        (0..g.n()).filter(|&v| g.degree(v) == c + 3).count()
    );
    debug_assert_eq!(
        full_adj_i.len(),
        (0..g.n()).filter(|&v| g.degree(v) == c).count()
    );
    let i_star_v: Vec<(usize, Vec<usize>)> = partition
        .clique
        .iter()
        .map(|&v| {
            let ws = partition
                .independent
                .iter()
                .copied()
                .filter(|&w| g.neighbors(w) == cm & !(1 << v))
                .collect();
            (v, ws)
        })
        .collect();
    TwoK2Analysis {
        c,
        i,
        nonadj_c,
        full_adj_i,
        i_star_v,
        partition,
    }
}

/// Decide (s,k)-polarity of a 2K2-split graph.
pub fn twok2_decide(g: &Graph, params: PolarityParams) -> Result<bool> {
    if recognize_split(g).is_some() {
        return split_decide(g, params);
    }
    let a = twok2_analysis(g)?;
    params.check_nontrivial()?;
    Ok(strict_decide(&a, params))
}

fn strict_decide(a: &TwoK2Analysis, params: PolarityParams) -> bool {
    let (c, i) = (a.c, a.i);
    let m_c = a.nonadj_c.len();
    let m_i = a.full_adj_i.len();
    let star = a.max_i_star();
    match (params.s, params.k) {
        (Count::Unbounded, Count::Unbounded) => true,
        (Count::Finite(s), Count::Unbounded) => {
            let s = s as usize;
            c <= s || s + m_c >= c + 2
        }
        (Count::Unbounded, Count::Finite(k)) => {
            let k = k as usize;
            i + 1 <= k || k + m_i >= i + 2 || k + star >= i + 2
        }
        (Count::Finite(s), Count::Finite(k)) => {
            let (s, k) = (s as usize, k as usize);
            if k == 0 {
                false
            } else if s == 0 {
                c == 0 && i + 2 <= k
            } else if k == 1 {
                i == 0 && s >= 2
            } else if s == 1 {
                c == 0 || (c == 1 && m_i + 2 <= k)
            } else if s >= c && k >= i + 2 {
                true
            } else if s >= c + 2 && k >= i + 1 {
                true
            } else if s + 1 <= c && k <= i {
                false
            } else if s + 1 <= c {
                s + m_c >= c + 2
            } else if s >= c + 1 && k <= i {
                k + m_i >= i + 2 || k + star >= i + 2
            } else if s == c && k <= i {
                k + star >= i + 2
            } else if s == c && k == i + 1 {
                m_c >= 2 || star >= 1
            } else {
                debug_assert!(s == c + 1 && k == i + 1);
                m_c >= 1 || m_i >= 1 || star >= 1
            }
        }
    }
}

/// The two connected components of the 2K2 core, each a sorted edge; the
/// one holding the smallest core vertex comes first.
fn core_edges(g: &Graph, part: &HSplitPartition) -> ([usize; 2], [usize; 2]) {
    let sm = part.core_mask();
    let u = part.core[0];
    let first = sm & (g.neighbors(u) | 1 << u);
    let rest = sm & !first;
    let f = mask_to_vec(first);
    let r = mask_to_vec(rest);
    ([f[0], f[1]], [r[0], r[1]])
}

fn normalize(mut parts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.retain(|p| !p.is_empty());
    parts.sort();
    parts
}

fn singles(vs: impl IntoIterator<Item = usize>) -> Vec<Vec<usize>> {
    vs.into_iter().map(|v| vec![v]).collect()
}

/// Explicit (s,k)-polar partition of a 2K2-split graph. `None` exactly when
/// `twok2_decide` is false.
pub fn twok2_witness(g: &Graph, params: PolarityParams) -> Result<Option<PolarPartition>> {
    if let Some(sp) = recognize_split(g) {
        return split_witness(g, &sp, params);
    }
    let a = twok2_analysis(g)?;
    params.check_nontrivial()?;
    if !strict_decide(&a, params) {
        return Ok(None);
    }
    let pp = strict_witness(g, &a, params);
    debug_assert!(pp.is_valid_for(g, params), "invalid witness for {}", params);
    Ok(Some(pp))
}

fn strict_witness(g: &Graph, a: &TwoK2Analysis, params: PolarityParams) -> PolarPartition {
    let part = &a.partition;
    let (e1, e2) = core_edges(g, part);
    let im = part.independent_mask();
    let clique = &part.clique;
    let (c, i) = (a.c, a.i);
    let m_c = a.nonadj_c.len();
    let m_i = a.full_adj_i.len();
    let _star = a.max_i_star();

    // (C, S + I): both core edges and all of I on the cluster side
    let base = || PolarPartition {
        a_parts: normalize(singles(clique.iter().copied())),
        b_cliques: normalize(
            [e1.to_vec(), e2.to_vec()]
                .into_iter()
                .chain(Bits(im).map(|v| vec![v]))
                .collect(),
        ),
    };
    // (C + e1, I + e2): one core edge absorbed into the clique side
    let wide = || PolarPartition {
        a_parts: normalize(singles(clique.iter().copied().chain(e1))),
        b_cliques: normalize(
            [e2.to_vec()]
                .into_iter()
                .chain(Bits(im).map(|v| vec![v]))
                .collect(),
        ),
    };
    // C-vertices nonadjacent to I move into the cluster side with e2
    let via_m_c = || {
        let mut edge = e2.to_vec();
        edge.extend(a.nonadj_c.iter().copied());
        PolarPartition {
            a_parts: normalize(singles(
                e1.iter()
                    .copied()
                    .chain(clique.iter().copied().filter(|v| !a.nonadj_c.contains(v))),
            )),
            b_cliques: normalize(
                [edge]
                    .into_iter()
                    .chain(Bits(im).map(|v| vec![v]))
                    .collect(),
            ),
        }
    };
    // I-vertices completely adjacent to C join the multipartite side
    let via_m_i = || {
        let taken: u64 = a.full_adj_i.iter().fold(0, |m, &v| m | 1 << v);
        let mut parts = singles(clique.iter().copied());
        parts.push(a.full_adj_i.clone());
        PolarPartition {
            a_parts: normalize(parts),
            b_cliques: normalize(
                [e1.to_vec(), e2.to_vec()]
                    .into_iter()
                    .chain(Bits(im & !taken).map(|v| vec![v]))
                    .collect(),
            ),
        }
    };
    // the I*_v block joins A as one part together with its missing vertex v
    let via_star = || {
        let (v, ws) = a.best_star().expect("case requires a nonempty I*_v");
        let taken: u64 = ws.iter().fold(0, |m, &w| m | 1 << w);
        let mut top = ws.to_vec();
        top.push(v);
        let mut parts = vec![top];
        parts.extend(singles(clique.iter().copied().filter(|&u| u != v)));
        PolarPartition {
            a_parts: normalize(parts),
            b_cliques: normalize(
                [e1.to_vec(), e2.to_vec()]
                    .into_iter()
                    .chain(Bits(im & !taken).map(|v| vec![v]))
                    .collect(),
            ),
        }
    };

    match (params.s, params.k) {
        (Count::Unbounded, Count::Unbounded) => wide(),
        (Count::Finite(s), Count::Unbounded) => {
            if c <= s as usize {
                base()
            } else {
                via_m_c()
            }
        }
        (Count::Unbounded, Count::Finite(k)) => {
            let k = k as usize;
            if i + 1 <= k {
                wide()
            } else if k + m_i >= i + 2 {
                via_m_i()
            } else {
                via_star()
            }
        }
        (Count::Finite(s), Count::Finite(k)) => {
            let (s, k) = (s as usize, k as usize);
            if s == 0 {
                PolarPartition {
                    a_parts: Vec::new(),
                    b_cliques: normalize(
                        [e1.to_vec(), e2.to_vec()]
                            .into_iter()
                            .chain(Bits(im).map(|v| vec![v]))
                            .collect(),
                    ),
                }
            } else if k == 1 {
                let mut big = clique.clone();
                big.extend(e1);
                PolarPartition {
                    a_parts: normalize(singles(e2)),
                    b_cliques: normalize(vec![big]),
                }
            } else if s == 1 {
                if c == 0 {
                    let mut top = vec![e1[0], e2[0]];
                    top.extend(Bits(im));
                    PolarPartition {
                        a_parts: normalize(vec![top]),
                        b_cliques: normalize(vec![vec![e1[1]], vec![e2[1]]]),
                    }
                } else {
                    let v = clique[0];
                    let mut top = vec![v];
                    top.extend(Bits(im & !g.neighbors(v)));
                    PolarPartition {
                        a_parts: normalize(vec![top]),
                        b_cliques: normalize(
                            [e1.to_vec(), e2.to_vec()]
                                .into_iter()
                                .chain(Bits(im & g.neighbors(v)).map(|w| vec![w]))
                                .collect(),
                        ),
                    }
                }
            } else if s >= c && k >= i + 2 {
                base()
            } else if s >= c + 2 && k >= i + 1 {
                wide()
            } else if s + 1 <= c {
                via_m_c()
            } else if s >= c + 1 && k <= i {
                if k + m_i >= i + 2 {
                    via_m_i()
                } else {
                    via_star()
                }
            } else if s == c && k <= i {
                via_star()
            } else if s == c && k == i + 1 {
                if m_c >= 2 {
                    via_m_c()
                } else {
                    via_star()
                }
            } else {
                debug_assert!(s == c + 1 && k == i + 1);
                if m_c >= 1 {
                    via_m_c()
                } else if m_i >= 1 {
                    via_m_i()
                } else {
                    via_star()
                }
            }
        }
    }
}

/// Decide (s,k)-polarity of a C4-split graph by complementing; the strict
/// (1,k) case additionally cross-checks the max-degree criterion.
pub fn c4_decide(g: &Graph, params: PolarityParams) -> Result<bool> {
    let part = recognize_h_split(g, HKind::C4).ok_or(Error::NotC4Split)?;
    if !part.strict {
        return split_decide(g, params);
    }
    params.check_nontrivial()?;
    let dual = twok2_decide(&g.complement(), params.swapped())?;
    if params.s == Count::Finite(1) && params.k.allows(2) {
        // strict C4-split graphs are (1,k)-polar for k >= 2 iff max degree <= 2
        let delta = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
        debug_assert_eq!(dual, delta <= 2);
    }
    Ok(dual)
}

/// Witness for `c4_decide`, obtained by complementing a 2K2-split witness
/// and swapping its sides.
pub fn c4_witness(g: &Graph, params: PolarityParams) -> Result<Option<PolarPartition>> {
    let part = recognize_h_split(g, HKind::C4).ok_or(Error::NotC4Split)?;
    if !part.strict {
        let sp = recognize_split(g).expect("non-strict C4-split graphs are split");
        return split_witness(g, &sp, params);
    }
    params.check_nontrivial()?;
    Ok(
        twok2_witness(&g.complement(), params.swapped())?.map(|w| {
            let pp = PolarPartition {
                a_parts: w.b_cliques,
                b_cliques: w.a_parts,
            };
            debug_assert!(pp.is_valid_for(g, params));
            pp
        }),
    )
}

/// Named strict 2K2-split graphs used as obstruction catalogs.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TwoK2CatalogName {
    /// |C| = s, one independent vertex completely adjacent to C.
    Gs0,
    /// |C| = s+1, one independent vertex adjacent to all but two C-vertices.
    As,
    /// |C| = s+1, one independent vertex adjacent to all but one C-vertex.
    Bs,
    /// |C| = s+1, |I| = s-1, a matching injection from I into C.
    Hs,
    /// A single C-vertex adjacent to k-1 of 2k-2 independent vertices.
    StarK,
    /// |C| = k-1, |I| = k, every C-vertex adjacent to all but one I-vertex,
    /// missing pairwise distinct vertices.
    TightK,
}

impl std::str::FromStr for TwoK2CatalogName {
    type Err = Error;
    fn from_str(s: &str) -> Result<TwoK2CatalogName> {
        match s {
            "G_s0" => Ok(TwoK2CatalogName::Gs0),
            "A_s" => Ok(TwoK2CatalogName::As),
            "B_s" => Ok(TwoK2CatalogName::Bs),
            "H_s" => Ok(TwoK2CatalogName::Hs),
            "star_k" => Ok(TwoK2CatalogName::StarK),
            "tight_k" => Ok(TwoK2CatalogName::TightK),
            _ => Err(Error::InvalidParameter(format!(
                "unknown 2K2-split catalog name '{}'",
                s
            ))),
        }
    }
}

pub fn twok2_catalog(name: TwoK2CatalogName, s: u32, k: u32) -> Result<Graph> {
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
        TwoK2CatalogName::Gs0 => {
            need(s >= 2, "G_s0 needs s >= 2")?;
            h_split_family(HKind::TwoK2, s, 1, (1u64 << s) - 1)
        }
        TwoK2CatalogName::As => {
            need(s >= 2, "A_s needs s >= 2")?;
            h_split_family(HKind::TwoK2, s + 1, 1, ((1u64 << (s + 1)) - 1) & !0b11)
        }
        TwoK2CatalogName::Bs => {
            need(s >= 2, "B_s needs s >= 2")?;
            h_split_family(HKind::TwoK2, s + 1, 1, ((1u64 << (s + 1)) - 1) & !1)
        }
        TwoK2CatalogName::Hs => {
            need(s >= 2, "H_s needs s >= 2")?;
            let mut pattern = 0u64;
            for a in 0..s - 1 {
                pattern |= 1 << (a * (s - 1) + a);
            }
            h_split_family(HKind::TwoK2, s + 1, s - 1, pattern)
        }
        TwoK2CatalogName::StarK => {
            need(k >= 2, "star_k needs k >= 2")?;
            let i = 2 * k - 2;
            h_split_family(HKind::TwoK2, 1, i, (1u64 << (k - 1)) - 1)
        }
        TwoK2CatalogName::TightK => {
            need(k >= 2, "tight_k needs k >= 2")?;
            let mut pattern = 0u64;
            for a in 0..k - 1 {
                for b in 0..k {
                    if b != a {
                        pattern |= 1 << (a * k + b);
                    }
                }
            }
            h_split_family(HKind::TwoK2, k - 1, k, pattern)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, complete, cycle};
    use crate::oracle::oracle_polar;

    fn two_k2() -> Graph {
        build_named("2K2").unwrap()
    }

    #[test]
    fn analysis_fields() {
        let a = twok2_analysis(&two_k2()).unwrap();
        assert_eq!((a.c, a.i), (0, 0));
        assert!(a.nonadj_c.is_empty() && a.full_adj_i.is_empty());
        assert_eq!(a.max_i_star(), 0);

        let h3 = twok2_catalog(TwoK2CatalogName::Hs, 3, 0).unwrap();
        let a = twok2_analysis(&h3).unwrap();
        assert_eq!((a.c, a.i), (4, 2));
        // two C-vertices are unmatched, hence nonadjacent to all of I
        assert_eq!(a.nonadj_c.len(), 2);
        assert!(twok2_analysis(&complete(4).unwrap()).is_err());
    }

    #[test]
    fn special_cases() {
        let g = two_k2();
        assert!(!twok2_decide(&g, PolarityParams::finite(1, 1)).unwrap());
        assert!(twok2_decide(&g, PolarityParams::finite(2, 1)).unwrap());
        assert!(twok2_decide(&g, PolarityParams::finite(0, 2)).unwrap());
        assert!(!twok2_decide(&g, PolarityParams::new(Count::Unbounded, Count::Finite(0))).unwrap());
        // K1 + (2K2 + 1K1) at (1,2): the minimal (1,2)-polar obstruction
        let obs = complete(1)
            .unwrap()
            .join(&two_k2().disjoint_union(&crate::graph::edgeless(1).unwrap()).unwrap())
            .unwrap();
        assert!(!twok2_decide(&obs, PolarityParams::finite(1, 2)).unwrap());
        assert!(twok2_decide(&obs, PolarityParams::finite(1, 3)).unwrap());
        for (s, k) in [(1u32, 2u32), (1, 3), (2, 2), (0, 2), (3, 1)] {
            let params = PolarityParams::finite(s, k);
            assert_eq!(
                twok2_decide(&obs, params).unwrap(),
                oracle_polar(&obs, params).unwrap().is_some(),
                "{}",
                params
            );
        }
    }

    #[test]
    fn witnesses_match_decisions() {
        let grid: Vec<PolarityParams> = {
            let mut v = Vec::new();
            let counts = [
                Count::Finite(0),
                Count::Finite(1),
                Count::Finite(2),
                Count::Finite(3),
                Count::Unbounded,
            ];
            for &s in &counts {
                for &k in &counts {
                    if !(s == Count::Finite(0) && k == Count::Finite(0)) {
                        v.push(PolarityParams::new(s, k));
                    }
                }
            }
            v
        };
        let samples = [
            two_k2(),
            twok2_catalog(TwoK2CatalogName::Gs0, 2, 0).unwrap(),
            twok2_catalog(TwoK2CatalogName::As, 2, 0).unwrap(),
            twok2_catalog(TwoK2CatalogName::Bs, 2, 0).unwrap(),
            twok2_catalog(TwoK2CatalogName::Hs, 2, 0).unwrap(),
            twok2_catalog(TwoK2CatalogName::StarK, 0, 3).unwrap(),
            twok2_catalog(TwoK2CatalogName::TightK, 0, 3).unwrap(),
        ];
        for g in &samples {
            for &params in &grid {
                let d = twok2_decide(g, params).unwrap();
                let w = twok2_witness(g, params).unwrap();
                assert_eq!(d, w.is_some(), "decide/witness disagree at {}", params);
                if let Some(w) = w {
                    assert!(w.is_valid_for(g, params), "{} witness invalid", params);
                }
            }
        }
    }

    #[test]
    fn c4_duality() {
        let k1c4 = complete(1).unwrap().join(&cycle(4).unwrap()).unwrap();
        for k in 1..5 {
            assert!(!c4_decide(&k1c4, PolarityParams::finite(1, k)).unwrap());
        }
        assert!(!c4_decide(&k1c4, PolarityParams::new(Count::Finite(1), Count::Unbounded)).unwrap());
        let c4 = cycle(4).unwrap();
        assert!(c4_decide(&c4, PolarityParams::finite(1, 2)).unwrap());
        let w = c4_witness(&c4, PolarityParams::finite(1, 2)).unwrap().unwrap();
        assert!(w.is_valid_for(&c4, PolarityParams::finite(1, 2)));
        assert!(c4_decide(&two_k2(), PolarityParams::finite(1, 1)).is_err());
    }

    #[test]
    fn catalog_orders() {
        assert_eq!(twok2_catalog(TwoK2CatalogName::Hs, 3, 0).unwrap().n(), 10);
        assert_eq!(twok2_catalog(TwoK2CatalogName::StarK, 0, 3).unwrap().n(), 9);
        assert_eq!(twok2_catalog(TwoK2CatalogName::TightK, 0, 3).unwrap().n(), 9);
        assert!(twok2_catalog(TwoK2CatalogName::Gs0, 1, 0).is_err());
        assert!(twok2_catalog(TwoK2CatalogName::StarK, 0, 1).is_err());
    }
}
