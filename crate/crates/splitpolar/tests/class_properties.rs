//! Class-level checks that tie the recognizers to their forbidden-subgraph
//! characterizations on every small graph.

use splitpolar::{
    build_named, contains_induced, disjoint_copies, edgeless, enumerate_all_graphs,
    recognize_k_cluster_split, recognize_split, Count, Graph,
};

/// k-clusters coincide with the {P3, (k+1)K1}-free graphs; on split inputs
/// the lemma conditions must match that characterization exactly.
#[test]
fn k_cluster_equals_forbidden_pair_on_split_graphs() {
    let p3 = build_named("P3").unwrap();
    for n in 0..=7usize {
        for g in &enumerate_all_graphs(n).unwrap() {
            if recognize_split(g).is_none() {
                continue;
            }
            for k in 0..=4u32 {
                let forbidden = edgeless(k as usize + 1).unwrap();
                let free = contains_induced(g, &p3).is_none()
                    && contains_induced(g, &forbidden).is_none();
                assert_eq!(
                    recognize_k_cluster_split(g, Count::Finite(k)).unwrap(),
                    free,
                    "k={} on {:?}",
                    k,
                    g
                );
            }
            let free = contains_induced(g, &p3).is_none();
            assert_eq!(
                recognize_k_cluster_split(g, Count::Unbounded).unwrap(),
                free,
                "cluster on {:?}",
                g
            );
        }
    }
}

/// Spot checks from the named constructions.
#[test]
fn cluster_examples() {
    let k2 = build_named("K2").unwrap();
    assert!(recognize_k_cluster_split(&k2, Count::Finite(1)).unwrap());
    let g = disjoint_copies(2, &k2).unwrap();
    // 2K2 is a 2-cluster but not split, so the split-side test rejects it
    assert!(recognize_k_cluster_split(&g, Count::Finite(2)).is_err());
    let e = edgeless(4).unwrap();
    assert!(recognize_k_cluster_split(&e, Count::Finite(4)).unwrap());
    assert!(!recognize_k_cluster_split(&e, Count::Finite(3)).unwrap());
}

/// The split recognizer's byproducts against brute force: p is the clique
/// number and n - min(p, d_p) the independence number of a split graph.
#[test]
fn split_partition_byproducts() {
    for n in 1..=7usize {
        for g in &enumerate_all_graphs(n).unwrap() {
            let Some(sp) = recognize_split(g) else {
                continue;
            };
            let ds = g.degree_sequence();
            assert_eq!(sp.p, max_clique(g), "omega on {:?}", g);
            let alpha = n - sp.p.min(ds.degrees[sp.p - 1]);
            assert_eq!(alpha, max_independent(g), "alpha on {:?}", g);
        }
    }
}

/// On split inputs all three fast deciders must agree with the oracle over
/// the whole parameter grid, including the degenerate zero caps, and their
/// witnesses must validate.
#[test]
fn split_inputs_agree_with_oracle_on_full_grid() {
    use splitpolar::{
        c4_decide, c4_witness, ps_decide, ps_witness, twok2_decide, twok2_witness, Count,
        PolarityOracle, PolarityParams,
    };
    let grid: Vec<PolarityParams> = {
        let mut counts: Vec<Count> = (0..=3).map(Count::Finite).collect();
        counts.push(Count::Unbounded);
        let mut out = Vec::new();
        for &s in &counts {
            for &k in &counts {
                if s == Count::Finite(0) && k == Count::Finite(0) {
                    continue;
                }
                out.push(PolarityParams::new(s, k));
            }
        }
        out
    };
    let mut split_seen = 0usize;
    for n in 0..=6usize {
        for g in &enumerate_all_graphs(n).unwrap() {
            if recognize_split(g).is_none() {
                continue;
            }
            split_seen += 1;
            let po = PolarityOracle::new(g).unwrap();
            for &p in &grid {
                let expected = po.decide(p);
                assert_eq!(ps_decide(g, p).unwrap(), expected, "ps at {} on {:?}", p, g);
                assert_eq!(twok2_decide(g, p).unwrap(), expected, "2k2 at {} on {:?}", p, g);
                assert_eq!(c4_decide(g, p).unwrap(), expected, "c4 at {} on {:?}", p, g);
                for w in [
                    ps_witness(g, p).unwrap(),
                    twok2_witness(g, p).unwrap(),
                    c4_witness(g, p).unwrap(),
                ] {
                    assert_eq!(w.is_some(), expected);
                    if let Some(w) = w {
                        assert!(w.is_valid_for(g, p), "witness at {} on {:?}", p, g);
                    }
                }
            }
        }
    }
    assert!(split_seen > 100, "only {} split graphs seen", split_seen);
}

fn max_clique(g: &Graph) -> usize {
    (0..=g.full_mask())
        .filter(|&m| g.is_clique(m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn max_independent(g: &Graph) -> usize {
    (0..=g.full_mask())
        .filter(|&m| g.is_independent_set(m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
