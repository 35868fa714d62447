//! Coloring parameters of pseudo-split graphs.
//!
//! For an imperfect pseudo-split graph everything reads off the partition
//! sizes: chi = |C|+3, theta = |I|+3, the cochromatic number is always 3 and
//! the bichromatic number is max(|C|,|I|)+3. Split graphs get chi and theta
//! from the split recognition; their cochromatic and bichromatic numbers are
//! outside these formulas and are delegated to the coloring oracle.

use crate::graph::{complete, cycle, edgeless, Graph};
use crate::oracle::{ColoringOracle, ORACLE_COLORING_MAX};
use crate::recognition::{recognize_pseudo_split, PseudoSplitClass};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringProfile {
    pub chi: usize,
    pub theta: usize,
    pub cochromatic: usize,
    pub bichromatic: usize,
    /// True when the cochromatic/bichromatic entries came from the oracle
    /// sweep (split inputs) rather than the closed formulas.
    pub oracle_derived: bool,
}

/// Coloring profile of a pseudo-split graph. For split inputs of order
/// above the coloring-oracle cap the cochromatic/bichromatic sweep is
/// infeasible and the call is rejected.
pub fn ps_coloring_profile(g: &Graph) -> Result<ColoringProfile> {
    match recognize_pseudo_split(g) {
        PseudoSplitClass::NotPseudoSplit => Err(Error::NotPseudoSplit),
        PseudoSplitClass::Imperfect(ips) => {
            let c = ips.partition.clique.len();
            let i = ips.partition.independent.len();
            Ok(ColoringProfile {
                chi: c + 3,
                theta: i + 3,
                cochromatic: 3,
                bichromatic: c.max(i) + 3,
                oracle_derived: false,
            })
        }
        PseudoSplitClass::Split(sp) => {
            if g.n() > ORACLE_COLORING_MAX {
                return Err(Error::OracleTooLarge(g.n(), ORACLE_COLORING_MAX));
            }
            let ds = g.degree_sequence();
            let (chi, theta) = if g.n() == 0 {
                (0, 0)
            } else {
                (sp.p, g.n() - sp.p.min(ds.degrees[sp.p - 1]))
            };
            let oracle = ColoringOracle::new(g)?;
            debug_assert_eq!(chi, oracle.chromatic_number());
            debug_assert_eq!(theta, oracle.clique_cover_number());
            Ok(ColoringProfile {
                chi,
                theta,
                cochromatic: oracle.cochromatic_number(),
                bichromatic: oracle.bichromatic_number(),
                oracle_derived: true,
            })
        }
    }
}

/// Is the pseudo-split graph partitionable into `k` independent sets and
/// `l` cliques?
pub fn ps_is_kl_colorable(g: &Graph, k: usize, l: usize) -> Result<bool> {
    match recognize_pseudo_split(g) {
        PseudoSplitClass::NotPseudoSplit => Err(Error::NotPseudoSplit),
        PseudoSplitClass::Imperfect(ips) => {
            let c = ips.partition.clique.len();
            let i = ips.partition.independent.len();
            Ok(if l == 0 {
                c + 3 <= k
            } else if k == 0 {
                i + 3 <= l
            } else {
                // one class of each kind is enough once k + l >= 3
                k + l >= 3
            })
        }
        PseudoSplitClass::Split(sp) => {
            let ds = g.degree_sequence();
            let theta = if g.n() == 0 {
                0
            } else {
                g.n() - sp.p.min(ds.degrees[sp.p - 1])
            };
            Ok(if k == 0 && l == 0 {
                g.n() == 0
            } else if l == 0 {
                sp.p <= k
            } else if k == 0 {
                theta <= l
            } else {
                // the split partition itself is a (1,1)-coloring
                true
            })
        }
    }
}

/// The minimal pseudo-split graphs that are not z-bicolorable while every
/// vertex-deleted subgraph is: {K2, 2K1} for z = 1, {K3, C5, 3K1} for z = 2,
/// and {K_{z+1}, C5 joined with K_{z-2}, (z+1)K1, C5 + (z-2)K1} for z >= 3.
pub fn bicolor_obstruction_family(z: usize) -> Result<Vec<Graph>> {
    match z {
        0 => Err(Error::InvalidParameter(
            "bicolorability obstructions need z >= 1".into(),
        )),
        1 => Ok(vec![complete(2)?, edgeless(2)?]),
        2 => Ok(vec![complete(3)?, cycle(5)?, edgeless(3)?]),
        _ => Ok(vec![
            complete(z + 1)?,
            cycle(5)?.join(&complete(z - 2)?)?,
            edgeless(z + 1)?,
            cycle(5)?.disjoint_union(&edgeless(z - 2)?)?,
        ]),
    }
}
