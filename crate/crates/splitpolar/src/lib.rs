//! Recognition, polarity and coloring algorithms for split-like graph
//! classes: split, pseudo-split, 2K2-split and C4-split graphs.
//!
//! The fast deciders work from degree sequences and small marker sets; a
//! brute-force oracle provides independent ground truth on small graphs,
//! and the search module enumerates minimal (s,k)-polar obstructions inside
//! the strict H-split families.

pub mod canon;
pub mod coloring;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod ps_polarity;
pub mod recognition;
pub mod search;
pub mod two_k2;

pub use canon::{canonical_code, enumerate_all_graphs, CanonicalCode, CANONICAL_MAX};
pub use coloring::{bicolor_obstruction_family, ps_coloring_profile, ps_is_kl_colorable, ColoringProfile};
pub use graph::{
    build_named, complete, co_banner, cycle, disjoint_copies, edgeless, h_split_family, path,
    two_k2_split_obstructions, contains_induced, DegreeSequence, Graph, HKind, MAX_VERTICES,
};
pub use graph6::Graph6Error;
pub use oracle::{
    classify_side, oracle_coloring, oracle_minimal_obstruction, oracle_polar, ColoringOracle,
    ColoringWitness, Count, PolarPartition, PolarityOracle, PolarityParams, SideReport,
    ORACLE_COLORING_MAX, ORACLE_POLAR_MAX,
};
pub use ps_polarity::{
    ps_catalog, ps_decide, ps_minimality_analysis, ps_monopolar_unipolar, ps_profile, ps_witness,
    PsCatalogName, PsMinimalityAnalysis, PseudoSplitProfile,
};
pub use recognition::{
    k_cluster_analysis, recognize_2k2_split_by_obstructions, recognize_h_split,
    recognize_k_cluster_split, recognize_pseudo_split, recognize_split, HSplitPartition,
    ImperfectPseudoSplit, KClusterAnalysis, PseudoSplitClass, SplitPartition,
    TwoK2ObstructionCheck,
};
pub use search::{
    check_infty_k_conjecture, enumerate_family, family_members, find_minimal_obstructions,
    verify_order_bound, BoundReport, ConjectureReport, FamilyClass, FamilyMember, FamilySpec,
    ObstructionEntry, ObstructionReport,
};
pub use two_k2::{
    c4_decide, c4_witness, twok2_analysis, twok2_catalog, twok2_decide, twok2_witness,
    TwoK2Analysis, TwoK2CatalogName,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported range")]
    TooLarge(usize),
    #[error("vertex {0} out of range for a graph of order {1}")]
    VertexOutOfRange(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not split")]
    NotSplit,
    #[error("graph is not pseudo-split")]
    NotPseudoSplit,
    #[error("graph is not an imperfect pseudo-split graph")]
    NotImperfectPseudoSplit,
    #[error("graph is not a strict 2K2-split graph")]
    NotTwoK2Split,
    #[error("graph is not a C4-split graph")]
    NotC4Split,
    #[error("graph order {0} exceeds the oracle limit {1}")]
    OracleTooLarge(usize, usize),
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
}

pub type Result<T> = std::result::Result<T, Error>;
