//! Exhaustive generation of strict H-split families and enumeration of
//! minimal (s,k)-polar obstructions inside them.
//!
//! A family instance is a pair (c, i) plus one of the 2^(c*i) bipartite
//! patterns between the clique and independent sides. Two instances with
//! the same (c, i) are isomorphic exactly when their patterns agree up to
//! independent row and column permutations (the strict partition is
//! unique), so deduplication canonicalizes the pattern instead of the
//! whole graph: minimize over row permutations with columns sorted.

use crate::canon::{canonical_code, CANONICAL_MAX};
use crate::graph::{h_split_family, Graph, HKind};
use crate::graph6::encode;
use crate::oracle::{oracle_minimal_obstruction, PolarPartition, PolarityParams, ORACLE_POLAR_MAX};
use crate::{Error, Result};

/// Which strict H-split family to enumerate.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FamilyClass {
    PseudoSplit,
    TwoK2Split,
    C4Split,
}

impl FamilyClass {
    pub fn kind(self) -> HKind {
        match self {
            FamilyClass::PseudoSplit => HKind::C5,
            FamilyClass::TwoK2Split => HKind::TwoK2,
            FamilyClass::C4Split => HKind::C4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyClass::PseudoSplit => "pseudo-split",
            FamilyClass::TwoK2Split => "2k2-split",
            FamilyClass::C4Split => "c4-split",
        }
    }
}

impl std::str::FromStr for FamilyClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilyClass> {
        match s {
            "pseudo-split" | "ps" => Ok(FamilyClass::PseudoSplit),
            "2k2-split" | "2K2-split" | "2k2" => Ok(FamilyClass::TwoK2Split),
            "c4-split" | "C4-split" | "c4" => Ok(FamilyClass::C4Split),
            _ => Err(Error::InvalidParameter(format!("unknown class '{}'", s))),
        }
    }
}

/// Inclusive (c, i) ranges for a family sweep. Each instance must satisfy
/// c * i <= 20 so the pattern space stays enumerable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub class: FamilyClass,
    pub c_range: (usize, usize),
    pub i_range: (usize, usize),
}

pub const PATTERN_BITS_MAX: usize = 20;

impl FamilySpec {
    pub fn new(class: FamilyClass, c_range: (usize, usize), i_range: (usize, usize)) -> Result<FamilySpec> {
        if c_range.1 * i_range.1 > PATTERN_BITS_MAX {
            return Err(Error::InvalidParameter(format!(
                "family range admits a {}x{} pattern grid; the cap is {} bits",
                c_range.1, i_range.1, PATTERN_BITS_MAX
            )));
        }
        Ok(FamilySpec { class, c_range, i_range })
    }
}

/// One generated family member with its defining data.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub graph: Graph,
    pub c: usize,
    pub i: usize,
    /// Canonical bipartite pattern (row a, column b at bit a*i + b).
    pub pattern: u64,
}

/// Canonical form of a c x i bipartite pattern under row and column
/// permutations: the minimum over row orders of the column multiset.
fn canonical_pattern(cols: &mut Vec<u64>, c: usize) -> Vec<u64> {
    // cols[b] holds the c-bit column b; minimize over row permutations,
    // sorting columns after each one
    let mut best: Option<Vec<u64>> = None;
    let mut rows: Vec<usize> = (0..c).collect();
    permute(&mut rows, 0, &mut |perm| {
        let mut arranged: Vec<u64> = cols
            .iter()
            .map(|&col| {
                let mut out = 0u64;
                for (new_row, &old_row) in perm.iter().enumerate() {
                    out |= (col >> old_row & 1) << new_row;
                }
                out
            })
            .collect();
        arranged.sort_unstable();
        if best.as_ref().is_none_or(|b| arranged < *b) {
            best = Some(arranged);
        }
    });
    best.unwrap_or_default()
}

fn permute(items: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for j in at..items.len() {
        items.swap(at, j);
        permute(items, at + 1, visit);
        items.swap(at, j);
    }
}

/// Enumerate column multisets (nondecreasing tuples of c-bit values) and
/// keep the canonical representative of each pattern class.
fn canonical_patterns(c: usize, i: usize) -> Vec<u64> {
    let mut set = std::collections::BTreeSet::new();
    let mut cols = vec![0u64; i];
    fn fill(
        cols: &mut Vec<u64>,
        at: usize,
        min: u64,
        limit: u64,
        c: usize,
        set: &mut std::collections::BTreeSet<Vec<u64>>,
    ) {
        if at == cols.len() {
            let mut work = cols.clone();
            set.insert(canonical_pattern(&mut work, c));
            return;
        }
        for val in min..limit {
            cols[at] = val;
            fill(cols, at + 1, val, limit, c, set);
        }
    }
    let limit = 1u64 << c;
    fill(&mut cols, 0, 0, limit, c, &mut set);
    set.into_iter()
        .map(|cols| {
            let mut pattern = 0u64;
            for (b, col) in cols.iter().enumerate() {
                for a in 0..c {
                    pattern |= (col >> a & 1) << (a * i + b);
                }
            }
            pattern
        })
        .collect()
}

/// All members of the family, one per isomorphism class, ordered by
/// (c, i, canonical pattern).
pub fn family_members(spec: &FamilySpec) -> Result<Vec<FamilyMember>> {
    if spec.c_range.1 * spec.i_range.1 > PATTERN_BITS_MAX {
        return Err(Error::InvalidParameter("family range too large".into()));
    }
    let mut out = Vec::new();
    for c in spec.c_range.0..=spec.c_range.1 {
        for i in spec.i_range.0..=spec.i_range.1 {
            for pattern in canonical_patterns(c, i) {
                let graph = h_split_family(spec.class.kind(), c, i, pattern)?;
                out.push(FamilyMember { graph, c, i, pattern });
            }
        }
    }
    Ok(out)
}

/// The family graphs themselves, deduplicated up to isomorphism.
pub fn enumerate_family(spec: &FamilySpec) -> Result<Vec<Graph>> {
    Ok(family_members(spec)?.into_iter().map(|m| m.graph).collect())
}

/// One minimal obstruction found by a search.
#[derive(Clone, Debug)]
pub struct ObstructionEntry {
    pub graph: Graph,
    pub graph6: String,
    /// Stable isomorphism key: the canonical code for orders within its
    /// cap, otherwise the family coordinates.
    pub key: String,
    pub order: usize,
    pub c: usize,
    pub i: usize,
    /// Vertex-deleted polarity witnesses, one per vertex.
    pub certificates: Vec<PolarPartition>,
}

fn entry_key(member: &FamilyMember, class: FamilyClass) -> String {
    if member.graph.n() <= CANONICAL_MAX {
        canonical_code(&member.graph).unwrap().to_hex()
    } else {
        format!(
            "{}:c{}:i{}:p{:x}",
            class.name(),
            member.c,
            member.i,
            member.pattern
        )
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub class: FamilyClass,
    pub params: PolarityParams,
    pub entries: Vec<ObstructionEntry>,
    pub max_order_found: usize,
}

/// Filter the family through the oracle's minimality test. Unbounded caps
/// are exact here: a cap of n never binds on an n-vertex graph.
pub fn find_minimal_obstructions(
    spec: &FamilySpec,
    params: PolarityParams,
    order_cap: usize,
) -> Result<ObstructionReport> {
    if order_cap > ORACLE_POLAR_MAX {
        return Err(Error::InvalidParameter(format!(
            "order cap {} exceeds the oracle limit {}",
            order_cap, ORACLE_POLAR_MAX
        )));
    }
    let mut entries = Vec::new();
    for member in family_members(spec)? {
        if member.graph.n() > order_cap {
            continue;
        }
        if let Some(certificates) = oracle_minimal_obstruction(&member.graph, params)? {
            entries.push(ObstructionEntry {
                graph6: encode(&member.graph),
                key: entry_key(&member, spec.class),
                order: member.graph.n(),
                c: member.c,
                i: member.i,
                certificates,
                graph: member.graph,
            });
        }
    }
    entries.sort_by(|a, b| (a.order, &a.key).cmp(&(b.order, &b.key)));
    let max_order_found = entries.iter().map(|e| e.order).max().unwrap_or(0);
    Ok(ObstructionReport {
        class: spec.class,
        params,
        entries,
        max_order_found,
    })
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub report: ObstructionReport,
    pub claimed_bound: usize,
    /// No obstruction in the searched family exceeds the claimed bound.
    pub holds: bool,
    /// Obstructions attaining the bound exactly.
    pub extremal: Vec<ObstructionEntry>,
    pub violations: Vec<ObstructionEntry>,
}

/// Check a claimed upper bound for obstruction order over the searched
/// family, reporting the graphs that attain or exceed it.
pub fn verify_order_bound(
    spec: &FamilySpec,
    params: PolarityParams,
    claimed_bound: usize,
    order_cap: usize,
) -> Result<BoundReport> {
    let report = find_minimal_obstructions(spec, params, order_cap)?;
    let extremal: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.order == claimed_bound)
        .cloned()
        .collect();
    let violations: Vec<_> = report
        .entries
        .iter()
        .filter(|e| e.order > claimed_bound)
        .cloned()
        .collect();
    Ok(BoundReport {
        holds: violations.is_empty(),
        claimed_bound,
        extremal,
        violations,
        report,
    })
}

/// Empirical check of the conjectured shape of 2K2-split minimal
/// (inf,k)-polar obstructions: k <= i <= 2k-2 and c <= 2k-i-1.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub k: usize,
    pub obstructions: Vec<ObstructionEntry>,
    /// k <= i <= 2k-2 held for every obstruction found (this part is a
    /// proven bound; a violation would indicate an implementation bug).
    pub i_bounds_hold: bool,
    /// c <= 2k-i-1 held for every obstruction found (the open part).
    pub c_bound_holds: bool,
    pub violations: Vec<ObstructionEntry>,
    /// The conjectured extremal construction of order 2k+3 is confirmed to
    /// be a minimal obstruction.
    pub tight_family_minimal: bool,
}

pub fn check_infty_k_conjecture(k: usize) -> Result<ConjectureReport> {
    if !(3..=4).contains(&k) {
        return Err(Error::InvalidParameter(
            "conjecture check supports k in {3, 4}".into(),
        ));
    }
    let params = PolarityParams::new(crate::oracle::Count::Unbounded, crate::oracle::Count::Finite(k as u32));
    let mut obstructions = Vec::new();
    // search one i-stripe at a time so c can stretch to the interesting
    // margin (one past the conjectured bound) while orders stay searchable
    for i in 0..=2 * k - 1 {
        // one past the conjectured c bound, clamped so orders stay within
        // the canonical-code cap (c + 4 + i <= 12)
        let c_max = (2 * k - i).min(CANONICAL_MAX - 4 - i);
        let spec = FamilySpec::new(FamilyClass::TwoK2Split, (0, c_max), (i, i))?;
        let report = find_minimal_obstructions(&spec, params, CANONICAL_MAX)?;
        obstructions.extend(report.entries);
    }
    obstructions.sort_by(|a, b| (a.order, &a.key).cmp(&(b.order, &b.key)));
    let i_bounds_hold = obstructions.iter().all(|e| k <= e.i && e.i <= 2 * k - 2);
    let violations: Vec<_> = obstructions
        .iter()
        .filter(|e| !(k <= e.i && e.i <= 2 * k - 2) || e.c + e.i + 1 > 2 * k)
        .cloned()
        .collect();
    let c_bound_holds = obstructions.iter().all(|e| e.c + e.i + 1 <= 2 * k);
    let tight = crate::two_k2::twok2_catalog(crate::two_k2::TwoK2CatalogName::TightK, 0, k as u32)?;
    let tight_family_minimal = oracle_minimal_obstruction(&tight, params)?.is_some();
    Ok(ConjectureReport {
        k,
        obstructions,
        i_bounds_hold,
        c_bound_holds,
        violations,
        tight_family_minimal,
    })
}
