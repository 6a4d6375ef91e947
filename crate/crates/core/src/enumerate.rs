//! Exhaustive enumeration of connected graphs by isomorphism class, and the
//! checks that every classification claim holds at a given order.
//!
//! Enumeration grows graphs one vertex at a time: every connected graph on
//! `n` vertices contains a non-cut vertex, so it arises from a connected
//! graph on `n - 1` vertices by attaching a new vertex with a nonempty
//! neighbor set. Children are deduplicated by canonical form, which also
//! fixes the output order. Candidate generation fans out across a thread
//! pool; the merge is a set union keyed by canonical form, so results are
//! identical for any worker count.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{
    chain_holds, classify_with_profile, prescribed_families, profile_lean,
    reduced_laplacian_determinant, S3Class,
};
use crate::graph::{Diameter, Graph};

/// Largest order the enumerator accepts. `n = 9` works but enumerates
/// 261,080 classes; the verifier requires explicit opt-in for it.
pub const MAX_ENUM_VERTICES: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("enumeration supports 1..={max} vertices, got {n}")]
    Range { n: usize, max: usize },
    #[error("theorem verification supports 5..={max} vertices, got {n}")]
    VerifyRange { n: usize, max: usize },
    #[error("side-claim verification supports 3..={max} vertices, got {n}")]
    SideClaimRange { n: usize, max: usize },
    #[error("n = 9 enumerates 261k+ classes; pass allow_slow to confirm")]
    SlowOptIn,
}

/// Which documented claim a violation offends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimKind {
    S3Bound,
    EqNSet,
    EqN1Set,
    EqN2Set,
    EqN3Set,
    LemmaS2,
    DiameterS3,
    Chain,
    MatrixTree,
}

impl ClaimKind {
    pub fn name(self) -> &'static str {
        match self {
            ClaimKind::S3Bound => "S3_BOUND",
            ClaimKind::EqNSet => "EQ_N_SET",
            ClaimKind::EqN1Set => "EQ_N1_SET",
            ClaimKind::EqN2Set => "EQ_N2_SET",
            ClaimKind::EqN3Set => "EQ_N3_SET",
            ClaimKind::LemmaS2 => "LEMMA_S2",
            ClaimKind::DiameterS3 => "DIAMETER_S3",
            ClaimKind::Chain => "CHAIN",
            ClaimKind::MatrixTree => "MATRIX_TREE",
        }
    }

    fn for_class(class: S3Class) -> ClaimKind {
        match class {
            S3Class::EqN => ClaimKind::EqNSet,
            S3Class::EqNMinus1 => ClaimKind::EqN1Set,
            S3Class::EqNMinus2 => ClaimKind::EqN2Set,
            S3Class::EqNMinus3 => ClaimKind::EqN3Set,
            _ => unreachable!("only characterized classes have set claims"),
        }
    }
}

/// A single failed check; the graph is identified by its canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationRecord {
    pub canon: u64,
    pub claim: ClaimKind,
    pub details: String,
}

/// Aggregated verification outcome for one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub n: usize,
    /// Number of isomorphism classes of connected graphs.
    pub total_connected: u64,
    /// Count of classes per `s3` value, excluding the complete graph.
    pub s3_histogram: BTreeMap<u64, u64>,
    /// Canonical forms of the classes landing in each characterized class.
    pub witnesses: BTreeMap<S3Class, Vec<u64>>,
    pub violations: Vec<ViolationRecord>,
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, canonically labeled, in ascending canonical-form order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumError> {
    if n == 0 || n > MAX_ENUM_VERTICES {
        return Err(EnumError::Range { n, max: MAX_ENUM_VERTICES });
    }
    let mut level = vec![Graph::empty(1).unwrap()];
    for k in 2..=n {
        let subsets = 1u64..(1 << (k - 1));
        let masks: BTreeSet<u64> = level
            .par_iter()
            .flat_map_iter(|parent| {
                subsets.clone().map(move |neighbors| {
                    parent.with_vertex_added(neighbors).canonical_form().unwrap()
                })
            })
            .collect();
        level = masks.into_iter().map(|m| Graph::from_edge_mask(k, m).unwrap()).collect();
    }
    Ok(level)
}

struct ClassRecord {
    canon: u64,
    is_complete: bool,
    diameter: Diameter,
    factors: Vec<BigInt>,
    reduced_det: BigInt,
    class: S3Class,
}

fn class_record(g: &Graph) -> ClassRecord {
    // graphs from the enumerator are canonically labeled already
    let canon = g.edge_mask().unwrap();
    debug_assert_eq!(canon, g.canonical_form().unwrap());
    let profile = profile_lean(g).expect("enumerated graphs are connected");
    let reduced_det = reduced_laplacian_determinant(&g.laplacian());
    let report = classify_with_profile(g, profile);
    ClassRecord {
        canon,
        is_complete: g.is_complete(),
        diameter: report.profile.diameter,
        reduced_det,
        class: report.s3_class,
        factors: report.profile.factors,
    }
}

/// Verifies the `s3` characterization over every connected class of order
/// `n`: the bound `s3 <= n` and exact set equality between each
/// characterized class and its prescribed graphs. `n = 9` requires
/// `allow_slow`.
pub fn verify_theorem(n: usize, allow_slow: bool) -> Result<EnumerationSummary, EnumError> {
    if !(5..=MAX_ENUM_VERTICES).contains(&n) {
        return Err(EnumError::VerifyRange { n, max: MAX_ENUM_VERTICES });
    }
    if n == MAX_ENUM_VERTICES && !allow_slow {
        return Err(EnumError::SlowOptIn);
    }
    let classes = enumerate_connected(n)?;
    let records: Vec<ClassRecord> = classes.par_iter().map(class_record).collect();

    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    let mut witnesses: BTreeMap<S3Class, Vec<u64>> =
        S3Class::CHARACTERIZED.iter().map(|&c| (c, Vec::new())).collect();
    let mut violations = Vec::new();
    let bound = BigInt::from(n as u64);

    for rec in &records {
        if rec.is_complete {
            continue; // excluded from the characterization
        }
        let s3 = &rec.factors[2];
        if *s3 > bound {
            violations.push(ViolationRecord {
                canon: rec.canon,
                claim: ClaimKind::S3Bound,
                details: format!("s3 = {s3} exceeds n = {n}"),
            });
        }
        let key = u64::try_from(s3.clone()).unwrap_or(u64::MAX);
        *histogram.entry(key).or_insert(0) += 1;
        if let Some(list) = witnesses.get_mut(&rec.class) {
            list.push(rec.canon);
        }
    }

    // set equality per characterized class against the prescribed graphs
    for class in S3Class::CHARACTERIZED {
        let expected: BTreeSet<u64> = prescribed_families(class, n)
            .into_iter()
            .map(|fam| fam.build(n).unwrap().canonical_form().unwrap())
            .collect();
        let got: BTreeSet<u64> = witnesses[&class].iter().copied().collect();
        let claim = ClaimKind::for_class(class);
        for &extra in got.difference(&expected) {
            violations.push(ViolationRecord {
                canon: extra,
                claim,
                details: format!("unexpected member of {}", class.name()),
            });
        }
        for &missing in expected.difference(&got) {
            violations.push(ViolationRecord {
                canon: missing,
                claim,
                details: format!("prescribed graph missing from {}", class.name()),
            });
        }
    }

    let total_connected = records.len() as u64;
    debug_assert_eq!(histogram.values().sum::<u64>(), total_connected - 1);
    Ok(EnumerationSummary {
        n,
        total_connected,
        s3_histogram: histogram,
        witnesses,
        violations,
    })
}

/// Checks the side claims over every connected class of order `n`: `s2 != 1`
/// exactly at the complete graph, diameter above 2 forces `s3 = 1`, the
/// divisibility chain, and the matrix-tree product identity.
pub fn verify_side_claims(n: usize) -> Result<Vec<ViolationRecord>, EnumError> {
    if !(3..=8).contains(&n) {
        return Err(EnumError::SideClaimRange { n, max: 8 });
    }
    let classes = enumerate_connected(n)?;
    let violations: Vec<ViolationRecord> = classes
        .par_iter()
        .map(|g| {
            let rec = class_record(g);
            side_claim_violations(&rec)
        })
        .reduce(Vec::new, |mut acc, mut part| {
            acc.append(&mut part);
            acc
        });
    Ok(violations)
}

fn side_claim_violations(rec: &ClassRecord) -> Vec<ViolationRecord> {
    let n = rec.factors.len();
    let mut out = Vec::new();
    let push = |out: &mut Vec<ViolationRecord>, claim, details| {
        out.push(ViolationRecord { canon: rec.canon, claim, details });
    };

    let s2_nontrivial = !rec.factors[1].is_one();
    if s2_nontrivial != rec.is_complete {
        push(
            &mut out,
            ClaimKind::LemmaS2,
            format!("s2 = {} with is_complete = {}", rec.factors[1], rec.is_complete),
        );
    }
    if rec.diameter.exceeds(2) && !rec.factors[2].is_one() {
        push(
            &mut out,
            ClaimKind::DiameterS3,
            format!("diameter {} but s3 = {}", rec.diameter, rec.factors[2]),
        );
    }
    if !chain_holds(&rec.factors) {
        push(&mut out, ClaimKind::Chain, format!("factors {:?} break the chain", rec.factors));
    }
    let product: BigInt = rec.factors[..n - 1].iter().product();
    if product != rec.reduced_det {
        push(
            &mut out,
            ClaimKind::MatrixTree,
            format!("factor product {product} != reduced determinant {}", rec.reduced_det),
        );
    }
    out
}
