//! Exact linear algebra over graph Laplacians.
//!
//! The crate computes Smith normal forms and invariant factors of the
//! Laplacian matrices of small simple graphs, classifies connected graphs by
//! the value of the third invariant factor `s3`, and exhaustively checks the
//! classification over every isomorphism class of connected graphs of a given
//! order.
//!
//! ```
//! use lapsnf::{Graph, invariant_factors};
//! use num_bigint::BigInt;
//!
//! let k5 = Graph::complete(5).unwrap();
//! let factors = invariant_factors(&k5.laplacian());
//! let expect: Vec<BigInt> = [1, 5, 5, 5, 0].iter().map(|&x| BigInt::from(x)).collect();
//! assert_eq!(factors, expect);
//! ```

pub mod analysis;
pub mod canon;
pub mod edge_list;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod snf;

pub use analysis::{
    classify_s3, expected_snf_for_family, invariant_profile, s2_is_nontrivial,
    spanning_tree_count, AnalysisError, ClassificationReport, InvariantProfile, S3Class,
};
pub use canon::{are_isomorphic, MAX_CANON_VERTICES};
pub use edge_list::{emit_edge_list, parse_edge_list, EdgeListError};
pub use enumerate::{
    enumerate_connected, verify_side_claims, verify_theorem, ClaimKind, EnumError,
    EnumerationSummary, ViolationRecord,
};
pub use graph::{Diameter, Family, Graph, GraphError, MAX_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use matrix::{IntMatrix, MatrixError};
pub use snf::{
    determinantal_divisors, invariant_factors, smith_normal_form, DeterminantalDivisors,
    SnfResult,
};
