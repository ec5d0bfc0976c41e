//! Bijection between partitions whose multiplicities obey residue-class
//! thresholds (family A) and partitions whose parts obey congruence
//! restrictions (family B), for parameters `(p, a, r)` with `gcd(a, p) = 1`.
//!
//! Besides the map and its inverse the crate ships two independent counting
//! oracles: exhaustive enumeration ([`oracle`]) and exact truncated
//! generating functions ([`series`]).

pub mod bijection;
pub mod error;
pub mod exec;
pub mod family;
pub mod oracle;
pub mod partition;
pub mod series;

pub use bijection::{aepr_forward, decompose_multiplicity, forward, inverse, MultiplicityDecomposition};
pub use error::{Error, Result};
pub use exec::Execution;
pub use family::{
    classify_part, in_a, in_b, in_family, is_allowed_multiplicity, validate_params, Family, PartClass, Params,
};
pub use oracle::{
    count_family, enumerate_partitions, verify_bijection, verify_bijection_with, VerificationReport,
    WeightRecord, DEFAULT_N_CAP,
};
pub use partition::Partition;
pub use series::{
    a_side_series, b_side_series, compare_series, family_series, SeriesCoefficients, SeriesComparison,
    DEFAULT_SERIES_CAP,
};
