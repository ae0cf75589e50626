//! Exact machinery for partition inequalities between finite q-products.
//!
//! The crate is split along the lines of the computation:
//!
//! - [`series`]: dense truncated power series with big-integer coefficients and
//!   expansion of finite products `1/(q^r; q^m)_L` and `(q^r; q^m)_L`.
//! - [`partition`]: partitions written in indexed-part notation `s_t`, their
//!   canonical text form, and brute-force enumeration.
//! - [`injection`]: the norm-preserving injection between the two partition
//!   classes, its inverse, the `mu` statistic and the x-shift map.
//! - [`verify`]: theorem checks, strictness witnesses and grid scanners that
//!   produce [`VerificationReport`]s.

pub mod error;
pub mod injection;
pub mod partition;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use injection::{
    composed_map, forward_map, inverse_map, inverse_trace, mu, x_shift_inverse, x_shift_map,
    MappingTrace, PartTrace, TraceSums,
};
pub use partition::{
    count_from_sequence, enumerate, part_value, PartClass, PartContext, Partition,
};
pub use series::{expand_product, expand_reciprocal, ProductSpec, TruncatedSeries};
pub use verify::{Finding, ReportStatus, Subject, VerificationReport, Witness, WitnessCase};
