//! Exact triangle metrics, excircle radii and the parametric families of
//! Heron isosceles triangles whose three exradii are all integers.
//!
//! Everything here is integer or rational arithmetic. There is no floating
//! point anywhere in the crate. The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod families;
pub mod metrics;
pub mod oracle;
pub mod root;
pub mod sides;
pub mod tables;

pub use error::Error;
pub use families::{
    enumerate_f1_f2, enumerate_heron_isosceles, gen_f1, gen_f2, gen_heron_isosceles,
    gen_heron_isosceles_relaxed, gen_pythagorean, pyth_exradii, F1Params, F2Params, IsoFamily,
    IsoTriangleRecord, IsoVariant, MNPair, Orientation, PythParams, Source,
};
pub use metrics::{
    cos_vertex, exradius, heron16, integral_exradius, metrics, tan_half_sq, tangent_lengths,
    TriangleMetrics,
};
pub use oracle::{
    brute_heron_isosceles, brute_integral_exradii, verify_completeness, verify_prop1, HeronHit,
    Prop1Violation, Scan, SearchReport, Sequential, Target,
};
pub use root::{integer_sqrt, integer_sqrt_u128, isqrt_floor, isqrt_floor_u128, rational_sqrt, ExactRoot};
pub use sides::{Side, TriangleSides};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type ExactRational = num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
