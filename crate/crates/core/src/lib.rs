//! Binary trace codes built from quadratic defining sets over GF(2^m).
//!
//! The crate covers the whole pipeline from field arithmetic to verdicts:
//!
//! * [`field`]: GF(2^m) in a polynomial basis with the absolute trace.
//! * [`code`]: the defining sets `D1`, `D2`, `D3`, the codes
//!   `c(a, b) = (Tr(axy + bx))` over them and exact weight distributions.
//! * [`charsum`]: brute-force character sums paired with their closed forms.
//! * [`analysis`]: Pless moments, projectivity, Griesmer classification,
//!   minimality and the closed-form weight tables.
//! * [`sumset`]: point sets derived from generator columns and exact s-fold
//!   representation counting through the Walsh-Hadamard transform.
//!
//! Everything here is `no_std` + `alloc`. IO, file formats, the CLI and
//! multi-threaded enumeration live in the companion `tracecode` crate.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod bits;
pub mod charsum;
pub mod code;
mod error;
pub mod field;
pub mod sumset;
pub mod wht;

pub use analysis::{
    ab_minimal, brute_minimal, expected_table, griesmer_classify, is_projective, pless_dual_counts,
    verify, DualCounts, Griesmer, VerificationReport,
};
pub use bits::BitVec;
pub use code::{
    codeword, enumerate_defining_set, generator_matrix, minimum_distance, weight_distribution,
    BinaryLinearCode, DefiningSet, Family, WeightDistribution,
};
pub use error::{Error, Result};
pub use field::{FieldContext, FieldElement};
pub use sumset::{
    build_omega, check_sum_set, representation_counts, ColumnMap, OmegaSet, SumSetReport,
};
