//! Rayon-backed versions of the enumeration-heavy library calls.
//!
//! Each splits its index space into independent chunks and merges the partial
//! results with an associative, commutative reduction, so results do not
//! depend on the number of worker threads.

use rayon::prelude::*;
use tracecode_core::analysis::{verify_using, Codebook, VerificationReport};
use tracecode_core::charsum::{CaseCheck, LemmaTable, SumKind};
use tracecode_core::code::{weight_histogram_range, ENUMERATION_LIMIT};
use tracecode_core::{BinaryLinearCode, Error, Family, FieldContext, Result, WeightDistribution};

const CHUNKS: u64 = 256;

pub fn weight_distribution(code: &BinaryLinearCode) -> Result<WeightDistribution> {
    let k = code.dimension();
    if k > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "k",
            limit: ENUMERATION_LIMIT as u64,
            got: k as u64,
        });
    }
    let total = 1u64 << k;
    let step = total.div_ceil(CHUNKS).max(1);
    let n = code.length();
    Ok((0..total.div_ceil(step))
        .into_par_iter()
        .map(|c| weight_histogram_range(code, c * step..((c + 1) * step).min(total)))
        .reduce(
            || WeightDistribution::empty(n),
            |mut a, b| {
                a.merge(&b);
                a
            },
        ))
}

pub fn brute_minimal(code: &BinaryLinearCode) -> Result<bool> {
    let book = Codebook::new(code)?;
    Ok((0..book.len())
        .into_par_iter()
        .all(|i| book.is_minimal_at(i)))
}

/// Full `(a, b) ≠ (0, 0)` sweep of one sum, parallel over `a`, in `(a, b)` order.
pub fn charsum_sweep(table: &LemmaTable, kind: SumKind) -> Result<Vec<CaseCheck>> {
    let rows: Vec<Vec<CaseCheck>> = table
        .context()
        .elements()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|a| table.check_row(kind, a))
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

pub fn verify(ctx: &FieldContext, family: Family) -> Result<VerificationReport> {
    verify_using(ctx, family, weight_distribution)
}
