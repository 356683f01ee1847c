//! Point sets in `GF(2)^K` read off generator columns, and the s-sum set test.
//!
//! A set `Ω` is an s-sum set when the number of ordered s-tuples from `Ω`
//! XOR-summing to a nonzero `h` depends only on whether `h ∈ Ω`. Counts for
//! every `h` at once come from the Walsh-Hadamard transform of the indicator
//! of `Ω` raised pointwise to the s-th power.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::BitVec;
use crate::code::{enumerate_defining_set, BinaryLinearCode, Family, WeightDistribution};
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::wht::fwht;

/// How a defining-set pair `(x, y)` becomes a column vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnMap {
    /// Blocks `Tr(μ_j·y·x²)`, `Tr(μ_j·y)` (family 1) or `Tr(μ_j·y·x²)`,
    /// `Tr(μ_j·x)`, `Tr(μ_j·y)` (family 2).
    PaperColumn,
    /// The generator-matrix column of the code itself: `Tr(μ_j·x·y)`, `Tr(μ_j·x)`.
    CodeColumn,
}

impl ColumnMap {
    pub const ALL: [ColumnMap; 2] = [ColumnMap::PaperColumn, ColumnMap::CodeColumn];
}

impl fmt::Display for ColumnMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColumnMap::PaperColumn => "paper-column",
            ColumnMap::CodeColumn => "code-column",
        })
    }
}

/// A set of distinct vectors in `GF(2)^K`, bit `c·m + j` holding the `j`-th
/// basis component of block `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSet {
    pub family: Family,
    pub m: u32,
    pub variant: ColumnMap,
    pub ambient_dim: u32,
    /// Distinct nonzero vectors, sorted.
    pub vectors: Vec<u64>,
    pub include_zero: bool,
    /// Number of source columns (the code length).
    pub columns: usize,
    /// Source columns that were the zero vector.
    pub zero_columns: usize,
}

impl OmegaSet {
    /// An arbitrary set; zero entries set `include_zero`, duplicates collapse.
    pub fn from_vectors(ambient_dim: u32, vectors: &[u64]) -> Self {
        let mut v: Vec<u64> = vectors.iter().copied().filter(|&x| x != 0).collect();
        v.sort_unstable();
        v.dedup();
        let zero_columns = vectors.iter().filter(|&&x| x == 0).count();
        OmegaSet {
            family: Family::One,
            m: 0,
            variant: ColumnMap::CodeColumn,
            ambient_dim,
            vectors: v,
            include_zero: zero_columns > 0,
            columns: vectors.len(),
            zero_columns,
        }
    }

    pub fn with_zero(mut self, include: bool) -> Self {
        self.include_zero = include;
        self
    }

    /// Elements of `Ω`, zero first when included.
    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        self.include_zero
            .then_some(0)
            .into_iter()
            .chain(self.vectors.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.vectors.len() + usize::from(self.include_zero)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, h: u64) -> bool {
        if h == 0 {
            self.include_zero
        } else {
            self.vectors.binary_search(&h).is_ok()
        }
    }

    /// The code whose generator columns are the members of `Ω`.
    pub fn code(&self) -> Result<BinaryLinearCode> {
        let members: Vec<u64> = self.members().collect();
        let rows = (0..self.ambient_dim)
            .map(|j| BitVec::from_fn(members.len(), |i| members[i] >> j & 1 == 1))
            .collect();
        BinaryLinearCode::from_rows(rows)
    }
}

fn pack(ctx: &FieldContext, blocks: &[FieldElement]) -> u64 {
    let m = ctx.degree();
    let mut v = 0u64;
    for (c, &value) in blocks.iter().enumerate() {
        for j in 0..m {
            let bit = ctx.trace(ctx.mul(ctx.basis(j), value));
            v |= u64::from(bit) << (c as u32 * m + j);
        }
    }
    v
}

/// Builds `Ω_{D}` for families 1 and 2 (the latter at odd `m` only).
pub fn build_omega(ctx: &FieldContext, family: Family, variant: ColumnMap) -> Result<OmegaSet> {
    let m = ctx.degree();
    match family {
        Family::Three => {
            return Err(Error::OutOfScope(
                "point sets are defined for families 1 and 2",
            ))
        }
        Family::Two if m.is_multiple_of(2) => {
            return Err(Error::OutOfScope("family 2 point set needs odd m"))
        }
        _ => {}
    }
    let set = enumerate_defining_set(ctx, family);
    let raw: Vec<u64> = set
        .pairs()
        .iter()
        .map(|&(x, y)| {
            let yx2 = ctx.mul(y, ctx.square(x));
            match (variant, family) {
                (ColumnMap::CodeColumn, _) => pack(ctx, &[ctx.mul(x, y), x]),
                (ColumnMap::PaperColumn, Family::Two) => pack(ctx, &[yx2, x, y]),
                (ColumnMap::PaperColumn, _) => pack(ctx, &[yx2, y]),
            }
        })
        .collect();
    let blocks = match (variant, family) {
        (ColumnMap::PaperColumn, Family::Two) => 3,
        _ => 2,
    };
    let mut omega = OmegaSet::from_vectors(blocks * m, &raw);
    omega.family = family;
    omega.m = m;
    omega.variant = variant;
    omega.include_zero = false;
    Ok(omega)
}

pub const MAX_AMBIENT_DIM: u32 = 20;

/// Number of ordered s-tuples from `Ω` summing to each `h ∈ GF(2)^K`,
/// indexed by `h`.
pub fn representation_counts(omega: &OmegaSet, s: u32) -> Result<Vec<u64>> {
    if s == 0 {
        return Err(Error::InvalidOrder(s));
    }
    let k = omega.ambient_dim;
    if k > MAX_AMBIENT_DIM {
        return Err(Error::TooLarge {
            what: "ambient dimension",
            limit: MAX_AMBIENT_DIM.into(),
            got: k.into(),
        });
    }
    let size = 1usize << k;
    let mut spectrum = vec![0i128; size];
    for h in omega.members() {
        spectrum[h as usize] = 1;
    }
    fwht(&mut spectrum);
    for x in spectrum.iter_mut() {
        *x = x.checked_pow(s).ok_or(Error::Overflow)?;
    }
    // |Ω|^s · 2^K bounds every intermediate of the inverse transform
    (omega.len() as i128)
        .checked_pow(s)
        .and_then(|t| t.checked_mul(size as i128))
        .ok_or(Error::Overflow)?;
    fwht(&mut spectrum);
    spectrum
        .into_iter()
        .map(|x| {
            debug_assert_eq!(x % size as i128, 0, "inverse transform must divide exactly");
            u64::try_from(x / size as i128).map_err(|_| Error::Overflow)
        })
        .collect()
}

/// Largest `|Ω|^s` the tuple-by-tuple counter will walk.
pub const NAIVE_LIMIT: u64 = 100_000_000;

/// Reference counter: walks every ordered s-tuple.
pub fn naive_representation_counts(omega: &OmegaSet, s: u32) -> Result<Vec<u64>> {
    if s == 0 {
        return Err(Error::InvalidOrder(s));
    }
    let members: Vec<u64> = omega.members().collect();
    let tuples = (members.len() as u64)
        .checked_pow(s)
        .filter(|&t| t <= NAIVE_LIMIT);
    let Some(_) = tuples else {
        return Err(Error::TooLarge {
            what: "|Ω|^s",
            limit: NAIVE_LIMIT,
            got: u64::MAX,
        });
    };
    if omega.ambient_dim > MAX_AMBIENT_DIM {
        return Err(Error::TooLarge {
            what: "ambient dimension",
            limit: MAX_AMBIENT_DIM.into(),
            got: omega.ambient_dim.into(),
        });
    }
    let mut counts = vec![0u64; 1 << omega.ambient_dim];
    if members.is_empty() {
        return Ok(counts);
    }
    let s = s as usize;
    let mut idx = vec![0usize; s];
    loop {
        let h = idx.iter().fold(0u64, |acc, &i| acc ^ members[i]);
        counts[h as usize] += 1;
        let mut pos = 0;
        loop {
            idx[pos] += 1;
            if idx[pos] < members.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
            if pos == s {
                return Ok(counts);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumSetReport {
    pub s: u32,
    pub is_sum_set: bool,
    /// Common count over nonzero `h ∈ Ω`; `None` if that class is empty or
    /// not constant.
    pub sigma0: Option<u64>,
    /// Common count over nonzero `h ∉ Ω`; `None` if that class is empty or
    /// not constant.
    pub sigma1: Option<u64>,
    pub count_at_zero: u64,
    /// Two vectors of the same class with different counts.
    pub witness: Option<(u64, u64)>,
}

/// Evaluates the s-sum set property from precomputed counts.
pub fn classify_counts(omega: &OmegaSet, s: u32, counts: &[u64]) -> SumSetReport {
    let mut first: [Option<(u64, u64)>; 2] = [None, None];
    let mut constant = [true, true];
    let mut witness = None;
    for (h, &c) in counts.iter().enumerate().skip(1) {
        let h = h as u64;
        let class = usize::from(!omega.contains(h));
        match first[class] {
            None => first[class] = Some((h, c)),
            Some((h0, c0)) if c0 != c => {
                if constant[class] {
                    constant[class] = false;
                    witness.get_or_insert((h0, h));
                }
            }
            Some(_) => {}
        }
    }
    let sigma = |class: usize| first[class].filter(|_| constant[class]).map(|(_, c)| c);
    SumSetReport {
        s,
        is_sum_set: constant[0] && constant[1],
        sigma0: sigma(0),
        sigma1: sigma(1),
        count_at_zero: counts.first().copied().unwrap_or(0),
        witness,
    }
}

/// Tests the s-sum set property for odd `s > 1`; the count at zero is
/// reported but belongs to neither class.
pub fn check_sum_set(omega: &OmegaSet, s: u32) -> Result<SumSetReport> {
    if s <= 1 || s.is_multiple_of(2) {
        return Err(Error::InvalidOrder(s));
    }
    let counts = representation_counts(omega, s)?;
    Ok(classify_counts(omega, s, &counts))
}

/// Exactly three nonzero weights `w1 < w2 < w3` with `w2 = n(q-1)/q` and
/// `w1 + w3 = 2n(q-1)/q`.
pub fn lemma9_precondition(wd: &WeightDistribution, n: u64, q: u64) -> bool {
    let w = wd.nonzero_weights();
    let [w1, w2, w3] = w[..] else {
        return false;
    };
    let (w1, w2, w3, n, q) = (
        w1 as u128,
        w2 as u128,
        w3 as u128,
        u128::from(n),
        u128::from(q),
    );
    w1 < w2 && w2 < w3 && w2 * q == n * (q - 1) && (w1 + w3) * q == 2 * n * (q - 1)
}
