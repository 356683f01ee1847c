//! Defining sets, the trace codes `C_D = {(Tr(axy + bx))_{(x,y) ∈ D}}` and
//! exact weight enumeration.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::bits::{self, BitVec};
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// The three quadratic defining sets, all subsets of `F* × F`:
///
/// * `One`:   `Tr(yx² + y) = 0`
/// * `Two`:   `Tr(yx² + x + y) = 0`
/// * `Three`: `Tr(yx² + xy) = 0`
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::One, Family::Two, Family::Three];

    pub fn number(self) -> u32 {
        self as u32
    }

    /// Left-hand side of the family's trace condition at `(x, y)`.
    pub fn condition(self, ctx: &FieldContext, x: FieldElement, y: FieldElement) -> FieldElement {
        let yx2 = ctx.mul(y, ctx.square(x));
        match self {
            Family::One => yx2 + y,
            Family::Two => yx2 + x + y,
            Family::Three => yx2 + ctx.mul(x, y),
        }
    }

    /// Closed-form `|D|`. Family two is only counted for odd `m`.
    pub fn expected_len(self, m: u32) -> Option<u64> {
        match self {
            Family::One | Family::Three => Some(1 << (2 * m - 1)),
            Family::Two if m % 2 == 1 => Some((1 << m) * ((1 << (m - 1)) - 1)),
            Family::Two => None,
        }
    }
}

impl TryFrom<u32> for Family {
    type Error = Error;

    fn try_from(v: u32) -> Result<Self> {
        match v {
            1 => Ok(Family::One),
            2 => Ok(Family::Two),
            3 => Ok(Family::Three),
            other => Err(Error::InvalidFamily(other)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    family: Family,
    m: u32,
    pairs: Vec<(FieldElement, FieldElement)>,
}

impl DefiningSet {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Pairs `(x, y)` sorted by `(bits(x), bits(y))`.
    pub fn pairs(&self) -> &[(FieldElement, FieldElement)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// All `(x, y)` with `x != 0` satisfying the family's trace condition, in
/// canonical order.
pub fn enumerate_defining_set(ctx: &FieldContext, family: Family) -> DefiningSet {
    let pairs = ctx
        .nonzero_elements()
        .flat_map(|x| ctx.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| ctx.trace(family.condition(ctx, x, y)) == 0)
        .collect();
    DefiningSet {
        family,
        m: ctx.degree(),
        pairs,
    }
}

/// `c(a, b)`: bit `i` is `Tr(a·x_i·y_i + b·x_i)`.
pub fn codeword(ctx: &FieldContext, set: &DefiningSet, a: FieldElement, b: FieldElement) -> BitVec {
    let pairs = set.pairs();
    BitVec::from_fn(pairs.len(), |i| {
        let (x, y) = pairs[i];
        ctx.trace(ctx.mul(a, ctx.mul(x, y)) + ctx.mul(b, x)) == 1
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Family { family: Family, m: u32 },
    External,
}

/// A binary linear code given by the rows of a generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryLinearCode {
    n: usize,
    rows: Vec<BitVec>,
    provenance: Provenance,
}

impl BinaryLinearCode {
    /// An arbitrary code from explicit generator rows.
    pub fn from_rows(rows: Vec<BitVec>) -> Result<Self> {
        let n = rows.first().map_or(0, BitVec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::RaggedRows);
        }
        Ok(BinaryLinearCode {
            n,
            rows,
            provenance: Provenance::External,
        })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn rank(&self) -> usize {
        bits::rank(&self.rows)
    }

    /// The codeword `Σ_{j : bit j of index set} row_j`.
    pub fn combination(&self, index: u64) -> BitVec {
        let mut acc = BitVec::zeros(self.n);
        for (j, row) in self.rows.iter().enumerate() {
            if index >> j & 1 == 1 {
                acc.xor_assign(row);
            }
        }
        acc
    }

    /// Generator-matrix columns as integers, bit `j` taken from row `j`.
    pub fn columns(&self) -> Result<Vec<u64>> {
        let k = self.dimension();
        if k > 64 {
            return Err(Error::TooLarge {
                what: "k",
                limit: 64,
                got: k as u64,
            });
        }
        let mut cols = vec![0u64; self.n];
        for (j, row) in self.rows.iter().enumerate() {
            for (i, col) in cols.iter_mut().enumerate() {
                if row.get(i) {
                    *col |= 1 << j;
                }
            }
        }
        Ok(cols)
    }

    /// Generator matrix of the dual code (dimension `n - rank`).
    pub fn dual(&self) -> BinaryLinearCode {
        BinaryLinearCode {
            n: self.n,
            rows: bits::null_space(&self.rows, self.n),
            provenance: Provenance::External,
        }
    }
}

/// Rows `0..m` are `c(α^j, 0)`, rows `m..2m` are `c(0, α^j)`.
pub fn generator_matrix(ctx: &FieldContext, set: &DefiningSet) -> BinaryLinearCode {
    let m = ctx.degree();
    let zero = FieldElement::ZERO;
    let mut rows: Vec<BitVec> = (0..m)
        .map(|j| codeword(ctx, set, ctx.basis(j), zero))
        .collect();
    rows.extend((0..m).map(|j| codeword(ctx, set, zero, ctx.basis(j))));
    BinaryLinearCode {
        n: set.len(),
        rows,
        provenance: Provenance::Family {
            family: set.family(),
            m,
        },
    }
}

/// Weight → multiplicity, stored densely over `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn empty(n: usize) -> Self {
        WeightDistribution {
            counts: vec![0; n + 1],
        }
    }

    /// Builds a distribution from `(weight, count)` pairs; repeated weights add up.
    pub fn from_pairs(n: usize, pairs: &[(usize, u64)]) -> Self {
        let mut wd = Self::empty(n);
        for &(w, c) in pairs {
            wd.counts[w] += c;
        }
        wd
    }

    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn record(&mut self, weight: usize) {
        self.counts[weight] += 1;
    }

    pub fn get(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    /// Nonzero entries `(w, A_w)` in increasing weight, including `w = 0`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(w, &c)| (w, c))
    }

    /// Weights `w > 0` with `A_w > 0`.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.iter().map(|(w, _)| w).filter(|&w| w > 0).collect()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Pointwise sum; both sides must have the same length.
    pub fn merge(&mut self, other: &WeightDistribution) {
        assert_eq!(self.counts.len(), other.counts.len(), "length mismatch");
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
    }
}

/// `1 + A_{w1} x^{w1} + …`, coefficients of one omitted.
impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (w, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{w}")?,
                _ => write!(f, "{c}x^{w}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Largest dimension for which all `2^k` codewords are enumerated.
pub const ENUMERATION_LIMIT: usize = 24;

/// Histogram of the codewords with Gray-code indices `g(i)`, `i ∈ range`.
///
/// The Gray map is a bijection on `0..2^k`, so histograms of disjoint index
/// ranges that tile `0..2^k` add up to the full distribution.
pub fn weight_histogram_range(code: &BinaryLinearCode, range: Range<u64>) -> WeightDistribution {
    let mut wd = WeightDistribution::empty(code.length());
    if range.is_empty() {
        return wd;
    }
    let gray = |i: u64| i ^ (i >> 1);
    let mut word = code.combination(gray(range.start));
    wd.record(word.weight());
    for i in range.start + 1..range.end {
        word.xor_assign(&code.rows[i.trailing_zeros() as usize]);
        wd.record(word.weight());
    }
    wd
}

/// Exact distribution by enumerating all `2^k` row combinations.
pub fn weight_distribution(code: &BinaryLinearCode) -> Result<WeightDistribution> {
    let k = code.dimension();
    if k > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "k",
            limit: ENUMERATION_LIMIT as u64,
            got: k as u64,
        });
    }
    Ok(weight_histogram_range(code, 0..1u64 << k))
}

pub fn minimum_distance(wd: &WeightDistribution) -> Result<usize> {
    wd.nonzero_weights().first().copied().ok_or(Error::ZeroCode)
}
