//! Text and JSON representations of matrices, distributions and reports.
//!
//! All numbers are integers and every struct serializes its fields in a fixed
//! order, so parsing an emitted document and serializing it again reproduces
//! it byte for byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use tracecode_core::analysis::VerificationReport;
use tracecode_core::charsum::CaseCheck;
use tracecode_core::{BinaryLinearCode, BitVec, OmegaSet, SumSetReport, WeightDistribution};

/// One row per line, `'0'`/`'1'` characters, no separators.
pub fn matrix_to_text(code: &BinaryLinearCode) -> String {
    let mut out = String::with_capacity(code.dimension() * (code.length() + 1));
    for row in code.rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}

/// Parses [`matrix_to_text`] output. Blank lines are ignored.
pub fn matrix_from_text(text: &str) -> Result<BinaryLinearCode, String> {
    let rows = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, line)| {
            BitVec::parse01(line)
                .ok_or_else(|| format!("line {}: expected only '0' and '1'", i + 1))
        })
        .collect::<Result<Vec<_>, _>>()?;
    BinaryLinearCode::from_rows(rows).map_err(|e| e.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionJson {
    pub n: usize,
    pub k: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl DistributionJson {
    pub fn new(wd: &WeightDistribution, k: usize) -> Self {
        DistributionJson {
            n: wd.length(),
            k,
            counts: wd.iter().collect(),
        }
    }

    pub fn to_distribution(&self) -> WeightDistribution {
        let pairs: Vec<(usize, u64)> = self.counts.iter().map(|(&w, &c)| (w, c)).collect();
        WeightDistribution::from_pairs(self.n, &pairs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructJson {
    pub family: u32,
    pub m: u32,
    pub poly: u32,
    pub n: usize,
    pub k: usize,
    pub defining_set_size: usize,
    pub rows: Vec<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCountsJson {
    pub a1_dual: u64,
    pub a2_dual: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub family: u32,
    pub m: u32,
    pub poly: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub enumerator: String,
    pub distribution: DistributionJson,
    pub table_match: Option<bool>,
    pub dual_counts: Option<DualCountsJson>,
    pub projective: bool,
    pub projective_by_moments: Option<bool>,
    pub griesmer: String,
    pub ab_minimal: bool,
    pub brute_minimal: Option<bool>,
    pub lemma9: bool,
    pub even_degree_claim: Option<bool>,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    pub passed: bool,
}

impl From<&VerificationReport> for VerificationJson {
    fn from(r: &VerificationReport) -> Self {
        VerificationJson {
            family: r.family.number(),
            m: r.m,
            poly: r.reduction_poly,
            n: r.n,
            k: r.k,
            d: r.d,
            enumerator: r.distribution.to_string(),
            distribution: DistributionJson::new(&r.distribution, r.k),
            table_match: r.table_match,
            dual_counts: r.dual_counts.map(|dc| DualCountsJson {
                a1_dual: dc.a1_dual,
                a2_dual: dc.a2_dual,
            }),
            projective: r.projective,
            projective_by_moments: r.projective_by_moments,
            griesmer: r.griesmer.to_string(),
            ab_minimal: r.ab_minimal,
            brute_minimal: r.brute_minimal,
            lemma9: r.lemma9,
            even_degree_claim: r.even_degree_claim,
            notes: r.notes.clone(),
            failures: r.failures().into_iter().map(String::from).collect(),
            passed: r.passed(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumSetJson {
    pub family: u32,
    pub m: u32,
    pub s: u32,
    pub variant: String,
    pub include_zero: bool,
    pub is_sum_set: bool,
    pub sigma0: Option<u64>,
    pub sigma1: Option<u64>,
    pub count_at_zero: u64,
}

impl SumSetJson {
    pub fn new(omega: &OmegaSet, report: &SumSetReport) -> Self {
        SumSetJson {
            family: omega.family.number(),
            m: omega.m,
            s: report.s,
            variant: omega.variant.to_string(),
            include_zero: omega.include_zero,
            is_sum_set: report.is_sum_set,
            sigma0: report.sigma0,
            sigma1: report.sigma1,
            count_at_zero: report.count_at_zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharSumCaseJson {
    pub sum: String,
    pub a: u32,
    pub b: u32,
    pub oracle: i64,
    pub case: String,
    pub closed: Vec<i64>,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl From<&CaseCheck> for CharSumCaseJson {
    fn from(c: &CaseCheck) -> Self {
        CharSumCaseJson {
            sum: c.kind.to_string(),
            a: c.a.bits(),
            b: c.b.bits(),
            oracle: c.oracle,
            case: c.closed.case.to_string(),
            closed: c.closed.value.candidates(),
            matches: c.matches,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharSumSummaryJson {
    pub sum: String,
    pub m: u32,
    pub cases: usize,
    pub mismatches: usize,
    pub ambiguous_plus: usize,
    pub ambiguous_minus: usize,
    pub skipped: Option<String>,
}

/// Compact single-line JSON.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types always serialize")
}
