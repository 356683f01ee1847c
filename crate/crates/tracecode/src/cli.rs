//! Command-line front end.
//!
//! Exit codes: 0 all checks hold, 1 a checked claim failed, 2 usage error,
//! 3 resource guard.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tracecode_core::analysis::VerificationReport;
use tracecode_core::charsum::{CaseCheck, LemmaTable, SumKind};
use tracecode_core::sumset::{
    classify_counts, lemma9_precondition, naive_representation_counts, representation_counts,
    MAX_AMBIENT_DIM,
};
use tracecode_core::{
    build_omega, enumerate_defining_set, generator_matrix, ColumnMap, Error, Family, FieldContext,
};

use crate::formats::{
    to_json_line, CharSumCaseJson, CharSumSummaryJson, ConstructJson, SumSetJson, VerificationJson,
};
use crate::parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

pub const CONSTRUCT_MAX_M: u32 = 12;
pub const VERIFY_MAX_M: u32 = 8;
pub const CHARSUM_M: std::ops::RangeInclusive<u32> = 2..=6;
pub const SWEEP_MAX_M: u32 = 6;
/// Largest `K` at which `sumset` also enumerates the point-set code.
pub const SUMSET_CODE_MAX_DIM: u32 = 16;

#[derive(Parser, Debug)]
#[command(
    name = "tracecode",
    version,
    about = "Binary trace codes over GF(2^m): construction and verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all available).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    PaperColumn,
    CodeColumn,
    Both,
}

impl Variant {
    fn maps(self) -> &'static [ColumnMap] {
        match self {
            Variant::PaperColumn => &[ColumnMap::PaperColumn],
            Variant::CodeColumn => &[ColumnMap::CodeColumn],
            Variant::Both => &ColumnMap::ALL,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the generator matrix of a family.
    Construct {
        #[arg(long)]
        family: u32,
        #[arg(long)]
        m: u32,
    },
    /// Enumerate a code and check its weight distribution, projectivity,
    /// Griesmer status and minimality.
    Verify {
        #[arg(long)]
        family: u32,
        #[arg(long)]
        m: u32,
    },
    /// Compare every character sum against its closed form.
    Charsums {
        #[arg(long)]
        m: u32,
    },
    /// Test the s-sum set property of a family's point set.
    Sumset {
        #[arg(long)]
        family: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
        #[arg(long, value_enum, default_value_t = Variant::Both)]
        variant: Variant,
    },
    /// Run `verify` for every family at every m up to 6.
    Sweep,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Resource(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge { .. } | Error::Overflow => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Output {
    body: String,
    code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(out) => match emit(&cli.common, &out.body) {
            Ok(()) => out.code,
            Err(msg) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
        },
        Err(Failure::Usage(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            EXIT_RESOURCE
        }
    }
}

fn emit(common: &Common, body: &str) -> Result<(), String> {
    match &common.out {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.common.jobs {
        if jobs == 0 {
            return Err(Failure::Usage("--jobs must be at least 1".into()));
        }
        builder = builder.num_threads(jobs);
    }
    let pool = builder.build().map_err(|e| Failure::Io(e.to_string()))?;
    let format = cli.common.format;
    pool.install(|| match cli.command {
        Command::Construct { family, m } => construct(parse_family(family)?, m, format),
        Command::Verify { family, m } => verify(parse_family(family)?, m, format),
        Command::Charsums { m } => charsums(m, format),
        Command::Sumset {
            family,
            m,
            s,
            variant,
        } => sumset(parse_family(family)?, m, s, variant, format),
        Command::Sweep => sweep(format),
    })
}

fn parse_family(n: u32) -> Result<Family, Failure> {
    Family::try_from(n).map_err(Failure::from)
}

fn field(m: u32, max: u32) -> Result<FieldContext, Failure> {
    let ctx = FieldContext::with_default(m)?;
    if m > max {
        return Err(Failure::Resource(format!(
            "m = {m} exceeds the limit {max} for this command"
        )));
    }
    Ok(ctx)
}

fn construct(family: Family, m: u32, format: Format) -> Result<Output, Failure> {
    let ctx = field(m, CONSTRUCT_MAX_M)?;
    let set = enumerate_defining_set(&ctx, family);
    let code = generator_matrix(&ctx, &set);
    let mut warnings = Vec::new();
    if family == Family::Two && m.is_multiple_of(2) {
        warnings.push(String::from(
            "family 2 parameters are only established for odd m",
        ));
    }
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let body = match format {
        Format::Json => {
            let doc = ConstructJson {
                family: family.number(),
                m,
                poly: ctx.reduction_poly(),
                n: code.length(),
                k: code.dimension(),
                defining_set_size: set.len(),
                rows: code.rows().iter().map(|r| r.to_string()).collect(),
                warnings,
            };
            to_json_line(&doc) + "\n"
        }
        Format::Text => {
            let mut s = format!("n={} k={}\n", code.length(), code.dimension());
            let _ = writeln!(
                s,
                "# family {family}, m = {m}, poly {:#x}, |D| = {}",
                ctx.reduction_poly(),
                set.len()
            );
            for w in &warnings {
                let _ = writeln!(s, "# warning: {w}");
            }
            s.push_str(&crate::formats::matrix_to_text(&code));
            s
        }
    };
    Ok(Output {
        body,
        code: EXIT_OK,
    })
}

fn verify(family: Family, m: u32, format: Format) -> Result<Output, Failure> {
    let ctx = field(m, VERIFY_MAX_M)?;
    let report = parallel::verify(&ctx, family)?;
    let body = match format {
        Format::Json => to_json_line(&VerificationJson::from(&report)) + "\n",
        Format::Text => report_text(&report),
    };
    Ok(Output {
        body,
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_CLAIM_FAILED
        },
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "family {} m={} poly={:#x}",
        r.family, r.m, r.reduction_poly
    );
    let _ = writeln!(s, "[{},{},{}]", r.n, r.k, r.d);
    let _ = writeln!(s, "weight enumerator: {}", r.distribution);
    let _ = writeln!(s, "table match:       {}", opt(r.table_match));
    if let Some(dc) = r.dual_counts {
        let _ = writeln!(s, "dual A1, A2:       {}, {}", dc.a1_dual, dc.a2_dual);
    }
    let _ = writeln!(
        s,
        "projective:        {} (moments: {})",
        yes_no(r.projective),
        opt(r.projective_by_moments)
    );
    let _ = writeln!(s, "griesmer:          {}", r.griesmer);
    let _ = writeln!(s, "ab minimal:        {}", yes_no(r.ab_minimal));
    let _ = writeln!(s, "brute minimal:     {}", opt(r.brute_minimal));
    let _ = writeln!(s, "three-weight form: {}", yes_no(r.lemma9));
    if r.even_degree_claim.is_some() {
        let _ = writeln!(s, "same as family 1:  {}", opt(r.even_degree_claim));
    }
    for note in &r.notes {
        let _ = writeln!(s, "note: {note}");
    }
    let failures = r.failures();
    if failures.is_empty() {
        s.push_str("PASS\n");
    } else {
        for f in failures {
            let _ = writeln!(s, "FAIL: {f}");
        }
    }
    s
}

struct SumAudit {
    summary: CharSumSummaryJson,
    cases: Vec<CaseCheck>,
}

fn audit(table: &LemmaTable, kind: SumKind) -> Result<SumAudit, Failure> {
    let m = table.context().degree();
    if kind == SumKind::S3 && m.is_multiple_of(2) {
        return Ok(SumAudit {
            summary: CharSumSummaryJson {
                sum: kind.to_string(),
                m,
                cases: 0,
                mismatches: 0,
                ambiguous_plus: 0,
                ambiguous_minus: 0,
                skipped: Some("S3 closed form requires odd m".into()),
            },
            cases: Vec::new(),
        });
    }
    let cases = parallel::charsum_sweep(table, kind)?;
    let ambiguous = || cases.iter().filter(|c| c.closed.value.ambiguous);
    let summary = CharSumSummaryJson {
        sum: kind.to_string(),
        m,
        cases: cases.len(),
        mismatches: cases.iter().filter(|c| !c.matches).count(),
        ambiguous_plus: ambiguous().filter(|c| c.oracle > 0).count(),
        ambiguous_minus: ambiguous().filter(|c| c.oracle < 0).count(),
        skipped: None,
    };
    Ok(SumAudit { summary, cases })
}

fn charsums(m: u32, format: Format) -> Result<Output, Failure> {
    if !CHARSUM_M.contains(&m) {
        return Err(Failure::Usage(format!(
            "m must lie in {}..={}, got {m}",
            CHARSUM_M.start(),
            CHARSUM_M.end()
        )));
    }
    let ctx = FieldContext::with_default(m)?;
    let table = LemmaTable::new(&ctx);
    let audits = SumKind::ALL
        .iter()
        .map(|&k| audit(&table, k))
        .collect::<Result<Vec<_>, _>>()?;
    let ok = audits.iter().all(|a| a.summary.mismatches == 0);
    let mut body = String::new();
    match format {
        Format::Json => {
            for a in &audits {
                for c in &a.cases {
                    body.push_str(&to_json_line(&CharSumCaseJson::from(c)));
                    body.push('\n');
                }
            }
            for a in &audits {
                body.push_str(&to_json_line(&a.summary));
                body.push('\n');
            }
        }
        Format::Text => {
            let _ = writeln!(body, "m={m} poly={:#x}", ctx.reduction_poly());
            for a in &audits {
                let s = &a.summary;
                match &s.skipped {
                    Some(why) => {
                        let _ = writeln!(body, "{}: skipped ({why})", s.sum);
                    }
                    None => {
                        let _ = writeln!(
                            body,
                            "{}: {} cases, {} mismatches, ambiguous +{} / -{}",
                            s.sum, s.cases, s.mismatches, s.ambiguous_plus, s.ambiguous_minus
                        );
                    }
                }
                for c in a.cases.iter().filter(|c| !c.matches) {
                    let _ = writeln!(
                        body,
                        "  mismatch a={:#x} b={:#x}: oracle {} vs {} ({})",
                        c.a.bits(),
                        c.b.bits(),
                        c.oracle,
                        c.closed
                            .value
                            .candidates()
                            .iter()
                            .map(i64::to_string)
                            .collect::<Vec<_>>()
                            .join("|"),
                        c.closed.case
                    );
                }
            }
            body.push_str(if ok { "PASS\n" } else { "FAIL\n" });
        }
    }
    Ok(Output {
        body,
        code: if ok { EXIT_OK } else { EXIT_CLAIM_FAILED },
    })
}

fn sumset(
    family: Family,
    m: u32,
    s: u32,
    variant: Variant,
    format: Format,
) -> Result<Output, Failure> {
    if s <= 1 || s.is_multiple_of(2) {
        return Err(Error::InvalidOrder(s).into());
    }
    let ctx = FieldContext::with_default(m)?;
    let mut body = String::new();
    let mut any = false;
    for &map in variant.maps() {
        let base = build_omega(&ctx, family, map)?;
        if base.ambient_dim > MAX_AMBIENT_DIM {
            return Err(Error::TooLarge {
                what: "ambient dimension",
                limit: u64::from(MAX_AMBIENT_DIM),
                got: u64::from(base.ambient_dim),
            }
            .into());
        }
        let point_code = if base.ambient_dim <= SUMSET_CODE_MAX_DIM {
            let code = base.code()?;
            let wd = parallel::weight_distribution(&code)?;
            Some((lemma9_precondition(&wd, code.length() as u64, 2), wd))
        } else {
            None
        };
        for include_zero in [false, true] {
            let omega = base.clone().with_zero(include_zero);
            let counts = representation_counts(&omega, s)?;
            let report = classify_counts(&omega, s, &counts);
            any |= report.is_sum_set;
            let naive = match naive_representation_counts(&omega, s) {
                Ok(n) => Some(n == counts),
                Err(Error::TooLarge { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            match format {
                Format::Json => {
                    body.push_str(&to_json_line(&SumSetJson::new(&omega, &report)));
                    body.push('\n');
                }
                Format::Text => {
                    let _ = writeln!(
                        body,
                        "family {family} m={m} s={s} {map} zero={}: |Omega|={} K={} sum set: {}",
                        yes_no(include_zero),
                        omega.len(),
                        omega.ambient_dim,
                        yes_no(report.is_sum_set)
                    );
                    let show = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
                    let _ = writeln!(
                        body,
                        "  sigma0={} sigma1={} count at zero={}",
                        show(report.sigma0),
                        show(report.sigma1),
                        report.count_at_zero
                    );
                    if let Some((h0, h1)) = report.witness {
                        let _ = writeln!(body, "  counts differ at {h0:#x} and {h1:#x}");
                    }
                    let _ = writeln!(
                        body,
                        "  naive counts agree: {}",
                        naive.map_or("skipped (too large)", yes_no)
                    );
                    match &point_code {
                        Some((lemma9, wd)) => {
                            let _ = writeln!(
                                body,
                                "  point-set code three-weight form: {} ({wd})",
                                yes_no(*lemma9)
                            );
                        }
                        None => body
                            .push_str("  point-set code three-weight form: skipped (too large)\n"),
                    }
                }
            }
        }
    }
    if format == Format::Text {
        body.push_str(if any { "PASS\n" } else { "FAIL\n" });
    }
    Ok(Output {
        body,
        code: if any { EXIT_OK } else { EXIT_CLAIM_FAILED },
    })
}

fn sweep(format: Format) -> Result<Output, Failure> {
    let mut reports = Vec::new();
    for m in 2..=SWEEP_MAX_M {
        let ctx = FieldContext::with_default(m)?;
        for family in Family::ALL {
            reports.push(parallel::verify(&ctx, family)?);
        }
    }
    let ok = reports.iter().all(VerificationReport::passed);
    let mut body = String::new();
    match format {
        Format::Json => {
            for r in &reports {
                body.push_str(&to_json_line(&VerificationJson::from(r)));
                body.push('\n');
            }
        }
        Format::Text => {
            for r in &reports {
                let failures = r.failures();
                let _ = writeln!(
                    body,
                    "family {} m={} [{},{},{}] {} {}",
                    r.family,
                    r.m,
                    r.n,
                    r.k,
                    r.d,
                    if failures.is_empty() { "PASS" } else { "FAIL" },
                    failures.join("; ")
                );
            }
            let _ = writeln!(
                body,
                "{} of {} passed",
                reports.iter().filter(|r| r.passed()).count(),
                reports.len()
            );
        }
    }
    Ok(Output {
        body,
        code: if ok { EXIT_OK } else { EXIT_CLAIM_FAILED },
    })
}
