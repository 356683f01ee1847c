//! Acceptance suite. Prints one `[PASS]`/`[FAIL]` line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tracecode::parallel;
use tracecode_core::analysis::{
    ab_minimal, expected_table, griesmer_classify, is_projective, pless_dual_counts,
};
use tracecode_core::charsum::{LemmaTable, SumKind};
use tracecode_core::sumset::{classify_counts, naive_representation_counts, representation_counts};
use tracecode_core::{
    build_omega, enumerate_defining_set, generator_matrix, minimum_distance, BinaryLinearCode,
    ColumnMap, Family, FieldContext, Griesmer, WeightDistribution,
};

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
    notes: Vec<String>,
}

fn pass(detail: impl Into<String>) -> Verdict {
    Verdict {
        ok: true,
        detail: detail.into(),
        notes: Vec::new(),
    }
}

fn fail(detail: impl Into<String>) -> Verdict {
    Verdict {
        ok: false,
        detail: detail.into(),
        notes: Vec::new(),
    }
}

fn ctx(m: u32) -> FieldContext {
    FieldContext::with_default(m).unwrap()
}

fn code(ctx: &FieldContext, family: Family) -> BinaryLinearCode {
    generator_matrix(ctx, &enumerate_defining_set(ctx, family))
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

type Row = (Family, u32, [usize; 3], &'static [(usize, u64)]);

const REFERENCE_ROWS: [Row; 6] = [
    (
        Family::One,
        2,
        [8, 4, 2],
        &[(0, 1), (2, 1), (4, 11), (6, 3)],
    ),
    (
        Family::One,
        3,
        [32, 6, 12],
        &[(0, 1), (12, 6), (16, 47), (20, 10)],
    ),
    (
        Family::Two,
        3,
        [24, 6, 8],
        &[(0, 1), (8, 6), (12, 48), (16, 9)],
    ),
    (
        Family::Two,
        5,
        [480, 10, 224],
        &[(0, 1), (224, 120), (240, 768), (256, 135)],
    ),
    (
        Family::Three,
        2,
        [8, 4, 3],
        &[(0, 1), (3, 4), (4, 5), (5, 4), (6, 2)],
    ),
    (
        Family::Three,
        3,
        [32, 6, 14],
        &[(0, 1), (14, 24), (16, 11), (18, 24), (20, 4)],
    ),
];

fn c1_reference_rows() -> Verdict {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (family, m, [n, k, d], counts) in REFERENCE_ROWS {
        let report = tracecode_core::verify(&ctx(m), family).unwrap();
        let expected = WeightDistribution::from_pairs(n, counts);
        if (report.n, report.k, report.d) != (n, k, d) || report.distribution != expected {
            bad.push(format!(
                "family {family} m={m}: got [{},{},{}] {}",
                report.n, report.k, report.d, report.distribution
            ));
        }
    }
    let took = start.elapsed();
    if took > Duration::from_secs(5) {
        bad.push(format!("took {} (limit 5s)", secs(took)));
    }
    if bad.is_empty() {
        pass(format!("6 rows exact, {}", secs(took)))
    } else {
        fail(bad.join("; "))
    }
}

fn criterion2_cases() -> Vec<(Family, u32)> {
    let mut v = Vec::new();
    for m in 2..=6 {
        v.push((Family::One, m));
        v.push((Family::Three, m));
    }
    v.extend([(Family::Two, 3), (Family::Two, 5), (Family::Two, 7)]);
    v
}

fn c2_closed_form_tables() -> Verdict {
    let mut bad = Vec::new();
    let mut m7 = Duration::ZERO;
    for (family, m) in criterion2_cases() {
        let ctx = ctx(m);
        let start = Instant::now();
        let wd = parallel::weight_distribution(&code(&ctx, family)).unwrap();
        if m == 7 {
            m7 = start.elapsed();
            if m7 > Duration::from_secs(60) {
                bad.push(format!("family 2 m=7 took {} (limit 60s)", secs(m7)));
            }
        }
        if expected_table(family, m).unwrap() != wd {
            bad.push(format!("family {family} m={m}: {wd}"));
        }
    }
    if bad.is_empty() {
        pass(format!("13 cases match, family 2 m=7 in {}", secs(m7)))
    } else {
        fail(bad.join("; "))
    }
}

fn c3_character_sums() -> Verdict {
    let mut bad = Vec::new();
    let mut cases = 0usize;
    for m in 2..=6 {
        let ctx = ctx(m);
        let table = LemmaTable::new(&ctx);
        for kind in SumKind::ALL {
            if kind == SumKind::S3 && m % 2 == 0 {
                continue;
            }
            let sweep = parallel::charsum_sweep(&table, kind).unwrap();
            cases += sweep.len();
            let mismatches = sweep.iter().filter(|c| !c.matches).count();
            if mismatches > 0 {
                bad.push(format!("{kind} m={m}: {mismatches} mismatches"));
            }
        }
    }
    if bad.is_empty() {
        pass(format!("{cases} (a,b) cases, 0 mismatches"))
    } else {
        fail(bad.join("; "))
    }
}

fn dual_distance(code: &BinaryLinearCode) -> usize {
    let dual = code.dual();
    minimum_distance(&parallel::weight_distribution(&dual).unwrap()).unwrap()
}

fn c4_projectivity() -> Verdict {
    let mut bad = Vec::new();
    for (family, m) in criterion2_cases() {
        let ctx = ctx(m);
        let c = code(&ctx, family);
        let wd = parallel::weight_distribution(&c).unwrap();
        let projective = is_projective(&c).unwrap();
        let dc = pless_dual_counts(&wd, c.length() as u64, c.dimension() as u32, 2).unwrap();
        if !projective || (dc.a1_dual, dc.a2_dual) != (0, 0) {
            bad.push(format!(
                "family {family} m={m}: projective={projective} dual=({}, {})",
                dc.a1_dual, dc.a2_dual
            ));
        }
    }
    let mut dists = Vec::new();
    for family in [Family::One, Family::Three] {
        let d = dual_distance(&code(&ctx(2), family));
        dists.push(format!("family {family}: {d}"));
        if d < 3 {
            bad.push(format!("family {family} m=2 dual distance {d}"));
        }
    }
    if bad.is_empty() {
        pass(format!(
            "13 cases projective with A1=A2=0; m=2 dual distances {}",
            dists.join(", ")
        ))
    } else {
        fail(bad.join("; "))
    }
}

fn c5_griesmer() -> Verdict {
    let g = griesmer_classify(8, 4, 3, 2);
    if g == Griesmer::AlmostOptimal {
        pass("[8,4,3] almost-optimal")
    } else {
        fail(format!("[8,4,3] classified {g}"))
    }
}

fn c6_minimality() -> Verdict {
    let mut bad = Vec::new();
    let mut checked = 0;
    for m in 3..=6 {
        let ctx = ctx(m);
        for family in Family::ALL {
            let c = code(&ctx, family);
            let wd = parallel::weight_distribution(&c).unwrap();
            let ab = ab_minimal(&wd, 2);
            if !ab {
                let w = wd.nonzero_weights();
                bad.push(format!(
                    "family {family} m={m}: ab_minimal false (wmin={}, wmax={})",
                    w[0],
                    w[w.len() - 1]
                ));
            }
            if c.dimension() <= 12 {
                checked += 1;
                let brute = parallel::brute_minimal(&c).unwrap();
                if brute != ab {
                    bad.push(format!("family {family} m={m}: brute_minimal {brute} disagrees with ab_minimal {ab}"));
                }
            }
        }
    }
    if bad.is_empty() {
        pass(format!(
            "12 cases ab_minimal, {checked} confirmed exhaustively"
        ))
    } else {
        fail(bad.join("; "))
    }
}

fn c7_sum_sets() -> Verdict {
    let mut bad = Vec::new();
    let mut logged = Vec::new();
    for (family, m) in [(Family::One, 2), (Family::One, 3), (Family::Two, 3)] {
        let ctx = ctx(m);
        for s in [3, 5] {
            let start = Instant::now();
            let mut passing = Vec::new();
            for map in ColumnMap::ALL {
                let base = build_omega(&ctx, family, map).unwrap();
                for zero in [false, true] {
                    let omega = base.clone().with_zero(zero);
                    let counts = representation_counts(&omega, s).unwrap();
                    if naive_representation_counts(&omega, s).unwrap() != counts {
                        bad.push(format!("family {family} m={m} s={s} {map} zero={zero}: WHT and naive counts differ"));
                    }
                    let report = classify_counts(&omega, s, &counts);
                    if report.is_sum_set {
                        passing.push(format!(
                            "{map}/zero={zero} sigma=({}, {})",
                            report.sigma0.unwrap_or(0),
                            report.sigma1.unwrap_or(0)
                        ));
                    }
                }
            }
            let took = start.elapsed();
            if took > Duration::from_secs(10) {
                bad.push(format!(
                    "family {family} m={m} s={s} took {} (limit 10s)",
                    secs(took)
                ));
            }
            if passing.is_empty() {
                bad.push(format!(
                    "family {family} m={m} s={s}: no configuration is a sum set"
                ));
            } else {
                logged.push(format!("f{family} m{m} s{s}: {}", passing.join(", ")));
            }
        }
    }
    let mut v = if bad.is_empty() {
        pass("6 cases hold, WHT counts equal naive counts")
    } else {
        fail(bad.join("; "))
    };
    v.notes = logged;
    v
}

fn c8_invariance() -> Verdict {
    let mut bad = Vec::new();
    let polys = [0b10011, 0b11001];
    for family in Family::ALL {
        let wds: Vec<_> = polys
            .iter()
            .map(|&p| {
                let ctx = FieldContext::new(4, Some(p)).unwrap();
                parallel::weight_distribution(&code(&ctx, family)).unwrap()
            })
            .collect();
        if wds[0] != wds[1] {
            bad.push(format!("family {family} m=4: {} vs {}", wds[0], wds[1]));
        }
    }
    let dir = tempfile::tempdir().unwrap();
    for (family, m) in [(1, 3), (2, 3), (3, 4), (2, 4)] {
        let outputs: Vec<(i32, String)> = [1, 8]
            .iter()
            .map(|jobs| {
                let path = dir.path().join(format!("f{family}m{m}j{jobs}.json"));
                let code = tracecode::cli::run([
                    "tracecode".to_string(),
                    "verify".into(),
                    "--family".into(),
                    family.to_string(),
                    "--m".into(),
                    m.to_string(),
                    "--format".into(),
                    "json".into(),
                    "--jobs".into(),
                    jobs.to_string(),
                    "--out".into(),
                    path.display().to_string(),
                ]);
                (code, std::fs::read_to_string(&path).unwrap_or_default())
            })
            .collect();
        if outputs[0] != outputs[1] || outputs[0].1.is_empty() {
            bad.push(format!(
                "verify family {family} m={m} differs between --jobs 1 and --jobs 8"
            ));
        }
    }
    if bad.is_empty() {
        pass("m=4 distributions equal under x^4+x+1 and x^4+x^3+1; --jobs 1 and 8 identical")
    } else {
        fail(bad.join("; "))
    }
}

fn c9_even_degree() -> Verdict {
    let mut verdicts = Vec::new();
    for m in [2, 4] {
        let ctx = ctx(m);
        let one = parallel::weight_distribution(&code(&ctx, Family::One)).unwrap();
        let two = parallel::weight_distribution(&code(&ctx, Family::Two)).unwrap();
        verdicts.push(format!(
            "m={m}: {}",
            if one == two {
                "same distribution"
            } else {
                "different"
            }
        ));
        if one != two {
            verdicts.push(format!("  family 1 {one}, family 2 {two}"));
        }
    }
    pass(format!(
        "informational; family 2 vs family 1: {}",
        verdicts.join(", ")
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("C1", c1_reference_rows),
        ("C2", c2_closed_form_tables),
        ("C3", c3_character_sums),
        ("C4", c4_projectivity),
        ("C5", c5_griesmer),
        ("C6", c6_minimality),
        ("C7", c7_sum_sets),
        ("C8", c8_invariance),
        ("C9", c9_even_degree),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let v = run();
        println!(
            "[{}] {name} {}",
            if v.ok { "PASS" } else { "FAIL" },
            v.detail
        );
        for note in &v.notes {
            println!("       {note}");
        }
        failed += usize::from(!v.ok);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
