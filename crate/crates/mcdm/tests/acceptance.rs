//! Acceptance criteria for the ranking pipeline.
//!
//! Runs without the libtest harness so every criterion prints one
//! `PASS`/`FAIL` line. Set `TRAVEL_REVIEWS_CSV` to the public Travel Reviews
//! ratings file to run criteria 1 and 2 against it; otherwise the bundled
//! surrogate with the same per-category means is used.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use mcdm::report::ReportJson;
use mcdm_core::ahp::{self, PairwiseMatrix};
use mcdm_core::dataset::normalize;
use mcdm_core::fuzzy::{self, degree_of_possibility, saaty_to_tfn, FuzzyPairwiseMatrix, Tfn};
use mcdm_core::ranking::{compare_methods, Method};
use mcdm_core::{Matrix, ScoringOptions, Warning};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const TABLE5_ORDER: [&str; 10] = [
    "Parks/Picnic Spots",
    "Beaches",
    "Religious Institutions",
    "Resorts",
    "Theaters",
    "Dance Clubs",
    "Juice Bars",
    "Museums",
    "Art Galleries",
    "Restaurants",
];

const MSE_BOUND: f64 = 5e-3;
const MSE_REFERENCE: f64 = 2e-4;
const RUNTIME_LIMIT: Duration = Duration::from_secs(1);

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect()
}

fn dataset() -> (PathBuf, &'static str) {
    match std::env::var_os("TRAVEL_REVIEWS_CSV") {
        Some(p) => (PathBuf::from(p), "TRAVEL_REVIEWS_CSV"),
        None => (fixture("travel_reviews_surrogate.csv"), "bundled surrogate"),
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mcdm(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_mcdm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ordering_reproduction() -> Outcome {
    let (path, source) = dataset();
    let path = path.to_string_lossy().into_owned();
    let start = Instant::now();
    let out = mcdm(&[
        "rank", "--input", &path, "--method", "all", "--format", "json",
    ]);
    let elapsed = start.elapsed();
    check(out.status.code() == Some(0), || {
        format!("exit {:?}", out.status.code())
    })?;
    let reports: Vec<ReportJson> =
        serde_json::from_slice(&out.stdout).map_err(|e| format!("bad json: {e}"))?;
    let find = |m: &str| {
        reports
            .iter()
            .find(|r| r.method == m)
            .ok_or(format!("no {m} report"))
    };

    let manual = find("manual")?;
    check(manual.entries.len() == 10, || {
        "expected 10 alternatives".into()
    })?;
    let order: Vec<&str> = manual.entries.iter().map(|e| e.name.as_str()).collect();
    check(order == TABLE5_ORDER, || format!("manual order {order:?}"))?;
    for m in ["ahp", "fuzzy_ahp"] {
        let top = &find(m)?.entries[0].name;
        check(top == "Parks/Picnic Spots", || {
            format!("{m} rank 1 is {top}")
        })?;
    }
    check(elapsed < RUNTIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{source}; manual order matches, AHP/fuzzy rank 1 = Parks, {elapsed:.0?}"
    ))
}

fn mse_magnitude() -> Outcome {
    let (path, source) = dataset();
    let data = mcdm::load_reviews(
        std::fs::File::open(&path).map_err(|e| e.to_string())?,
        &Default::default(),
    )
    .map_err(|e| e.to_string())?;
    let c = compare_methods(&data, &ScoringOptions::default()).map_err(|e| e.to_string())?;
    let fuzzy = c
        .report(Method::FuzzyAhp)
        .mse_vs_manual
        .ok_or("missing mse")?;
    let crisp = c.report(Method::Ahp).mse_vs_manual.ok_or("missing mse")?;
    check(fuzzy <= MSE_BOUND, || {
        format!("fuzzy mse {fuzzy:.3e} > {MSE_BOUND:e}")
    })?;
    Ok(format!(
        "{source}; fuzzy mse {fuzzy:.3e} <= {MSE_BOUND:e} (reference order {MSE_REFERENCE:e}), ahp mse {crisp:.1e}"
    ))
}

fn consistent_oracle_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for case in 0..100 {
        let n = rng.gen_range(2..=8);
        let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..20.0)).collect();
        let total: f64 = w.iter().sum();
        let names = (0..n).map(|i| format!("a{i}")).collect();
        let p = PairwiseMatrix::from_weights(names, &w).map_err(|e| e.to_string())?;
        let (got, report) = ahp::ahp_weights(&p, ahp::CR_THRESHOLD).map_err(|e| e.to_string())?;
        let err = got
            .weights()
            .iter()
            .zip(&w)
            .map(|(a, b)| (a - b / total).abs())
            .fold(0.0, f64::max);
        worst = worst.max(err);
        check(err <= 1e-8, || format!("case {case}: weight error {err:e}"))?;
        check((report.lambda_max - n as f64).abs() <= 1e-8, || {
            format!("case {case}: lambda {} for n {n}", report.lambda_max)
        })?;
        check(report.ci.abs() <= 1e-8, || {
            format!("case {case}: ci {}", report.ci)
        })?;
        check(report.consistent, || format!("case {case}: gate failed"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < RUNTIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "100 cases, max weight error {worst:.1e}, {elapsed:.0?}"
    ))
}

fn random_tfn(rng: &mut ChaCha8Rng) -> Tfn {
    let mut v = [
        rng.gen_range(0.01..10.0),
        rng.gen_range(0.01..10.0),
        rng.gen_range(0.01..10.0),
    ];
    v.sort_by(f64::total_cmp);
    Tfn::new(v[0], v[1], v[2]).unwrap()
}

fn possibility_branches() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        let (a, b) = (random_tfn(&mut rng), random_tfn(&mut rng));
        if a.m >= b.m {
            check(degree_of_possibility(a, b) == 1.0, || {
                format!("V({a} >= {b}) != 1")
            })?;
        }
        if b.l >= a.u {
            check(degree_of_possibility(a, b) == 0.0, || {
                format!("V({a} >= {b}) != 0")
            })?;
        }
    }
    let worked = degree_of_possibility(
        Tfn::new(0.5, 1.0, 2.5).unwrap(),
        Tfn::new(1.0, 2.0, 3.0).unwrap(),
    );
    check((worked - 0.6).abs() <= 1e-12, || {
        format!("worked case {worked}")
    })?;
    for k in 0..10_000 {
        let (a, b) = (random_tfn(&mut rng), random_tfn(&mut rng));
        let (ab, ba) = (degree_of_possibility(a, b), degree_of_possibility(b, a));
        check(
            (0.0..=1.0).contains(&ab) && (0.0..=1.0).contains(&ba),
            || format!("pair {k}: out of range {ab} {ba}"),
        )?;
        check(ab.max(ba) == 1.0, || {
            format!("pair {k}: max {}", ab.max(ba))
        })?;
    }
    Ok(format!(
        "branch checks, worked case {worked:.12}, 10000 random pairs"
    ))
}

fn scale_fidelity() -> Outcome {
    // (l, m, u) numerators and denominators per intensity
    let table: [[(f64, f64); 3]; 9] = [
        [(1., 1.), (1., 1.), (1., 1.)],
        [(1., 2.), (3., 4.), (1., 1.)],
        [(2., 3.), (1., 1.), (3., 2.)],
        [(1., 1.), (3., 2.), (2., 1.)],
        [(3., 2.), (2., 1.), (5., 2.)],
        [(2., 1.), (5., 2.), (3., 1.)],
        [(5., 2.), (3., 1.), (7., 2.)],
        [(3., 1.), (7., 2.), (4., 1.)],
        [(7., 2.), (4., 1.), (9., 2.)],
    ];
    for (k, row) in table.iter().enumerate() {
        let t = saaty_to_tfn(k as u8 + 1).map_err(|e| e.to_string())?;
        let want = row.map(|(n, d)| n / d);
        for (got, want) in [t.l, t.m, t.u].iter().zip(want) {
            check((got - want).abs() <= 1e-15, || {
                format!("intensity {}: {t}", k + 1)
            })?;
        }
        let inv = t.inverse().map_err(|e| e.to_string())?;
        for p in [t.l * inv.u, t.m * inv.m, t.u * inv.l] {
            check((p - 1.0).abs() <= 1e-15, || {
                format!("intensity {}: product {p}", k + 1)
            })?;
        }
    }
    Ok("9 scale entries and inverse products".into())
}

/// Extents and weights computed from scratch: row sums, grand totals, and
/// the crossing height of the right flank of S_i with the left flank of S_j.
fn oracle_fuzzy_weights(f: &FuzzyPairwiseMatrix) -> Vec<f64> {
    let n = f.len();
    let mut rows = vec![[0.0f64; 3]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        for j in 0..n {
            let t = f.get(i, j);
            row[0] += t.l;
            row[1] += t.m;
            row[2] += t.u;
        }
    }
    let tl: f64 = rows.iter().map(|r| r[0]).sum();
    let tm: f64 = rows.iter().map(|r| r[1]).sum();
    let tu: f64 = rows.iter().map(|r| r[2]).sum();
    let s: Vec<[f64; 3]> = rows
        .iter()
        .map(|r| [r[0] / tu, r[1] / tm, r[2] / tl])
        .collect();
    let height = |a: [f64; 3], b: [f64; 3]| -> f64 {
        if a[1] >= b[1] {
            return 1.0;
        }
        if b[0] >= a[2] {
            return 0.0;
        }
        let x = (a[2] * (b[1] - b[0]) + b[0] * (a[2] - a[1])) / ((b[1] - b[0]) + (a[2] - a[1]));
        (a[2] - x) / (a[2] - a[1])
    };
    let mut d = vec![1.0f64; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                d[i] = d[i].min(height(s[i], s[j]));
            }
        }
    }
    let total: f64 = d.iter().sum();
    d.iter().map(|x| x / total).collect()
}

fn fuzzy_bruteforce() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for case in 0..100 {
        let n = rng.gen_range(2..=5);
        let upper: Vec<Tfn> = (0..n * (n - 1) / 2)
            .map(|_| {
                let t = saaty_to_tfn(rng.gen_range(1..=9)).unwrap();
                if rng.gen_bool(0.5) {
                    t.inverse().unwrap()
                } else {
                    t
                }
            })
            .collect();
        let names = (0..n).map(|i| format!("a{i}")).collect();
        let f = FuzzyPairwiseMatrix::from_upper(names, &upper).map_err(|e| e.to_string())?;
        let extents = fuzzy::synthetic_extents(&f).map_err(|e| e.to_string())?;
        let (w, _) = fuzzy::fuzzy_weights(&extents).map_err(|e| e.to_string())?;
        let want = oracle_fuzzy_weights(&f);
        let err = w
            .weights()
            .iter()
            .zip(&want)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        worst = worst.max(err);
        check(err <= 1e-10, || format!("case {case}: error {err:e}"))?;
    }
    Ok(format!("100 matrices, max error {worst:.1e}"))
}

fn normalization_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..1000 {
        let (r, c) = (rng.gen_range(1..8), rng.gen_range(1..8));
        let m = Matrix::from_fn(r, c, |_, _| rng.gen_range(0.0..50.0));
        let scale = rng.gen_range(1e-3..1e3);
        let (once, _) = normalize(&m).map_err(|e| e.to_string())?;
        let (twice, _) = normalize(&once).map_err(|e| e.to_string())?;
        let scaled = Matrix::from_fn(r, c, |i, j| scale * m[(i, j)]);
        let (from_scaled, _) = normalize(&scaled).map_err(|e| e.to_string())?;
        for ((a, b), s) in once.iter().zip(twice.iter()).zip(from_scaled.iter()) {
            check((0.0..=1.0).contains(&a), || {
                format!("case {case}: {a} outside [0, 1]")
            })?;
            check((a - b).abs() <= 1e-12, || {
                format!("case {case}: not idempotent")
            })?;
            check((a - s).abs() <= 1e-12, || {
                format!("case {case}: not scale invariant")
            })?;
        }
    }
    let m = Matrix::from_rows(&[[0.0, 2.0], [0.0, 1.0]]).unwrap();
    let (out, warnings) = normalize(&m).map_err(|e| e.to_string())?;
    check(out.column(0).all(|v| v == 0.0), || {
        "zero column not zeros".into()
    })?;
    check(warnings == vec![Warning::ZeroColumn { column: 0 }], || {
        format!("warnings {warnings:?}")
    })?;
    Ok("1000 matrices; zero column gives zeros and one warning".into())
}

/// Largest real root of det(A - xI), by scanning down from the Gershgorin
/// bound and bisecting the first sign change.
fn oracle_lambda_max(a: &[[f64; 4]; 4]) -> f64 {
    let det = |x: f64| -> f64 {
        let mut m = *a;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= x;
        }
        let mut d = 1.0;
        for k in 0..4 {
            let p = (k..4)
                .max_by(|&i, &j| m[i][k].abs().total_cmp(&m[j][k].abs()))
                .unwrap();
            if p != k {
                m.swap(p, k);
                d = -d;
            }
            d *= m[k][k];
            for i in k + 1..4 {
                let f = m[i][k] / m[k][k];
                let pivot = m[k];
                for (x, p) in m[i][k..].iter_mut().zip(&pivot[k..]) {
                    *x -= f * p;
                }
            }
        }
        d
    };
    let mut hi = a.iter().map(|r| r.iter().sum::<f64>()).fold(0.0, f64::max) + 1.0;
    let step = 1e-3;
    let mut lo = hi - step;
    while det(lo).signum() == det(hi).signum() {
        hi = lo;
        lo -= step;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if det(mid).signum() == det(hi).signum() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn consistency_gate() -> Outcome {
    let path = fixture("inconsistent_4x4.csv");
    let path = path.to_string_lossy().into_owned();

    // means (4, 1, 0.1, 0.01): ratios above 9 are clamped
    let ninth = 1.0 / 9.0;
    let a = [
        [1.0, 4.0, 9.0, 9.0],
        [0.25, 1.0, 9.0, 9.0],
        [ninth, ninth, 1.0, 9.0],
        [ninth, ninth, ninth, 1.0],
    ];
    let lambda = oracle_lambda_max(&a);
    let cr = (lambda - 4.0) / 3.0 / 0.90;
    check(cr > 0.1, || {
        format!("fixture oracle CR {cr} is not above 0.1")
    })?;

    let v = mcdm(&["validate", "--input", &path, "--format", "json"]);
    check(v.status.code() == Some(2), || {
        format!("validate exit {:?}", v.status.code())
    })?;
    let diag: serde_json::Value = serde_json::from_slice(&v.stdout).map_err(|e| e.to_string())?;
    let got_cr = diag["cr"].as_f64().ok_or("no cr")?;
    check((got_cr - cr).abs() <= 1e-6, || {
        format!("validate CR {got_cr} vs oracle {cr}")
    })?;

    let r = mcdm(&[
        "rank", "--input", &path, "--method", "all", "--format", "json",
    ]);
    check(r.status.code() == Some(2), || {
        format!("rank exit {:?}", r.status.code())
    })?;
    let reports: Vec<ReportJson> = serde_json::from_slice(&r.stdout).map_err(|e| e.to_string())?;
    check(reports.len() == 3, || "rank suppressed reports".into())?;
    let flagged = reports
        .iter()
        .filter(|r| r.consistency.as_ref().is_some_and(|c| !c.consistent))
        .count();
    check(flagged == 2, || format!("{flagged} flagged reports"))?;
    let stderr = String::from_utf8_lossy(&r.stderr);
    check(stderr.contains("flagged"), || "no warning on stderr".into())?;

    let ci = ahp::consistency_index(4.37, 4);
    check((ci - 0.12333).abs() <= 1e-5, || {
        format!("CI(4.37, 4) = {ci}")
    })?;
    Ok(format!(
        "oracle CR {cr:.4}; validate exit 2; rank flagged 2 reports; CI(4.37, 4) = {ci:.5}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 table ordering reproduction", ordering_reproduction),
        ("2 mse magnitude", mse_magnitude),
        ("3 consistent-matrix oracle suite", consistent_oracle_suite),
        ("4 possibility-degree branches", possibility_branches),
        ("5 fuzzy scale fidelity", scale_fidelity),
        ("6 fuzzy-weight brute force", fuzzy_bruteforce),
        ("7 normalization properties", normalization_properties),
        ("8 consistency gate", consistency_gate),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
