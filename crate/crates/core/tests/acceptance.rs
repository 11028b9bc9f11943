//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so every criterion reports even when an
//! earlier one fails. The process exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lamplighter_rf::detection::{
    divisibility_congruence, divisibility_full_oracle, rf_growth_table, upper_bound_certificate,
    UpperBoundCertificate,
};
use lamplighter_rf::extremal::{
    almost_periodic_by_divisors, almost_periodic_by_filter, conjecture_table, enumerate_almost_periodic,
    lcm_brute, lcm_degree, lcm_p, prod_irreducibles_dividing, witness_audit,
};
use lamplighter_rf::lamplighter::{
    to_matrix, word_length_bound, word_length_exact, BallIndex, BoundEdgeCase, LampElement,
    DEFAULT_BALL_CAP,
};
use lamplighter_rf::polyring::{
    count_irreducibles, enumerate_irreducibles, format_poly, parse_poly, Poly, PrimeModulus,
};
use lamplighter_rf::Exec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
    /// Extra lines: warnings and reported edge cases.
    report: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
            report: Vec::new(),
        }
    }
}

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn el(p: PrimeModulus, lamp: &str, k: i64) -> LampElement {
    LampElement::new(parse_poly(lamp, p).unwrap(), k)
}

const PRODUCT_CASES: [(u64, u32); 13] = [
    (2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 1), (3, 2), (3, 3), (3, 4),
    (5, 1), (5, 2), (5, 3),
];

fn c1_product_identity() -> Outcome {
    let mut bad = Vec::new();
    for (p, d) in PRODUCT_CASES {
        let p = pm(p);
        let q = (p.get() as usize).pow(d);
        let want = &Poly::monomial(p, 1, q) - &Poly::t(p);
        if prod_irreducibles_dividing(p, d, Exec::default()).unwrap() != want {
            bad.push(format!("p={p} d={d}", p = p.get()));
        }
    }
    Outcome::new(bad.is_empty(), format!("{} (p, d) pairs, mismatches: {bad:?}", PRODUCT_CASES.len()))
}

fn c2_irreducible_counts() -> Outcome {
    let mut bad = Vec::new();
    let mut non_monic_ok = true;
    for (p, d) in PRODUCT_CASES {
        let pp = pm(p);
        let listed = enumerate_irreducibles(pp, d as i64).unwrap().len() as u128;
        let counted = count_irreducibles(pp, d as i64).unwrap();
        // M(i) <= p^(i+1) / i, compared as i * M(i) <= p^(i+1)
        let cap = (p as u128).pow(d + 1);
        if listed != counted || d as u128 * counted > cap {
            bad.push(format!("p={p} d={d}: listed {listed}, formula {counted}"));
        }
        non_monic_ok &= d as u128 * (p as u128 - 1) * counted <= cap;
    }
    let mut o = Outcome::new(bad.is_empty(), format!("{} (p, d) pairs, failures: {bad:?}", PRODUCT_CASES.len()));
    o.report.push(format!(
        "non-monic count (p-1) M(i) also within p^(i+1)/i: {non_monic_ok}"
    ));
    o
}

fn c3_lcm_bounds() -> Outcome {
    let mut bad = Vec::new();
    for p in [2, 3, 5] {
        for d in 1..=8 {
            let deg = lcm_degree(pm(p), d).unwrap();
            if !deg.within_bounds() {
                bad.push(format!("bounds p={p} d={d}: {}", deg.degree));
            }
        }
    }
    for (p, dmax) in [(2, 4), (3, 3)] {
        for d in 1..=dmax {
            let prof = lcm_p(pm(p), d, Exec::default()).unwrap();
            let expanded = prof.factored.expand();
            if expanded != lcm_brute(pm(p), d).unwrap() {
                bad.push(format!("brute LCM p={p} d={d}"));
            }
            if expanded.degree_or_zero() as u64 != lcm_degree(pm(p), d).unwrap().degree {
                bad.push(format!("closed form p={p} d={d}"));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("24 bound checks, 7 expansions; failures: {bad:?}"))
}

fn c4_word_metric() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut report = Vec::new();
    for (p, r) in [(2, 10), (3, 8)] {
        let ball = BallIndex::enumerate(pm(p), r, DEFAULT_BALL_CAP).unwrap();
        let mut mismatches = 0;
        let mut flagged = 0;
        let mut unexcused: BTreeMap<&str, (usize, String)> = BTreeMap::new();
        for e in ball.entries() {
            let exact = word_length_exact(&e.element);
            if exact != e.distance as u64 {
                mismatches += 1;
            }
            let bound = word_length_bound(&e.element);
            if bound < exact {
                match BoundEdgeCase::classify(&e.element) {
                    Some(BoundEdgeCase::ConstantAtOrigin) => flagged += 1,
                    class => {
                        let key = class.map_or("unclassified", |c| c.describe());
                        let slot = unexcused
                            .entry(key)
                            .or_insert((0, format!("{} bound {bound} < exact {exact}", e.element)));
                        slot.0 += 1;
                    }
                }
            }
        }
        let total: usize = unexcused.values().map(|v| v.0).sum();
        pass &= mismatches == 0 && total == 0;
        parts.push(format!(
            "p={p} r={r}: {} elements, metric mismatches {mismatches}, bound violations {total}",
            ball.len()
        ));
        report.push(format!("p={p}: {flagged} reported (c, 0)-type elements"));
        for (class, (n, example)) in unexcused {
            report.push(format!("p={p}: {n} violations, {class}, e.g. {example}"));
        }
    }
    let mut o = Outcome::new(pass, parts.join("; "));
    o.report = report;
    o
}

fn c5_matrix_homomorphism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = 0;
    for p in [2, 3, 5] {
        let p = pm(p);
        for _ in 0..1000 {
            let x = LampElement::random(&mut rng, p, 8, 8);
            let y = LampElement::random(&mut rng, p, 8, 8);
            if to_matrix(&x.compose(&y)) != to_matrix(&x).mul(&to_matrix(&y)) {
                bad += 1;
            }
        }
    }
    Outcome::new(bad == 0, format!("3000 seeded pairs (seed 5), failures {bad}"))
}

fn c6_spot_values() -> Outcome {
    let p = pm(2);
    let cases = [(el(p, "1", 0), 2), (el(p, "0", 1), 2), (el(p, "1+t", 0), 8)];
    let mut got = Vec::new();
    let mut pass = true;
    for (x, want) in cases {
        let r = divisibility_congruence(&x, 1_000_000, Exec::default()).unwrap();
        let q = &r.certificate.quotient;
        pass &= r.value == want && q.detects(&x).unwrap() && r.certificate.verify(&x);
        got.push(format!("D{x} = {} via ({}, {})", r.value, format_poly(q.modulus()), q.period()));
    }
    Outcome::new(pass, got.join(", "))
}

fn c7_certificate_chain() -> Outcome {
    let p = pm(2);
    let ball = BallIndex::enumerate(p, 10, DEFAULT_BALL_CAP).unwrap();
    let table = rf_growth_table(p, 10, DEFAULT_BALL_CAP, 1_000_000, Exec::default()).unwrap();
    let mut bad = Vec::new();
    for (e, dv) in ball.entries()[1..].iter().zip(&table.values) {
        let x = &e.element;
        let c = upper_bound_certificate(x).unwrap();
        let n = word_length_exact(x);
        let order_bound = UpperBoundCertificate::order_bound(2, n);
        let ok = c.certificate.quotient.detects(x).unwrap()
            && c.field_size <= c.field_bound
            && c.certificate.order <= order_bound
            && dv.element == *x
            && dv.value <= c.certificate.order;
        if !ok {
            bad.push(x.to_string());
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!("{} nontrivial elements, failures {}: {:?}", ball.len() - 1, bad.len(), &bad[..bad.len().min(5)]),
    )
}

fn c8_rf_table() -> Outcome {
    let table = rf_growth_table(pm(2), 10, DEFAULT_BALL_CAP, 1_000_000, Exec::default()).unwrap();
    let rf: Vec<u64> = table.records.iter().map(|r| r.rf).collect();
    let spot = rf[1] == 2 && rf[2] == 3 && rf[4] == 8;
    let monotone = rf.windows(2).all(|w| w[0] <= w[1]);
    let bounded = table.records.iter().all(|r| r.rf <= r.bound && r.witness_distance <= r.n);
    let mut o = Outcome::new(
        spot && monotone && bounded,
        format!("RF(0..=10) = {rf:?}; spot {spot}, monotone {monotone}, bounded {bounded}"),
    );
    if let Some(s) = table.log_log_slope() {
        o.report.push(format!("log-log slope (reporting only): {s:.4}"));
    }
    o
}

fn c9_witness_audit() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut report = Vec::new();
    for d in [1, 2] {
        let a = witness_audit(pm(2), d, 10_000, Exec::default()).unwrap();
        pass &= a.passed();
        parts.push(format!(
            "d={d}: D = {} via ({}, {}), p^(3d/2) = {:.3}, {} detectors up to order {} all deg > {d} and k > {}: {}",
            a.divisibility.value,
            format_poly(a.divisibility.certificate.quotient.modulus()),
            a.period,
            a.witness.index_lower_bound(),
            a.detectors_checked,
            a.search_bound,
            a.witness.s,
            a.detector_violations.is_empty()
        ));
        report.push(format!(
            "d={d}: k >= sqrt(p^d) {}, k >= sqrt(d p^d) {}, witness degree {} vs C p^d = {}",
            a.period_vs_sqrt_w(),
            a.period_vs_sqrt_dw(),
            a.witness.degree(),
            a.witness.degree_bound()
        ));
    }
    let mut o = Outcome::new(pass, parts.join("; "));
    o.report = report;
    o
}

fn c10_full_oracle() -> Outcome {
    let p = pm(2);
    let ball = BallIndex::enumerate(p, 8, DEFAULT_BALL_CAP).unwrap();
    let mut shift_zero = 0;
    let mut mismatches = Vec::new();
    let mut gaps = Vec::new();
    let mut unverified = 0;
    for e in &ball.entries()[1..] {
        let x = &e.element;
        let d = divisibility_congruence(x, 1_000_000, Exec::Sequential).unwrap().value;
        let full = divisibility_full_oracle(x, d.max(2), 10, None).unwrap();
        unverified += usize::from(!full.verified);
        let index = full.index.expect("congruence kernel is among the triples");
        if x.shift() == 0 {
            shift_zero += 1;
            if index != d {
                mismatches.push(x.to_string());
            }
        } else if index < d {
            gaps.push(format!("{x}: full {index} < congruence {d}"));
        }
    }
    let mut o = Outcome::new(
        mismatches.is_empty() && unverified == 0,
        format!(
            "{shift_zero} shift-0 elements, mismatches {}; {} shift != 0 elements with reported gaps; unverified subgroups {unverified}",
            mismatches.len(),
            gaps.len()
        ),
    );
    o.report = gaps.into_iter().map(|g| format!("gap (warning): {g}")).collect();
    o
}

fn c11_conjecture_explorer() -> Outcome {
    let mut pass = true;
    let mut disagreements = Vec::new();
    for (p, kmax) in [(2, 10), (3, 6)] {
        for k in 1..=kmax {
            let a = almost_periodic_by_filter(pm(p), k, Exec::default()).unwrap();
            let b = almost_periodic_by_divisors(pm(p), k, Exec::default()).unwrap();
            if a != b {
                disagreements.push(format!("p={p} k={k}"));
            }
        }
    }
    pass &= disagreements.is_empty();
    let p = pm(2);
    let a2: Vec<String> = enumerate_almost_periodic(p, 2, Exec::default())
        .unwrap()
        .members
        .iter()
        .map(format_poly)
        .collect();
    let l3 = enumerate_almost_periodic(p, 3, Exec::default()).unwrap().lcm_degree;
    let l4 = enumerate_almost_periodic(p, 4, Exec::default()).unwrap().lcm_degree;
    pass &= a2 == ["1+t", "1+t^2"] && l3 == 2 && l4 == 4;
    let start = Instant::now();
    let table = conjecture_table(p, 12, Exec::default()).unwrap();
    let took = start.elapsed();
    pass &= table.len() == 12 && took < Duration::from_secs(60);
    let mut o = Outcome::new(
        pass,
        format!(
            "strategy disagreements {disagreements:?}; A_2 = {a2:?}, deg LCM(A_3) = {l3}, deg LCM(A_4) = {l4}; table to k=12 in {took:.2?}"
        ),
    );
    let ratios: Vec<String> = table.iter().map(|r| format!("{:.4}", r.ratio())).collect();
    o.report.push(format!("exploratory ratios deg LCM(A_k)/2^k: [{}]", ratios.join(", ")));
    o
}

const CLI_RUNS: [&[&str]; 10] = [
    &["rf-table", "--radius", "6"],
    &["--prime", "3", "rf-table", "--radius", "4"],
    &["divisibility", "(1+t+t^3,2)"],
    &["certificate", "(t^-1+t^2,-3)"],
    &["lcm-deg", "--d", "5"],
    &["witness-audit", "--d", "2"],
    &["conjecture", "--k-max", "8"],
    &["order", "1+t+t^4"],
    &["factor", "t^9+t"],
    &["--prime", "5", "wordlen", "(2t^-2+3t,4)"],
];

fn c12_determinism() -> Outcome {
    let mut bad = Vec::new();
    let mut runs = 0;
    for args in CLI_RUNS {
        for format in ["human", "csv", "json"] {
            let run = || {
                Command::new(env!("CARGO_BIN_EXE_rfcli"))
                    .args(["--format", format, "--seed", "7"])
                    .args(args)
                    .output()
                    .unwrap()
            };
            let (a, b) = (run(), run());
            runs += 2;
            if !a.status.success() || a.stdout != b.stdout || a.stdout.is_empty() {
                bad.push(format!("{format} {args:?}"));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{runs} runs over 9 subcommands x 3 formats; differing: {bad:?}"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("product identity", c1_product_identity),
        ("irreducible counts", c2_irreducible_counts),
        ("LCM(P_d) degree bounds", c3_lcm_bounds),
        ("word metric and closed-form bound", c4_word_metric),
        ("matrix homomorphism", c5_matrix_homomorphism),
        ("divisibility spot values", c6_spot_values),
        ("certificate chain", c7_certificate_chain),
        ("RF table", c8_rf_table),
        ("witness audit", c9_witness_audit),
        ("full-oracle consistency", c10_full_oracle),
        ("almost-periodic explorer", c11_conjecture_explorer),
        ("CLI determinism", c12_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::new(false, format!("panicked: {msg}"))
        });
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.pass);
        println!(
            "criterion {:>2} {verdict} {name} ({:.2?}): {}",
            i + 1,
            start.elapsed(),
            outcome.detail
        );
        for line in &outcome.report {
            println!("    {line}");
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
