use std::time::{Duration, Instant};

use super::certificate::UpperBoundCertificate;
use super::divisibility::{divisibility_with, DivisibilityResult};
use super::search::QuotientSearch;
use crate::error::{Error, Result};
use crate::lamplighter::{BallIndex, LampElement};
use crate::par::Exec;
use crate::polyring::PrimeModulus;

/// One row of the residual finiteness growth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RFRecord {
    pub n: u32,
    pub rf: u64,
    /// First element of the ball (in discovery order) attaining `rf`.
    pub witness: LampElement,
    pub witness_distance: u32,
    pub ball_size: usize,
    /// `(2 (n + 1) p)^2`.
    pub bound: u64,
    /// Time spent on the shell at distance `n`.
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct RfTable {
    pub modulus: PrimeModulus,
    pub records: Vec<RFRecord>,
    /// Per-element results for the whole ball, in discovery order (the
    /// identity is skipped).
    pub values: Vec<DivisibilityResult>,
    pub search_bound: u64,
}

impl RfTable {
    /// Least-squares slope of `log RF(n)` against `log n` over `n >= 1`.
    pub fn log_log_slope(&self) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .records
            .iter()
            .filter(|r| r.n >= 1)
            .map(|r| ((r.n as f64).ln(), (r.rf as f64).ln()))
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let m = pts.len() as f64;
        let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
        let (mx, my) = (sx / m, sy / m);
        let sxx: f64 = pts.iter().map(|(x, _)| (x - mx).powi(2)).sum();
        let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
        Some(sxy / sxx)
    }
}

/// `RF(n)` for `n = 0..=n_max` over congruence quotients.
///
/// Quotient tables are built once up to `min(order_cap, (2 (n_max + 1) p)^2)`,
/// which covers every element of the ball by the certificate bound. `RF(0)`
/// has no nontrivial elements and is reported as 1 with the identity as
/// witness.
pub fn rf_growth_table(
    p: PrimeModulus,
    n_max: u32,
    ball_cap: usize,
    order_cap: u64,
    exec: Exec,
) -> Result<RfTable> {
    let ball = BallIndex::enumerate(p, n_max, ball_cap)?;
    let ceiling = UpperBoundCertificate::order_bound(p.get() as u64, n_max as u64);
    let search = QuotientSearch::new(p, ceiling.min(order_cap), exec)?;
    rf_from_ball(&ball, &search, exec)
}

/// As [`rf_growth_table`] over a prebuilt ball and quotient tables.
pub fn rf_from_ball(ball: &BallIndex, search: &QuotientSearch, exec: Exec) -> Result<RfTable> {
    let p = ball.modulus();
    if search.modulus() != p {
        return Err(Error::ModulusMismatch {
            left: p.get(),
            right: search.modulus().get(),
        });
    }
    let entries = &ball.entries()[1..];
    let mut values = Vec::with_capacity(entries.len());
    let mut records = vec![RFRecord {
        n: 0,
        rf: 1,
        witness: LampElement::identity(p),
        witness_distance: 0,
        ball_size: 1,
        bound: UpperBoundCertificate::order_bound(p.get() as u64, 0),
        elapsed: Duration::ZERO,
    }];
    let mut best: Option<(u64, usize)> = None;
    for n in 1..=ball.radius() {
        let start = Instant::now();
        let lo = ball.size_within(n - 1) - 1;
        let hi = ball.size_within(n) - 1;
        // each element runs a sequential scan; parallelism is across elements
        let shell = exec.map(&entries[lo..hi], |e| {
            divisibility_with(search, &e.element, Exec::Sequential)
        });
        for (i, r) in shell.into_iter().enumerate() {
            let r = r?;
            if best.is_none_or(|(v, _)| r.value > v) {
                best = Some((r.value, lo + i));
            }
            values.push(r);
        }
        let (rf, at) = best.expect("shell 1 is nonempty");
        records.push(RFRecord {
            n,
            rf,
            witness: entries[at].element.clone(),
            witness_distance: entries[at].distance,
            ball_size: hi + 1,
            bound: UpperBoundCertificate::order_bound(p.get() as u64, n as u64),
            elapsed: start.elapsed(),
        });
    }
    Ok(RfTable {
        modulus: p,
        records,
        values,
        search_bound: search.bound(),
    })
}
