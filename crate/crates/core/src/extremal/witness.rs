//! The hard elements `(LCM(P_d) * prod_{i=1..S} (1 - t^i), 0)` with
//! `S = ceil(sqrt(p^d))`.
//!
//! Every polynomial of degree `<= d` divides the lamp, so a detecting modulus
//! has degree `> d`; every `t^k - 1` with `k <= S` divides it too, so the
//! period of a detecting quotient exceeds `S`.

use std::ops::ControlFlow;

use super::lcm::lcm_p;
use crate::detection::{divisibility_with, upper_bound_certificate, DivisibilityResult, QuotientSearch};
use crate::error::{Error, Result};
use crate::lamplighter::{word_length_exact, word_length_bound, LampElement};
use crate::par::Exec;
use crate::polyring::{LaurentPoly, Poly, PrimeModulus};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessElement {
    pub modulus: PrimeModulus,
    pub d: u32,
    /// `w = p^d`.
    pub w: u64,
    /// `ceil(sqrt(w))`.
    pub s: u64,
    pub lcm_degree: u64,
    pub lamp: Poly,
    pub element: LampElement,
    /// `S (S + 1) / 2`.
    pub product_degree: u64,
    pub word_length_bound: u64,
    pub word_length_exact: u64,
}

impl WitnessElement {
    pub fn degree(&self) -> u64 {
        self.lamp.degree_or_zero() as u64
    }

    /// `C p^d` with `C = lcm_degree / p^d + 1`, i.e. `lcm_degree + p^d`.
    pub fn degree_bound(&self) -> u64 {
        self.lcm_degree + self.w
    }

    pub fn degree_within_bound(&self) -> bool {
        self.degree() <= self.degree_bound()
    }

    /// `deg p(t) / p^d`.
    pub fn degree_ratio(&self) -> f64 {
        self.degree() as f64 / self.w as f64
    }

    /// `p^(3d/2)`.
    pub fn index_lower_bound(&self) -> f64 {
        (self.modulus.get() as f64).powf(1.5 * self.d as f64)
    }
}

fn ceil_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

pub fn witness(p: PrimeModulus, d: u32, exec: Exec) -> Result<WitnessElement> {
    let lcm = lcm_p(p, d, exec)?;
    let w = lcm.lower;
    let s = ceil_sqrt(w);
    let mut lamp = lcm.factored.expand();
    for i in 1..=s as usize {
        // 1 - t^i
        lamp = &lamp * &(-&Poly::t_pow_minus_one(p, i));
    }
    let element = LampElement::new(LaurentPoly::from_poly(lamp.clone()), 0);
    Ok(WitnessElement {
        modulus: p,
        d,
        w,
        s,
        lcm_degree: lcm.degree,
        product_degree: s * (s + 1) / 2,
        word_length_bound: word_length_bound(&element),
        word_length_exact: word_length_exact(&element),
        lamp,
        element,
    })
}

/// Outcome of auditing one witness against the exclusion steps.
#[derive(Debug, Clone)]
pub struct WitnessAudit {
    pub witness: WitnessElement,
    pub divisibility: DivisibilityResult,
    /// Degree of the minimal detecting modulus.
    pub modulus_degree: u64,
    pub period: u64,
    /// Number of detecting quotients of order `<= search_bound`.
    pub detectors_checked: u64,
    /// Detecting quotients with modulus degree `<= d` or period `<= S`.
    pub detector_violations: Vec<(Poly, u64)>,
    pub search_bound: u64,
}

impl WitnessAudit {
    pub fn modulus_degree_ok(&self) -> bool {
        self.modulus_degree > self.witness.d as u64
    }

    pub fn period_ok(&self) -> bool {
        self.period > self.witness.s
    }

    pub fn meets_lower_bound(&self) -> bool {
        self.divisibility.value as f64 >= self.witness.index_lower_bound()
    }

    /// `D / p^(3d/2)`.
    pub fn ratio(&self) -> f64 {
        self.divisibility.value as f64 / self.witness.index_lower_bound()
    }

    /// `k >= sqrt(p^d)`.
    pub fn period_vs_sqrt_w(&self) -> bool {
        (self.period as f64) >= (self.witness.w as f64).sqrt()
    }

    /// `k >= sqrt(d p^d)`.
    pub fn period_vs_sqrt_dw(&self) -> bool {
        (self.period as f64) >= (self.witness.d as f64 * self.witness.w as f64).sqrt()
    }

    pub fn passed(&self) -> bool {
        self.modulus_degree_ok()
            && self.period_ok()
            && self.meets_lower_bound()
            && self.detector_violations.is_empty()
    }
}

/// Computes `D(witness(d))` with quotient orders capped at `order_cap`, then
/// checks every detecting quotient up to the search bound.
///
/// Fails with [`Error::CapExceeded`] (carrying the partial lower bound
/// `cap + 1`) when nothing within the cap detects the witness.
pub fn witness_audit(p: PrimeModulus, d: u32, order_cap: u64, exec: Exec) -> Result<WitnessAudit> {
    let witness = witness(p, d, exec)?;
    let x = &witness.element;
    let ceiling = upper_bound_certificate(x)?.certificate.order;
    let search = QuotientSearch::new(p, ceiling.min(order_cap), exec)?;
    let divisibility = match divisibility_with(&search, x, exec) {
        Err(Error::CapExceeded { partial, .. }) => {
            return Err(Error::CapExceeded {
                what: format!("witness audit for d = {d}"),
                cap: search.bound(),
                partial,
            })
        }
        r => r?,
    };
    let mut detectors_checked = 0u64;
    let mut detector_violations = Vec::new();
    let unit = witness.lamp.clone();
    search.visit(search.bound(), |_, m, k| {
        if !m.g.divides(&unit) {
            detectors_checked += 1;
            if m.g.degree_or_zero() as u32 <= d || k <= witness.s {
                detector_violations.push((m.g.clone(), k));
            }
        }
        ControlFlow::Continue(())
    });
    let q = &divisibility.certificate.quotient;
    Ok(WitnessAudit {
        modulus_degree: q.degree() as u64,
        period: q.period(),
        detectors_checked,
        detector_violations,
        search_bound: search.bound(),
        divisibility,
        witness,
    })
}
