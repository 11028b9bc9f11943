//! Divisibility over all finite-index normal subgroups.
//!
//! A finite-index normal subgroup `N` is determined by a triple
//! `(alpha, k, q0)`: `N` meets the lamp module in the ideal `(alpha)`, its
//! image in `Z` is `kZ`, and `(q0, k)` lies in `N`. Normality forces
//! `alpha | t^k - 1` (conjugating by `s0`) and `(t - 1) q0 = 0 mod alpha`
//! (conjugating by `t`). Then
//!
//! `(q, m) in N  <=>  k | m  and  q = q0 (1 + t^k + ... + t^((m/k - 1)k)) mod alpha`
//!
//! and `[L : N] = p^deg(alpha) * k`. Twists `q0 = 0` are exactly the
//! congruence kernels.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::search::QuotientSearch;
use crate::error::{Error, Result};
use crate::lamplighter::LampElement;
use crate::par::Exec;
use crate::polyring::{LaurentPoly, Poly, PrimeModulus};

/// A normal subgroup of finite index, in `(alpha, k, q0)` form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSubgroup {
    pub alpha: Poly,
    pub period: u64,
    pub twist: Poly,
    t_k: Poly,
}

impl NormalSubgroup {
    /// Validates the normality conditions.
    pub fn new(alpha: Poly, period: u64, twist: Poly) -> Result<Self> {
        let p = alpha.modulus();
        if period == 0 || !alpha.is_monic() {
            return Err(Error::Precondition("alpha must be monic and k >= 1".into()));
        }
        if !alpha.divides(&Poly::t_pow_minus_one(p, period as usize)) {
            return Err(Error::Precondition("alpha must divide t^k - 1".into()));
        }
        let twist = twist.rem(&alpha)?;
        let t_minus_one = &Poly::t(p) - &Poly::one(p);
        if !alpha.divides(&(&t_minus_one * &twist)) {
            return Err(Error::Precondition("(t - 1) q0 must vanish mod alpha".into()));
        }
        let t_k = Poly::t(p).powmod(period, &alpha)?;
        Ok(NormalSubgroup {
            alpha,
            period,
            twist,
            t_k,
        })
    }

    pub fn index(&self) -> u64 {
        let p = self.alpha.modulus().get() as u64;
        p.pow(self.alpha.degree_or_zero() as u32) * self.period
    }

    fn reduce(&self, q: &LaurentPoly) -> Poly {
        let p = self.alpha.modulus();
        if self.alpha.degree_or_zero() == 0 || q.is_zero() {
            return Poly::zero(p);
        }
        let r = q.unit_part().rem(&self.alpha).expect("nonzero alpha");
        // t is a unit mod alpha since alpha | t^k - 1
        let v = q.valuation().rem_euclid(self.period as i64) as u64;
        r.mulmod(&Poly::t(p).powmod(v, &self.alpha).unwrap(), &self.alpha)
            .unwrap()
    }

    /// `q0 (1 + t^k + ... + t^((j-1)k))` for `j >= 0`, and the matching
    /// inverse-power sum `-q0 (t^-k + ... + t^(jk))` for `j < 0`.
    fn twist_power(&self, j: i64) -> Poly {
        let p = self.alpha.modulus();
        if self.alpha.degree_or_zero() == 0 {
            return Poly::zero(p);
        }
        // t^-k = (t^k)^-1 and t^k has finite order, so negative sums are
        // computed with the inverse step
        let step = if j >= 0 {
            self.t_k.clone()
        } else {
            self.t_k.invmod(&self.alpha).expect("t is a unit mod alpha")
        };
        let mut sum = Poly::zero(p);
        let mut term = if j >= 0 { Poly::one(p) } else { step.clone() };
        for _ in 0..j.unsigned_abs() {
            sum = &sum + &term;
            term = term.mulmod(&step, &self.alpha).unwrap();
        }
        let sum = if j >= 0 { sum } else { -&sum };
        self.twist.mulmod(&sum, &self.alpha).unwrap()
    }

    pub fn contains(&self, x: &LampElement) -> bool {
        let k = self.period as i64;
        if x.shift().rem_euclid(k) != 0 {
            return false;
        }
        self.reduce(x.lamp()) == self.twist_power(x.shift() / k)
    }

    /// Samples members of the subgroup and checks that their conjugates by
    /// `s0^+-1` and `t^+-1` stay inside, and that products and inverses do.
    pub fn verify_normal(&self, samples: usize, seed: u64) -> bool {
        let p = self.alpha.modulus();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens: Vec<LampElement> = [LampElement::s0(p), LampElement::t(p)]
            .into_iter()
            .flat_map(|g| [g.invert(), g])
            .collect();
        let members: Vec<LampElement> = (0..samples).map(|_| self.random_member(&mut rng)).collect();
        members.iter().all(|y| {
            self.contains(y)
                && self.contains(&y.invert())
                && gens
                    .iter()
                    .all(|g| self.contains(&g.compose(y).compose(&g.invert())))
        }) && members
            .windows(2)
            .all(|w| self.contains(&w[0].compose(&w[1])))
    }

    fn random_member(&self, rng: &mut ChaCha8Rng) -> LampElement {
        use rand::Rng;
        let p = self.alpha.modulus();
        let j: i64 = rng.gen_range(-4..=4);
        let r = LampElement::random(rng, p, 3, 0);
        let ideal_part = LampElement::new(
            r.lamp() * &LaurentPoly::from_poly(self.alpha.clone()),
            0,
        );
        let base = LampElement::new(LaurentPoly::from_poly(self.twist.clone()), self.period as i64);
        base.pow(j).compose(&ideal_part)
    }
}

/// Outcome of the full-oracle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullOracleResult {
    pub element: LampElement,
    /// Minimal index of a normal subgroup omitting the element, if `<= cap`.
    pub index: Option<u64>,
    pub subgroup: Option<NormalSubgroup>,
    pub cap: u64,
    /// Result of the sampled normality check on the reported subgroup.
    pub verified: bool,
}

/// Twists `q0` with `(t - 1) q0 = 0 mod alpha`: multiples of
/// `alpha / gcd(alpha, t - 1)`, in canonical order.
fn twists(alpha: &Poly) -> Result<Vec<Poly>> {
    let p: PrimeModulus = alpha.modulus();
    if alpha.degree_or_zero() == 0 {
        return Ok(vec![Poly::zero(p)]);
    }
    let t_minus_one = &Poly::t(p) - &Poly::one(p);
    let g = alpha.gcd(&t_minus_one)?;
    let h = alpha.exact_div(&g)?;
    let count = (p.get() as u64).pow(g.degree_or_zero() as u32);
    (0..count)
        .map(|i| Poly::from_index(p, i).mulmod(&h, alpha))
        .collect()
}

/// Minimal index over all normal subgroups omitting `x`, searching up to
/// `cap`. Reported subgroups are re-checked for normality on `samples`
/// seeded random members.
pub fn divisibility_full_oracle(
    x: &LampElement,
    cap: u64,
    seed: u64,
    search: Option<&QuotientSearch>,
) -> Result<FullOracleResult> {
    if x.is_identity() {
        return Err(Error::IdentityElement);
    }
    if cap < 2 {
        return Err(Error::Precondition("full oracle cap must be at least 2".into()));
    }
    let owned;
    let search = match search {
        Some(s) if s.bound() >= cap => s,
        _ => {
            owned = QuotientSearch::new(x.modulus(), cap, Exec::Sequential)?;
            &owned
        }
    };
    for n in 1..=cap {
        for (m, k) in search.candidates_of_order(n) {
            for q0 in twists(&m.g)? {
                let sub = NormalSubgroup::new(m.g.clone(), k, q0)?;
                if !sub.contains(x) {
                    let verified = sub.verify_normal(16, seed);
                    return Ok(FullOracleResult {
                        element: x.clone(),
                        index: Some(n),
                        subgroup: Some(sub),
                        cap,
                        verified,
                    });
                }
            }
        }
    }
    Ok(FullOracleResult {
        element: x.clone(),
        index: None,
        subgroup: None,
        cap,
        verified: true,
    })
}
