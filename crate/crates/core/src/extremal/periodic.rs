//! Almost-periodic polynomials.
//!
//! A monic `g` with `g(0) != 0` is almost periodic when it divides some
//! `t^n - 1` with `n^2 <= p^deg(g)`. The valid `n` are the multiples of the
//! minimal period, so the test reduces to `period(g)^2 <= p^deg(g)`.
//! `A_k` collects those of degree `1..=k`; the explorer reports
//! `deg LCM(A_k) / p^k`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::polyring::factor::ENUMERATION_CAP;
use crate::polyring::order::order_from_factorization;
use crate::polyring::{
    enumerate_irreducibles_with, multiplicative_order_t, multiplicative_order_t_brute, order_t_at_most,
    Factorizer, Poly, PrimeModulus,
};

/// Default largest `k` for the explorer at `p = 2`.
pub const DEFAULT_K_CAP: u32 = 12;

/// Least `n` with `g | t^n - 1`. Structural, cross-checked by a brute scan.
pub fn minimal_period(g: &Poly) -> Result<u64> {
    let structural = multiplicative_order_t(g)?;
    let brute = multiplicative_order_t_brute(g)?;
    if structural != brute {
        return Err(Error::Internal(format!(
            "period mismatch: structural {structural}, brute {brute}"
        )));
    }
    Ok(structural)
}

fn field_size(p: PrimeModulus, d: u32) -> Result<u64> {
    (p.get() as u64)
        .checked_pow(d)
        .filter(|&n| n <= ENUMERATION_CAP)
        .ok_or_else(|| Error::cap(format!("p^k for k = {d}"), ENUMERATION_CAP))
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlmostPeriodicProfile {
    pub modulus: PrimeModulus,
    pub k: u32,
    /// `A_k` in canonical order.
    pub members: Vec<Poly>,
    pub lcm_degree: u64,
    /// `p^k`.
    pub scale: u64,
}

impl AlmostPeriodicProfile {
    pub fn ratio(&self) -> f64 {
        self.lcm_degree as f64 / self.scale as f64
    }
}

/// A member of `A_k` with its factorisation, used to build the LCM.
#[derive(Debug, Clone)]
struct Member {
    g: Poly,
    factors: Vec<(Poly, u32)>,
}

/// Strategy (a): filter every monic `g` of degree `1..=k` with `g(0) != 0`
/// by its structural period.
pub fn almost_periodic_by_filter(p: PrimeModulus, k: u32, exec: Exec) -> Result<Vec<Poly>> {
    Ok(filter_members(p, k, exec)?.into_iter().map(|m| m.g).collect())
}

fn filter_members(p: PrimeModulus, k: u32, exec: Exec) -> Result<Vec<Member>> {
    field_size(p, k)?;
    let factorizer = Factorizer::with_degree(p, k as usize / 2)?;
    let mut out = Vec::new();
    for d in 1..=k {
        let size = field_size(p, d)?;
        let limit = isqrt(size);
        let found = exec.map_range(0..size as usize, |i| -> Result<Option<Member>> {
            let g = Poly::monic_from_index(p, d as usize, i as u64);
            if g.constant_term() == 0 {
                return Ok(None);
            }
            let fp = factorizer.factor_shared(&g)?;
            let period = order_from_factorization(&fp)?;
            Ok((period <= limit).then(|| Member {
                factors: fp.factors().to_vec(),
                g,
            }))
        });
        for m in found {
            out.extend(m?);
        }
    }
    Ok(out)
}

/// Strategy (b): monic divisors of degree `1..=k` of `t^n - 1` for
/// `n <= floor(sqrt(p^k))`, kept when a brute scan finds a period
/// `<= floor(sqrt(p^deg))`. Only irreducible factors of degree `<= k` can
/// occur in such divisors, so `t^n - 1` is split over those alone.
pub fn almost_periodic_by_divisors(p: PrimeModulus, k: u32, exec: Exec) -> Result<Vec<Poly>> {
    let n_max = isqrt(field_size(p, k)?);
    let mut irreducibles = Vec::new();
    for d in 1..=k {
        irreducibles.extend(enumerate_irreducibles_with(p, d as i64, exec)?);
    }
    let per_n = exec.map_range(1..n_max as usize + 1, |n| -> Result<Vec<Poly>> {
        let target = Poly::t_pow_minus_one(p, n);
        let mut factors = Vec::new();
        for f in &irreducibles {
            if f.constant_term() == 0 || !Poly::t(p).powmod(n as u64, f)?.is_one() {
                continue;
            }
            let cap = k as usize / f.degree_or_zero();
            let (mut e, mut rest) = (0u32, target.clone());
            while (e as usize) < cap {
                let (q, r) = rest.divrem(f)?;
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            factors.push((f.clone(), e));
        }
        let mut keep = Vec::new();
        for g in divisors_up_to(p, &factors, k as usize) {
            let limit = isqrt(field_size(p, g.degree_or_zero() as u32)?);
            if order_t_at_most(&g, limit)?.is_some() {
                keep.push(g);
            }
        }
        Ok(keep)
    });
    let mut set = BTreeSet::new();
    for v in per_n {
        set.extend(v?);
    }
    Ok(set.into_iter().collect())
}

/// Monic divisors of `prod f_i^e_i` with degree in `1..=max_degree`.
fn divisors_up_to(p: PrimeModulus, factors: &[(Poly, u32)], max_degree: usize) -> Vec<Poly> {
    let mut acc = vec![Poly::one(p)];
    for (f, e) in factors {
        let mut next = Vec::new();
        for base in &acc {
            let mut cur = base.clone();
            next.push(cur.clone());
            for _ in 0..*e {
                cur = &cur * f;
                if cur.degree_or_zero() > max_degree {
                    break;
                }
                next.push(cur.clone());
            }
        }
        acc = next;
    }
    acc.retain(|g| g.degree_or_zero() >= 1);
    acc
}

fn lcm_degree_of(members: &[&Member]) -> u64 {
    let mut exps: BTreeMap<&Poly, u32> = BTreeMap::new();
    for m in members {
        for (f, e) in &m.factors {
            let slot = exps.entry(f).or_insert(0);
            *slot = (*slot).max(*e);
        }
    }
    exps.iter().map(|(f, e)| f.degree_or_zero() as u64 * *e as u64).sum()
}

fn profile(p: PrimeModulus, k: u32, members: &[Member]) -> AlmostPeriodicProfile {
    let within: Vec<&Member> = members
        .iter()
        .filter(|m| m.g.degree_or_zero() as u32 <= k)
        .collect();
    let mut polys: Vec<Poly> = within.iter().map(|m| m.g.clone()).collect();
    polys.sort();
    AlmostPeriodicProfile {
        modulus: p,
        k,
        lcm_degree: lcm_degree_of(&within),
        members: polys,
        scale: (p.get() as u64).pow(k),
    }
}

/// `A_k` with `deg LCM(A_k)`. Both strategies are run and must agree.
pub fn enumerate_almost_periodic(p: PrimeModulus, k: u32, exec: Exec) -> Result<AlmostPeriodicProfile> {
    if k == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let members = filter_members(p, k, exec)?;
    let prof = profile(p, k, &members);
    let other = almost_periodic_by_divisors(p, k, exec)?;
    if other != prof.members {
        return Err(Error::Internal(format!(
            "A_{k} strategies disagree: {} vs {} members",
            prof.members.len(),
            other.len()
        )));
    }
    Ok(prof)
}

/// Profiles for `k = 1..=k_max` from a single filter pass. Exploratory.
pub fn conjecture_table(p: PrimeModulus, k_max: u32, exec: Exec) -> Result<Vec<AlmostPeriodicProfile>> {
    if k_max == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let members = filter_members(p, k_max, exec)?;
    Ok((1..=k_max).map(|k| profile(p, k, &members)).collect())
}

/// Running minimum of the ratio column.
pub fn running_min(table: &[AlmostPeriodicProfile]) -> Vec<f64> {
    table
        .iter()
        .scan(f64::INFINITY, |m, prof| {
            *m = m.min(prof.ratio());
            Some(*m)
        })
        .collect()
}
