//! `LCM(P_d)`, the least common multiple of all polynomials of degree `<= d`.
//!
//! An irreducible `f` of degree `i <= d` enters with exponent `floor(d / i)`:
//! `f^e` has degree `<= d` exactly when `e * i <= d`.

use crate::error::{Error, Result};
use crate::par::Exec;
use crate::polyring::factor::ENUMERATION_CAP;
use crate::polyring::{count_irreducibles, enumerate_irreducibles_with, FactoredPoly, Poly, PrimeModulus};

/// Largest `p^d` for which `LCM(P_d)` is built in factored form.
pub const LCM_FACTOR_CAP: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmProfile {
    pub modulus: PrimeModulus,
    pub d: u32,
    pub factored: FactoredPoly,
    pub degree: u64,
    /// `p^d`.
    pub lower: u64,
    /// `2 p^(d+1)`.
    pub upper: u64,
}

impl LcmProfile {
    pub fn within_bounds(&self) -> bool {
        self.lower <= self.degree && self.degree <= self.upper
    }

    /// `degree / p^d`.
    pub fn ratio(&self) -> f64 {
        self.degree as f64 / self.lower as f64
    }
}

/// Degree and bounds without building the polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LcmDegree {
    pub d: u32,
    pub degree: u64,
    pub lower: u64,
    pub upper: u64,
}

impl LcmDegree {
    pub fn within_bounds(&self) -> bool {
        self.lower <= self.degree && self.degree <= self.upper
    }

    pub fn ratio(&self) -> f64 {
        self.degree as f64 / self.lower as f64
    }
}

fn check_d(p: PrimeModulus, d: u32, cap: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::InvalidDegree(0));
    }
    (p.get() as u64)
        .checked_pow(d)
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::cap(format!("p^d for d = {d}"), cap))
}

/// `sum_{i=1..d} floor(d/i) * i * M(i)` together with `p^d` and `2 p^(d+1)`.
pub fn lcm_degree(p: PrimeModulus, d: u32) -> Result<LcmDegree> {
    let lower = check_d(p, d, u64::MAX / (2 * p.get() as u64))?;
    let mut degree: u128 = 0;
    for i in 1..=d {
        degree += (d / i) as u128 * i as u128 * count_irreducibles(p, i as i64)?;
    }
    Ok(LcmDegree {
        d,
        degree: u64::try_from(degree).map_err(|_| Error::cap("LCM degree", u64::MAX))?,
        lower,
        upper: 2 * lower * p.get() as u64,
    })
}

/// `LCM(P_d)` by the exponent rule.
pub fn lcm_p(p: PrimeModulus, d: u32, exec: Exec) -> Result<LcmProfile> {
    let lower = check_d(p, d, LCM_FACTOR_CAP)?;
    let mut factors = Vec::new();
    for i in 1..=d {
        for f in enumerate_irreducibles_with(p, i as i64, exec)? {
            factors.push((f, d / i));
        }
    }
    let factored = FactoredPoly::new(p, 1, factors);
    let degree = factored.degree() as u64;
    Ok(LcmProfile {
        modulus: p,
        d,
        factored,
        degree,
        lower,
        upper: 2 * lower * p.get() as u64,
    })
}

/// LCM of every nonzero polynomial of degree `<= d`, by repeated `lcm`.
/// Oracle for [`lcm_p`].
pub fn lcm_brute(p: PrimeModulus, d: u32) -> Result<Poly> {
    let count = check_d(p, d + 1, ENUMERATION_CAP)?;
    let mut acc = Poly::one(p);
    for i in 1..count {
        acc = acc.lcm(&Poly::from_index(p, i))?;
    }
    Ok(acc)
}

/// Product of the monic irreducibles whose degree divides `d`; equals
/// `t^(p^d) - t`.
pub fn prod_irreducibles_dividing(p: PrimeModulus, d: u32, exec: Exec) -> Result<Poly> {
    check_d(p, d, LCM_FACTOR_CAP)?;
    let mut acc = Poly::one(p);
    for i in (1..=d).filter(|i| d.is_multiple_of(*i)) {
        for f in enumerate_irreducibles_with(p, i as i64, exec)? {
            acc = &acc * &f;
        }
    }
    Ok(acc)
}
