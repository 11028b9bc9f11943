use super::field::{mobius, divisors, prime_divisors, PrimeModulus};
use super::poly::{frobenius_power, Poly};
use crate::error::{Error, Result};
use crate::par::Exec;

/// Largest number of candidates an exhaustive enumeration may visit.
pub const ENUMERATION_CAP: u64 = 1 << 26;

/// Irreducibility test for polynomials of degree `d >= 1`.
///
/// `f` is irreducible iff `f | x^(p^d) - x` and `gcd(f, x^(p^(d/r)) - x) = 1`
/// for every prime `r | d`.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let d = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if d == 1 {
        return Ok(true);
    }
    let f = f.monic();
    let x = Poly::t(f.modulus());
    if frobenius_power(&f, d)? != x.rem(&f)? {
        return Ok(false);
    }
    for r in prime_divisors(d as u64) {
        let h = frobenius_power(&f, d / r as usize)?;
        if !f.gcd(&(&h - &x))?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn monic_count(p: PrimeModulus, d: usize) -> Result<u64> {
    (p.get() as u64)
        .checked_pow(d as u32)
        .filter(|&n| n <= ENUMERATION_CAP)
        .ok_or_else(|| Error::cap(format!("enumeration of degree-{d} polynomials"), ENUMERATION_CAP))
}

/// All monic polynomials of degree exactly `d`, in canonical order.
pub fn monic_polys(p: PrimeModulus, d: usize) -> Result<Vec<Poly>> {
    let n = monic_count(p, d)?;
    Ok((0..n).map(|i| Poly::monic_from_index(p, d, i)).collect())
}

pub fn enumerate_irreducibles(p: PrimeModulus, d: i64) -> Result<Vec<Poly>> {
    enumerate_irreducibles_with(p, d, Exec::default())
}

/// Monic irreducibles of degree exactly `d`, canonically sorted.
pub fn enumerate_irreducibles_with(p: PrimeModulus, d: i64, exec: Exec) -> Result<Vec<Poly>> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let d = d as usize;
    let n = monic_count(p, d)?;
    let keep = exec.map_range(0..n as usize, |i| {
        let f = Poly::monic_from_index(p, d, i as u64);
        is_irreducible(&f).unwrap().then_some(f)
    });
    Ok(keep.into_iter().flatten().collect())
}

/// Number of monic irreducibles of degree `d`: `(1/d) * sum_{e | d} mu(e) p^(d/e)`.
pub fn count_irreducibles(p: PrimeModulus, d: i64) -> Result<u128> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let d = d as u64;
    let mut total: i128 = 0;
    for e in divisors(d) {
        let term = (p.get() as i128)
            .checked_pow((d / e) as u32)
            .ok_or_else(|| Error::cap("irreducible count", u64::MAX))?;
        total += mobius(e) as i128 * term;
    }
    Ok((total / d as i128) as u128)
}

/// A nonzero polynomial as `unit * prod f_i^e_i` with monic irreducible `f_i`,
/// sorted by degree then coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly {
    modulus: PrimeModulus,
    unit: u32,
    factors: Vec<(Poly, u32)>,
}

impl FactoredPoly {
    pub fn new(modulus: PrimeModulus, unit: u32, mut factors: Vec<(Poly, u32)>) -> Self {
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        FactoredPoly {
            modulus,
            unit,
            factors,
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn unit(&self) -> u32 {
        self.unit
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, e)| f.degree_or_zero() * *e as usize)
            .sum()
    }

    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.modulus, self.unit as i64), |acc, (f, e)| {
                &acc * &f.pow(*e as u64)
            })
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, e)| *e).max().unwrap_or(0)
    }
}

/// Trial division by irreducibles, cached by degree.
///
/// Build one per prime and reuse it when factoring many polynomials.
#[derive(Debug, Clone)]
pub struct Factorizer {
    modulus: PrimeModulus,
    by_degree: Vec<Vec<Poly>>,
}

impl Factorizer {
    pub fn new(modulus: PrimeModulus) -> Self {
        Factorizer {
            modulus,
            by_degree: vec![Vec::new()],
        }
    }

    /// Precomputes irreducibles up to `max_degree`.
    pub fn with_degree(modulus: PrimeModulus, max_degree: usize) -> Result<Self> {
        let mut f = Self::new(modulus);
        f.ensure(max_degree)?;
        Ok(f)
    }

    fn ensure(&mut self, degree: usize) -> Result<()> {
        while self.by_degree.len() <= degree {
            let d = self.by_degree.len();
            self.by_degree
                .push(enumerate_irreducibles(self.modulus, d as i64)?);
        }
        Ok(())
    }

    fn cached_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    /// Factors `f` using only the cached tables; `ensure` must already cover
    /// `deg(f) / 2`.
    fn factor_cached(&self, f: &Poly) -> Result<FactoredPoly> {
        let p = self.modulus;
        let unit = f.leading();
        let mut rest = f.monic();
        let mut factors = Vec::new();
        let mut e = 1;
        while rest.degree_or_zero() >= 2 * e {
            for pi in &self.by_degree[e] {
                let mut mult = 0u32;
                loop {
                    let (q, r) = rest.divrem(pi)?;
                    if !r.is_zero() {
                        break;
                    }
                    rest = q;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((pi.clone(), mult));
                }
            }
            e += 1;
        }
        if rest.degree_or_zero() >= 1 {
            match factors.iter_mut().find(|(g, _)| *g == rest) {
                Some((_, m)) => *m += 1,
                None => factors.push((rest, 1)),
            }
        }
        Ok(FactoredPoly::new(p, unit, factors))
    }

    pub fn factor(&mut self, f: &Poly) -> Result<FactoredPoly> {
        if f.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: f.modulus().get(),
            });
        }
        let d = f.degree().ok_or(Error::ZeroPolynomial)?;
        self.ensure(d / 2)?;
        self.factor_cached(f)
    }

    /// Factoring for shared use; the table must already cover `deg(f) / 2`.
    pub fn factor_shared(&self, f: &Poly) -> Result<FactoredPoly> {
        let d = f.degree().ok_or(Error::ZeroPolynomial)?;
        if d / 2 > self.cached_degree() {
            return Err(Error::Precondition(format!(
                "factor table covers degree {} but {} is needed",
                self.cached_degree(),
                d / 2
            )));
        }
        self.factor_cached(f)
    }
}

/// Complete factorisation into monic irreducibles.
pub fn factor(f: &Poly) -> Result<FactoredPoly> {
    Factorizer::new(f.modulus()).factor(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    /// Independent check: no monic divisor of degree 1..=deg/2.
    fn irreducible_by_trial_division(f: &Poly) -> bool {
        let p = f.modulus();
        let d = f.degree().unwrap();
        (1..=d / 2).all(|e| {
            (0..(p.get() as u64).pow(e as u32))
                .all(|i| !Poly::monic_from_index(p, e, i).divides(f))
        })
    }

    #[test]
    fn irreducibility_examples() {
        let p = pm(2);
        assert!(is_irreducible(&Poly::from_i64s(p, &[1, 1, 1])).unwrap());
        assert!(!is_irreducible(&Poly::from_i64s(p, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&Poly::t(pm(3))).unwrap());
        assert_eq!(is_irreducible(&Poly::one(p)), Err(Error::ConstantPolynomial));
        assert_eq!(is_irreducible(&Poly::zero(p)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn irreducibility_agrees_with_trial_division() {
        for (p, dmax) in [(2, 8), (3, 5), (5, 3)] {
            let p = pm(p);
            for d in 1..=dmax {
                for f in monic_polys(p, d).unwrap() {
                    assert_eq!(is_irreducible(&f).unwrap(), irreducible_by_trial_division(&f));
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let p = pm(2);
        let lin = enumerate_irreducibles(p, 1).unwrap();
        assert_eq!(lin, vec![Poly::t(p), Poly::from_i64s(p, &[1, 1])]);
        assert_eq!(
            enumerate_irreducibles(p, 2).unwrap(),
            vec![Poly::from_i64s(p, &[1, 1, 1])]
        );
        assert_eq!(enumerate_irreducibles(p, 4).unwrap().len(), 3);
        assert_eq!(enumerate_irreducibles(p, 0), Err(Error::InvalidDegree(0)));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_irreducibles(pm(2), 6).unwrap(), 9);
        assert_eq!(count_irreducibles(pm(3), 2).unwrap(), 3);
        assert_eq!(count_irreducibles(pm(2), 1).unwrap(), 2);
        assert_eq!(count_irreducibles(pm(2), -1), Err(Error::InvalidDegree(-1)));
    }

    #[test]
    fn factor_examples() {
        let p = pm(2);
        let f = Poly::from_i64s(p, &[0, 1, 0, 0, 1]);
        let fp = factor(&f).unwrap();
        let expect = vec![
            (Poly::t(p), 1),
            (Poly::from_i64s(p, &[1, 1]), 1),
            (Poly::from_i64s(p, &[1, 1, 1]), 1),
        ];
        assert_eq!(fp.factors(), expect.as_slice());
        let sq = factor(&Poly::from_i64s(p, &[1, 0, 1])).unwrap();
        assert_eq!(sq.factors(), &[(Poly::from_i64s(p, &[1, 1]), 2)]);
        let irr = Poly::from_i64s(pm(5), &[2, 0, 0, 1]);
        if is_irreducible(&irr).unwrap() {
            assert_eq!(factor(&irr).unwrap().factors(), &[(irr.clone(), 1)]);
        }
        assert_eq!(factor(&Poly::zero(p)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn factor_keeps_unit() {
        let p = pm(5);
        let f = Poly::from_i64s(p, &[3, 0, 3]);
        let fp = factor(&f).unwrap();
        assert_eq!(fp.unit(), 3);
        assert_eq!(fp.expand(), f);
    }
}
