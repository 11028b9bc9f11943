use std::ops::{Add, Mul, Neg, Sub};

use super::field::PrimeModulus;
use super::poly::Poly;
use crate::error::{Error, Result};

/// An element `t^valuation * unit` of F_p[t, 1/t].
///
/// `unit` has nonzero constant term; zero is stored as the zero polynomial
/// with valuation 0. The representation is unique, so derived equality and
/// hashing are structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    valuation: i64,
    unit: Poly,
}

impl LaurentPoly {
    pub fn zero(p: PrimeModulus) -> Self {
        LaurentPoly {
            valuation: 0,
            unit: Poly::zero(p),
        }
    }

    pub fn one(p: PrimeModulus) -> Self {
        Self::from_poly(Poly::one(p))
    }

    pub fn constant(p: PrimeModulus, c: i64) -> Self {
        Self::from_poly(Poly::constant(p, c))
    }

    /// `c * t^e`.
    pub fn monomial(p: PrimeModulus, c: i64, e: i64) -> Self {
        Self::constant(p, c).shift(e)
    }

    pub fn from_poly(f: Poly) -> Self {
        Self::new(f, 0)
    }

    /// `t^shift * f`, normalised.
    pub fn new(f: Poly, shift: i64) -> Self {
        if f.is_zero() {
            return Self::zero(f.modulus());
        }
        let (unit, v) = f.strip_t();
        LaurentPoly {
            valuation: shift + v as i64,
            unit,
        }
    }

    /// From (exponent, coefficient) pairs; repeated exponents accumulate.
    pub fn from_terms(p: PrimeModulus, terms: &[(i64, i64)]) -> Self {
        let Some(lo) = terms.iter().map(|&(e, _)| e).min() else {
            return Self::zero(p);
        };
        let hi = terms.iter().map(|&(e, _)| e).max().unwrap();
        let mut coeffs = vec![0u32; (hi - lo + 1) as usize];
        for &(e, c) in terms {
            let i = (e - lo) as usize;
            coeffs[i] = p.add(coeffs[i], p.reduce_i64(c));
        }
        Self::new(Poly::from_coeffs(p, coeffs), lo)
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.unit.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// The polynomial part with nonzero constant term (`f` in `f / t^q`).
    pub fn unit_part(&self) -> &Poly {
        &self.unit
    }

    /// Exponent of the lowest term; 0 for zero.
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Exponent of the highest term, `None` for zero.
    pub fn top_exponent(&self) -> Option<i64> {
        self.unit.degree().map(|d| self.valuation + d as i64)
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.unit
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.valuation + i as i64, c))
    }

    pub fn coeff(&self, e: i64) -> u32 {
        if self.is_zero() || e < self.valuation {
            return 0;
        }
        self.unit.coeff((e - self.valuation) as usize)
    }

    /// Multiplies by `t^n`.
    pub fn shift(&self, n: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            valuation: self.valuation + n,
            unit: self.unit.clone(),
        }
    }

    /// `(poly, e)` with `self = t^e * poly` and `poly` an ordinary polynomial
    /// (so `e` is the valuation).
    pub fn as_poly_times_t_power(&self) -> (&Poly, i64) {
        (&self.unit, self.valuation)
    }

    /// Converts to an ordinary polynomial if there are no negative exponents.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(self.unit.clone());
        }
        (self.valuation >= 0).then(|| self.unit.shift_up(self.valuation as usize))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch {
                left: self.modulus().get(),
                right: other.modulus().get(),
            });
        }
        Ok(())
    }

    fn combine(&self, other: &Self, subtract: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { -other } else { other.clone() };
        }
        let lo = self.valuation.min(other.valuation);
        let a = self.unit.shift_up((self.valuation - lo) as usize);
        let b = other.unit.shift_up((other.valuation - lo) as usize);
        let sum = if subtract { &a - &b } else { &a + &b };
        Self::new(sum, lo)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.combine(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.modulus()));
        }
        Ok(LaurentPoly {
            valuation: self.valuation + other.valuation,
            // product of units has nonzero constant term over a field
            unit: &self.unit * &other.unit,
        })
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("Laurent polynomials over different primes")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("Laurent polynomials over different primes")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("Laurent polynomials over different primes")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            valuation: self.valuation,
            unit: -&self.unit,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalises_powers_of_t() {
        let p = PrimeModulus::new(2).unwrap();
        let x = LaurentPoly::new(Poly::from_i64s(p, &[0, 0, 1, 1]), -3);
        assert_eq!(x.valuation(), -1);
        assert_eq!(x.unit_part(), &Poly::from_i64s(p, &[1, 1]));
        assert_eq!(x.top_exponent(), Some(0));
    }

    #[test]
    fn cancellation_to_zero() {
        let p = PrimeModulus::new(3).unwrap();
        let x = LaurentPoly::from_terms(p, &[(-2, 1), (4, 2)]);
        let z = &x - &x;
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero(p));
    }

    #[test]
    fn sum_with_cancelled_low_term() {
        let p = PrimeModulus::new(2).unwrap();
        let a = LaurentPoly::from_terms(p, &[(-1, 1), (0, 1)]);
        let b = LaurentPoly::monomial(p, 1, -1);
        let s = &a + &b;
        assert_eq!(s, LaurentPoly::one(p));
    }

    #[test]
    fn products_keep_unit_form() {
        let p = PrimeModulus::new(5).unwrap();
        let a = LaurentPoly::from_terms(p, &[(-1, 2), (3, 1)]);
        let b = LaurentPoly::from_terms(p, &[(2, 3), (5, 4)]);
        let c = &a * &b;
        assert_ne!(c.unit_part().constant_term(), 0);
        assert_eq!(c.valuation(), 1);
    }
}
