use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::PrimeModulus;
use crate::error::{Error, Result};

/// A polynomial in F_p[t], coefficients ascending by exponent.
///
/// Canonical form: no trailing zero coefficients. The zero polynomial has an
/// empty coefficient vector and degree `None`.
///
/// The arithmetic operators panic when the operands live over different
/// primes; the `try_*` methods report [`Error::ModulusMismatch`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    p: PrimeModulus,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn zero(p: PrimeModulus) -> Self {
        Poly { p, coeffs: Vec::new() }
    }

    pub fn one(p: PrimeModulus) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: PrimeModulus, c: i64) -> Self {
        Self::from_coeffs(p, vec![p.reduce_i64(c)])
    }

    /// The indeterminate `t`.
    pub fn t(p: PrimeModulus) -> Self {
        Self::monomial(p, 1, 1)
    }

    pub fn monomial(p: PrimeModulus, c: i64, e: usize) -> Self {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = p.reduce_i64(c);
        Self::from_coeffs(p, coeffs)
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(p: PrimeModulus, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = p.sub(coeffs[0], 1);
        Self::from_coeffs(p, coeffs)
    }

    /// Builds from residues; values are reduced mod p and trailing zeros dropped.
    pub fn from_coeffs(p: PrimeModulus, coeffs: Vec<u32>) -> Self {
        let m = p.get();
        let coeffs = coeffs.into_iter().map(|c| c % m).collect();
        let mut out = Poly { p, coeffs };
        out.normalize();
        out
    }

    pub fn from_i64s(p: PrimeModulus, coeffs: &[i64]) -> Self {
        Self::from_coeffs(p, coeffs.iter().map(|&c| p.reduce_i64(c)).collect())
    }

    /// The monic polynomial of degree `d` whose lower coefficients are the
    /// base-`p` digits of `index`. Indices `0..p^d` enumerate all monic
    /// polynomials of degree `d` in canonical order.
    pub fn monic_from_index(p: PrimeModulus, d: usize, mut index: u64) -> Self {
        let base = p.get() as u64;
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push((index % base) as u32);
            index /= base;
        }
        coeffs.push(1);
        Poly { p, coeffs }
    }

    /// Any polynomial (not necessarily monic) from its base-`p` digit encoding.
    pub fn from_index(p: PrimeModulus, mut index: u64) -> Self {
        let base = p.get() as u64;
        let mut coeffs = Vec::new();
        while index > 0 {
            coeffs.push((index % base) as u32);
            index /= base;
        }
        Poly { p, coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    #[inline]
    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; for size bookkeeping only.
    #[inline]
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> u32 {
        self.coeff(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Number of trailing zero coefficients at the low end, i.e. the t-adic
    /// valuation. `None` for zero.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    /// Divides out the largest power of `t`. Zero stays zero.
    pub fn strip_t(&self) -> (Poly, usize) {
        match self.low_order() {
            None => (self.clone(), 0),
            Some(v) => (
                Poly {
                    p: self.p,
                    coeffs: self.coeffs[v..].to_vec(),
                },
                v,
            ),
        }
    }

    /// Multiplies by `t^n`.
    pub fn shift_up(&self, n: usize) -> Poly {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut coeffs = vec![0; n];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { p: self.p, coeffs }
    }

    /// Base-`p` encoding of the coefficient vector; consistent with [`Ord`].
    pub fn index(&self) -> u128 {
        let base = self.p.get() as u128;
        self.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * base + c as u128)
    }

    pub fn scale(&self, c: u32) -> Poly {
        let p = self.p;
        Poly::from_coeffs(p, self.coeffs.iter().map(|&a| p.mul(a, c)).collect())
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.p.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.get(),
                right: other.p.get(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Poly) -> Poly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| p.add(self.coeff(i), other.coeff(i))).collect();
        let mut out = Poly { p, coeffs };
        out.normalize();
        out
    }

    fn sub_unchecked(&self, other: &Poly) -> Poly {
        let p = self.p;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| p.sub(self.coeff(i), other.coeff(i))).collect();
        let mut out = Poly { p, coeffs };
        out.normalize();
        out
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.p);
        }
        let m = self.p.get() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % m;
            }
        }
        let mut out = Poly {
            p: self.p,
            coeffs: acc.into_iter().map(|c| c as u32).collect(),
        };
        out.normalize();
        out
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(p), self.clone()));
        }
        let lead_inv = p.inv(divisor.leading())?;
        let mut quot = vec![0u32; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let factor = p.mul(c, lead_inv);
            quot[i - dd] = factor;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = p.sub(rem[k], p.mul(factor, b));
            }
        }
        rem.truncate(dd);
        let mut q = Poly { p, coeffs: quot };
        let mut r = Poly { p, coeffs: rem };
        q.normalize();
        r.normalize();
        Ok((q, r))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// True when `self` divides `other`. The zero polynomial divides only zero.
    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("exact division left a remainder".into()));
        }
        Ok(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic lcm; zero if either argument is zero.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.p));
        }
        let g = self.gcd(other)?;
        Ok(self.exact_div(&g)?.mul_unchecked(other).monic())
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.p;
        let x = x % p.get();
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| p.add(p.mul(acc, x), c))
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `self^e mod m` by repeated squaring.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Result<Poly> {
        self.check(m)?;
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut base = self.rem(m)?;
        let mut acc = Poly::one(self.p).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    pub fn mulmod(&self, other: &Poly, m: &Poly) -> Result<Poly> {
        self.try_mul(other)?.rem(m)
    }

    /// Inverse modulo `m` via the extended Euclidean algorithm.
    pub fn invmod(&self, m: &Poly) -> Result<Poly> {
        self.check(m)?;
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.p;
        let (mut r0, mut r1) = (m.clone(), self.rem(m)?);
        let (mut s0, mut s1) = (Poly::zero(p), Poly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub_unchecked(&q.mul_unchecked(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return Err(Error::Precondition("polynomial not invertible modulo m".into()));
        }
        let c = p.inv(r0.leading())?;
        s0.scale(c).rem(m)
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.p
            .cmp(&other.p)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn assert_same(a: &Poly, b: &Poly) {
    assert_eq!(a.p, b.p, "polynomials over different primes");
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.add_unchecked(rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.sub_unchecked(rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_same(self, rhs);
        self.mul_unchecked(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let p = self.p;
        Poly {
            p,
            coeffs: self.coeffs.iter().map(|&c| p.neg(c)).collect(),
        }
    }
}

/// `x^(p^d) mod f`, computed by `d` successive p-th powers.
pub fn frobenius_power(f: &Poly, d: usize) -> Result<Poly> {
    let p = f.modulus();
    let mut h = Poly::t(p).rem(f)?;
    for _ in 0..d {
        h = h.powmod(p.get() as u64, f)?;
    }
    Ok(h)
}
