use std::fmt;

use crate::error::{Error, Result};
use crate::lamplighter::LampElement;
use crate::polyring::{format_poly, multiplicative_order_t, Poly, PrimeModulus};

/// The finite quotient `(F_p[t, 1/t] / (g)) x| Z/k` of the lamplighter group.
///
/// `g` is monic with `g(0) != 0`, or the constant 1 for the purely cyclic
/// quotient `Z/k`. The order of `t` modulo `g` divides `k`, which makes the
/// action of `Z/k` on the residues well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceQuotient {
    modulus: Poly,
    period: u64,
    order_t: u64,
    t_inv: Poly,
    order: u64,
}

/// An element `(residue, shift)` of a congruence quotient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuotientElement {
    pub residue: Poly,
    pub shift: u64,
}

impl QuotientElement {
    pub fn is_identity(&self) -> bool {
        self.residue.is_zero() && self.shift == 0
    }
}

impl CongruenceQuotient {
    /// Validates `(g, k)` and precomputes `t^-1 mod g` and the group order.
    pub fn new(g: Poly, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("period k must be at least 1".into()));
        }
        match g.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) if !g.is_one() => return Err(Error::NotMonic(format_poly(&g))),
            Some(0) => return Self::from_parts(g, k, 1),
            Some(_) if !g.is_monic() => return Err(Error::NotMonic(format_poly(&g))),
            Some(_) => {}
        }
        let ord = multiplicative_order_t(&g)?;
        if !k.is_multiple_of(ord) {
            return Err(Error::InvalidPeriod { k, minimal: ord });
        }
        Self::from_parts(g, k, ord)
    }

    /// The pure cyclic quotient `Z/k`.
    pub fn cyclic(p: PrimeModulus, k: u64) -> Result<Self> {
        Self::new(Poly::one(p), k)
    }

    /// Trusted constructor for callers that already know `ord(t mod g) | k`.
    pub(crate) fn from_parts(g: Poly, k: u64, order_t: u64) -> Result<Self> {
        let p = g.modulus();
        let d = g.degree_or_zero();
        let field = (p.get() as u64)
            .checked_pow(d as u32)
            .ok_or_else(|| Error::cap("quotient order", u64::MAX))?;
        let order = field
            .checked_mul(k)
            .ok_or_else(|| Error::cap("quotient order", u64::MAX))?;
        // t^-1 = -g(0)^-1 * (g(t) - g(0)) / t
        let t_inv = if d == 0 {
            Poly::zero(p)
        } else {
            let c0 = g.constant_term();
            let scale = p.neg(p.inv(c0)?);
            let mut shifted = g.coeffs()[1..].to_vec();
            shifted.iter_mut().for_each(|c| *c = p.mul(*c, scale));
            Poly::from_coeffs(p, shifted)
        };
        Ok(CongruenceQuotient {
            modulus: g,
            period: k,
            order_t,
            t_inv,
            order,
        })
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Multiplicative order of `t` modulo `g` (1 for the cyclic quotient).
    pub fn order_t(&self) -> u64 {
        self.order_t
    }

    /// `p^deg(g) * k`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn field_size(&self) -> u64 {
        self.order / self.period
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree_or_zero()
    }

    pub fn prime(&self) -> PrimeModulus {
        self.modulus.modulus()
    }

    pub fn t_inverse(&self) -> &Poly {
        &self.t_inv
    }

    pub fn identity(&self) -> QuotientElement {
        QuotientElement {
            residue: Poly::zero(self.prime()),
            shift: 0,
        }
    }

    /// `t^e mod g` for any integer `e`.
    fn t_power(&self, e: i64) -> Poly {
        let p = self.prime();
        if self.degree() == 0 {
            return Poly::zero(p);
        }
        let base = if e >= 0 { Poly::t(p) } else { self.t_inv.clone() };
        base.powmod(e.unsigned_abs(), &self.modulus)
            .expect("modulus is nonzero")
    }

    /// Image of `x` under `L -> (F_p[t,1/t]/(g)) x| Z/k`.
    pub fn project(&self, x: &LampElement) -> QuotientElement {
        let residue = if self.degree() == 0 || x.lamp().is_zero() {
            Poly::zero(self.prime())
        } else {
            let r = x.lamp().unit_part().rem(&self.modulus).expect("nonzero modulus");
            r.mulmod(&self.t_power(x.lamp().valuation()), &self.modulus)
                .expect("nonzero modulus")
        };
        QuotientElement {
            residue,
            shift: x.shift().rem_euclid(self.period as i64) as u64,
        }
    }

    /// `(a1, n1)(a2, n2) = (a1 + t^n1 a2 mod g, n1 + n2 mod k)`.
    pub fn compose(&self, a: &QuotientElement, b: &QuotientElement) -> QuotientElement {
        let moved = b
            .residue
            .mulmod(&self.t_power(a.shift as i64), &self.modulus)
            .unwrap_or_else(|_| Poly::zero(self.prime()));
        let residue = if self.degree() == 0 {
            Poly::zero(self.prime())
        } else {
            (&a.residue + &moved).rem(&self.modulus).expect("nonzero modulus")
        };
        QuotientElement {
            residue,
            shift: (a.shift + b.shift) % self.period,
        }
    }

    /// Whether `x` survives in this quotient: `k` does not divide the shift,
    /// or `g` does not divide the lamp's unit part.
    pub fn detects(&self, x: &LampElement) -> Result<bool> {
        if x.is_identity() {
            return Err(Error::IdentityElement);
        }
        Ok(self.detects_unchecked(x))
    }

    #[inline]
    pub(crate) fn detects_unchecked(&self, x: &LampElement) -> bool {
        detects_parts(&self.modulus, self.period, x)
    }
}

/// Detection test on raw `(g, k)`.
#[inline]
pub(crate) fn detects_parts(g: &Poly, k: u64, x: &LampElement) -> bool {
    if x.shift().rem_euclid(k as i64) != 0 {
        return true;
    }
    if g.degree_or_zero() == 0 {
        return false;
    }
    !g.divides(x.lamp().unit_part())
}

/// `make_quotient(g, k)`.
pub fn make_quotient(g: Poly, k: u64) -> Result<CongruenceQuotient> {
    CongruenceQuotient::new(g, k)
}

impl fmt::Display for CongruenceQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[t,1/t]/({}) x| Z/{}",
            self.prime(),
            format_poly(&self.modulus),
            self.period
        )
    }
}
