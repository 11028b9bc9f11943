//! Upper-bound detection through a small residue field.
//!
//! Pick a nonzero entry of `x - 1` in the matrix model: the lamp `f / t^q`
//! when it is nonzero, otherwise `t^k - 1`. Let `f` be its polynomial
//! numerator. The smallest monic irreducible `pi` not dividing `t f` gives a
//! field `F_p[t]/(pi)` of size at most `p (deg f + 1) <= 2 (deg f + 1) p`, in
//! which `x` survives; the quotient `(pi, ord(t mod pi))` has order below
//! the square of the field size.

use serde::Serialize;

use super::quotient::{CongruenceQuotient, QuotientElement};
use crate::error::{Error, Result};
use crate::lamplighter::LampElement;
use crate::polyring::{enumerate_irreducibles, multiplicative_order_t, Poly};

/// A quotient together with the (nontrivial) image of the element it detects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionCertificate {
    pub quotient: CongruenceQuotient,
    pub image: QuotientElement,
    pub order: u64,
}

impl DetectionCertificate {
    /// Projects `x` and checks the image is nontrivial.
    pub fn new(quotient: CongruenceQuotient, x: &LampElement) -> Result<Self> {
        let image = quotient.project(x);
        if image.is_identity() {
            return Err(Error::Internal(format!("{quotient} does not detect {x}")));
        }
        let order = quotient.order();
        Ok(DetectionCertificate {
            quotient,
            image,
            order,
        })
    }

    /// Re-checks detection independently of how the certificate was built.
    pub fn verify(&self, x: &LampElement) -> bool {
        self.quotient.detects(x).unwrap_or(false)
            && self.quotient.project(x) == self.image
            && self.order == self.quotient.order()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessEntry {
    /// The upper-right entry, the lamp configuration.
    Lamp,
    /// The upper-left entry minus one, `t^k - 1`.
    Shift,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBoundCertificate {
    pub certificate: DetectionCertificate,
    pub entry: WitnessEntry,
    /// Polynomial numerator `f` of the witness entry.
    pub numerator: Poly,
    /// `p^deg(pi)`.
    pub field_size: u64,
    /// `2 (deg f + 1) p`.
    pub field_bound: u64,
}

impl UpperBoundCertificate {
    /// `(2 (n + 1) p)^2` for an element of word length `n`.
    pub fn order_bound(p: u64, word_length: u64) -> u64 {
        let q = 2 * (word_length + 1) * p;
        q * q
    }
}

pub fn upper_bound_certificate(x: &LampElement) -> Result<UpperBoundCertificate> {
    if x.is_identity() {
        return Err(Error::IdentityElement);
    }
    let p = x.modulus();
    let (entry, numerator) = if !x.lamp().is_zero() {
        (WitnessEntry::Lamp, x.lamp().unit_part().clone())
    } else {
        // t^k - 1 for k > 0; for k < 0 it is (1 - t^|k|) / t^|k|
        let n = x.shift().unsigned_abs() as usize;
        let f = Poly::t_pow_minus_one(p, n);
        (WitnessEntry::Shift, if x.shift() > 0 { f } else { -&f })
    };
    let t_f = numerator.shift_up(1);
    let max_degree = t_f.degree_or_zero() as i64 + 1;
    for e in 1..=max_degree {
        for pi in enumerate_irreducibles(p, e)? {
            if pi.divides(&t_f) {
                continue;
            }
            let ord = multiplicative_order_t(&pi)?;
            let quotient = CongruenceQuotient::new(pi, ord)?;
            let field_size = quotient.field_size();
            let field_bound = 2 * (numerator.degree_or_zero() as u64 + 1) * p.get() as u64;
            return Ok(UpperBoundCertificate {
                certificate: DetectionCertificate::new(quotient, x)?,
                entry,
                numerator,
                field_size,
                field_bound,
            });
        }
    }
    Err(Error::Internal(format!("no irreducible avoids t*f for {x}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{format_poly, parse_poly, PrimeModulus};

    fn el(text: &str, k: i64) -> LampElement {
        let p = PrimeModulus::new(2).unwrap();
        LampElement::new(parse_poly(text, p).unwrap(), k)
    }

    #[test]
    fn examples() {
        let c = upper_bound_certificate(&el("1+t", 0)).unwrap();
        assert_eq!(format_poly(c.certificate.quotient.modulus()), "1+t+t^2");
        assert_eq!((c.field_size, c.field_bound, c.certificate.order), (4, 8, 12));

        let c = upper_bound_certificate(&el("0", 1)).unwrap();
        assert_eq!(c.entry, WitnessEntry::Shift);
        assert_eq!(format_poly(c.certificate.quotient.modulus()), "1+t+t^2");
        assert_eq!(c.certificate.order, 12);

        let c = upper_bound_certificate(&el("1", 0)).unwrap();
        assert_eq!(format_poly(c.certificate.quotient.modulus()), "1+t");
        assert_eq!((c.field_size, c.certificate.order), (2, 2));
        assert_eq!(
            upper_bound_certificate(&el("0", 0)),
            Err(Error::IdentityElement)
        );
    }

    #[test]
    fn negative_shift_uses_unit_numerator() {
        let c = upper_bound_certificate(&el("0", -3)).unwrap();
        assert_eq!(c.numerator.constant_term(), 1);
        assert!(c.certificate.verify(&el("0", -3)));
    }
}
