//! Multiplicative order of `t` modulo a polynomial `g` with `g(0) != 0`.

use super::factor::{FactoredPoly, Factorizer};
use super::field::{lcm_u64, prime_divisors};
use super::poly::Poly;
use super::text::format_poly;
use crate::error::{Error, Result};

fn check_modulus(g: &Poly) -> Result<()> {
    match g.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) if g.constant_term() == 0 => Err(Error::TNotInvertible(format_poly(g))),
        Some(_) => Ok(()),
    }
}

/// Order of `t` modulo an irreducible `f` (divides `p^deg f - 1`).
fn order_mod_irreducible(f: &Poly) -> Result<u64> {
    let p = f.modulus().get() as u64;
    let d = f.degree_or_zero() as u32;
    let group = p
        .checked_pow(d)
        .ok_or_else(|| Error::cap("multiplicative group size", u64::MAX))?
        - 1;
    let t = Poly::t(f.modulus());
    let mut n = group;
    for r in prime_divisors(group) {
        while n % r == 0 && t.powmod(n / r, f)?.is_one() {
            n /= r;
        }
    }
    Ok(n)
}

/// Structural order from a factorisation:
/// `lcm_i ord(t mod f_i) * p^s` with `p^s` the least power `>= max e_i`.
pub fn order_from_factorization(fp: &FactoredPoly) -> Result<u64> {
    let p = fp.modulus().get() as u64;
    let mut order = 1u64;
    for (f, _) in fp.factors() {
        if f.constant_term() == 0 {
            return Err(Error::TNotInvertible(format_poly(f)));
        }
        order = lcm_u64(order, order_mod_irreducible(f)?);
    }
    let mut pp = 1u64;
    while pp < fp.max_multiplicity() as u64 {
        pp *= p;
    }
    Ok(order * pp)
}

/// Smallest `d >= 1` with `g | t^d - 1`, via factorisation.
pub fn multiplicative_order_t(g: &Poly) -> Result<u64> {
    check_modulus(g)?;
    let fp = Factorizer::new(g.modulus()).factor(g)?;
    order_from_factorization(&fp)
}

/// Same as [`multiplicative_order_t`] but with a caller-owned factor table.
pub fn multiplicative_order_t_shared(g: &Poly, factorizer: &Factorizer) -> Result<u64> {
    check_modulus(g)?;
    order_from_factorization(&factorizer.factor_shared(g)?)
}

/// Brute-force scan `d = 1, 2, ...`, testing `t^d mod g == 1` by repeated
/// squaring. The scan is capped at `p^(deg g + 1)`; exceeding it is an
/// internal error since the structural bound guarantees an earlier hit.
pub fn multiplicative_order_t_brute(g: &Poly) -> Result<u64> {
    check_modulus(g)?;
    let p = g.modulus().get() as u64;
    let cap = p
        .checked_pow(g.degree_or_zero() as u32 + 1)
        .ok_or_else(|| Error::cap("brute-force order scan", u64::MAX))?;
    let t = Poly::t(g.modulus());
    for d in 1..=cap {
        if t.powmod(d, g)?.is_one() {
            return Ok(d);
        }
    }
    Err(Error::Internal(format!("order scan exceeded {cap}")))
}

/// Order of `t` mod `g` if it is at most `bound`, found by stepping through
/// successive powers. `None` when the order exceeds `bound`.
pub fn order_t_at_most(g: &Poly, bound: u64) -> Result<Option<u64>> {
    check_modulus(g)?;
    let p = g.modulus();
    let one = Poly::one(p).rem(g)?;
    let t = Poly::t(p);
    let mut acc = one.clone();
    for d in 1..=bound {
        acc = acc.mulmod(&t, g)?;
        if acc == one {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::factor::monic_polys;
    use crate::polyring::field::PrimeModulus;

    #[test]
    fn examples() {
        let p = PrimeModulus::new(2).unwrap();
        for (c, want) in [(&[1, 1, 1][..], 3), (&[1, 1][..], 1), (&[1, 0, 1][..], 2)] {
            let g = Poly::from_i64s(p, c);
            assert_eq!(multiplicative_order_t(&g).unwrap(), want);
            assert_eq!(multiplicative_order_t_brute(&g).unwrap(), want);
            assert_eq!(order_t_at_most(&g, 10).unwrap(), Some(want));
        }
    }

    #[test]
    fn errors() {
        let p = PrimeModulus::new(2).unwrap();
        assert!(matches!(
            multiplicative_order_t(&Poly::from_i64s(p, &[0, 1, 1])),
            Err(Error::TNotInvertible(_))
        ));
        assert_eq!(multiplicative_order_t(&Poly::one(p)), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn bounded_scan_reports_overflow() {
        let p = PrimeModulus::new(2).unwrap();
        // t^3 + t + 1 has order 7
        let g = Poly::from_i64s(p, &[1, 1, 0, 1]);
        assert_eq!(order_t_at_most(&g, 6).unwrap(), None);
        assert_eq!(order_t_at_most(&g, 7).unwrap(), Some(7));
    }

    #[test]
    fn structural_matches_brute_small() {
        let p = PrimeModulus::new(3).unwrap();
        for d in 1..=4 {
            for g in monic_polys(p, d).unwrap() {
                if g.constant_term() == 0 {
                    continue;
                }
                assert_eq!(
                    multiplicative_order_t(&g).unwrap(),
                    multiplicative_order_t_brute(&g).unwrap(),
                    "{g:?}"
                );
            }
        }
    }
}
