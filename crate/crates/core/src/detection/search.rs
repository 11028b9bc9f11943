//! Enumeration of congruence quotients in ascending order.
//!
//! Candidates are visited by order `N = p^d * k`, then by degree `d`, then by
//! the canonical order of the modulus `g`. For a fixed `(N, d)` the period is
//! forced to `k = N / p^d`, and `g` qualifies when `ord(t mod g) | k`.

use std::ops::ControlFlow;

use super::quotient::{detects_parts, CongruenceQuotient};
use crate::error::{Error, Result};
use crate::lamplighter::LampElement;
use crate::par::Exec;
use crate::polyring::order::order_from_factorization;
use crate::polyring::{Factorizer, Poly, PrimeModulus};

/// A modulus together with the order of `t` modulo it.
#[derive(Debug, Clone)]
pub struct Modulus {
    pub g: Poly,
    pub order_t: u64,
}

/// Moduli tables for every quotient of order at most `bound`.
#[derive(Debug, Clone)]
pub struct QuotientSearch {
    p: PrimeModulus,
    bound: u64,
    /// Index `d` lists the monic degree-`d` moduli with `p^d * ord <= bound`.
    tables: Vec<Vec<Modulus>>,
}

impl QuotientSearch {
    pub fn new(p: PrimeModulus, bound: u64, exec: Exec) -> Result<Self> {
        let base = p.get() as u64;
        let mut tables = vec![vec![Modulus {
            g: Poly::one(p),
            order_t: 1,
        }]];
        let mut d = 1usize;
        while let Some(field) = base.checked_pow(d as u32).filter(|&f| f <= bound) {
            let factorizer = Factorizer::with_degree(p, d / 2)?;
            let per_g = exec.map_range(0..field as usize, |i| -> Result<Option<Modulus>> {
                let g = Poly::monic_from_index(p, d, i as u64);
                if g.constant_term() == 0 {
                    return Ok(None);
                }
                let ord = order_from_factorization(&factorizer.factor_shared(&g)?)?;
                Ok((field.saturating_mul(ord) <= bound).then_some(Modulus { g, order_t: ord }))
            });
            let mut table = Vec::new();
            for m in per_g {
                if let Some(m) = m? {
                    table.push(m);
                }
            }
            tables.push(table);
            d += 1;
        }
        Ok(QuotientSearch { p, bound, tables })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Candidates `(g, k)` of order exactly `n`, in canonical order.
    pub fn candidates_of_order(&self, n: u64) -> impl Iterator<Item = (&Modulus, u64)> + '_ {
        let base = self.p.get() as u64;
        self.tables.iter().enumerate().flat_map(move |(d, table)| {
            let field = base.checked_pow(d as u32).unwrap_or(u64::MAX);
            let k = if n.is_multiple_of(field) { n / field } else { 0 };
            table
                .iter()
                .filter(move |m| k > 0 && k % m.order_t == 0)
                .map(move |m| (m, k))
        })
    }

    /// Visits every quotient with order `<= max_order` (clamped to the
    /// table bound) in canonical order.
    pub fn visit<F>(&self, max_order: u64, mut f: F)
    where
        F: FnMut(u64, &Modulus, u64) -> ControlFlow<()>,
    {
        for n in 1..=max_order.min(self.bound) {
            for (m, k) in self.candidates_of_order(n) {
                if f(n, m, k).is_break() {
                    return;
                }
            }
        }
    }

    /// The first quotient (in canonical order) that detects `x`, if any has
    /// order `<= max_order`.
    pub fn first_detector(
        &self,
        x: &LampElement,
        max_order: u64,
        exec: Exec,
    ) -> Result<Option<CongruenceQuotient>> {
        if x.is_identity() {
            return Err(Error::IdentityElement);
        }
        for n in 1..=max_order.min(self.bound) {
            let level: Vec<(&Modulus, u64)> = self.candidates_of_order(n).collect();
            let hit = match exec {
                // small levels are not worth a fork
                Exec::Parallel if level.len() >= 64 => {
                    exec.position_first(&level, |(m, k)| detects_parts(&m.g, *k, x))
                }
                _ => level.iter().position(|(m, k)| detects_parts(&m.g, *k, x)),
            };
            if let Some(i) = hit {
                let (m, k) = level[i];
                return CongruenceQuotient::from_parts(m.g.clone(), k, m.order_t).map(Some);
            }
        }
        Ok(None)
    }
}
