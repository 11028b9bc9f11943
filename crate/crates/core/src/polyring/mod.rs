//! Exact arithmetic in F_p, F_p[t] and F_p[t, 1/t].

pub mod factor;
pub mod field;
pub mod laurent;
pub mod order;
pub mod poly;
pub mod text;

pub use factor::{
    count_irreducibles, enumerate_irreducibles, enumerate_irreducibles_with, factor,
    is_irreducible, monic_polys, FactoredPoly, Factorizer,
};
pub use field::PrimeModulus;
pub use laurent::LaurentPoly;
pub use order::{multiplicative_order_t, multiplicative_order_t_brute, order_t_at_most};
pub use poly::Poly;
pub use text::{format_factored, format_laurent, format_poly, parse_ordinary_poly, parse_poly};
