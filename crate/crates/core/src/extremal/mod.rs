//! LCMs of polynomial families, the hard witness elements, and the
//! almost-periodic polynomial explorer.

pub mod lcm;
pub mod periodic;
pub mod witness;

pub use lcm::{lcm_brute, lcm_degree, lcm_p, prod_irreducibles_dividing, LcmDegree, LcmProfile, LCM_FACTOR_CAP};
pub use periodic::{
    almost_periodic_by_divisors, almost_periodic_by_filter, conjecture_table, enumerate_almost_periodic,
    minimal_period, running_min, AlmostPeriodicProfile, DEFAULT_K_CAP,
};
pub use witness::{witness, witness_audit, WitnessAudit, WitnessElement};
