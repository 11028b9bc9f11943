//! Finite quotients of the lamplighter group and the divisibility function.

pub mod certificate;
pub mod divisibility;
pub mod full;
pub mod quotient;
pub mod rf;
pub mod search;

pub use certificate::{upper_bound_certificate, DetectionCertificate, UpperBoundCertificate, WitnessEntry};
pub use divisibility::{divisibility_congruence, divisibility_with, DivisibilityResult, DEFAULT_ORDER_CAP};
pub use full::{divisibility_full_oracle, FullOracleResult, NormalSubgroup};
pub use quotient::{make_quotient, CongruenceQuotient, QuotientElement};
pub use rf::{rf_from_ball, rf_growth_table, RFRecord, RfTable};
pub use search::{Modulus, QuotientSearch};
