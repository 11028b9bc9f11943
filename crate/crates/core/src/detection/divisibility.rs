use super::certificate::{upper_bound_certificate, DetectionCertificate};
use super::search::QuotientSearch;
use crate::error::{Error, Result};
use crate::lamplighter::LampElement;
use crate::par::Exec;

/// Default cap on the quotient order explored by the divisibility search.
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

/// The minimal order of a congruence quotient detecting an element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityResult {
    pub element: LampElement,
    pub value: u64,
    pub certificate: DetectionCertificate,
    /// Largest quotient order the search was allowed to visit.
    pub search_bound: u64,
    /// Every quotient of order below `value` was checked and fails to detect.
    pub exhaustive: bool,
}

/// `D(x)` over congruence quotients, by ascending order search.
///
/// The search never needs to go past the order of the upper-bound
/// certificate, which is used as the table bound when it is below `cap`.
pub fn divisibility_congruence(x: &LampElement, cap: u64, exec: Exec) -> Result<DivisibilityResult> {
    if x.is_identity() {
        return Err(Error::IdentityElement);
    }
    let ceiling = upper_bound_certificate(x)?.certificate.order;
    let bound = ceiling.min(cap);
    let search = QuotientSearch::new(x.modulus(), bound, exec)?;
    divisibility_with(&search, x, exec)
}

/// As [`divisibility_congruence`], reusing prebuilt tables. Fails with
/// [`Error::CapExceeded`] when no quotient within the table bound detects `x`.
pub fn divisibility_with(search: &QuotientSearch, x: &LampElement, exec: Exec) -> Result<DivisibilityResult> {
    match search.first_detector(x, search.bound(), exec)? {
        Some(quotient) => {
            let certificate = DetectionCertificate::new(quotient, x)?;
            Ok(DivisibilityResult {
                element: x.clone(),
                value: certificate.order,
                certificate,
                search_bound: search.bound(),
                exhaustive: true,
            })
        }
        None => Err(Error::CapExceeded {
            what: format!("divisibility search for {x}"),
            cap: search.bound(),
            partial: Some(search.bound() + 1),
        }),
    }
}
