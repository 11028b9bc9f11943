//! Word length with respect to `{s0, s0^-1, t, t^-1}`.

use super::element::LampElement;

/// Exact Cayley-graph distance from the identity.
///
/// Each lit lamp with value `a` costs `min(a, p - a)` lamp moves. The head
/// starts at 0, must visit every lit position and finish at `k`; with `l`,
/// `r` the extremes of the support together with 0 and `k`, the cheaper of
/// "left end first" and "right end first" is
/// `min(-l + (r - l) + (r - k), r + (r - l) + (k - l))`.
pub fn word_length_exact(x: &LampElement) -> u64 {
    let p = x.modulus();
    let k = x.shift();
    let mut lamp_cost = 0u64;
    let (mut l, mut r) = (0i64.min(k), 0i64.max(k));
    for (e, c) in x.lamp().terms() {
        lamp_cost += p.symmetric_weight(c);
        l = l.min(e);
        r = r.max(e);
    }
    let left_first = -l + (r - l) + (r - k);
    let right_first = r + (r - l) + (k - l);
    lamp_cost + left_first.min(right_first) as u64
}

/// The closed-form upper bound `max{2|q| + |k| + (p+1)a, (p+3)a + |k|}` for
/// `(f(t)/t^q, k)` with `a = deg f` and `f(0) != 0`, evaluated literally.
/// A zero lamp gives `|k|`.
pub fn bound_formula(x: &LampElement) -> u64 {
    let k = x.shift().unsigned_abs();
    if x.lamp().is_zero() {
        return k;
    }
    let p = x.modulus().get() as u64;
    let q = x.lamp().valuation().unsigned_abs();
    let a = x.lamp().unit_part().degree_or_zero() as u64;
    (2 * q + k + (p + 1) * a).max((p + 3) * a + k)
}

/// The closed-form bound, guarded for a constant lamp at the origin
/// (`a = q = 0`): there the expression drops the lamp's own cost, so the
/// result is raised to at least that cost.
pub fn word_length_bound(x: &LampElement) -> u64 {
    let raw = bound_formula(x);
    match BoundEdgeCase::classify(x) {
        Some(BoundEdgeCase::ConstantAtOrigin) => {
            let c = x.lamp().unit_part().constant_term();
            raw.max(x.modulus().symmetric_weight(c))
        }
        _ => raw,
    }
}

/// Shapes of element on which the closed-form bound is degenerate or fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundEdgeCase {
    /// Lamp is a nonzero constant `c` at position 0 (`a = q = 0`).
    ConstantAtOrigin,
    /// Lamp is a single term `c t^v` with `v != 0` (`a = 0`, `q != 0`).
    SingleLampOffOrigin,
    /// At least two lamps, all strictly right of the origin (`q < 0`).
    LampsRightOfOrigin,
}

impl BoundEdgeCase {
    pub fn classify(x: &LampElement) -> Option<Self> {
        let lamp = x.lamp();
        if lamp.is_zero() {
            return None;
        }
        match (lamp.unit_part().degree(), lamp.valuation()) {
            (Some(0), 0) => Some(BoundEdgeCase::ConstantAtOrigin),
            (Some(0), _) => Some(BoundEdgeCase::SingleLampOffOrigin),
            (_, v) if v > 0 => Some(BoundEdgeCase::LampsRightOfOrigin),
            _ => None,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            BoundEdgeCase::ConstantAtOrigin => "constant lamp at the origin (a = q = 0)",
            BoundEdgeCase::SingleLampOffOrigin => "single lamp off the origin (a = 0, q != 0)",
            BoundEdgeCase::LampsRightOfOrigin => "lamps strictly right of the origin (q < 0)",
        }
    }
}

/// A point where the closed-form bound falls below the exact length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundViolation {
    pub element: LampElement,
    pub bound: u64,
    pub exact: u64,
    pub class: Option<BoundEdgeCase>,
}

/// `Some` when [`word_length_bound`] is below the exact length.
pub fn check_length_bound(x: &LampElement) -> Option<BoundViolation> {
    let bound = word_length_bound(x);
    let exact = word_length_exact(x);
    (bound < exact).then(|| BoundViolation {
        element: x.clone(),
        bound,
        exact,
        class: BoundEdgeCase::classify(x),
    })
}
