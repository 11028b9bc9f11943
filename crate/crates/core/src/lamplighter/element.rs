use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::polyring::text::parse_poly_prefix;
use crate::polyring::{format_laurent, LaurentPoly, PrimeModulus};

/// An element `(p(t), k)` of `Z/p wr Z`: lamp configuration `p(t)` and head
/// position `k`. Multiplication is `(a, n1)(b, n2) = (a + t^n1 b, n1 + n2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LampElement {
    lamp: LaurentPoly,
    shift: i64,
}

impl LampElement {
    pub fn new(lamp: LaurentPoly, shift: i64) -> Self {
        LampElement { lamp, shift }
    }

    pub fn identity(p: PrimeModulus) -> Self {
        Self::new(LaurentPoly::zero(p), 0)
    }

    /// The lamp generator `s0 = (1, 0)`.
    pub fn s0(p: PrimeModulus) -> Self {
        Self::new(LaurentPoly::one(p), 0)
    }

    /// The shift generator `t = (0, 1)`.
    pub fn t(p: PrimeModulus) -> Self {
        Self::new(LaurentPoly::zero(p), 1)
    }

    pub fn lamp(&self) -> &LaurentPoly {
        &self.lamp
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.lamp.modulus()
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.lamp.is_zero()
    }

    pub fn try_compose(&self, other: &Self) -> Result<Self> {
        let moved = other.lamp.shift(self.shift);
        Ok(Self::new(
            self.lamp.try_add(&moved)?,
            self.shift + other.shift,
        ))
    }

    /// Group product; panics on mismatched primes (see [`Self::try_compose`]).
    pub fn compose(&self, other: &Self) -> Self {
        self.try_compose(other).expect("elements over different primes")
    }

    /// `(f, k)^-1 = (-t^-k f, -k)`.
    pub fn invert(&self) -> Self {
        Self::new(-&self.lamp.shift(-self.shift), -self.shift)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.invert() } else { self.clone() };
        let mut acc = Self::identity(self.modulus());
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    /// Parses `"(<laurent-poly>, <int>)"`.
    pub fn parse(text: &str, p: PrimeModulus) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = skip_ws(bytes, 0);
        if bytes.get(pos) != Some(&b'(') {
            return Err(Error::Parse {
                pos,
                msg: "expected '('".into(),
            });
        }
        let (lamp, after) = parse_poly_prefix(text, pos + 1, p, |c| c == b',')?;
        pos = skip_ws(bytes, after);
        if bytes.get(pos) != Some(&b',') {
            return Err(Error::Parse {
                pos,
                msg: "expected ','".into(),
            });
        }
        pos = skip_ws(bytes, pos + 1);
        let start = pos;
        if matches!(bytes.get(pos), Some(b'-' | b'+')) {
            pos += 1;
        }
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        let shift: i64 = text[start..pos].parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "expected integer shift".into(),
        })?;
        pos = skip_ws(bytes, pos);
        if bytes.get(pos) != Some(&b')') {
            return Err(Error::Parse {
                pos,
                msg: "expected ')'".into(),
            });
        }
        pos = skip_ws(bytes, pos + 1);
        if pos != bytes.len() {
            return Err(Error::Parse {
                pos,
                msg: "trailing input".into(),
            });
        }
        Ok(Self::new(lamp, shift))
    }

    /// Uniform lamp coefficients on `[-support, support]` and shift in
    /// `[-shift_range, shift_range]`.
    pub fn random<R: Rng + ?Sized>(
        rng: &mut R,
        p: PrimeModulus,
        support: i64,
        shift_range: i64,
    ) -> Self {
        let terms: Vec<(i64, i64)> = (-support..=support)
            .map(|e| (e, rng.gen_range(0..p.get()) as i64))
            .collect();
        Self::new(
            LaurentPoly::from_terms(p, &terms),
            rng.gen_range(-shift_range..=shift_range),
        )
    }
}

fn skip_ws(bytes: &[u8], mut pos: usize) -> usize {
    while bytes.get(pos).is_some_and(u8::is_ascii_whitespace) {
        pos += 1;
    }
    pos
}

impl fmt::Display for LampElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_laurent(&self.lamp), self.shift)
    }
}
