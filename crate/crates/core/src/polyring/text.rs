//! Text form of (Laurent) polynomials.
//!
//! Grammar: `term := [coeff]['t'['^' signed-int]]`, terms joined by `+`/`-`,
//! whitespace ignored. Canonical output lists terms by ascending exponent,
//! `+`-separated, with coefficients in `[1, p)`; the zero polynomial is `0`.

use std::fmt::Write;

use super::factor::FactoredPoly;
use super::field::PrimeModulus;
use super::laurent::LaurentPoly;
use super::poly::Poly;
use crate::error::{Error, Result};

pub fn format_laurent(x: &LaurentPoly) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in x.terms().enumerate() {
        if i > 0 {
            out.push('+');
        }
        match (e, c) {
            (0, c) => write!(out, "{c}").unwrap(),
            (e, c) => {
                if c != 1 {
                    write!(out, "{c}").unwrap();
                }
                out.push('t');
                if e != 1 {
                    write!(out, "^{e}").unwrap();
                }
            }
        }
    }
    out
}

pub fn format_poly(f: &Poly) -> String {
    format_laurent(&LaurentPoly::from_poly(f.clone()))
}

/// `unit * f1^e1 * f2^e2`, parenthesising multi-term factors.
pub fn format_factored(fp: &FactoredPoly) -> String {
    let mut parts = Vec::new();
    if fp.unit() != 1 || fp.factors().is_empty() {
        parts.push(fp.unit().to_string());
    }
    for (f, e) in fp.factors() {
        let body = format_poly(f);
        let mut s = if f.coeffs().iter().filter(|&&c| c != 0).count() > 1 {
            format!("({body})")
        } else {
            body
        };
        if *e > 1 {
            write!(s, "^{e}").unwrap();
        }
        parts.push(s);
    }
    parts.join(" * ")
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    /// Digits reduced mod p as they are read, so long literals cannot overflow.
    fn residue(&mut self, p: PrimeModulus) -> Option<u32> {
        let mut seen = false;
        let mut acc = 0u32;
        while let Some(c) = self.peek().filter(u8::is_ascii_digit) {
            acc = p.add(p.mul(acc, 10), (c - b'0') as u32);
            self.pos += 1;
            seen = true;
        }
        seen.then_some(acc)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let mut neg = false;
        if let Some(c @ (b'-' | b'+')) = self.peek() {
            neg = c == b'-';
            self.pos += 1;
        }
        let start = self.pos;
        let mut acc: i64 = 0;
        while let Some(c) = self.peek().filter(u8::is_ascii_digit) {
            acc = acc
                .checked_mul(10)
                .and_then(|a| a.checked_add((c - b'0') as i64))
                .ok_or_else(|| self.err("exponent out of range"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        Ok(if neg { -acc } else { acc })
    }
}

/// Parses a Laurent polynomial over F_p.
pub fn parse_poly(text: &str, p: PrimeModulus) -> Result<LaurentPoly> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    parse_laurent_at(&mut cur, p, |_| false).map(|(x, _)| x)
}

/// Parses a Laurent polynomial that may be followed by one of the bytes
/// accepted by `stop`; returns the value and the byte offset where parsing
/// stopped.
pub(crate) fn parse_poly_prefix(
    text: &str,
    offset: usize,
    p: PrimeModulus,
    stop: impl Fn(u8) -> bool,
) -> Result<(LaurentPoly, usize)> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: offset,
    };
    parse_laurent_at(&mut cur, p, stop)
}

fn parse_laurent_at(
    cur: &mut Cursor<'_>,
    p: PrimeModulus,
    stop: impl Fn(u8) -> bool,
) -> Result<(LaurentPoly, usize)> {
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let mut sign = 1i64;
    if let Some(c @ (b'-' | b'+')) = cur.peek() {
        sign = if c == b'-' { -1 } else { 1 };
        cur.pos += 1;
    }
    loop {
        let coeff = cur.residue(p);
        let mut exp = 0i64;
        let has_t = cur.peek() == Some(b't');
        if has_t {
            cur.pos += 1;
            exp = 1;
            if cur.peek() == Some(b'^') {
                cur.pos += 1;
                exp = cur.signed_int()?;
            }
        }
        if coeff.is_none() && !has_t {
            return Err(match cur.peek() {
                Some(c) => cur.err(format!("expected term, found '{}'", c as char)),
                None => cur.err("expected term, found end of input"),
            });
        }
        let c = coeff.unwrap_or(1) as i64 * sign;
        terms.push((exp, c));
        match cur.peek() {
            None => break,
            Some(b'+') => sign = 1,
            Some(b'-') => sign = -1,
            Some(c) if stop(c) => break,
            Some(c) => return Err(cur.err(format!("unexpected '{}'", c as char))),
        }
        cur.pos += 1;
    }
    Ok((LaurentPoly::from_terms(p, &terms), cur.pos))
}

/// Parses text that must denote an ordinary polynomial (no negative powers).
pub fn parse_ordinary_poly(text: &str, p: PrimeModulus) -> Result<Poly> {
    parse_poly(text, p)?.to_poly().ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "negative exponent in an ordinary polynomial".into(),
    })
}
