use std::collections::HashMap;
use std::fmt;

use super::element::LampElement;
use crate::error::{Error, Result};
use crate::polyring::PrimeModulus;

/// Default limit on the number of elements a ball may hold.
pub const DEFAULT_BALL_CAP: usize = 5_000_000;

/// One letter of the generating alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    S0,
    S0Inv,
    T,
    TInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::S0, Letter::S0Inv, Letter::T, Letter::TInv];

    pub fn element(self, p: PrimeModulus) -> LampElement {
        match self {
            Letter::S0 => LampElement::s0(p),
            Letter::S0Inv => LampElement::s0(p).invert(),
            Letter::T => LampElement::t(p),
            Letter::TInv => LampElement::t(p).invert(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::S0 => "s0",
            Letter::S0Inv => "s0^-1",
            Letter::T => "t",
            Letter::TInv => "t^-1",
        })
    }
}

/// A word in the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn evaluate(&self, p: PrimeModulus) -> LampElement {
        self.0
            .iter()
            .fold(LampElement::identity(p), |acc, l| acc.compose(&l.element(p)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct BallEntry {
    pub element: LampElement,
    pub distance: u32,
    parent: Option<(usize, Letter)>,
}

/// The metric ball `B(n)` in discovery order, with one geodesic per element.
#[derive(Debug, Clone)]
pub struct BallIndex {
    modulus: PrimeModulus,
    radius: u32,
    entries: Vec<BallEntry>,
    index: HashMap<LampElement, usize>,
}

impl BallIndex {
    /// Breadth-first search from the identity, right-multiplying by
    /// `s0, s0^-1, t, t^-1` in that order. Generators that coincide (`s0` and
    /// `s0^-1` at p = 2) are only expanded once.
    pub fn enumerate(p: PrimeModulus, radius: u32, cap: usize) -> Result<Self> {
        let mut letters: Vec<(Letter, LampElement)> = Vec::new();
        for l in Letter::ALL {
            let g = l.element(p);
            if !letters.iter().any(|(_, h)| *h == g) {
                letters.push((l, g));
            }
        }
        let id = LampElement::identity(p);
        let mut entries = vec![BallEntry {
            element: id.clone(),
            distance: 0,
            parent: None,
        }];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut frontier = 0..1;
        for d in 1..=radius {
            let start = entries.len();
            for i in frontier.clone() {
                for (l, g) in &letters {
                    let next = entries[i].element.compose(g);
                    if index.contains_key(&next) {
                        continue;
                    }
                    if entries.len() >= cap {
                        return Err(Error::cap(format!("ball of radius {radius}"), cap as u64));
                    }
                    index.insert(next.clone(), entries.len());
                    entries.push(BallEntry {
                        element: next,
                        distance: d,
                        parent: Some((i, *l)),
                    });
                }
            }
            frontier = start..entries.len();
        }
        Ok(BallIndex {
            modulus: p,
            radius,
            entries,
            index,
        })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BallEntry] {
        &self.entries
    }

    pub fn distance(&self, x: &LampElement) -> Option<u32> {
        self.index.get(x).map(|&i| self.entries[i].distance)
    }

    /// Number of elements at distance `<= n`.
    pub fn size_within(&self, n: u32) -> usize {
        self.entries.partition_point(|e| e.distance <= n)
    }

    /// The stored geodesic for entry `i`.
    pub fn witness_word(&self, mut i: usize) -> Word {
        let mut letters = Vec::new();
        while let Some((parent, l)) = self.entries[i].parent {
            letters.push(l);
            i = parent;
        }
        letters.reverse();
        Word(letters)
    }

    /// CSV rows `element,distance,word`.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["element", "distance", "word"])?;
        for (i, e) in self.entries.iter().enumerate() {
            w.write_record([
                e.element.to_string(),
                e.distance.to_string(),
                self.witness_word(i).to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn small_balls() {
        assert_eq!(BallIndex::enumerate(pm(2), 0, 10).unwrap().len(), 1);
        let b = BallIndex::enumerate(pm(2), 1, 10).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(BallIndex::enumerate(pm(3), 1, 10).unwrap().len(), 5);
    }

    #[test]
    fn words_realise_distances() {
        let p = pm(3);
        let b = BallIndex::enumerate(p, 5, 1 << 20).unwrap();
        for (i, e) in b.entries().iter().enumerate() {
            let w = b.witness_word(i);
            assert_eq!(w.len() as u32, e.distance);
            assert_eq!(w.evaluate(p), e.element);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            BallIndex::enumerate(pm(2), 6, 20),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn csv_export() {
        let b = BallIndex::enumerate(pm(2), 1, 10).unwrap();
        let mut buf = Vec::new();
        b.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "element,distance,word");
        assert_eq!(lines[1], "\"(0, 0)\",0,e");
        assert_eq!(lines.len(), 5);
    }
}
