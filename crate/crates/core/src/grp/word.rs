use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One of the two generator symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    X,
    Y,
}

impl Gen {
    pub fn symbol(self) -> char {
        match self {
            Gen::X => 'x',
            Gen::Y => 'y',
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unknown generator `{0}` (expected x or y)")]
    UnknownGenerator(String),
    #[error("bad exponent in `{0}`")]
    BadExponent(String),
    #[error("word too long: expanded length exceeds {0}")]
    TooLong(u64),
}

/// Maximum expanded length of a parsed word.
pub const MAX_WORD_LENGTH: u64 = 1 << 20;

/// A word over `{x, y}` with integer exponents, kept freely reduced: no zero
/// exponents and no two adjacent letters on the same generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<(Gen, i64)>,
}

impl Word {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn gen(g: Gen, e: i64) -> Self {
        Self::from_letters([(g, e)])
    }

    pub fn x(e: i64) -> Self {
        Self::gen(Gen::X, e)
    }

    pub fn y(e: i64) -> Self {
        Self::gen(Gen::Y, e)
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (Gen, i64)>) -> Self {
        let mut w = Self::default();
        for (g, e) in letters {
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: Gen, e: i64) {
        if e == 0 {
            return;
        }
        match self.letters.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push((g, e)),
        }
    }

    pub fn letters(&self) -> &[(Gen, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of absolute exponents.
    pub fn expanded_len(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        Self::from_letters(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(Self::identity(), |acc, _| acc.concat(&base))
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.inverse().concat(&b.inverse()).concat(a).concat(b)
    }

    /// `a b a⁻¹`.
    pub fn conjugate_by(&self, a: &Self) -> Self {
        a.concat(self).concat(&a.inverse())
    }

    /// Substitutes words for the generators.
    pub fn substitute(&self, x: &Self, y: &Self) -> Self {
        self.letters.iter().fold(Self::identity(), |acc, &(g, e)| {
            let base = match g {
                Gen::X => x,
                Gen::Y => y,
            };
            acc.concat(&base.pow(e))
        })
    }

    /// Total exponent of a generator.
    pub fn exponent_sum(&self, g: Gen) -> i64 {
        self.letters
            .iter()
            .filter(|(h, _)| *h == g)
            .map(|(_, e)| e)
            .sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{}", g.symbol())?;
            } else {
                write!(f, "{}^{}", g.symbol(), e)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    /// Parses whitespace-separated letters such as `x^3 y^-2 x y`; `1`
    /// denotes the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut w = Word::identity();
        let mut total: u64 = 0;
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (sym, exp) = match tok.split_once('^') {
                Some((sym, exp)) => {
                    let e: i64 = exp
                        .parse()
                        .map_err(|_| WordParseError::BadExponent(tok.to_string()))?;
                    (sym, e)
                }
                None => (tok, 1),
            };
            let g = match sym {
                "x" => Gen::X,
                "y" => Gen::Y,
                "X" => {
                    w.push(Gen::X, -exp);
                    total = total.saturating_add(exp.unsigned_abs());
                    check_len(total)?;
                    continue;
                }
                "Y" => {
                    w.push(Gen::Y, -exp);
                    total = total.saturating_add(exp.unsigned_abs());
                    check_len(total)?;
                    continue;
                }
                other => return Err(WordParseError::UnknownGenerator(other.to_string())),
            };
            total = total.saturating_add(exp.unsigned_abs());
            check_len(total)?;
            w.push(g, exp);
        }
        Ok(w)
    }
}

fn check_len(total: u64) -> Result<(), WordParseError> {
    if total > MAX_WORD_LENGTH {
        Err(WordParseError::TooLong(MAX_WORD_LENGTH))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_merges_and_cancels() {
        let w = Word::from_letters([(Gen::X, 2), (Gen::X, -2), (Gen::Y, 3), (Gen::Y, 0)]);
        assert_eq!(w, Word::y(3));
        let w = Word::x(1).concat(&Word::y(2)).concat(&Word::y(-2)).concat(&Word::x(1));
        assert_eq!(w, Word::x(2));
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let w: Word = "x^3 y^-2 x y".parse().unwrap();
        assert_eq!(w.to_string(), "x^3 y^-2 x y");
        assert_eq!(w.expanded_len(), 7);
        assert_eq!("1".parse::<Word>().unwrap(), Word::identity());
        assert_eq!(Word::identity().to_string(), "1");
        assert_eq!("X y".parse::<Word>().unwrap(), Word::from_letters([(Gen::X, -1), (Gen::Y, 1)]));
        assert!("z".parse::<Word>().is_err());
        assert!("x^a".parse::<Word>().is_err());
        assert!("x^99999999999".parse::<Word>().is_err());
    }

    #[test]
    fn commutator_and_inverse() {
        let c = Word::commutator(&Word::x(1), &Word::y(1));
        assert_eq!(c.to_string(), "x^-1 y^-1 x y");
        assert!(c.concat(&c.inverse()).is_identity());
        assert_eq!(Word::x(1).concat(&Word::y(1)).pow(2).to_string(), "x y x y");
        assert_eq!(c.exponent_sum(Gen::X), 0);
    }

    #[test]
    fn substitution() {
        let w: Word = "x y^2".parse().unwrap();
        let s = w.substitute(&Word::y(1), &Word::x(-1));
        assert_eq!(s.to_string(), "y x^-2");
    }
}
