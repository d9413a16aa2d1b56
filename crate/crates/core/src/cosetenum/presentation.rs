use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::grp::{Word, WordParseError};

/// Upper bound on the summed expanded length of all relators.
pub const MAX_PRESENTATION_LENGTH: u64 = 1 << 22;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}: {source}")]
    Word {
        line: usize,
        #[source]
        source: WordParseError,
    },
    #[error("presentation has no nontrivial relators")]
    Empty,
    #[error("presentation too long: expanded length exceeds {MAX_PRESENTATION_LENGTH}")]
    TooLong,
}

/// A presentation `⟨x, y | relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    relators: Vec<Word>,
}

impl Presentation {
    /// Drops identity relators; at least one nontrivial relator is required.
    pub fn new(relators: Vec<Word>) -> Result<Self, PresentationError> {
        let relators: Vec<Word> = relators.into_iter().filter(|w| !w.is_identity()).collect();
        if relators.is_empty() {
            return Err(PresentationError::Empty);
        }
        let total: u64 = relators.iter().map(Word::expanded_len).fold(0, u64::saturating_add);
        if total > MAX_PRESENTATION_LENGTH {
            return Err(PresentationError::TooLong);
        }
        Ok(Self { relators })
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn without(&self, index: usize) -> Result<Self, PresentationError> {
        let mut rels = self.relators.clone();
        rels.remove(index);
        Self::new(rels)
    }
}

impl FromStr for Presentation {
    type Err = PresentationError;

    /// One relator per line; `#` starts a comment; blank lines are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rels = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let w: Word = body.parse().map_err(|source| PresentationError::Word {
                line: i + 1,
                source,
            })?;
            rels.push(w);
        }
        Self::new(rels)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.relators {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let p: Presentation = "# S3\nx^2\n\ny^3   # rotation\nx y x y\n".parse().unwrap();
        assert_eq!(p.relators().len(), 3);
        let again: Presentation = p.to_string().parse().unwrap();
        assert_eq!(again, p);
    }

    #[test]
    fn errors() {
        assert_eq!("".parse::<Presentation>(), Err(PresentationError::Empty));
        assert_eq!("1\n# nothing".parse::<Presentation>(), Err(PresentationError::Empty));
        assert!(matches!(
            "x\nq^2".parse::<Presentation>(),
            Err(PresentationError::Word { line: 2, .. })
        ));
        let long = "x^1000000\n".repeat(5);
        assert_eq!(long.parse::<Presentation>(), Err(PresentationError::TooLong));
    }
}
