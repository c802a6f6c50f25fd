use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::Error;

/// A single term of a sequence.
///
/// Curling numbers are always at least 1, but general inputs may contain any
/// nonnegative value (the classic worked example starts with a 0), so the
/// type is a plain machine integer rather than something capped at one digit.
pub type Symbol = u32;

/// A finite sequence of symbols; the value passed between all operations in
/// this crate. May be empty as a value — operations that need a nonempty
/// sequence reject it with [`Error::EmptySequence`].
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq(Vec<Symbol>);

impl Seq {
    pub fn new(terms: Vec<Symbol>) -> Self {
        Seq(terms)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<Symbol> {
        self.0
    }

    pub fn push(&mut self, c: Symbol) {
        self.0.push(c);
    }

    /// True when every term is a 2 or a 3, the alphabet of the record search.
    pub fn is_two_three(&self) -> bool {
        self.0.iter().all(|&c| c == 2 || c == 3)
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &Seq) -> Seq {
        let mut terms = Vec::with_capacity(self.len() + other.len());
        terms.extend_from_slice(&self.0);
        terms.extend_from_slice(&other.0);
        Seq(terms)
    }

    /// Parse a comma-separated list of nonnegative integers, e.g. `0,1,2,2`.
    pub fn parse_csv(text: &str) -> Result<Seq, Error> {
        let terms = text
            .split(',')
            .map(|item| {
                item.trim()
                    .parse::<Symbol>()
                    .map_err(|_| Error::Parse(format!("bad term {item:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if terms.is_empty() {
            return Err(Error::Parse("empty sequence".into()));
        }
        Ok(Seq(terms))
    }

    /// Render as an unseparated digit string, e.g. `2323`.
    /// Only defined when every term is a single digit.
    pub fn digit_string(&self) -> Option<String> {
        if self.0.iter().any(|&c| c > 9) {
            return None;
        }
        Some(self.0.iter().map(|&c| char::from(b'0' + c as u8)).collect())
    }
}

impl Deref for Seq {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Seq {
    fn from(terms: Vec<Symbol>) -> Self {
        Seq(terms)
    }
}

impl From<&[Symbol]> for Seq {
    fn from(terms: &[Symbol]) -> Self {
        Seq(terms.to_vec())
    }
}

impl FromStr for Seq {
    type Err = Error;

    /// Parse an unseparated digit string, e.g. `2323`. Each character is one
    /// single-digit term; use [`Seq::parse_csv`] for terms of 10 or more.
    fn from_str(text: &str) -> Result<Self, Error> {
        if text.is_empty() {
            return Err(Error::Parse("empty sequence".into()));
        }
        let terms = text
            .chars()
            .map(|ch| {
                ch.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad digit {ch:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Seq(terms))
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

// Debug tracks Display so test failures print the sequence itself.
impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_digits() {
        let s: Seq = "2323".parse().unwrap();
        assert_eq!(s.terms(), &[2, 3, 2, 3]);
        assert_eq!(s.to_string(), "2 3 2 3");
        assert_eq!(s.digit_string().as_deref(), Some("2323"));
    }

    #[test]
    fn parse_csv_allows_zero_and_wide_terms() {
        let s = Seq::parse_csv("0,1,2,2,12").unwrap();
        assert_eq!(s.terms(), &[0, 1, 2, 2, 12]);
        assert_eq!(s.digit_string(), None);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<Seq>().is_err());
        assert!("23a".parse::<Seq>().is_err());
        assert!(Seq::parse_csv("").is_err());
        assert!(Seq::parse_csv("2,,3").is_err());
        assert!(Seq::parse_csv("2,-1").is_err());
    }

    #[test]
    fn two_three_alphabet() {
        assert!("2332".parse::<Seq>().unwrap().is_two_three());
        assert!(!"231".parse::<Seq>().unwrap().is_two_three());
    }

    #[test]
    fn concat() {
        let a: Seq = "22".parse().unwrap();
        let b: Seq = "33".parse().unwrap();
        assert_eq!(a.concat(&b).terms(), &[2, 2, 3, 3]);
    }
}
