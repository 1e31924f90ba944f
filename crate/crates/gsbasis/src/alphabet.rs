//! Generator alphabets and words of the free monoid.
//!
//! Rank is ascending: `names[0]` is the smallest letter. The empty word is
//! written `1` in the text syntax, so `1` is reserved and cannot name a
//! generator.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    rank: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Invalid("alphabet must be nonempty".into()));
        }
        let mut rank = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n == "1" || n.chars().any(char::is_whitespace) {
                return Err(Error::Invalid(format!("bad generator name {n:?}")));
            }
            if n.contains(['(', ')', '+', '*', '^']) || (n != "-" && n.starts_with('-')) {
                return Err(Error::Invalid(format!("bad generator name {n:?}")));
            }
            if rank.insert(n.clone(), i).is_some() {
                return Err(Error::Invalid(format!("duplicate generator {n:?}")));
            }
        }
        Ok(Arc::new(Alphabet { names, rank }))
    }

    /// Standard alphabet x1 < x2 < ... < xn.
    pub fn standard(n: usize) -> Arc<Self> {
        Alphabet::new((1..=n).map(|i| format!("x{i}"))).expect("standard names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank_of(&self, name: &str) -> Option<usize> {
        self.rank.get(name).copied()
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.letters().iter().find(|&&l| l >= self.len()) {
            None => Ok(()),
            Some(l) => Err(Error::AlphabetMismatch(format!(
                "letter index {l} out of range for a {}-letter alphabet",
                self.len()
            ))),
        }
    }

    /// Parses the whitespace-separated word syntax; `1` is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            match self.rank_of(tok) {
                Some(r) => letters.push(r),
                None => return Err(Error::Parse(format!("unknown generator {tok:?}"))),
            }
        }
        Ok(Word::new(letters))
    }

    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.letters()
            .iter()
            .map(|&l| self.name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A word of the free monoid, stored as ranks into some alphabet.
///
/// The derived `Ord` is only a canonical storage order; monomial comparisons
/// go through [`crate::order::MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn single(letter: usize) -> Self {
        Word { letters: vec![letter] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn letter(&self, i: usize) -> usize {
        self.letters[i]
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word { letters: self.letters[start..end].to_vec() }
    }

    /// Leftmost occurrence of `pat`, naive scan.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.is_empty() {
            return Some(0);
        }
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&i| self.letters[i..i + pat.len()] == pat.letters[..])
    }

    pub fn occurrences(&self, pat: &Word) -> Vec<usize> {
        if pat.is_empty() || pat.len() > self.len() {
            return if pat.is_empty() { (0..=self.len()).collect() } else { Vec::new() };
        }
        (0..=self.len() - pat.len())
            .filter(|&i| self.letters[i..i + pat.len()] == pat.letters[..])
            .collect()
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    pub fn rotation(&self, k: usize) -> Word {
        let n = self.len();
        let mut letters = Vec::with_capacity(n);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }
}

impl fmt::Display for Word {
    /// Alphabet-free fallback rendering; prefer [`Alphabet::format_word`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| format!("x{}", l + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let a = Alphabet::standard(3);
        let w = a.parse_word("x2 x1 x1").unwrap();
        assert_eq!(w.letters(), &[1, 0, 0]);
        assert_eq!(a.format_word(&w), "x2 x1 x1");
        assert_eq!(a.parse_word("1").unwrap(), Word::empty());
        assert_eq!(a.format_word(&Word::empty()), "1");
    }

    #[test]
    fn rejects_unknown_generators_and_bad_names() {
        let a = Alphabet::standard(2);
        assert!(a.parse_word("x3").is_err());
        assert!(Alphabet::new(["1"]).is_err());
        assert!(Alphabet::new(["x1", "x1"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
    }

    #[test]
    fn find_is_leftmost() {
        let w = Word::new(vec![1, 0, 1, 0]);
        assert_eq!(w.find(&Word::new(vec![1, 0])), Some(0));
        assert_eq!(w.occurrences(&Word::new(vec![1, 0])), vec![0, 2]);
        assert_eq!(w.find(&Word::new(vec![0, 0])), None);
    }

    #[test]
    fn check_word_detects_foreign_letters() {
        let a = Alphabet::standard(2);
        assert!(a.check_word(&Word::new(vec![0, 1])).is_ok());
        assert!(a.check_word(&Word::new(vec![2])).is_err());
    }
}
