//! Polynomials of the free associative algebra over the rationals.
//!
//! Coefficients are exact rationals kept in lowest terms with positive
//! denominator; `num::BigRational` already maintains that invariant.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigRational, One, Signed, Zero};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;

pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(n.into())
}

pub fn scalar_ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(p.into(), q.into())
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    BigRational::from_str(text.trim())
        .map_err(|e| Error::Parse(format!("bad rational {text:?}: {e}")))
}

pub fn format_scalar(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreePolynomial {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, Scalar>,
}

impl FreePolynomial {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        FreePolynomial { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alphabet: &Arc<Alphabet>, c: Scalar) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(Word::empty(), c);
        p
    }

    pub fn one(alphabet: &Arc<Alphabet>) -> Self {
        Self::constant(alphabet, Scalar::one())
    }

    pub fn from_word(alphabet: &Arc<Alphabet>, w: Word) -> Self {
        let mut p = Self::zero(alphabet);
        p.add_term(w, Scalar::one());
        p
    }

    pub fn from_terms(
        alphabet: &Arc<Alphabet>,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        for (w, c) in terms {
            alphabet.check_word(&w)?;
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_same_alphabet(&self, other: &FreePolynomial) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(
                "polynomials live over different alphabets".into(),
            ))
        }
    }

    pub fn add(&self, other: &FreePolynomial) -> Result<FreePolynomial> {
        self.check_same_alphabet(other)?;
        let mut p = self.clone();
        for (w, c) in other.terms() {
            p.add_term(w.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn sub(&self, other: &FreePolynomial) -> Result<FreePolynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FreePolynomial {
        let mut p = FreePolynomial::zero(&self.alphabet);
        for (w, c) in self.terms() {
            p.terms.insert(w.clone(), -c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Scalar) -> FreePolynomial {
        if c.is_zero() {
            return FreePolynomial::zero(&self.alphabet);
        }
        let mut p = FreePolynomial::zero(&self.alphabet);
        for (w, a) in self.terms() {
            p.terms.insert(w.clone(), a * c);
        }
        p
    }

    pub fn multiply(&self, other: &FreePolynomial) -> Result<FreePolynomial> {
        self.check_same_alphabet(other)?;
        let mut p = FreePolynomial::zero(&self.alphabet);
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                p.add_term(u.concat(v), a * b);
            }
        }
        Ok(p)
    }

    /// Multiplies by bare words on both sides: `a * self * b`.
    pub fn sandwich(&self, a: &Word, b: &Word) -> FreePolynomial {
        let mut p = FreePolynomial::zero(&self.alphabet);
        for (w, c) in self.terms() {
            p.add_term(a.concat(w).concat(b), c.clone());
        }
        p
    }

    pub fn lie_bracket(&self, other: &FreePolynomial) -> Result<FreePolynomial> {
        self.multiply(other)?.sub(&other.multiply(self)?)
    }

    pub fn leading(&self, order: &MonomialOrder) -> Result<(Word, Scalar)> {
        let mut best: Option<&Word> = None;
        for w in self.terms.keys() {
            best = Some(match best {
                None => w,
                Some(b) => order.max(b, w),
            });
        }
        match best {
            None => Err(Error::ZeroPolynomial),
            Some(w) => Ok((w.clone(), self.terms[w].clone())),
        }
    }

    pub fn leading_word(&self, order: &MonomialOrder) -> Result<Word> {
        Ok(self.leading(order)?.0)
    }

    pub fn is_monic(&self, order: &MonomialOrder) -> bool {
        matches!(self.leading(order), Ok((_, c)) if c.is_one())
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Result<FreePolynomial> {
        let (_, c) = self.leading(order)?;
        Ok(self.scale(&c.recip()))
    }

    /// Parses the `c1*w1 + c2*w2` text syntax; `0` is the zero polynomial,
    /// a bare rational is a constant term.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let mut p = FreePolynomial::zero(alphabet);
        for (sign, term) in split_signed_terms(text)? {
            let (c, w) = parse_term(alphabet, &term)?;
            p.add_term(w, if sign { -c } else { c });
        }
        Ok(p)
    }

    /// Terms sorted descending under `order`, rendered in the text syntax.
    pub fn format_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut words: Vec<&Word> = self.terms.keys().collect();
        words.sort_by(|a, b| order.compare(b, a));
        let mut out = String::new();
        for (i, w) in words.iter().enumerate() {
            let c = &self.terms[*w];
            let mag = c.abs();
            let body = if w.is_empty() {
                format_scalar(&mag)
            } else if mag.is_one() {
                self.alphabet.format_word(w)
            } else {
                format!("{}*{}", format_scalar(&mag), self.alphabet.format_word(w))
            };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for FreePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&MonomialOrder::DegLex))
    }
}

/// Splits at top-level `+`/`-` (ASCII or U+2212), returning (negated, term).
fn split_signed_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial text".into()));
    }
    if text == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    let mut depth = 0usize;
    let mut seen_any = false;
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse("unbalanced parentheses".into()))?;
                cur.push(ch);
            }
            '+' | '-' | '\u{2212}' if depth == 0 => {
                if cur.trim().is_empty() && !seen_any {
                    // leading sign
                    if ch != '+' {
                        sign = !sign;
                    }
                } else if cur.trim().is_empty() {
                    return Err(Error::Parse("empty term".into()));
                } else {
                    out.push((sign, cur.trim().to_string()));
                    cur.clear();
                    sign = ch != '+';
                }
                seen_any = true;
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    if cur.trim().is_empty() {
        return Err(Error::Parse("dangling sign".into()));
    }
    out.push((sign, cur.trim().to_string()));
    Ok(out)
}

fn parse_term(alphabet: &Arc<Alphabet>, term: &str) -> Result<(Scalar, Word)> {
    if let Some((c, w)) = term.split_once('*') {
        let coeff = parse_scalar(c)?;
        let word = alphabet.parse_word(w)?;
        return Ok((coeff, word));
    }
    if let Ok(c) = parse_scalar(term) {
        return Ok((c, Word::empty()));
    }
    Ok((Scalar::one(), alphabet.parse_word(term)?))
}

pub(crate) fn parse_signed_term_strings(text: &str) -> Result<Vec<(bool, String)>> {
    split_signed_terms(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> Arc<Alphabet> {
        Alphabet::standard(3)
    }

    #[test]
    fn parse_format_round_trip() {
        let a = setup();
        let p = FreePolynomial::parse(&a, "x2 x1 - x1 x2 - x1").unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.format_with(&MonomialOrder::DegLex), "x2 x1 - x1 x2 - x1");
        let q = FreePolynomial::parse(&a, "-3/4*x1 x2 + 2").unwrap();
        assert_eq!(q.format_with(&MonomialOrder::DegLex), "-3/4*x1 x2 + 2");
        let z = FreePolynomial::parse(&a, "0").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }

    #[test]
    fn parse_accepts_unicode_minus_and_bare_constants() {
        let a = setup();
        let p = FreePolynomial::parse(&a, "x1 \u{2212} 1/2").unwrap();
        assert_eq!(p.coefficient(&Word::empty()), scalar_ratio(-1, 2));
        let c = FreePolynomial::parse(&a, "5/3").unwrap();
        assert_eq!(c.coefficient(&Word::empty()), scalar_ratio(5, 3));
    }

    #[test]
    fn multiply_concatenates_words() {
        let a = setup();
        let p = FreePolynomial::parse(&a, "x1 + x2").unwrap();
        let q = FreePolynomial::parse(&a, "x1 - x2").unwrap();
        let pq = p.multiply(&q).unwrap();
        assert_eq!(
            pq.format_with(&MonomialOrder::DegLex),
            "-x2 x2 + x2 x1 - x1 x2 + x1 x1"
        );
    }

    #[test]
    fn lie_bracket_expands_to_commutator() {
        let a = setup();
        let x1 = FreePolynomial::parse(&a, "x1").unwrap();
        let x2 = FreePolynomial::parse(&a, "x2").unwrap();
        let b = x2.lie_bracket(&x1).unwrap();
        assert_eq!(b.format_with(&MonomialOrder::DegLex), "x2 x1 - x1 x2");
        // [[x2,x1],x1] = x2 x1 x1 - 2 x1 x2 x1 + x1 x1 x2
        let bb = b.lie_bracket(&x1).unwrap();
        assert_eq!(
            bb.format_with(&MonomialOrder::DegLex),
            "x2 x1 x1 - 2*x1 x2 x1 + x1 x1 x2"
        );
    }

    #[test]
    fn leading_and_monic_under_deglex() {
        let a = setup();
        let p = FreePolynomial::parse(&a, "2*x2 x1 + x1 x2").unwrap();
        let (w, c) = p.leading(&MonomialOrder::DegLex).unwrap();
        assert_eq!(a.format_word(&w), "x2 x1");
        assert_eq!(c, scalar(2));
        let m = p.monic(&MonomialOrder::DegLex).unwrap();
        assert!(m.is_monic(&MonomialOrder::DegLex));
        assert_eq!(m.coefficient(&a.parse_word("x1 x2").unwrap()), scalar_ratio(1, 2));
        assert_eq!(
            FreePolynomial::zero(&a).leading(&MonomialOrder::DegLex),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let a2 = Alphabet::standard(2);
        let a3 = Alphabet::standard(3);
        let p = FreePolynomial::parse(&a2, "x1").unwrap();
        let q = FreePolynomial::parse(&a3, "x3").unwrap();
        assert!(matches!(p.add(&q), Err(Error::AlphabetMismatch(_))));
    }
}
