//! Associative and non-associative Lyndon-Shirshov words.
//!
//! An ALSW is a word strictly greater than all of its proper rotations
//! (DegLex, which is plain lex at equal length). Equivalently, linear time:
//! greater than every proper suffix in the ShirshovLex order. Every word
//! factors uniquely into a non-decreasing product of ALSWs, and every ALSW
//! carries canonical bracketings whose expansions lead with the word itself.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::order::{shirshov_lex, MonomialOrder};
use crate::poly::{format_scalar, parse_scalar, parse_signed_term_strings, FreePolynomial, Scalar};

/// Rotation definition, quadratic.
pub fn is_alsw(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let deglex = MonomialOrder::DegLex;
    for k in 1..w.len() {
        if deglex.compare(w, &w.rotation(k)) != Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Suffix characterization: w exceeds every proper suffix in ShirshovLex.
pub fn is_alsw_fast(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let letters = w.letters();
    for s in 1..letters.len() {
        if shirshov_lex(letters, &letters[s..]) != Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Unique factorization w = c1 c2 ... cn into ALSWs with c1 <= c2 <= ... <= cn
/// in ShirshovLex; the first factor is the longest ALSW prefix.
pub fn shirshov_factorize(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut out = Vec::new();
    let mut rest = w.clone();
    while !rest.is_empty() {
        let mut cut = 1;
        for end in (1..=rest.len()).rev() {
            if is_alsw_fast(&rest.subword(0, end))? {
                cut = end;
                break;
            }
        }
        out.push(rest.subword(0, cut));
        rest = rest.subword(cut, rest.len());
    }
    Ok(out)
}

/// One elimination step. With beta the minimal letter of w and
/// w = x_{r1} beta^{m1} ... x_{rt} beta^{mt}, the derived word has letters
/// (r_k, m_k) ordered by (r1, j1) > (r2, j2) iff r1 > r2, or r1 = r2 and
/// j2 > j1 (fewer trailing betas is greater).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminatedWord {
    pub beta: usize,
    pub factors: Vec<(usize, usize)>,
}

impl EliminatedWord {
    /// Re-indexes the derived letters (ascending) into a plain word, so the
    /// usual predicates apply on the derived alphabet.
    pub fn as_word(&self) -> (Word, Vec<(usize, usize)>) {
        let mut table: Vec<(usize, usize)> = self.factors.clone();
        table.sort_by(derived_letter_cmp);
        table.dedup();
        let word = Word::new(
            self.factors
                .iter()
                .map(|f| table.binary_search_by(|t| derived_letter_cmp(t, f)).expect("present"))
                .collect(),
        );
        (word, table)
    }
}

fn derived_letter_cmp(a: &(usize, usize), b: &(usize, usize)) -> Ordering {
    // (r, j) ascending: smaller base letter first; equal base, more betas first
    a.0.cmp(&b.0).then(b.1.cmp(&a.1))
}

pub fn eliminate(w: &Word) -> Result<EliminatedWord> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let beta = *w.letters().iter().min().expect("nonempty");
    if w.letter(0) == beta {
        // covers powers of a single letter and any word starting minimal
        return Err(Error::NoElimination);
    }
    let mut factors = Vec::new();
    let mut i = 0;
    while i < w.len() {
        let r = w.letter(i);
        let mut m = 0;
        let mut j = i + 1;
        while j < w.len() && w.letter(j) == beta {
            m += 1;
            j += 1;
        }
        factors.push((r, m));
        i = j;
    }
    Ok(EliminatedWord { beta, factors })
}

/// Binary bracketing trees over an alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieTree {
    Leaf(usize),
    Node(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn node(l: LieTree, r: LieTree) -> LieTree {
        LieTree::Node(Box::new(l), Box::new(r))
    }

    pub fn degree(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 1,
            LieTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn support(&self) -> Word {
        let mut letters = Vec::with_capacity(self.degree());
        self.collect_letters(&mut letters);
        Word::new(letters)
    }

    fn collect_letters(&self, out: &mut Vec<usize>) {
        match self {
            LieTree::Leaf(l) => out.push(*l),
            LieTree::Node(l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
        }
    }

    /// Commutator expansion as a free polynomial.
    pub fn expand(&self, alphabet: &Arc<Alphabet>) -> Result<FreePolynomial> {
        match self {
            LieTree::Leaf(l) => {
                let w = Word::single(*l);
                alphabet.check_word(&w)?;
                Ok(FreePolynomial::from_word(alphabet, w))
            }
            LieTree::Node(l, r) => l.expand(alphabet)?.lie_bracket(&r.expand(alphabet)?),
        }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        match self {
            LieTree::Leaf(l) => alphabet.name(*l).to_string(),
            LieTree::Node(l, r) => format!("({} {})", l.format(alphabet), r.format(alphabet)),
        }
    }

    /// Fully parenthesized syntax: `((x2 x1) x1)`. A bare name is a leaf.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<LieTree> {
        let mut tokens = tokenize_tree(text)?;
        tokens.reverse();
        let tree = parse_tree(alphabet, &mut tokens)?;
        if !tokens.is_empty() {
            return Err(Error::Parse("trailing input after bracket tree".into()));
        }
        Ok(tree)
    }
}

impl fmt::Display for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Leaf(l) => write!(f, "x{}", l + 1),
            LieTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

fn tokenize_tree(text: &str) -> Result<Vec<String>> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    for ch in text.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
                tokens.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    if tokens.is_empty() {
        return Err(Error::Parse("empty bracket tree".into()));
    }
    Ok(tokens)
}

fn parse_tree(alphabet: &Alphabet, tokens: &mut Vec<String>) -> Result<LieTree> {
    let tok = tokens.pop().ok_or_else(|| Error::Parse("unexpected end of tree".into()))?;
    if tok == "(" {
        let l = parse_tree(alphabet, tokens)?;
        let r = parse_tree(alphabet, tokens)?;
        match tokens.pop() {
            Some(t) if t == ")" => Ok(LieTree::node(l, r)),
            _ => Err(Error::Parse("expected ')' closing a bracket".into())),
        }
    } else if tok == ")" {
        Err(Error::Parse("unexpected ')'".into()))
    } else {
        match alphabet.rank_of(&tok) {
            Some(r) => Ok(LieTree::Leaf(r)),
            None => Err(Error::Parse(format!("unknown generator {tok:?}"))),
        }
    }
}

/// Down-to-up bracketing: repeatedly joins every occurrence of the currently
/// minimal subtree (ShirshovLex on supports) to its left neighbour, exactly
/// the elimination process lifted to trees.
pub fn standard_bracketing(w: &Word) -> Result<LieTree> {
    if !is_alsw_fast(w)? {
        return Err(Error::NotAlsw(w.to_string()));
    }
    let mut seq: Vec<LieTree> = w.letters().iter().map(|&l| LieTree::Leaf(l)).collect();
    while seq.len() > 1 {
        let min_support = seq
            .iter()
            .map(|t| t.support())
            .min_by(|a, b| shirshov_lex(a.letters(), b.letters()))
            .expect("nonempty");
        let mut next: Vec<LieTree> = Vec::with_capacity(seq.len());
        for t in seq {
            if t.support() == min_support {
                let prev = next.pop().ok_or(Error::NoElimination)?;
                next.push(LieTree::node(prev, t));
            } else {
                next.push(t);
            }
        }
        seq = next;
    }
    Ok(seq.pop().expect("nonempty"))
}

/// Up-to-down bracketing: split off the longest proper ALSW suffix and
/// recurse; agrees with the down-to-up construction.
pub fn cfl_bracketing(w: &Word) -> Result<LieTree> {
    if !is_alsw_fast(w)? {
        return Err(Error::NotAlsw(w.to_string()));
    }
    if w.len() == 1 {
        return Ok(LieTree::Leaf(w.letter(0)));
    }
    for s in 1..w.len() {
        if is_alsw_fast(&w.subword(s, w.len()))? {
            let u = w.subword(0, s);
            let v = w.subword(s, w.len());
            return Ok(LieTree::node(cfl_bracketing(&u)?, cfl_bracketing(&v)?));
        }
    }
    unreachable!("every single letter is an ALSW");
}

/// Non-associative LSW: ALSW support, NLSW subtrees, and in ((u1 u2) v) the
/// inner right subtree satisfies u2 <= v in ShirshovLex.
pub fn is_nlsw(t: &LieTree) -> bool {
    match t {
        LieTree::Leaf(_) => true,
        LieTree::Node(l, r) => {
            if !matches!(is_alsw_fast(&t.support()), Ok(true)) {
                return false;
            }
            if !is_nlsw(l) || !is_nlsw(r) {
                return false;
            }
            if let LieTree::Node(_, u2) = l.as_ref() {
                if shirshov_lex(u2.support().letters(), r.support().letters())
                    == Ordering::Greater
                {
                    return false;
                }
            }
            true
        }
    }
}

/// All ALSWs over the alphabet with degree in 1..=max_degree, DegLex order.
pub fn alsw_enumerate(alphabet: &Arc<Alphabet>, max_degree: usize) -> Vec<Word> {
    crate::gsb::words_up_to(alphabet.len(), max_degree)
        .into_iter()
        .filter(|w| !w.is_empty() && matches!(is_alsw_fast(w), Ok(true)))
        .collect()
}

/// The standard bracketings of all ALSWs up to max_degree, DegLex order.
pub fn nlsw_enumerate(alphabet: &Arc<Alphabet>, max_degree: usize) -> Result<Vec<LieTree>> {
    alsw_enumerate(alphabet, max_degree)
        .iter()
        .map(standard_bracketing)
        .collect()
}

/// Locates the highest subtree of `tree` whose leaf span starts at `pos` and
/// covers `pos..pos+len`; returns the path of left/right steps.
fn locate_subtree(tree: &LieTree, pos: usize, len: usize) -> Result<Vec<bool>> {
    let mut path = Vec::new();
    let mut cur = tree;
    let mut start = 0usize;
    loop {
        let deg = cur.degree();
        if start == pos {
            if deg < len {
                return Err(Error::SubwordMismatch);
            }
            return Ok(path);
        }
        match cur {
            LieTree::Leaf(_) => return Err(Error::SubwordMismatch),
            LieTree::Node(l, r) => {
                let dl = l.degree();
                if pos + len <= start + dl {
                    path.push(false);
                    cur = l;
                } else if pos >= start + dl {
                    path.push(true);
                    start += dl;
                    cur = r;
                } else {
                    // the target span straddles the children, which cannot
                    // happen for an ALSW occurrence inside an ALSW
                    return Err(Error::SubwordMismatch);
                }
            }
        }
    }
}

fn subtree_at<'a>(tree: &'a LieTree, path: &[bool]) -> &'a LieTree {
    let mut cur = tree;
    for &step in path {
        cur = match cur {
            LieTree::Node(l, r) => {
                if step {
                    r
                } else {
                    l
                }
            }
            LieTree::Leaf(_) => unreachable!("path into a leaf"),
        };
    }
    cur
}

fn replace_subtree(tree: &LieTree, path: &[bool], replacement: LieTree) -> LieTree {
    match path.split_first() {
        None => replacement,
        Some((&step, rest)) => match tree {
            LieTree::Node(l, r) => {
                if step {
                    LieTree::node(l.as_ref().clone(), replace_subtree(r, rest, replacement))
                } else {
                    LieTree::node(replace_subtree(l, rest, replacement), r.as_ref().clone())
                }
            }
            LieTree::Leaf(_) => unreachable!("path into a leaf"),
        },
    }
}

/// Special bracketing of w relative to its ALSW subword u at `pos`: inside
/// the standard bracketing [w] = [a [u c] d], the subtree [u c] is replaced by
/// the left-normed tower [[...[[u][c1]][c2]...][cn]] over the factorization
/// c = c1...cn. The expansion still leads with w.
pub fn special_bracketing(w: &Word, u: &Word, pos: usize) -> Result<LieTree> {
    if !is_alsw_fast(w)? {
        return Err(Error::NotAlsw(w.to_string()));
    }
    if !is_alsw_fast(u)? {
        return Err(Error::NotAlsw(u.to_string()));
    }
    if pos + u.len() > w.len() || w.subword(pos, pos + u.len()) != *u {
        return Err(Error::SubwordMismatch);
    }
    let tree = standard_bracketing(w)?;
    let path = locate_subtree(&tree, pos, u.len())?;
    let found = subtree_at(&tree, &path);
    let c = found.support().subword(u.len(), found.degree());
    let mut tower = standard_bracketing(u)?;
    if !c.is_empty() {
        for ci in shirshov_factorize(&c)? {
            tower = LieTree::node(tower, standard_bracketing(&ci)?);
        }
    }
    Ok(replace_subtree(&tree, &path, tower))
}

/// A Lie element in canonical coordinates: a rational combination of standard
/// bracketings of distinct ALSWs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Word, Scalar>,
}

impl LieElement {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        LieElement { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn from_terms(
        alphabet: &Arc<Alphabet>,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> Result<Self> {
        let mut e = Self::zero(alphabet);
        for (w, c) in terms {
            alphabet.check_word(&w)?;
            if !is_alsw_fast(&w)? {
                return Err(Error::NotAlsw(alphabet.format_word(&w)));
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    pub fn from_tree(alphabet: &Arc<Alphabet>, tree: &LieTree) -> Result<Self> {
        lie_recognize(&tree.expand(alphabet)?)
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

    fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let cur = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
        *cur += c;
        if cur.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch("Lie elements over different alphabets".into()));
        }
        let mut e = self.clone();
        for (w, c) in other.terms() {
            e.add_term(w.clone(), c.clone());
        }
        Ok(e)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut e = Self::zero(&self.alphabet);
        if c.is_zero() {
            return e;
        }
        for (w, a) in self.terms() {
            e.terms.insert(w.clone(), a * c);
        }
        e
    }

    /// Leading ALSW under DegLex; the expansion leads with the same word.
    pub fn leading(&self) -> Result<(Word, Scalar)> {
        let deglex = MonomialOrder::DegLex;
        let mut best: Option<&Word> = None;
        for w in self.terms.keys() {
            best = Some(match best {
                None => w,
                Some(b) => deglex.max(b, w),
            });
        }
        match best {
            None => Err(Error::ZeroPolynomial),
            Some(w) => Ok((w.clone(), self.terms[w].clone())),
        }
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Ok((_, c)) if c.is_one())
    }

    pub fn monic(&self) -> Result<Self> {
        let (_, c) = self.leading()?;
        Ok(self.scale(&c.recip()))
    }

    pub fn expand(&self) -> Result<FreePolynomial> {
        let mut p = FreePolynomial::zero(&self.alphabet);
        for (w, c) in self.terms() {
            let t = standard_bracketing(w)?;
            p = p.add(&t.expand(&self.alphabet)?.scale(c))?;
        }
        Ok(p)
    }

    pub fn bracket(&self, other: &Self) -> Result<Self> {
        lie_recognize(&self.expand()?.lie_bracket(&other.expand()?)?)
    }

    pub fn format(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let deglex = MonomialOrder::DegLex;
        let mut words: Vec<&Word> = self.terms.keys().collect();
        words.sort_by(|a, b| deglex.compare(b, a));
        let mut out = String::new();
        for (i, w) in words.iter().enumerate() {
            let c = &self.terms[*w];
            let mag = c.abs();
            let body_tree = if w.len() == 1 {
                self.alphabet.name(w.letter(0)).to_string()
            } else {
                standard_bracketing(w).expect("stored ALSW").format(&self.alphabet)
            };
            let body = if mag.is_one() {
                body_tree
            } else {
                format!("{}*{}", format_scalar(&mag), body_tree)
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

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// Writes a free polynomial in NLSW coordinates by peeling leading terms:
/// the leading word must be an ALSW at every stage, and subtracting its
/// standard bracketing strictly lowers the leading word.
pub fn lie_recognize(p: &FreePolynomial) -> Result<LieElement> {
    let deglex = MonomialOrder::DegLex;
    let mut rest = p.clone();
    let mut out = LieElement::zero(p.alphabet());
    while !rest.is_zero() {
        let (w, c) = rest.leading(&deglex)?;
        if !is_alsw_fast(&w)? {
            return Err(Error::NotLieElement(p.alphabet().format_word(&w)));
        }
        let t = standard_bracketing(&w)?;
        rest = rest.sub(&t.expand(p.alphabet())?.scale(&c))?;
        out.add_term(w, c);
    }
    Ok(out)
}

/// Parses linear combinations whose terms are bracket trees, words, or
/// constants, e.g. `(t23 t12) + (t13 t12)`, into the expanded polynomial.
pub fn parse_lie_polynomial(alphabet: &Arc<Alphabet>, text: &str) -> Result<FreePolynomial> {
    let mut p = FreePolynomial::zero(alphabet);
    for (sign, term) in parse_signed_term_strings(text)? {
        let expanded = parse_lie_term(alphabet, &term)?;
        p = p.add(&if sign { expanded.neg() } else { expanded })?;
    }
    Ok(p)
}

fn parse_lie_term(alphabet: &Arc<Alphabet>, term: &str) -> Result<FreePolynomial> {
    let term = term.trim();
    if let Some(open) = term.find('(') {
        let (coeff_part, tree_part) = term.split_at(open);
        let coeff_part = coeff_part.trim().trim_end_matches('*').trim();
        let coeff = if coeff_part.is_empty() { Scalar::one() } else { parse_scalar(coeff_part)? };
        let tree = LieTree::parse(alphabet, tree_part)?;
        return Ok(tree.expand(alphabet)?.scale(&coeff));
    }
    FreePolynomial::parse(alphabet, term)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: &Arc<Alphabet>, s: &str) -> Word {
        a.parse_word(s).unwrap()
    }

    #[test]
    fn small_alsws_over_two_letters() {
        let a = Alphabet::standard(2);
        let got: Vec<String> =
            alsw_enumerate(&a, 3).iter().map(|u| a.format_word(u)).collect();
        assert_eq!(got, vec!["x1", "x2", "x2 x1", "x2 x1 x1", "x2 x2 x1"]);
    }

    #[test]
    fn rotation_and_suffix_definitions_agree() {
        for word in crate::gsb::words_up_to(3, 6) {
            if word.is_empty() {
                continue;
            }
            assert_eq!(is_alsw(&word).unwrap(), is_alsw_fast(&word).unwrap(), "{word}");
        }
        assert_eq!(is_alsw(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn factorization_is_non_decreasing() {
        let a = Alphabet::standard(2);
        let word = w(&a, "x2 x1 x1 x1 x2 x1 x1 x2 x1 x2 x2 x1");
        let parts: Vec<String> =
            shirshov_factorize(&word).unwrap().iter().map(|u| a.format_word(u)).collect();
        assert_eq!(parts, vec!["x2 x1 x1 x1", "x2 x1 x1", "x2 x1", "x2 x2 x1"]);
    }

    #[test]
    fn factorization_concatenates_back() {
        for word in crate::gsb::words_up_to(3, 6) {
            if word.is_empty() {
                continue;
            }
            let parts = shirshov_factorize(&word).unwrap();
            let mut back = Word::empty();
            for p in &parts {
                assert!(is_alsw_fast(p).unwrap());
                back = back.concat(p);
            }
            assert_eq!(back, word);
            for pair in parts.windows(2) {
                assert_ne!(
                    shirshov_lex(pair[0].letters(), pair[1].letters()),
                    Ordering::Greater
                );
            }
        }
    }

    #[test]
    fn elimination_mirrors_alsw_status() {
        // words whose first letter is not minimal admit one elimination step
        for word in crate::gsb::words_up_to(2, 7) {
            if word.is_empty() {
                continue;
            }
            let beta = *word.letters().iter().min().unwrap();
            if word.letter(0) == beta {
                assert!(matches!(
                    eliminate(&word),
                    Err(Error::NoElimination) | Err(Error::EmptyWord)
                ));
                continue;
            }
            let elim = eliminate(&word).unwrap();
            let (derived, _) = elim.as_word();
            assert_eq!(is_alsw_fast(&word).unwrap(), is_alsw_fast(&derived).unwrap());
        }
    }

    #[test]
    fn single_letters_have_no_elimination() {
        let a = Alphabet::standard(2);
        assert_eq!(eliminate(&w(&a, "x2")), Err(Error::NoElimination));
        assert_eq!(eliminate(&w(&a, "x1 x1 x1")), Err(Error::NoElimination));
    }

    #[test]
    fn standard_bracketing_of_the_running_example() {
        let a = Alphabet::standard(2);
        let word = w(&a, "x2 x2 x1 x1 x2 x1 x1 x1");
        let t = standard_bracketing(&word).unwrap();
        assert_eq!(t.format(&a), "(x2 (((x2 x1) x1) (((x2 x1) x1) x1)))");
        assert!(is_nlsw(&t));
    }

    #[test]
    fn both_bracketings_agree_up_to_degree_8() {
        for word in crate::gsb::words_up_to(2, 8) {
            if word.is_empty() || !is_alsw_fast(&word).unwrap() {
                continue;
            }
            assert_eq!(standard_bracketing(&word).unwrap(), cfl_bracketing(&word).unwrap());
        }
    }

    #[test]
    fn expansion_leads_with_the_support() {
        let a = Alphabet::standard(2);
        let deglex = MonomialOrder::DegLex;
        for t in nlsw_enumerate(&a, 7).unwrap() {
            let p = t.expand(&a).unwrap();
            let (lw, c) = p.leading(&deglex).unwrap();
            assert_eq!(lw, t.support());
            assert!(c.is_one());
        }
    }

    #[test]
    fn special_bracketing_of_the_running_example() {
        let a = Alphabet::standard(2);
        let word = w(&a, "x2 x2 x1 x1 x2 x1 x1 x1");
        let u = w(&a, "x2 x2 x1");
        let t = special_bracketing(&word, &u, 0).unwrap();
        assert_eq!(t.format(&a), "(((x2 (x2 x1)) x1) (((x2 x1) x1) x1))");
        let p = t.expand(&a).unwrap();
        assert_eq!(p.leading(&MonomialOrder::DegLex).unwrap().0, word);
    }

    #[test]
    fn special_bracketing_validates_inputs() {
        let a = Alphabet::standard(2);
        let word = w(&a, "x2 x1 x1");
        assert!(matches!(
            special_bracketing(&word, &w(&a, "x1 x2"), 0),
            Err(Error::NotAlsw(_))
        ));
        assert_eq!(
            special_bracketing(&word, &w(&a, "x2 x1"), 1),
            Err(Error::SubwordMismatch)
        );
    }

    #[test]
    fn lie_recognize_round_trips_trees() {
        let a = Alphabet::standard(2);
        let t = LieTree::parse(&a, "((x2 x1) ((x2 x1) x1))").unwrap();
        let e = LieElement::from_tree(&a, &t).unwrap();
        assert_eq!(e.expand().unwrap(), t.expand(&a).unwrap());
    }

    #[test]
    fn lie_recognize_rejects_non_lie_input() {
        let a = Alphabet::standard(2);
        let p = FreePolynomial::parse(&a, "x1 x2").unwrap();
        assert_eq!(
            lie_recognize(&p),
            Err(Error::NotLieElement("x1 x2".into()))
        );
    }

    #[test]
    fn tree_text_round_trip() {
        let a = Alphabet::standard(2);
        let t = LieTree::parse(&a, "((x2 x1) x1)").unwrap();
        assert_eq!(t.format(&a), "((x2 x1) x1)");
        assert_eq!(t.support(), w(&a, "x2 x1 x1"));
        assert!(LieTree::parse(&a, "((x2 x1)").is_err());
        assert!(LieTree::parse(&a, "(x2 x1) x1").is_err());
    }

    #[test]
    fn parse_lie_polynomial_mixes_trees_and_words() {
        let a = Alphabet::standard(2);
        let p = parse_lie_polynomial(&a, "(x2 x1) - x1").unwrap();
        assert_eq!(p.format_with(&MonomialOrder::DegLex), "x2 x1 - x1 x2 - x1");
        let q = parse_lie_polynomial(&a, "1/2*((x2 x1) x1)").unwrap();
        assert_eq!(
            q.format_with(&MonomialOrder::DegLex),
            "1/2*x2 x1 x1 - x1 x2 x1 + 1/2*x1 x1 x2"
        );
    }
}
