//! The plactic monoid: Knuth relations, row and column products, and tableau
//! normal forms.
//!
//! A row is a non-decreasing word, stored as letter multiplicities; a column
//! is a strictly decreasing word, stored as a letter set. The product of two
//! rows (resp. columns) is again a product of at most two rows (resp.
//! columns) computed by an explicit min/partial-sum recursion, and folding a
//! word letter by letter yields the tableau normal form.

use std::sync::Arc;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowVector {
    counts: Vec<u32>,
}

impl RowVector {
    pub fn empty(n: usize) -> Self {
        RowVector { counts: vec![0; n] }
    }

    pub fn single(letter: usize, n: usize) -> Self {
        let mut r = Self::empty(n);
        r.counts[letter] = 1;
        r
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn len(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// The row as a non-decreasing word.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for (l, &c) in self.counts.iter().enumerate() {
            letters.extend(std::iter::repeat(l).take(c as usize));
        }
        Word::new(letters)
    }

    pub fn from_word(w: &Word, n: usize) -> Result<Self> {
        let mut r = Self::empty(n);
        let mut last = 0usize;
        for &l in w.letters() {
            if l >= n {
                return Err(Error::AlphabetMismatch(format!("letter index {l} out of range")));
            }
            if l < last {
                return Err(Error::Invalid("a row must be non-decreasing".into()));
            }
            last = l;
            r.counts[l] += 1;
        }
        Ok(r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnVector {
    present: Vec<bool>,
}

impl ColumnVector {
    pub fn empty(n: usize) -> Self {
        ColumnVector { present: vec![false; n] }
    }

    pub fn single(letter: usize, n: usize) -> Self {
        let mut c = Self::empty(n);
        c.present[letter] = true;
        c
    }

    pub fn len(&self) -> u32 {
        self.present.iter().filter(|&&p| p).count() as u32
    }

    pub fn is_empty(&self) -> bool {
        !self.present.iter().any(|&p| p)
    }

    /// The column as a strictly decreasing word.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for l in (0..self.present.len()).rev() {
            if self.present[l] {
                letters.push(l);
            }
        }
        Word::new(letters)
    }

    pub fn from_word(w: &Word, n: usize) -> Result<Self> {
        let mut c = Self::empty(n);
        let mut last: Option<usize> = None;
        for &l in w.letters() {
            if l >= n {
                return Err(Error::AlphabetMismatch(format!("letter index {l} out of range")));
            }
            if let Some(prev) = last {
                if l >= prev {
                    return Err(Error::Invalid("a column must be strictly decreasing".into()));
                }
            }
            last = Some(l);
            c.present[l] = true;
        }
        Ok(c)
    }
}

/// Row product W * Z = W' * Z' with W' dominating Z'. With partial sums
/// Z_p, W'_p: w'_1 = 0, w'_p = min(Z_{p-1} - W'_{p-1}, w_p), and
/// z'_q = w_q + z_q - w'_q.
pub fn row_product(w: &RowVector, z: &RowVector) -> (RowVector, RowVector) {
    let n = w.counts.len();
    assert_eq!(n, z.counts.len(), "rows over different alphabets");
    let mut wp = vec![0u32; n];
    let mut z_partial = 0u64;
    let mut wp_partial = 0u64;
    for p in 0..n {
        if p > 0 {
            let room = z_partial - wp_partial;
            wp[p] = (w.counts[p] as u64).min(room) as u32;
        }
        z_partial += z.counts[p] as u64;
        wp_partial += wp[p] as u64;
    }
    let mut zp = vec![0u32; n];
    for q in 0..n {
        zp[q] = w.counts[q] + z.counts[q] - wp[q];
    }
    (RowVector { counts: wp }, RowVector { counts: zp })
}

/// Column product W * Z = W' * Z' with W' the left column. With partial sums
/// W_p, Z'_p: z'_1 = min(w_1, z_1), z'_p = min(W_p - Z'_{p-1}, z_p), and
/// w'_q = w_q + z_q - z'_q.
pub fn column_product(w: &ColumnVector, z: &ColumnVector) -> (ColumnVector, ColumnVector) {
    let n = w.present.len();
    assert_eq!(n, z.present.len(), "columns over different alphabets");
    let mut zp = vec![0u32; n];
    let mut w_partial = 0u64;
    let mut zp_partial = 0u64;
    for p in 0..n {
        w_partial += w.present[p] as u64;
        let room = if p == 0 { w.present[0] as u64 } else { w_partial - zp_partial };
        zp[p] = (z.present[p] as u64).min(room) as u32;
        zp_partial += zp[p] as u64;
    }
    let mut wp = vec![0u32; n];
    for q in 0..n {
        wp[q] = w.present[q] as u32 + z.present[q] as u32 - zp[q];
    }
    let to_col = |v: Vec<u32>| {
        debug_assert!(v.iter().all(|&x| x <= 1), "column overflow");
        ColumnVector { present: v.into_iter().map(|x| x == 1).collect() }
    };
    (to_col(wp), to_col(zp))
}

/// `r` dominates `s`: not longer, and strictly larger letterwise.
pub fn row_dominates(r: &RowVector, s: &RowVector) -> bool {
    let (rw, sw) = (r.to_word(), s.to_word());
    rw.len() <= sw.len()
        && rw.letters().iter().zip(sw.letters()).all(|(&a, &b)| a > b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableauMode {
    Row,
    Column,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tableau {
    /// Rows top to bottom; each row dominates the next.
    Rows(Vec<RowVector>),
    /// Columns left to right, weakly decreasing heights.
    Columns(Vec<ColumnVector>),
}

impl Tableau {
    pub fn to_word(&self) -> Word {
        let mut out = Word::empty();
        match self {
            Tableau::Rows(rows) => {
                for r in rows {
                    out = out.concat(&r.to_word());
                }
            }
            Tableau::Columns(cols) => {
                for c in cols {
                    out = out.concat(&c.to_word());
                }
            }
        }
        out
    }

    pub fn shape(&self) -> Vec<u32> {
        match self {
            Tableau::Rows(rows) => rows.iter().map(|r| r.len()).collect(),
            Tableau::Columns(cols) => cols.iter().map(|c| c.len()).collect(),
        }
    }

    pub fn format(&self, alphabet: &Alphabet) -> String {
        let parts: Vec<String> = match self {
            Tableau::Rows(rows) => {
                rows.iter().map(|r| alphabet.format_word(&r.to_word())).collect()
            }
            Tableau::Columns(cols) => {
                cols.iter().map(|c| alphabet.format_word(&c.to_word())).collect()
            }
        };
        parts.join(" | ")
    }
}

fn fold_row(rows: &mut Vec<RowVector>, letter: usize, n: usize) {
    let mut carry = RowVector::single(letter, n);
    let mut i = rows.len();
    while i > 0 && !carry.is_empty() {
        i -= 1;
        let (w, z) = row_product(&rows[i], &carry);
        rows[i] = z;
        carry = w;
    }
    if !carry.is_empty() {
        rows.insert(0, carry);
    }
    rows.retain(|r| !r.is_empty());
}

fn fold_column(cols: &mut Vec<ColumnVector>, letter: usize, n: usize) {
    let mut carry = ColumnVector::single(letter, n);
    let mut settled: Vec<ColumnVector> = Vec::new();
    let mut i = cols.len();
    while i > 0 && !carry.is_empty() {
        i -= 1;
        let (w, z) = column_product(&cols[i], &carry);
        if !z.is_empty() {
            settled.push(z);
        }
        carry = w;
    }
    let mut out: Vec<ColumnVector> = cols[..i].to_vec();
    if !carry.is_empty() {
        out.push(carry);
    }
    out.extend(settled.into_iter().rev());
    *cols = out;
}

/// Folds the word letter by letter through the chosen product.
pub fn tableau_normal_form(w: &Word, n: usize, mode: TableauMode) -> Result<Tableau> {
    if let Some(&l) = w.letters().iter().find(|&&l| l >= n) {
        return Err(Error::AlphabetMismatch(format!("letter index {l} out of range")));
    }
    match mode {
        TableauMode::Row => {
            let mut rows = Vec::new();
            for &l in w.letters() {
                fold_row(&mut rows, l, n);
            }
            Ok(Tableau::Rows(rows))
        }
        TableauMode::Column => {
            let mut cols = Vec::new();
            for &l in w.letters() {
                fold_column(&mut cols, l, n);
            }
            Ok(Tableau::Columns(cols))
        }
    }
}

/// Knuth relations on n letters as equal word pairs:
/// x_i x_k x_j = x_k x_i x_j for x_i <= x_j < x_k, and
/// x_j x_i x_k = x_j x_k x_i for x_i < x_j <= x_k.
pub fn knuth_relations(alphabet: &Arc<Alphabet>) -> Vec<(Word, Word)> {
    let n = alphabet.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in j + 1..n {
                out.push((Word::new(vec![i, k, j]), Word::new(vec![k, i, j])));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j..n {
                out.push((Word::new(vec![j, i, k]), Word::new(vec![j, k, i])));
            }
        }
    }
    out
}
