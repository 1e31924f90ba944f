//! Monomial orders on the free monoid and on commutative monomials.
//!
//! `DegLex` and `Eps` are monomial well-orders and may drive reduction.
//! `ShirshovLex` is the lexicographic order with the empty word greatest and
//! every proper prefix greater than its extensions; it is used for word
//! comparison in the Lyndon-Shirshov theory only, never for reduction.

use std::cmp::Ordering;

use crate::alphabet::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommutativeOrder {
    /// Total degree first, then exponents of the largest variable down.
    DegLex,
    /// Exponents of the largest variable down, no degree comparison.
    Lex,
}

impl CommutativeOrder {
    pub fn compare_exponents(&self, u: &[u32], v: &[u32]) -> Ordering {
        if let CommutativeOrder::DegLex = self {
            let du: u64 = u.iter().map(|&e| e as u64).sum();
            let dv: u64 = v.iter().map(|&e| e as u64).sum();
            match du.cmp(&dv) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        let n = u.len().max(v.len());
        for i in (0..n).rev() {
            let eu = u.get(i).copied().unwrap_or(0);
            let ev = v.get(i).copied().unwrap_or(0);
            match eu.cmp(&ev) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Degree first, then letters left to right with the larger rank winning.
    DegLex,
    /// Pure lexicographic with `1` greater than every nonempty word.
    ShirshovLex,
    /// Compare commutative images first, tie-break by plain lex.
    Eps(CommutativeOrder),
}

impl MonomialOrder {
    /// Whether the order is a monomial well-order usable for reduction.
    pub fn is_reduction_order(&self) -> bool {
        !matches!(self, MonomialOrder::ShirshovLex)
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Ordering {
        match self {
            MonomialOrder::DegLex => match u.len().cmp(&v.len()) {
                Ordering::Equal => u.letters().cmp(v.letters()),
                o => o,
            },
            MonomialOrder::ShirshovLex => shirshov_lex(u.letters(), v.letters()),
            MonomialOrder::Eps(comm) => {
                let eu = exponent_vector(u, 0);
                let ev = exponent_vector(v, 0);
                match comm.compare_exponents(&eu, &ev) {
                    // equal commutative image forces equal length, so plain
                    // lex is a total tie-break
                    Ordering::Equal => u.letters().cmp(v.letters()),
                    o => o,
                }
            }
        }
    }

    pub fn max<'a>(&self, u: &'a Word, v: &'a Word) -> &'a Word {
        if self.compare(u, v) == Ordering::Less {
            v
        } else {
            u
        }
    }
}

pub fn shirshov_lex(u: &[usize], v: &[usize]) -> Ordering {
    let m = u.len().min(v.len());
    for i in 0..m {
        match u[i].cmp(&v[i]) {
            Ordering::Equal => {}
            o => return o,
        }
    }
    // the proper prefix is the greater word; in particular 1 > v for v != 1
    v.len().cmp(&u.len())
}

/// Commutative image of a word, padded to at least `min_len` variables.
pub fn exponent_vector(w: &Word, min_len: usize) -> Vec<u32> {
    let n = w.letters().iter().map(|&l| l + 1).max().unwrap_or(0).max(min_len);
    let mut e = vec![0u32; n];
    for &l in w.letters() {
        e[l] += 1;
    }
    e
}
