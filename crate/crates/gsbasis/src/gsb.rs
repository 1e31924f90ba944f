//! Composition analysis and completion for the free associative algebra.
//!
//! The central facts used here: a monic set S is a Gröbner-Shirshov basis iff
//! every intersection and inclusion composition reduces to zero, iff the
//! S-irreducible words form a linear basis of the quotient. Completion adjoins
//! reduced nonzero composition residues until closure or a resource bound.

use std::cmp::Ordering;
use std::sync::Arc;

use serde_json::json;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::FreePolynomial;
use crate::reduce::normal_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AmbiguityKind {
    /// w = lw(f) b = a lw(g) with a proper overlap.
    Intersection,
    /// w = lw(f) = a lw(g) b.
    Inclusion,
}

impl AmbiguityKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            AmbiguityKind::Intersection => "intersection",
            AmbiguityKind::Inclusion => "inclusion",
        }
    }
}

/// An overlap of two leading words; `a` and `b` pad `lw(g)` inside `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub w: Word,
    pub a: Word,
    pub b: Word,
}

/// All compositions of the ordered pair (f, g); `f == g` (the self pair)
/// skips the identity inclusion. Sorted by (|w|, overlap position, kind).
pub fn find_ambiguities(
    f: &FreePolynomial,
    g: &FreePolynomial,
    order: &MonomialOrder,
) -> Result<Vec<Ambiguity>> {
    let lf = f.leading_word(order)?;
    let lg = g.leading_word(order)?;
    Ok(ambiguities_from_leads(&lf, &lg, f == g))
}

/// Overlaps of two leading words; `same` marks the self pair, whose identity
/// inclusion is skipped.
pub fn ambiguities_from_leads(lf: &Word, lg: &Word, same: bool) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    // intersection: a proper suffix of lw(f) equals a proper prefix of lw(g),
    // so |w| < |lw(f)| + |lw(g)| automatically
    for t in 1..lf.len().min(lg.len()) {
        if lf.letters()[lf.len() - t..] == lg.letters()[..t] {
            let a = lf.subword(0, lf.len() - t);
            let b = lg.subword(t, lg.len());
            let w = lf.concat(&b);
            out.push(Ambiguity { kind: AmbiguityKind::Intersection, w, a, b });
        }
    }
    // inclusion: lw(g) occurs inside lw(f)
    if lg.len() <= lf.len() {
        for pos in lf.occurrences(lg) {
            if same && pos == 0 && lg.len() == lf.len() {
                continue;
            }
            let a = lf.subword(0, pos);
            let b = lf.subword(pos + lg.len(), lf.len());
            out.push(Ambiguity { kind: AmbiguityKind::Inclusion, w: lf.clone(), a, b });
        }
    }
    out.sort_by_key(|amb| (amb.w.len(), amb.a.len(), amb.kind == AmbiguityKind::Inclusion));
    out
}

/// The composition polynomial of (f, g) at `amb`. Both kinds subtract the
/// padded g-part so the leading word `w` cancels.
pub fn composition(
    f: &FreePolynomial,
    g: &FreePolynomial,
    amb: &Ambiguity,
    order: &MonomialOrder,
) -> Result<FreePolynomial> {
    let lf = f.leading_word(order)?;
    let lg = g.leading_word(order)?;
    match amb.kind {
        AmbiguityKind::Intersection => {
            if amb.w != lf.concat(&amb.b) || amb.w != amb.a.concat(&lg) {
                return Err(Error::InvalidAmbiguity);
            }
            // (f, g)_w = f b - a g
            f.sandwich(&Word::empty(), &amb.b)
                .sub(&g.sandwich(&amb.a, &Word::empty()))
        }
        AmbiguityKind::Inclusion => {
            if amb.w != lf || amb.w != amb.a.concat(&lg).concat(&amb.b) {
                return Err(Error::InvalidAmbiguity);
            }
            f.sub(&g.sandwich(&amb.a, &amb.b))
        }
    }
}

/// Triviality of `h` modulo (rels, w): every term must rewrite below `w`,
/// decided operationally by reduction to zero after the leading-word check.
pub fn is_trivial(
    h: &FreePolynomial,
    rels: &[FreePolynomial],
    w: &Word,
    order: &MonomialOrder,
) -> Result<bool> {
    if h.is_zero() {
        return Ok(true);
    }
    let lh = h.leading_word(order)?;
    if order.compare(&lh, w) != Ordering::Less {
        return Ok(false);
    }
    Ok(normal_form(h, rels, order)?.is_zero())
}

#[derive(Debug, Clone)]
pub struct AmbiguityRecord {
    pub i: usize,
    pub j: usize,
    pub ambiguity: Ambiguity,
    pub composition: FreePolynomial,
    pub residue: FreePolynomial,
    pub trivial: bool,
}

#[derive(Debug, Clone)]
pub struct GsReport {
    pub relations: Vec<FreePolynomial>,
    pub records: Vec<AmbiguityRecord>,
    pub verdict: bool,
    pub representation: &'static str,
}

impl GsReport {
    pub fn to_json(&self, alphabet: &Alphabet, order: &MonomialOrder) -> serde_json::Value {
        json!({
            "representation": self.representation,
            "relations": self.relations.iter().map(|r| r.format_with(order)).collect::<Vec<_>>(),
            "ambiguities": self.records.iter().map(|r| json!({
                "kind": r.ambiguity.kind.as_str(),
                "w": alphabet.format_word(&r.ambiguity.w),
                "a": alphabet.format_word(&r.ambiguity.a),
                "b": alphabet.format_word(&r.ambiguity.b),
                "i": r.i,
                "j": r.j,
                "composition": r.composition.format_with(order),
                "residue": r.residue.format_with(order),
                "trivial": r.trivial,
            })).collect::<Vec<_>>(),
            "verdict": self.verdict,
        })
    }
}

/// Checks whether the monic set is closed under composition.
pub fn check_gs_basis(rels: &[FreePolynomial], order: &MonomialOrder) -> Result<GsReport> {
    for (i, r) in rels.iter().enumerate() {
        if !r.is_monic(order) {
            return Err(Error::NonMonic(i));
        }
    }
    let mut records = Vec::new();
    let mut verdict = true;
    for (i, f) in rels.iter().enumerate() {
        for (j, g) in rels.iter().enumerate() {
            for amb in find_ambiguities(f, g, order)? {
                let comp = composition(f, g, &amb, order)?;
                let residue = normal_form(&comp, rels, order)?;
                let trivial = residue.is_zero();
                verdict &= trivial;
                records.push(AmbiguityRecord {
                    i,
                    j,
                    ambiguity: amb,
                    composition: comp,
                    residue,
                    trivial,
                });
            }
        }
    }
    Ok(GsReport { relations: rels.to_vec(), records, verdict, representation: "associative" })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub max_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_degree: 12, max_steps: 10_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    DegreeBounded(usize),
    StepBounded(usize),
}

impl CompletionStatus {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            CompletionStatus::Complete => json!({"type": "complete"}),
            CompletionStatus::DegreeBounded(d) => {
                json!({"type": "degree_bounded", "max_degree": d})
            }
            CompletionStatus::StepBounded(s) => json!({"type": "step_bounded", "max_steps": s}),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CompletionResult {
    pub basis: Vec<FreePolynomial>,
    pub status: CompletionStatus,
    pub rounds: usize,
    pub added: usize,
}

impl CompletionResult {
    pub fn to_json(&self, order: &MonomialOrder) -> serde_json::Value {
        json!({
            "basis": self.basis.iter().map(|p| p.format_with(order)).collect::<Vec<_>>(),
            "status": self.status.to_json(),
            "rounds": self.rounds,
            "added": self.added,
        })
    }
}

/// Makes every element monic, reduces each modulo the others to a fixpoint,
/// drops zeros, and sorts by leading word. For a closed set this yields the
/// unique reduced basis of its ideal.
pub fn interreduce(rels: &[FreePolynomial], order: &MonomialOrder) -> Result<Vec<FreePolynomial>> {
    let mut set: Vec<FreePolynomial> = Vec::new();
    for r in rels {
        if !r.is_zero() {
            set.push(r.monic(order)?);
        }
    }
    loop {
        set.sort_by(|p, q| {
            order.compare(
                &p.leading_word(order).expect("nonzero"),
                &q.leading_word(order).expect("nonzero"),
            )
        });
        set.dedup();
        let mut changed = false;
        let mut next: Vec<FreePolynomial> = Vec::new();
        for i in 0..set.len() {
            let mut others: Vec<FreePolynomial> = next.clone();
            others.extend_from_slice(&set[i + 1..]);
            let r = normal_form(&set[i], &others, order)?;
            if r != set[i] {
                changed = true;
            }
            if !r.is_zero() {
                next.push(r.monic(order)?);
            }
        }
        set = next;
        if !changed {
            break;
        }
    }
    set.sort_by(|p, q| {
        order.compare(
            &p.leading_word(order).expect("nonzero"),
            &q.leading_word(order).expect("nonzero"),
        )
    });
    Ok(set)
}

/// Completion: each round enumerates all compositions of the current basis,
/// smallest ambiguity word first, reduces them against the live working set,
/// adjoins nonzero residues made monic, then inter-reduces. Ambiguity words
/// longer than `max_degree` are skipped and taint the final status.
pub fn shirshov_complete(
    rels: &[FreePolynomial],
    order: &MonomialOrder,
    limits: Limits,
) -> Result<CompletionResult> {
    let mut basis = interreduce(rels, order)?;
    let mut skipped = false;
    let mut steps = 0usize;
    let mut rounds = 0usize;
    let mut added = 0usize;
    loop {
        rounds += 1;
        let snapshot = basis.clone();
        let mut ambs: Vec<(usize, usize, Ambiguity)> = Vec::new();
        for (i, f) in snapshot.iter().enumerate() {
            for (j, g) in snapshot.iter().enumerate() {
                for amb in find_ambiguities(f, g, order)? {
                    ambs.push((i, j, amb));
                }
            }
        }
        ambs.sort_by(|(_, _, x), (_, _, y)| order.compare(&x.w, &y.w));
        let mut added_this_round = 0usize;
        for (i, j, amb) in ambs {
            if amb.w.len() > limits.max_degree {
                skipped = true;
                continue;
            }
            if steps >= limits.max_steps {
                return Ok(CompletionResult {
                    basis: interreduce(&basis, order)?,
                    status: CompletionStatus::StepBounded(limits.max_steps),
                    rounds,
                    added,
                });
            }
            steps += 1;
            let comp = composition(&snapshot[i], &snapshot[j], &amb, order)?;
            let residue = normal_form(&comp, &basis, order)?;
            if !residue.is_zero() {
                basis.push(residue.monic(order)?);
                added_this_round += 1;
                added += 1;
            }
        }
        basis = interreduce(&basis, order)?;
        if added_this_round == 0 {
            break;
        }
    }
    let status = if skipped {
        CompletionStatus::DegreeBounded(limits.max_degree)
    } else {
        CompletionStatus::Complete
    };
    Ok(CompletionResult { basis, status, rounds, added })
}

/// Keeps only elements whose leading word contains no other leading word,
/// then inter-reduces the tails. Requires a closed set.
pub fn reduced_basis(rels: &[FreePolynomial], order: &MonomialOrder) -> Result<Vec<FreePolynomial>> {
    if !check_gs_basis(rels, order)?.verdict {
        return Err(Error::NotClosed);
    }
    let leads: Vec<Word> = rels
        .iter()
        .map(|r| r.leading_word(order))
        .collect::<Result<_>>()?;
    let mut minimal: Vec<FreePolynomial> = Vec::new();
    for (i, r) in rels.iter().enumerate() {
        let redundant = leads.iter().enumerate().any(|(j, lj)| {
            j != i && leads[i].contains(lj) && (leads[i] != *lj || j < i)
        });
        if !redundant {
            minimal.push(r.clone());
        }
    }
    interreduce(&minimal, order)
}

/// Words of length at most `max_length` containing no leading word of `rels`,
/// listed in DegLex order.
pub fn irr(
    alphabet: &Arc<Alphabet>,
    rels: &[FreePolynomial],
    order: &MonomialOrder,
    max_length: usize,
) -> Result<Vec<Word>> {
    let mut leads = Vec::new();
    for r in rels {
        let lw = r.leading_word(order)?;
        alphabet.check_word(&lw)?;
        leads.push(lw);
    }
    let mut out = Vec::new();
    for w in words_up_to(alphabet.len(), max_length) {
        if !leads.iter().any(|lw| w.contains(lw)) {
            out.push(w);
        }
    }
    Ok(out)
}

/// All words of length <= max, by length then lexicographically (DegLex order).
pub fn words_up_to(n_letters: usize, max_length: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_length {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..n_letters {
                next.push(w.concat(&Word::single(l)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// For a closed set: the reducible words u of length <= max_length paired as
/// u - nf(u), a linear basis of the ideal within that filtration layer.
pub fn ideal_linear_basis(
    alphabet: &Arc<Alphabet>,
    rels: &[FreePolynomial],
    order: &MonomialOrder,
    max_length: usize,
) -> Result<Vec<FreePolynomial>> {
    if !check_gs_basis(rels, order)?.verdict {
        return Err(Error::NotClosed);
    }
    let irreducible: std::collections::HashSet<Word> =
        irr(alphabet, rels, order, max_length)?.into_iter().collect();
    let mut out = Vec::new();
    for w in words_up_to(alphabet.len(), max_length) {
        if !irreducible.contains(&w) {
            let u = FreePolynomial::from_word(alphabet, w);
            let nf = normal_form(&u, rels, order)?;
            out.push(u.sub(&nf)?);
        }
    }
    Ok(out)
}
