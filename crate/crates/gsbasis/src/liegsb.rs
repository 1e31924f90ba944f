//! Gröbner-Shirshov theory inside the free Lie algebra.
//!
//! Lie relations are kept in NLSW coordinates. Reduction subtracts special
//! normal s-words: the special bracketing of the ambient ALSW relative to the
//! occurrence of a leading word, with the relation substituted for its
//! bracketed leading word. A monic Lie set is closed under composition iff
//! its set of commutator expansions is closed in the associative sense.

use std::cmp::Ordering;
use std::sync::Arc;

use num::One;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::gsb::{ambiguities_from_leads, check_gs_basis, Ambiguity, AmbiguityKind, AmbiguityRecord, GsReport};
use crate::lyndon::{
    alsw_enumerate, lie_recognize, special_bracketing, standard_bracketing, LieElement, LieTree,
};
use crate::order::MonomialOrder;
use crate::poly::{FreePolynomial, Scalar};

/// Expands `tree`, substituting `sub` for the unique subtree whose leaf span
/// is exactly `pos..pos+len`.
fn expand_with_substitution(
    tree: &LieTree,
    offset: usize,
    pos: usize,
    len: usize,
    sub: &FreePolynomial,
    alphabet: &Arc<Alphabet>,
) -> Result<FreePolynomial> {
    if offset == pos && tree.degree() == len {
        return Ok(sub.clone());
    }
    match tree {
        LieTree::Leaf(l) => Ok(FreePolynomial::from_word(alphabet, Word::single(*l))),
        LieTree::Node(l, r) => {
            let pl = expand_with_substitution(l, offset, pos, len, sub, alphabet)?;
            let pr = expand_with_substitution(r, offset + l.degree(), pos, len, sub, alphabet)?;
            pl.lie_bracket(&pr)
        }
    }
}

/// The special normal s-word [a s b] at the occurrence of lw(s) in the ALSW
/// `w` at `pos`, as a polynomial; it is monic with leading word `w`.
pub fn special_normal_sword(s: &LieElement, w: &Word, pos: usize) -> Result<FreePolynomial> {
    let (ls, _) = s.leading()?;
    let tree = special_bracketing(w, &ls, pos)?;
    expand_with_substitution(&tree, 0, pos, ls.len(), &s.expand()?, s.alphabet())
}

#[derive(Debug, Clone, PartialEq)]
pub struct LieRewriteStep {
    pub coeff: Scalar,
    pub a: Word,
    pub rel: usize,
    pub b: Word,
    pub w: Word,
}

/// Picks the rewrite inside the ALSW `u`: relation with the smallest leading
/// word occurring in `u` (ties by index), leftmost occurrence.
fn pick_rewrite(u: &Word, leads: &[Word]) -> Option<(usize, usize)> {
    let deglex = MonomialOrder::DegLex;
    let mut best: Option<(usize, usize)> = None;
    for (i, lw) in leads.iter().enumerate() {
        if let Some(p) = u.find(lw) {
            best = match best {
                None => Some((i, p)),
                Some((bi, bp)) => {
                    if deglex.compare(lw, &leads[bi]) == Ordering::Less {
                        Some((i, p))
                    } else {
                        Some((bi, bp))
                    }
                }
            };
        }
    }
    best
}

pub fn lie_normal_form_with_trace(
    f: &LieElement,
    rels: &[LieElement],
) -> Result<(LieElement, Vec<LieRewriteStep>)> {
    let deglex = MonomialOrder::DegLex;
    let mut leads = Vec::with_capacity(rels.len());
    for (i, s) in rels.iter().enumerate() {
        if !s.is_monic() {
            return Err(Error::NonMonic(i));
        }
        leads.push(s.leading()?.0);
    }
    let mut h = f.clone();
    let mut trace = Vec::new();
    loop {
        let mut target: Option<Word> = None;
        for (w, _) in h.terms() {
            if pick_rewrite(w, &leads).is_some() {
                target = Some(match target {
                    None => w.clone(),
                    Some(t) => deglex.max(&t, w).clone(),
                });
            }
        }
        let Some(u) = target else { break };
        let (rel, pos) = pick_rewrite(&u, &leads).expect("target reducible");
        let coeff = h.coefficient(&u);
        let sword = special_normal_sword(&rels[rel], &u, pos)?;
        debug_assert_eq!(sword.leading(&deglex)?, (u.clone(), Scalar::one()));
        let sword_lie = lie_recognize(&sword)?;
        h = h.sub(&sword_lie.scale(&coeff))?;
        trace.push(LieRewriteStep {
            coeff,
            a: u.subword(0, pos),
            rel,
            b: u.subword(pos + leads[rel].len(), u.len()),
            w: u,
        });
    }
    Ok((h, trace))
}

pub fn lie_normal_form(f: &LieElement, rels: &[LieElement]) -> Result<LieElement> {
    Ok(lie_normal_form_with_trace(f, rels)?.0)
}

pub fn lie_find_ambiguities(f: &LieElement, g: &LieElement) -> Result<Vec<Ambiguity>> {
    let lf = f.leading()?.0;
    let lg = g.leading()?.0;
    Ok(ambiguities_from_leads(&lf, &lg, f == g))
}

/// The Lie composition at `amb`: both sides are special normal s-words whose
/// leading word `w` cancels, and the result is again a Lie element.
pub fn lie_composition(f: &LieElement, g: &LieElement, amb: &Ambiguity) -> Result<LieElement> {
    let lf = f.leading()?.0;
    let lg = g.leading()?.0;
    match amb.kind {
        AmbiguityKind::Intersection => {
            if amb.w != lf.concat(&amb.b) || amb.w != amb.a.concat(&lg) {
                return Err(Error::InvalidAmbiguity);
            }
            let left = special_normal_sword(f, &amb.w, 0)?;
            let right = special_normal_sword(g, &amb.w, amb.a.len())?;
            lie_recognize(&left.sub(&right)?)
        }
        AmbiguityKind::Inclusion => {
            if amb.w != lf || amb.w != amb.a.concat(&lg).concat(&amb.b) {
                return Err(Error::InvalidAmbiguity);
            }
            let right = special_normal_sword(g, &amb.w, amb.a.len())?;
            lie_recognize(&f.expand()?.sub(&right)?)
        }
    }
}

/// Closure under Lie composition; the report carries the commutator
/// expansions of everything so the shape matches the associative one.
pub fn check_lie_gs_basis(rels: &[LieElement]) -> Result<GsReport> {
    for (i, s) in rels.iter().enumerate() {
        if !s.is_monic() {
            return Err(Error::NonMonic(i));
        }
    }
    let mut records = Vec::new();
    let mut verdict = true;
    for (i, f) in rels.iter().enumerate() {
        for (j, g) in rels.iter().enumerate() {
            for amb in lie_find_ambiguities(f, g)? {
                let comp = lie_composition(f, g, &amb)?;
                let (residue, _) = lie_normal_form_with_trace(&comp, rels)?;
                let trivial = residue.is_zero();
                verdict &= trivial;
                records.push(AmbiguityRecord {
                    i,
                    j,
                    ambiguity: amb,
                    composition: comp.expand()?,
                    residue: residue.expand()?,
                    trivial,
                });
            }
        }
    }
    Ok(GsReport {
        relations: rels.iter().map(|r| r.expand()).collect::<Result<_>>()?,
        records,
        verdict,
        representation: "lie",
    })
}

/// NLSWs whose support avoids every leading word; for a closed set these are
/// a linear basis of the quotient Lie algebra.
pub fn lie_irr(
    alphabet: &Arc<Alphabet>,
    rels: &[LieElement],
    max_degree: usize,
) -> Result<Vec<LieTree>> {
    let mut leads = Vec::with_capacity(rels.len());
    for s in rels {
        leads.push(s.leading()?.0);
    }
    let mut out = Vec::new();
    for w in alsw_enumerate(alphabet, max_degree) {
        if !leads.iter().any(|lw| w.contains(lw)) {
            out.push(standard_bracketing(&w)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PbwCheck {
    pub lie_verdict: bool,
    pub associative_verdict: bool,
    pub agree: bool,
}

/// A monic Lie set is closed under Lie composition iff its commutator
/// expansions are closed under associative composition; checks both sides
/// and reports whether they agree.
pub fn pbw_shirshov_check(rels: &[LieElement]) -> Result<PbwCheck> {
    let lie_verdict = check_lie_gs_basis(rels)?.verdict;
    let expansions: Vec<FreePolynomial> =
        rels.iter().map(|r| r.expand()).collect::<Result<_>>()?;
    let associative_verdict = check_gs_basis(&expansions, &MonomialOrder::DegLex)?.verdict;
    Ok(PbwCheck { lie_verdict, associative_verdict, agree: lie_verdict == associative_verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::parse_lie_polynomial;

    fn lie(a: &Arc<Alphabet>, text: &str) -> LieElement {
        lie_recognize(&parse_lie_polynomial(a, text).unwrap()).unwrap()
    }

    #[test]
    fn one_dimensional_bracket_relation_reduces() {
        let a = Alphabet::standard(2);
        // S = { [x2 x1] - x1 }
        let s = vec![lie(&a, "(x2 x1) - x1")];
        let f = lie(&a, "(x2 x1)");
        let (nf, trace) = lie_normal_form_with_trace(&f, &s).unwrap();
        assert_eq!(nf.format(), "x1");
        assert_eq!(trace.len(), 1);
        let g = lie(&a, "((x2 x1) x1)");
        assert!(lie_normal_form(&g, &s).unwrap().is_zero());
    }

    #[test]
    fn bracket_relation_is_a_lie_gs_basis() {
        let a = Alphabet::standard(2);
        let s = vec![lie(&a, "(x2 x1) - x1")];
        let report = check_lie_gs_basis(&s).unwrap();
        assert!(report.verdict);
        assert!(report.records.is_empty());
        let irr = lie_irr(&a, &s, 3).unwrap();
        let shown: Vec<String> = irr.iter().map(|t| t.format(&a)).collect();
        assert_eq!(shown, vec!["x1", "x2"]);
    }

    #[test]
    fn pbw_check_agrees_on_a_closed_set() {
        let a = Alphabet::standard(3);
        // 3-dimensional Lie algebra [x2 x1] = x1, [x3 x1] = [x3 x2] = 0
        let s = vec![
            lie(&a, "(x2 x1) - x1"),
            lie(&a, "(x3 x1)"),
            lie(&a, "(x3 x2)"),
        ];
        let check = pbw_shirshov_check(&s).unwrap();
        assert!(check.lie_verdict && check.associative_verdict && check.agree);
    }

    #[test]
    fn pbw_check_agrees_on_a_broken_set() {
        let a = Alphabet::standard(3);
        let s = vec![lie(&a, "(x3 x2) - x1"), lie(&a, "(x2 x1)")];
        let check = pbw_shirshov_check(&s).unwrap();
        assert!(!check.lie_verdict);
        assert!(!check.associative_verdict);
        assert!(check.agree);
    }

    #[test]
    fn composition_cancels_the_ambiguity_word() {
        let a = Alphabet::standard(3);
        let f = lie(&a, "(x3 x2) - x1");
        let g = lie(&a, "(x2 x1)");
        let ambs = lie_find_ambiguities(&f, &g).unwrap();
        assert_eq!(ambs.len(), 1);
        assert_eq!(a.format_word(&ambs[0].w), "x3 x2 x1");
        let comp = lie_composition(&f, &g, &ambs[0]).unwrap();
        assert!(!comp.is_zero());
        let deglex = MonomialOrder::DegLex;
        let lw = comp.expand().unwrap().leading(&deglex).unwrap().0;
        assert_eq!(deglex.compare(&lw, &ambs[0].w), Ordering::Less);
    }
}
