//! Normal forms modulo a set of monic relations.
//!
//! Strategy, fixed for determinism: rewrite the order-largest reducible
//! monomial of the current polynomial; among the relations whose leading word
//! occurs in it, pick the one with the smallest leading word, ties broken by
//! list index; rewrite the leftmost occurrence.

use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{FreePolynomial, Scalar};

/// One elimination `f -> f - coeff * left * rels[rel] * right` applied at the
/// monomial `reduced = left * lw(rels[rel]) * right`.
#[derive(Debug, Clone, PartialEq)]
pub struct RewriteStep {
    pub coeff: Scalar,
    pub left: Word,
    pub rel: usize,
    pub right: Word,
    pub reduced: Word,
}

fn check_relations(rels: &[FreePolynomial], order: &MonomialOrder) -> Result<Vec<Word>> {
    if !order.is_reduction_order() {
        return Err(Error::Invalid(
            "ShirshovLex compares words only and cannot drive reduction".into(),
        ));
    }
    let mut leads = Vec::with_capacity(rels.len());
    for (i, s) in rels.iter().enumerate() {
        if !s.is_monic(order) {
            return Err(Error::NonMonic(i));
        }
        leads.push(s.leading_word(order)?);
    }
    Ok(leads)
}

/// Picks the rewrite at `u`: relation with the smallest leading word occurring
/// in `u` (ties by index), at its leftmost occurrence.
fn pick_rewrite(u: &Word, leads: &[Word], order: &MonomialOrder) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, lw) in leads.iter().enumerate() {
        if let Some(pos) = u.find(lw) {
            best = match best {
                None => Some((i, pos)),
                Some((bi, bpos)) => {
                    if order.compare(lw, &leads[bi]) == std::cmp::Ordering::Less {
                        Some((i, pos))
                    } else {
                        Some((bi, bpos))
                    }
                }
            };
        }
    }
    best
}

pub fn normal_form_with_trace(
    f: &FreePolynomial,
    rels: &[FreePolynomial],
    order: &MonomialOrder,
) -> Result<(FreePolynomial, Vec<RewriteStep>)> {
    let leads = check_relations(rels, order)?;
    let mut h = f.clone();
    let mut trace = Vec::new();
    loop {
        // order-largest reducible monomial of h
        let mut target: Option<Word> = None;
        for w in h.support() {
            if pick_rewrite(w, &leads, order).is_some() {
                target = Some(match target {
                    None => w.clone(),
                    Some(t) => order.max(&t, w).clone(),
                });
            }
        }
        let Some(u) = target else { break };
        let (rel, pos) = pick_rewrite(&u, &leads, order).expect("target is reducible");
        let coeff = h.coefficient(&u);
        let left = u.subword(0, pos);
        let right = u.subword(pos + leads[rel].len(), u.len());
        let scaled = rels[rel].sandwich(&left, &right).scale(&coeff);
        h = h.sub(&scaled)?;
        trace.push(RewriteStep { coeff, left, rel, right, reduced: u });
    }
    Ok((h, trace))
}

pub fn normal_form(
    f: &FreePolynomial,
    rels: &[FreePolynomial],
    order: &MonomialOrder,
) -> Result<FreePolynomial> {
    Ok(normal_form_with_trace(f, rels, order)?.0)
}

/// Rebuilds `sum coeff * left * rels[rel] * right` from a trace; by
/// construction `f - normal_form(f) ` equals this sum exactly.
pub fn replay_trace(
    trace: &[RewriteStep],
    rels: &[FreePolynomial],
    alphabet: &std::sync::Arc<crate::alphabet::Alphabet>,
) -> Result<FreePolynomial> {
    let mut total = FreePolynomial::zero(alphabet);
    for step in trace {
        let part = rels[step.rel].sandwich(&step.left, &step.right).scale(&step.coeff);
        total = total.add(&part)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::poly::scalar;
    use std::sync::Arc;

    fn grassmann3() -> (Arc<Alphabet>, Vec<FreePolynomial>) {
        let a = Alphabet::standard(3);
        let mut rels = Vec::new();
        for i in 0..3 {
            let xi = a.name(i).to_string();
            rels.push(FreePolynomial::parse(&a, &format!("{xi} {xi}")).unwrap());
        }
        for i in 0..3 {
            for j in 0..i {
                let (xi, xj) = (a.name(i), a.name(j));
                rels.push(FreePolynomial::parse(&a, &format!("{xi} {xj} + {xj} {xi}")).unwrap());
            }
        }
        (a, rels)
    }

    #[test]
    fn grassmann_normal_form_kills_repeats() {
        let (a, rels) = grassmann3();
        let o = MonomialOrder::DegLex;
        let f = FreePolynomial::parse(&a, "x2 x1 x2").unwrap();
        let nf = normal_form(&f, &rels, &o).unwrap();
        assert!(nf.is_zero());
        let g = FreePolynomial::parse(&a, "x3 x1 x2").unwrap();
        let nfg = normal_form(&g, &rels, &o).unwrap();
        assert_eq!(nfg.format_with(&o), "x1 x2 x3");
    }

    #[test]
    fn trace_reconstructs_the_difference() {
        let (a, rels) = grassmann3();
        let o = MonomialOrder::DegLex;
        let f = FreePolynomial::parse(&a, "3*x2 x1 x2 + x3 x2 x1 - x1").unwrap();
        let (nf, trace) = normal_form_with_trace(&f, &rels, &o).unwrap();
        let replayed = replay_trace(&trace, &rels, &a).unwrap();
        assert_eq!(f.sub(&nf).unwrap(), replayed);
    }

    #[test]
    fn rewritten_monomials_strictly_decrease() {
        let (a, rels) = grassmann3();
        let o = MonomialOrder::DegLex;
        let f = FreePolynomial::parse(&a, "x3 x3 x2 x1 + x2 x1 x2 + 2*x2 x2").unwrap();
        let (_, trace) = normal_form_with_trace(&f, &rels, &o).unwrap();
        for pair in trace.windows(2) {
            assert_eq!(
                o.compare(&pair[1].reduced, &pair[0].reduced),
                std::cmp::Ordering::Less
            );
        }
    }

    #[test]
    fn non_monic_relations_are_rejected() {
        let a = Alphabet::standard(2);
        let o = MonomialOrder::DegLex;
        let bad = vec![FreePolynomial::parse(&a, "2*x2 x1").unwrap()];
        let f = FreePolynomial::parse(&a, "x2 x1").unwrap();
        assert_eq!(normal_form(&f, &bad, &o), Err(Error::NonMonic(0)));
    }

    #[test]
    fn shirshov_lex_cannot_reduce() {
        let a = Alphabet::standard(2);
        let rels = vec![FreePolynomial::parse(&a, "x2 x1").unwrap()];
        let f = FreePolynomial::parse(&a, "x2 x1").unwrap();
        assert!(normal_form(&f, &rels, &MonomialOrder::ShirshovLex).is_err());
    }

    #[test]
    fn smallest_leading_word_wins_ties_by_index() {
        let a = Alphabet::standard(2);
        let o = MonomialOrder::DegLex;
        // both relations apply to x2 x1 x1; x2 x1 is the smaller leading word
        let rels = vec![
            FreePolynomial::parse(&a, "x2 x1 x1").unwrap(),
            FreePolynomial::parse(&a, "x2 x1 - x1 x2").unwrap(),
        ];
        let f = FreePolynomial::parse(&a, "x2 x1 x1").unwrap();
        let (_, trace) = normal_form_with_trace(&f, &rels, &o).unwrap();
        assert_eq!(trace[0].rel, 1);
        assert_eq!(scalar(1), trace[0].coeff);
    }
}
