//! Finitely presented algebras, Lie algebras, commutative rings, semigroups
//! and groups, with a JSON exchange format.
//!
//! Relation orientation is never trusted from a file: every relation is
//! re-oriented (lhs - rhs made monic) under the presentation's order on load.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::alphabet::{Alphabet, Word};
use crate::commutative::CommutativePolynomial;
use crate::error::{Error, Result};
use crate::gsb::{shirshov_complete, CompletionStatus, Limits};
use crate::liegsb;
use crate::lyndon::{lie_recognize, parse_lie_polynomial, LieElement};
use crate::order::{CommutativeOrder, MonomialOrder};
use crate::poly::FreePolynomial;
use crate::reduce::normal_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationKind {
    Algebra,
    Lie,
    Commutative,
    Semigroup,
    Group,
}

impl PresentationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PresentationKind::Algebra => "algebra",
            PresentationKind::Lie => "lie",
            PresentationKind::Commutative => "commutative",
            PresentationKind::Semigroup => "semigroup",
            PresentationKind::Group => "group",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "algebra" => Ok(PresentationKind::Algebra),
            "lie" => Ok(PresentationKind::Lie),
            "commutative" => Ok(PresentationKind::Commutative),
            "semigroup" => Ok(PresentationKind::Semigroup),
            "group" => Ok(PresentationKind::Group),
            other => Err(Error::Parse(format!("unknown presentation kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Relations {
    Free(Vec<FreePolynomial>),
    Lie(Vec<LieElement>),
    Commutative(Vec<CommutativePolynomial>),
    /// Word pairs of a monoid presentation, oriented on demand.
    Pairs(Vec<(Word, Word)>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Presentation {
    pub alphabet: Arc<Alphabet>,
    pub kind: PresentationKind,
    pub order: MonomialOrder,
    pub comm_order: CommutativeOrder,
    pub relations: Relations,
    /// Relations with equal sides, dropped during orientation.
    pub dropped: Vec<(String, String)>,
    /// Raw lhs/rhs texts as loaded, for faithful re-serialization.
    raw_relations: Vec<(String, String)>,
}

/// Orients word pairs into monic binomials u - v; pairs with equal sides are
/// returned separately instead of becoming zero relations.
pub fn semigroup_to_algebra(
    alphabet: &Arc<Alphabet>,
    pairs: &[(Word, Word)],
    order: &MonomialOrder,
) -> Result<(Vec<FreePolynomial>, Vec<(Word, Word)>)> {
    let mut polys = Vec::new();
    let mut dropped = Vec::new();
    for (u, v) in pairs {
        alphabet.check_word(u)?;
        alphabet.check_word(v)?;
        if u == v {
            dropped.push((u.clone(), v.clone()));
            continue;
        }
        let p = FreePolynomial::from_word(alphabet, u.clone())
            .sub(&FreePolynomial::from_word(alphabet, v.clone()))?;
        polys.push(p.monic(order)?);
    }
    Ok((polys, dropped))
}

impl Presentation {
    pub fn new_pairs(
        alphabet: Arc<Alphabet>,
        kind: PresentationKind,
        order: MonomialOrder,
        pairs: Vec<(Word, Word)>,
    ) -> Result<Self> {
        if !matches!(kind, PresentationKind::Semigroup | PresentationKind::Group) {
            return Err(Error::Invalid("word-pair relations need a monoid kind".into()));
        }
        let raw = pairs
            .iter()
            .map(|(u, v)| (alphabet.format_word(u), alphabet.format_word(v)))
            .collect();
        Ok(Presentation {
            alphabet,
            kind,
            order,
            comm_order: CommutativeOrder::DegLex,
            relations: Relations::Pairs(pairs),
            dropped: Vec::new(),
            raw_relations: raw,
        })
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
        Self::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let gens: Vec<String> = as_string_list(v.get("generators"), "generators")?;
        let kind = PresentationKind::parse(as_str(v.get("kind"), "kind")?)?;
        let order_obj = v.get("order").ok_or_else(|| Error::Parse("missing order".into()))?;
        let order_type = as_str(order_obj.get("type"), "order.type")?;
        let precedence = match order_obj.get("precedence") {
            None | Some(Value::Null) => gens.clone(),
            Some(p) => as_string_list(Some(p), "order.precedence")?,
        };
        {
            let mut sorted_a = gens.clone();
            let mut sorted_b = precedence.clone();
            sorted_a.sort();
            sorted_b.sort();
            if sorted_a != sorted_b {
                return Err(Error::Parse(
                    "order.precedence must list exactly the generators".into(),
                ));
            }
        }
        let mut names = precedence;
        if kind == PresentationKind::Group {
            let inverses: Vec<String> = names.iter().map(|n| format!("{n}_inv")).collect();
            names.extend(inverses);
        }
        let alphabet = Alphabet::new(names)?;
        let comm_order = match order_type {
            "lex" => CommutativeOrder::Lex,
            _ => CommutativeOrder::DegLex,
        };
        let order = match order_type {
            "deglex" => MonomialOrder::DegLex,
            "eps" => MonomialOrder::Eps(CommutativeOrder::DegLex),
            "eps_lex" => MonomialOrder::Eps(CommutativeOrder::Lex),
            "lex" if kind == PresentationKind::Commutative => MonomialOrder::DegLex,
            other => {
                return Err(Error::Parse(format!("unknown order type {other:?}")))
            }
        };
        let rel_list = v
            .get("relations")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing relations".into()))?;
        let mut raw: Vec<(String, String)> = Vec::new();
        for r in rel_list {
            let lhs = as_str(r.get("lhs"), "relation lhs")?.to_string();
            let rhs = as_str(r.get("rhs"), "relation rhs")?.to_string();
            raw.push((lhs, rhs));
        }
        let mut dropped = Vec::new();
        let relations = match kind {
            PresentationKind::Algebra => {
                let mut polys = Vec::new();
                for (lhs, rhs) in &raw {
                    let p = FreePolynomial::parse(&alphabet, lhs)?
                        .sub(&FreePolynomial::parse(&alphabet, rhs)?)?;
                    if p.is_zero() {
                        dropped.push((lhs.clone(), rhs.clone()));
                    } else {
                        polys.push(p.monic(&order)?);
                    }
                }
                Relations::Free(polys)
            }
            PresentationKind::Lie => {
                let mut elems = Vec::new();
                for (lhs, rhs) in &raw {
                    let p = parse_lie_polynomial(&alphabet, lhs)?
                        .sub(&parse_lie_polynomial(&alphabet, rhs)?)?;
                    if p.is_zero() {
                        dropped.push((lhs.clone(), rhs.clone()));
                    } else {
                        elems.push(lie_recognize(&p)?.monic()?);
                    }
                }
                Relations::Lie(elems)
            }
            PresentationKind::Commutative => {
                let mut polys = Vec::new();
                for (lhs, rhs) in &raw {
                    let p = CommutativePolynomial::parse(&alphabet, lhs)?
                        .sub(&CommutativePolynomial::parse(&alphabet, rhs)?)?;
                    if p.is_zero() {
                        dropped.push((lhs.clone(), rhs.clone()));
                    } else {
                        polys.push(p.monic(&comm_order)?);
                    }
                }
                Relations::Commutative(polys)
            }
            PresentationKind::Semigroup | PresentationKind::Group => {
                let mut pairs = Vec::new();
                for (lhs, rhs) in &raw {
                    pairs.push((alphabet.parse_word(lhs)?, alphabet.parse_word(rhs)?));
                }
                if kind == PresentationKind::Group {
                    let n = alphabet.len() / 2;
                    for g in 0..n {
                        let ginv = n + g;
                        pairs.push((Word::new(vec![g, ginv]), Word::empty()));
                        pairs.push((Word::new(vec![ginv, g]), Word::empty()));
                        raw.push((
                            format!("{} {}", alphabet.name(g), alphabet.name(ginv)),
                            "1".into(),
                        ));
                        raw.push((
                            format!("{} {}", alphabet.name(ginv), alphabet.name(g)),
                            "1".into(),
                        ));
                    }
                }
                Relations::Pairs(pairs)
            }
        };
        Ok(Presentation {
            alphabet,
            kind,
            order,
            comm_order,
            relations,
            dropped: dropped.clone(),
            raw_relations: raw,
        })
    }

    pub fn to_json(&self) -> Value {
        let order_type = match (self.kind, &self.order, &self.comm_order) {
            (PresentationKind::Commutative, _, CommutativeOrder::Lex) => "lex",
            (PresentationKind::Commutative, _, CommutativeOrder::DegLex) => "deglex",
            (_, MonomialOrder::Eps(CommutativeOrder::DegLex), _) => "eps",
            (_, MonomialOrder::Eps(CommutativeOrder::Lex), _) => "eps_lex",
            _ => "deglex",
        };
        json!({
            "generators": self.alphabet.names(),
            "order": {"type": order_type, "precedence": self.alphabet.names()},
            "kind": self.kind.as_str(),
            "relations": self.raw_relations.iter().map(|(lhs, rhs)| {
                json!({"lhs": lhs, "rhs": rhs})
            }).collect::<Vec<_>>(),
        })
    }

    /// The presentation's defining relations as oriented monic polynomials of
    /// the free algebra (Lie relations expand, commutative kinds refuse).
    pub fn algebra_relations(&self) -> Result<Vec<FreePolynomial>> {
        match &self.relations {
            Relations::Free(polys) => Ok(polys.clone()),
            Relations::Lie(elems) => elems.iter().map(|e| e.expand()).collect(),
            Relations::Pairs(pairs) => {
                Ok(semigroup_to_algebra(&self.alphabet, pairs, &self.order)?.0)
            }
            Relations::Commutative(_) => Err(Error::Invalid(
                "a commutative presentation has no free-algebra relations; lift it first".into(),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordProblemAnswer {
    Equal,
    NotEqual,
    Unknown,
}

impl WordProblemAnswer {
    pub fn as_str(&self) -> &'static str {
        match self {
            WordProblemAnswer::Equal => "equal",
            WordProblemAnswer::NotEqual => "not_equal",
            WordProblemAnswer::Unknown => "unknown",
        }
    }
}

/// Decides u = v in the presented monoid when possible. Equal normal forms
/// under the partial completion prove equality outright. A NotEqual verdict
/// additionally needs every ambiguity of word length at most
/// 2*max(|u|,|v|) processed, which the completion status certifies;
/// otherwise the answer is Unknown.
pub fn word_problem(
    p: &Presentation,
    u: &Word,
    v: &Word,
    limits: Limits,
) -> Result<WordProblemAnswer> {
    let Relations::Pairs(_) = &p.relations else {
        return Err(Error::Invalid("the word problem needs a monoid presentation".into()));
    };
    p.alphabet.check_word(u)?;
    p.alphabet.check_word(v)?;
    let rels = p.algebra_relations()?;
    let completion = shirshov_complete(&rels, &p.order, limits)?;
    let fu = FreePolynomial::from_word(&p.alphabet, u.clone());
    let fv = FreePolynomial::from_word(&p.alphabet, v.clone());
    let nu = normal_form(&fu, &completion.basis, &p.order)?;
    let nv = normal_form(&fv, &completion.basis, &p.order)?;
    if nu == nv {
        return Ok(WordProblemAnswer::Equal);
    }
    let radius = 2 * u.len().max(v.len());
    let certified = match completion.status {
        CompletionStatus::Complete => true,
        CompletionStatus::DegreeBounded(d) => radius <= d,
        CompletionStatus::StepBounded(_) => false,
    };
    Ok(if certified { WordProblemAnswer::NotEqual } else { WordProblemAnswer::Unknown })
}

/// The Chinese monoid relations on n generators, all for i > j > k:
/// (1) x_i x_j x_k = x_j x_i x_k     (2) x_i x_k x_j = x_j x_i x_k
/// (3) x_i x_j x_j = x_j x_i x_j     (4) x_i x_i x_j = x_i x_j x_i
/// (5) x_i x_j x_i x_k = x_i x_k x_i x_j
/// with (3), (4) for every i > j.
pub fn chinese_relations(n: usize) -> Result<Presentation> {
    let alphabet = Alphabet::standard(n);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..i {
            for k in 0..j {
                pairs.push((Word::new(vec![i, j, k]), Word::new(vec![j, i, k])));
                pairs.push((Word::new(vec![i, k, j]), Word::new(vec![j, i, k])));
            }
        }
    }
    for i in 0..n {
        for j in 0..i {
            pairs.push((Word::new(vec![i, j, j]), Word::new(vec![j, i, j])));
            pairs.push((Word::new(vec![i, i, j]), Word::new(vec![i, j, i])));
        }
    }
    for i in 0..n {
        for j in 0..i {
            for k in 0..j {
                pairs.push((Word::new(vec![i, j, i, k]), Word::new(vec![i, k, i, j])));
            }
        }
    }
    Presentation::new_pairs(alphabet, PresentationKind::Semigroup, MonomialOrder::DegLex, pairs)
}

/// The plactic monoid presentation by Knuth relations on n generators.
pub fn knuth_presentation(n: usize) -> Result<Presentation> {
    let alphabet = Alphabet::standard(n);
    let pairs = crate::plactic::knuth_relations(&alphabet);
    Presentation::new_pairs(alphabet, PresentationKind::Semigroup, MonomialOrder::DegLex, pairs)
}

/// Normal form of a word in the Chinese monoid of rank n, computed by
/// rewriting with the oriented relations (a closed set under DegLex).
pub fn chinese_normal_form(w: &Word, n: usize) -> Result<Word> {
    let p = chinese_relations(n)?;
    p.alphabet.check_word(w)?;
    let rels = p.algebra_relations()?;
    let f = FreePolynomial::from_word(&p.alphabet, w.clone());
    let nf = normal_form(&f, &rels, &p.order)?;
    let mut terms = nf.terms();
    match (terms.next(), terms.next()) {
        (Some((word, c)), None) if c == &crate::poly::Scalar::from_integer(1.into()) => {
            Ok(word.clone())
        }
        _ => Err(Error::Invalid("binomial rewriting left a non-word".into())),
    }
}

/// The staircase shape w_1 w_2 ... w_n with
/// w_i = (x_i x_1)^{t_i1} (x_i x_2)^{t_i2} ... x_i^{t_ii}; exactly the
/// irreducible words of the Chinese relations.
pub fn lambda_shape(w: &Word, n: usize) -> bool {
    let letters = w.letters();
    if letters.iter().any(|&l| l >= n) {
        return false;
    }
    let mut pos = 0usize;
    for i in 0..n {
        for j in 0..i {
            while pos + 1 < letters.len() && letters[pos] == i && letters[pos + 1] == j {
                pos += 2;
            }
        }
        while pos < letters.len()
            && letters[pos] == i
            && (pos + 1 >= letters.len() || letters[pos + 1] >= i)
        {
            pos += 1;
        }
    }
    pos == letters.len()
}

/// The Drinfeld-Kohno Lie algebra L_n on generators t_ij, 1 <= i < j <= n-1,
/// ordered t_ij < t_kl iff i < k or (i = k and j < l). Relations:
/// [t_ij, t_kl] = 0 for disjoint index pairs with k < i < j,
/// [t_jk, t_ij] + [t_ik, t_ij] = 0 and [t_jk, t_ik] - [t_ik, t_ij] = 0
/// for i < j < k.
pub fn drinfeld_kohno(n: usize) -> Result<(Arc<Alphabet>, Vec<LieElement>)> {
    if n < 3 {
        return Err(Error::Invalid("the Drinfeld-Kohno algebra needs n >= 3".into()));
    }
    let m = n - 1;
    let mut names = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            names.push(format!("t{i}{j}"));
        }
    }
    let alphabet = Alphabet::new(names)?;
    let t = |i: usize, j: usize| -> FreePolynomial {
        let name = format!("t{i}{j}");
        let r = alphabet.rank_of(&name).expect("generator exists");
        FreePolynomial::from_word(&alphabet, Word::single(r))
    };
    let mut rels = Vec::new();
    // commuting pairs: [t_ij, t_kl] with k < i < j, k < l, l not in {i, j}
    for k in 1..=m {
        for l in k + 1..=m {
            for i in k + 1..=m {
                for j in i + 1..=m {
                    if l != i && l != j {
                        rels.push(t(i, j).lie_bracket(&t(k, l))?);
                    }
                }
            }
        }
    }
    for i in 1..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                rels.push(t(j, k).lie_bracket(&t(i, j))?.add(&t(i, k).lie_bracket(&t(i, j))?)?);
                rels.push(t(j, k).lie_bracket(&t(i, k))?.sub(&t(i, k).lie_bracket(&t(i, j))?)?);
            }
        }
    }
    let elems: Vec<LieElement> = rels
        .iter()
        .map(|p| Ok(lie_recognize(p)?.monic()?))
        .collect::<Result<_>>()?;
    Ok((alphabet, elems))
}

/// Graded dimensions (degrees 1..=max) of the quotient of the free Lie
/// algebra by a closed set, read off from the irreducible NLSWs.
pub fn lie_graded_dimensions(
    alphabet: &Arc<Alphabet>,
    rels: &[LieElement],
    max_degree: usize,
) -> Result<Vec<usize>> {
    let trees = liegsb::lie_irr(alphabet, rels, max_degree)?;
    let mut dims = vec![0usize; max_degree];
    for t in trees {
        dims[t.degree() - 1] += 1;
    }
    Ok(dims)
}

fn as_str<'a>(v: Option<&'a Value>, what: &str) -> Result<&'a str> {
    v.and_then(Value::as_str)
        .ok_or_else(|| Error::Parse(format!("missing or non-string {what}")))
}

fn as_string_list(v: Option<&Value>, what: &str) -> Result<Vec<String>> {
    let arr = v
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("missing or non-list {what}")))?;
    arr.iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("non-string entry in {what}")))
        })
        .collect()
}
