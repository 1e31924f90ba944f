//! Commutative polynomial rings, Buchberger's algorithm, and the lift of a
//! commutative Gröbner basis to a noncommutative Gröbner-Shirshov basis.
//!
//! The lift sends each commutative generator s to the family
//! delta(u*s) for u in its companion set, and adjoins the commutators
//! x_i x_j - x_j x_i (i > j); the result is closed under composition for the
//! eps order, which compares commutative images first.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::sync::Arc;

use num::{One, Signed, Zero};
use serde_json::json;

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};
use crate::gsb::{CompletionStatus, Limits};
use crate::order::{CommutativeOrder, CommutativeOrder::DegLex as CommDegLex, MonomialOrder};
use crate::poly::{format_scalar, parse_scalar, parse_signed_term_strings, FreePolynomial, Scalar};

pub type Exponents = Vec<u32>;

pub fn exp_total_degree(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

pub fn exp_divides(d: &[u32], m: &[u32]) -> bool {
    d.iter().zip(m.iter()).all(|(a, b)| a <= b) && d.len() == m.len()
}

pub fn exp_lcm(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

pub fn exp_sub(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b.iter()).map(|(x, y)| x - y).collect()
}

pub fn exp_add(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b.iter()).map(|(x, y)| x + y).collect()
}

pub fn exp_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutativePolynomial {
    alphabet: Arc<Alphabet>,
    terms: BTreeMap<Exponents, Scalar>,
}

impl CommutativePolynomial {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        CommutativePolynomial { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn from_terms(
        alphabet: &Arc<Alphabet>,
        terms: impl IntoIterator<Item = (Exponents, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        for (e, c) in terms {
            if e.len() != alphabet.len() {
                return Err(Error::AlphabetMismatch(format!(
                    "exponent vector of length {} in a {}-variable ring",
                    e.len(),
                    alphabet.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn n_vars(&self) -> usize {
        self.alphabet.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, e: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let cur = self.terms.entry(e).or_insert_with(Scalar::zero);
        *cur += c;
        if cur.is_zero() {
            let key: Vec<Exponents> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in key {
                self.terms.remove(&k);
            }
        }
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch("polynomials live in different rings".into()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut p = self.clone();
        for (e, c) in other.terms() {
            p.add_term(e.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut p = Self::zero(&self.alphabet);
        for (e, c) in self.terms() {
            p.terms.insert(e.clone(), -c.clone());
        }
        p
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        let mut p = Self::zero(&self.alphabet);
        for (e, a) in self.terms() {
            p.terms.insert(e.clone(), a * c);
        }
        p
    }

    pub fn mul_monomial(&self, m: &[u32], c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.alphabet);
        }
        let mut p = Self::zero(&self.alphabet);
        for (e, a) in self.terms() {
            p.terms.insert(exp_add(e, m), a * c);
        }
        p
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let mut p = Self::zero(&self.alphabet);
        for (e, a) in self.terms() {
            for (f, b) in other.terms() {
                p.add_term(exp_add(e, f), a * b);
            }
        }
        Ok(p)
    }

    pub fn leading(&self, order: &CommutativeOrder) -> Result<(Exponents, Scalar)> {
        let mut best: Option<&Exponents> = None;
        for e in self.terms.keys() {
            best = Some(match best {
                None => e,
                Some(b) => {
                    if order.compare_exponents(b, e) == std::cmp::Ordering::Less {
                        e
                    } else {
                        b
                    }
                }
            });
        }
        match best {
            None => Err(Error::ZeroPolynomial),
            Some(e) => Ok((e.clone(), self.terms[e].clone())),
        }
    }

    pub fn is_monic(&self, order: &CommutativeOrder) -> bool {
        matches!(self.leading(order), Ok((_, c)) if c.is_one())
    }

    pub fn monic(&self, order: &CommutativeOrder) -> Result<Self> {
        let (_, c) = self.leading(order)?;
        Ok(self.scale(&c.recip()))
    }

    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        for (sign, term) in parse_signed_term_strings(text)? {
            let (c, e) = parse_comm_term(alphabet, &term)?;
            p.add_term(e, if sign { -c } else { c });
        }
        Ok(p)
    }

    pub fn format_monomial(alphabet: &Alphabet, e: &[u32]) -> String {
        if e.iter().all(|&x| x == 0) {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &x) in e.iter().enumerate() {
            if x == 1 {
                parts.push(alphabet.name(i).to_string());
            } else if x > 1 {
                parts.push(format!("{}^{}", alphabet.name(i), x));
            }
        }
        parts.join(" ")
    }

    pub fn format_with(&self, order: &CommutativeOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut exps: Vec<&Exponents> = self.terms.keys().collect();
        exps.sort_by(|a, b| order.compare_exponents(b, a));
        let mut out = String::new();
        for (i, e) in exps.iter().enumerate() {
            let c = &self.terms[*e];
            let mag = c.abs();
            let body = if e.iter().all(|&x| x == 0) {
                format_scalar(&mag)
            } else if mag.is_one() {
                Self::format_monomial(&self.alphabet, e)
            } else {
                format!("{}*{}", format_scalar(&mag), Self::format_monomial(&self.alphabet, e))
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

impl std::fmt::Display for CommutativePolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.format_with(&CommDegLex))
    }
}

pub fn parse_comm_monomial(alphabet: &Alphabet, text: &str) -> Result<Exponents> {
    let mut e = vec![0u32; alphabet.len()];
    let text = text.trim();
    if text == "1" {
        return Ok(e);
    }
    for tok in text.split_whitespace() {
        let (name, exp) = match tok.split_once('^') {
            Some((n, x)) => {
                let exp: u32 = x
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
                (n, exp)
            }
            None => (tok, 1),
        };
        match alphabet.rank_of(name) {
            Some(r) => e[r] += exp,
            None => return Err(Error::Parse(format!("unknown variable {name:?}"))),
        }
    }
    Ok(e)
}

fn parse_comm_term(alphabet: &Alphabet, term: &str) -> Result<(Scalar, Exponents)> {
    if let Some((c, m)) = term.split_once('*') {
        return Ok((parse_scalar(c)?, parse_comm_monomial(alphabet, m)?));
    }
    if let Ok(c) = parse_scalar(term) {
        return Ok((c, vec![0u32; alphabet.len()]));
    }
    Ok((Scalar::one(), parse_comm_monomial(alphabet, term)?))
}

/// Division by monic relations: largest reducible monomial first, among
/// divisors the one with the smallest leading monomial, ties by index.
pub fn comm_normal_form(
    f: &CommutativePolynomial,
    rels: &[CommutativePolynomial],
    order: &CommutativeOrder,
) -> Result<CommutativePolynomial> {
    let mut leads = Vec::with_capacity(rels.len());
    for (i, s) in rels.iter().enumerate() {
        if !s.is_monic(order) {
            return Err(Error::NonMonic(i));
        }
        leads.push(s.leading(order)?.0);
    }
    let pick = |e: &Exponents| -> Option<usize> {
        let mut best: Option<usize> = None;
        for (i, le) in leads.iter().enumerate() {
            if exp_divides(le, e) {
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        if order.compare_exponents(le, &leads[b]) == std::cmp::Ordering::Less {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
        }
        best
    };
    let mut h = f.clone();
    loop {
        let mut target: Option<Exponents> = None;
        for e in h.terms.keys() {
            if pick(e).is_some() {
                target = Some(match target {
                    None => e.clone(),
                    Some(t) => {
                        if order.compare_exponents(&t, e) == std::cmp::Ordering::Less {
                            e.clone()
                        } else {
                            t
                        }
                    }
                });
            }
        }
        let Some(u) = target else { break };
        let i = pick(&u).expect("target divisible");
        let c = h.coefficient(&u);
        let q = exp_sub(&u, &leads[i]);
        h = h.sub(&rels[i].mul_monomial(&q, &c))?;
    }
    Ok(h)
}

/// The s-polynomial at w = lcm of the leading monomials; `None` is the zero
/// marker for coprime leading monomials.
pub fn s_polynomial(
    f: &CommutativePolynomial,
    g: &CommutativePolynomial,
    order: &CommutativeOrder,
) -> Result<Option<CommutativePolynomial>> {
    let (lf, cf) = f.leading(order)?;
    let (lg, cg) = g.leading(order)?;
    if exp_coprime(&lf, &lg) {
        return Ok(None);
    }
    let w = exp_lcm(&lf, &lg);
    let a = exp_sub(&w, &lf);
    let b = exp_sub(&w, &lg);
    let one = Scalar::one();
    Ok(Some(
        f.mul_monomial(&a, &(&one / &cf))
            .sub(&g.mul_monomial(&b, &(&one / &cg)))?,
    ))
}

#[derive(Debug, Clone)]
pub struct SPolyRecord {
    pub i: usize,
    pub j: usize,
    pub w: Exponents,
    pub coprime: bool,
    pub residue: CommutativePolynomial,
    pub trivial: bool,
}

#[derive(Debug, Clone)]
pub struct CommReport {
    pub relations: Vec<CommutativePolynomial>,
    pub records: Vec<SPolyRecord>,
    pub verdict: bool,
}

impl CommReport {
    pub fn to_json(&self, alphabet: &Alphabet, order: &CommutativeOrder) -> serde_json::Value {
        json!({
            "representation": "commutative",
            "relations": self.relations.iter().map(|r| r.format_with(order)).collect::<Vec<_>>(),
            "ambiguities": self.records.iter().map(|r| json!({
                "kind": "s_polynomial",
                "w": CommutativePolynomial::format_monomial(alphabet, &r.w),
                "i": r.i,
                "j": r.j,
                "coprime": r.coprime,
                "residue": r.residue.format_with(order),
                "trivial": r.trivial,
            })).collect::<Vec<_>>(),
            "verdict": self.verdict,
        })
    }
}

pub fn check_groebner(
    rels: &[CommutativePolynomial],
    order: &CommutativeOrder,
) -> Result<CommReport> {
    let mut records = Vec::new();
    let mut verdict = true;
    for i in 0..rels.len() {
        for j in i + 1..rels.len() {
            let lw = exp_lcm(&rels[i].leading(order)?.0, &rels[j].leading(order)?.0);
            match s_polynomial(&rels[i], &rels[j], order)? {
                None => records.push(SPolyRecord {
                    i,
                    j,
                    w: lw,
                    coprime: true,
                    residue: CommutativePolynomial::zero(rels[i].alphabet()),
                    trivial: true,
                }),
                Some(sp) => {
                    let monic_rels: Vec<CommutativePolynomial> =
                        rels.iter().map(|r| r.monic(order)).collect::<Result<_>>()?;
                    let residue = comm_normal_form(&sp, &monic_rels, order)?;
                    let trivial = residue.is_zero();
                    verdict &= trivial;
                    records.push(SPolyRecord { i, j, w: lw, coprime: false, residue, trivial });
                }
            }
        }
    }
    Ok(CommReport { relations: rels.to_vec(), records, verdict })
}

pub fn comm_interreduce(
    rels: &[CommutativePolynomial],
    order: &CommutativeOrder,
) -> Result<Vec<CommutativePolynomial>> {
    let mut set: Vec<CommutativePolynomial> = Vec::new();
    for r in rels {
        if !r.is_zero() {
            set.push(r.monic(order)?);
        }
    }
    loop {
        set.sort_by(|p, q| {
            order.compare_exponents(
                &p.leading(order).expect("nonzero").0,
                &q.leading(order).expect("nonzero").0,
            )
        });
        set.dedup();
        let mut changed = false;
        let mut next: Vec<CommutativePolynomial> = Vec::new();
        for i in 0..set.len() {
            let mut others = next.clone();
            others.extend_from_slice(&set[i + 1..]);
            let r = comm_normal_form(&set[i], &others, order)?;
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
        order.compare_exponents(
            &p.leading(order).expect("nonzero").0,
            &q.leading(order).expect("nonzero").0,
        )
    });
    Ok(set)
}

#[derive(Debug, Clone)]
pub struct CommCompletionResult {
    pub basis: Vec<CommutativePolynomial>,
    pub status: CompletionStatus,
    pub rounds: usize,
    pub added: usize,
}

impl CommCompletionResult {
    pub fn to_json(&self, order: &CommutativeOrder) -> serde_json::Value {
        json!({
            "basis": self.basis.iter().map(|p| p.format_with(order)).collect::<Vec<_>>(),
            "status": self.status.to_json(),
            "rounds": self.rounds,
            "added": self.added,
        })
    }
}

/// Buchberger completion, mirroring the noncommutative round structure.
/// Coprime pairs are dropped outright; lcm monomials above the degree bound
/// are skipped and taint the final status.
pub fn buchberger(
    rels: &[CommutativePolynomial],
    order: &CommutativeOrder,
    limits: Limits,
) -> Result<CommCompletionResult> {
    let mut basis = comm_interreduce(rels, order)?;
    let mut skipped = false;
    let mut steps = 0usize;
    let mut rounds = 0usize;
    let mut added = 0usize;
    loop {
        rounds += 1;
        let snapshot = basis.clone();
        let mut pairs: Vec<(usize, usize, Exponents)> = Vec::new();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                let li = snapshot[i].leading(order)?.0;
                let lj = snapshot[j].leading(order)?.0;
                if !exp_coprime(&li, &lj) {
                    pairs.push((i, j, exp_lcm(&li, &lj)));
                }
            }
        }
        pairs.sort_by(|(_, _, x), (_, _, y)| order.compare_exponents(x, y));
        let mut added_this_round = 0usize;
        for (i, j, w) in pairs {
            if exp_total_degree(&w) as usize > limits.max_degree {
                skipped = true;
                continue;
            }
            if steps >= limits.max_steps {
                return Ok(CommCompletionResult {
                    basis: comm_interreduce(&basis, order)?,
                    status: CompletionStatus::StepBounded(limits.max_steps),
                    rounds,
                    added,
                });
            }
            steps += 1;
            let sp = s_polynomial(&snapshot[i], &snapshot[j], order)?.expect("non-coprime");
            let residue = comm_normal_form(&sp, &basis, order)?;
            if !residue.is_zero() {
                basis.push(residue.monic(order)?);
                added_this_round += 1;
                added += 1;
            }
        }
        basis = comm_interreduce(&basis, order)?;
        if added_this_round == 0 {
            break;
        }
    }
    let status = if skipped {
        CompletionStatus::DegreeBounded(limits.max_degree)
    } else {
        CompletionStatus::Complete
    };
    Ok(CommCompletionResult { basis, status, rounds, added })
}

pub fn reduced_groebner(
    rels: &[CommutativePolynomial],
    order: &CommutativeOrder,
) -> Result<Vec<CommutativePolynomial>> {
    if !check_groebner(rels, order)?.verdict {
        return Err(Error::NotClosed);
    }
    comm_interreduce(rels, order)
}

/// Commutative image of a word.
pub fn gamma(w: &Word, n_vars: usize) -> Result<Exponents> {
    if let Some(&l) = w.letters().iter().find(|&&l| l >= n_vars) {
        return Err(Error::AlphabetMismatch(format!(
            "letter index {l} out of range for {n_vars} variables"
        )));
    }
    let mut e = vec![0u32; n_vars];
    for &l in w.letters() {
        e[l] += 1;
    }
    Ok(e)
}

/// Lexicographic splitting: the non-decreasing word with commutative image e.
pub fn delta_split(e: &[u32]) -> Word {
    let mut letters = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        letters.extend(std::iter::repeat(i).take(x as usize));
    }
    Word::new(letters)
}

/// Applies delta termwise; every commutative monomial becomes the
/// non-decreasing word with the same content.
pub fn delta_lift(p: &CommutativePolynomial) -> Result<FreePolynomial> {
    FreePolynomial::from_terms(
        p.alphabet(),
        p.terms().map(|(e, c)| (delta_split(e), c.clone())),
    )
}

/// The companion set of the monomial m (support x_{i1} <= ... <= x_{ir}):
/// monomials u over the letters strictly between i1 and ir such that neither
/// u * (m / x_{i1}) nor u * (m / x_{ir}) lies in the monomial ideal spanned by
/// `leads`. The set is closed under divisors, so a breadth-first walk from 1
/// enumerates it; an exponent passing `cap` signals an infinite set.
pub fn companion_set(m: &[u32], leads: &[Exponents], cap: u32) -> Result<Vec<Exponents>> {
    let n = m.len();
    let in_ideal = |e: &Exponents| leads.iter().any(|l| exp_divides(l, e));
    let i1 = m.iter().position(|&x| x > 0);
    let Some(i1) = i1 else {
        return Err(Error::Invalid("companion set of the unit monomial".into()));
    };
    let ir = m.iter().rposition(|&x| x > 0).expect("nonzero");
    let mut drop_min = m.to_vec();
    drop_min[i1] -= 1;
    let mut drop_max = m.to_vec();
    drop_max[ir] -= 1;
    let window: Vec<usize> = (i1 + 1..ir).collect();
    let ok = |u: &Exponents| {
        !in_ideal(&exp_add(u, &drop_min)) && !in_ideal(&exp_add(u, &drop_max))
    };
    let unit = vec![0u32; n];
    if !ok(&unit) {
        return Ok(Vec::new());
    }
    let mut seen: BTreeSet<Exponents> = BTreeSet::new();
    let mut queue: VecDeque<Exponents> = VecDeque::new();
    seen.insert(unit.clone());
    queue.push_back(unit);
    while let Some(u) = queue.pop_front() {
        for &l in &window {
            let mut v = u.clone();
            v[l] += 1;
            if v[l] > cap {
                return Err(Error::InfiniteCompanionSet(
                    CommutativePolynomial::format_monomial(
                        &Alphabet::standard(n),
                        m,
                    ),
                    cap,
                ));
            }
            if !seen.contains(&v) && ok(&v) {
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

pub const DEFAULT_COMPANION_CAP: u32 = 64;

/// Lifts a commutative Gröbner basis to a set closed under composition for
/// the eps order: first canonicalizes to the reduced Gröbner basis, then for
/// each element s emits delta(u*s) over its companion set, plus the
/// commutators x_i x_j - x_j x_i for i > j.
pub fn eps_lift(
    rels: &[CommutativePolynomial],
    order: &CommutativeOrder,
    cap: u32,
) -> Result<Vec<FreePolynomial>> {
    if rels.is_empty() {
        return Err(Error::Invalid("eps lift of an empty basis".into()));
    }
    let alphabet = rels[0].alphabet().clone();
    let reduced = reduced_groebner(rels, order)?;
    let leads: Vec<Exponents> = reduced
        .iter()
        .map(|r| Ok(r.leading(order)?.0))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for s in &reduced {
        let m = s.leading(order)?.0;
        for u in companion_set(&m, &leads, cap)? {
            out.push(delta_lift(&s.mul_monomial(&u, &Scalar::one()))?);
        }
    }
    for i in 0..alphabet.len() {
        for j in 0..i {
            let xi = FreePolynomial::from_word(&alphabet, Word::single(i));
            let xj = FreePolynomial::from_word(&alphabet, Word::single(j));
            out.push(xi.lie_bracket(&xj)?);
        }
    }
    let eps = MonomialOrder::Eps(*order);
    let mut keyed: Vec<(Word, FreePolynomial)> = out
        .into_iter()
        .map(|p| Ok((p.leading_word(&eps)?, p.monic(&eps)?)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|(u, _), (v, _)| eps.compare(u, v));
    Ok(keyed.into_iter().map(|(_, p)| p).collect())
}
