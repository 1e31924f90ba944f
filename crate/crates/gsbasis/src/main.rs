//! Command-line frontend: load a presentation, run checks, completions,
//! normal forms and enumerations, emit deterministic text or JSON.
//!
//! Exit codes: 0 success or true verdict, 1 false verdict or an unknown
//! answer, 2 input error, 3 resource limit hit.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gsbasis::alphabet::Alphabet;
use gsbasis::commutative::{
    self, buchberger, check_groebner, comm_normal_form, eps_lift, CommutativePolynomial,
    DEFAULT_COMPANION_CAP,
};
use gsbasis::error::Error;
use gsbasis::gsb::{
    check_gs_basis, irr, shirshov_complete, CompletionStatus, Limits,
};
use gsbasis::liegsb::{check_lie_gs_basis, lie_irr, lie_normal_form, pbw_shirshov_check};
use gsbasis::lyndon::{
    alsw_enumerate, cfl_bracketing, is_alsw, lie_recognize, parse_lie_polynomial,
    shirshov_factorize, standard_bracketing,
};
use gsbasis::order::MonomialOrder;
use gsbasis::plactic::{tableau_normal_form, Tableau, TableauMode};
use gsbasis::poly::FreePolynomial;
use gsbasis::presentation::{word_problem, Presentation, Relations, WordProblemAnswer};
use gsbasis::reduce::normal_form;

#[derive(Parser)]
#[command(name = "gsbasis", version, about = "Gröbner-Shirshov basis engine")]
struct Cli {
    /// Seed for randomized commands; the current commands are all
    /// deterministic, the flag is accepted so scripted runs stay uniform.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Presentation file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Override the order declared in the file (deglex | eps | eps_lex | lex).
    #[arg(long)]
    order: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Check closure under composition (Gröbner-Shirshov / Gröbner basis).
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Complete a relation set; for commutative presentations --mode lift
    /// emits the noncommutative lift instead.
    Complete {
        #[command(flatten)]
        common: Common,
        /// complete (default) or lift.
        #[arg(long, default_value = "complete")]
        mode: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Normal form of a word or polynomial modulo the presentation.
    Nf {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Irreducible words (or NLSWs) up to a length bound.
    Irr {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
    },
    /// Lyndon-Shirshov word machinery on a single word.
    Lyndon {
        /// Word, or for --mode list a word naming the generators.
        word: String,
        /// factorize (default) | bracket | cfl | check | list.
        #[arg(long, default_value = "factorize")]
        mode: String,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Degree bound for --mode list.
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Recognize a polynomial as a Lie element, or run the two-sided
    /// closure check on a Lie presentation with --mode pbw.
    Lie {
        expr: Option<String>,
        /// recognize (default) | pbw.
        #[arg(long, default_value = "recognize")]
        mode: String,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Plactic normal form of a word as a tableau.
    Tableau {
        word: String,
        /// row (default) | column.
        #[arg(long, default_value = "row")]
        mode: String,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Word problem u = v in a presented monoid.
    Wp {
        #[command(flatten)]
        common: Common,
        u: String,
        v: String,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        max_steps: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::InfiniteCompanionSet(..) => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let Cli { seed: _, command } = cli;
    match command {
        Command::Check { common } => cmd_check(&common),
        Command::Complete { common, mode, max_degree, max_steps } => {
            cmd_complete(&common, &mode, limits(max_degree, max_steps))
        }
        Command::Nf { common, expr } => cmd_nf(&common, &expr),
        Command::Irr { common, max_length } => cmd_irr(&common, max_length),
        Command::Lyndon { word, mode, input, max_length, format } => {
            cmd_lyndon(&word, &mode, input.as_deref(), max_length, format)
        }
        Command::Lie { expr, mode, input, format } => {
            cmd_lie(expr.as_deref(), &mode, input.as_deref(), format)
        }
        Command::Tableau { word, mode, input, format } => {
            cmd_tableau(&word, &mode, input.as_deref(), format)
        }
        Command::Wp { common, u, v, max_degree, max_steps } => {
            cmd_wp(&common, &u, &v, limits(max_degree, max_steps))
        }
    }
}

fn limits(max_degree: Option<usize>, max_steps: Option<usize>) -> Limits {
    let d = Limits::default();
    Limits {
        max_degree: max_degree.unwrap_or(d.max_degree),
        max_steps: max_steps.unwrap_or(d.max_steps),
    }
}

fn load(common: &Common) -> Result<Presentation, Error> {
    load_path(&common.input, common.order.as_deref())
}

fn load_path(path: &std::path::Path, order: Option<&str>) -> Result<Presentation, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let mut v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    if let Some(o) = order {
        v["order"]["type"] = json!(o);
    }
    let p = Presentation::from_json(&v)?;
    for (lhs, rhs) in &p.dropped {
        eprintln!("note: dropped trivial relation {lhs} = {rhs}");
    }
    Ok(p)
}

fn emit(format: Format, j: &Value, text: &str) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(j).expect("serializable")),
        Format::Text => println!("{text}"),
    }
}

fn cmd_check(common: &Common) -> Result<u8, Error> {
    let p = load(common)?;
    let (verdict, j, text) = match &p.relations {
        Relations::Commutative(polys) => {
            let report = check_groebner(polys, &p.comm_order)?;
            let text = report_text(
                report.verdict,
                report.records.iter().filter(|r| !r.trivial).map(|r| {
                    format!(
                        "s-polynomial of relations {} and {} leaves residue {}",
                        r.i,
                        r.j,
                        r.residue.format_with(&p.comm_order)
                    )
                }),
            );
            (report.verdict, report.to_json(&p.alphabet, &p.comm_order), text)
        }
        Relations::Lie(elems) => {
            let report = check_lie_gs_basis(elems)?;
            let text = report_text(
                report.verdict,
                report.records.iter().filter(|r| !r.trivial).map(|r| {
                    format!(
                        "composition of relations {} and {} at {} leaves residue {}",
                        r.i,
                        r.j,
                        p.alphabet.format_word(&r.ambiguity.w),
                        r.residue.format_with(&p.order)
                    )
                }),
            );
            (report.verdict, report.to_json(&p.alphabet, &p.order), text)
        }
        _ => {
            let rels = p.algebra_relations()?;
            let report = check_gs_basis(&rels, &p.order)?;
            let text = report_text(
                report.verdict,
                report.records.iter().filter(|r| !r.trivial).map(|r| {
                    format!(
                        "composition of relations {} and {} at {} leaves residue {}",
                        r.i,
                        r.j,
                        p.alphabet.format_word(&r.ambiguity.w),
                        r.residue.format_with(&p.order)
                    )
                }),
            );
            (report.verdict, report.to_json(&p.alphabet, &p.order), text)
        }
    };
    emit(common.format, &j, &text);
    Ok(if verdict { 0 } else { 1 })
}

fn report_text(verdict: bool, failures: impl Iterator<Item = String>) -> String {
    if verdict {
        "closed under composition: true".to_string()
    } else {
        let mut lines = vec!["closed under composition: false".to_string()];
        lines.extend(failures);
        lines.join("\n")
    }
}

fn status_code(status: &CompletionStatus) -> u8 {
    match status {
        CompletionStatus::Complete => 0,
        _ => 3,
    }
}

fn cmd_complete(common: &Common, mode: &str, limits: Limits) -> Result<u8, Error> {
    let p = load(common)?;
    match (&p.relations, mode) {
        (Relations::Commutative(polys), "lift") => {
            let lifted = eps_lift(polys, &p.comm_order, DEFAULT_COMPANION_CAP)?;
            let order = MonomialOrder::Eps(p.comm_order);
            let shown: Vec<String> = lifted.iter().map(|f| f.format_with(&order)).collect();
            emit(
                common.format,
                &json!({"basis": shown, "order": "eps"}),
                &shown.join("\n"),
            );
            Ok(0)
        }
        (Relations::Commutative(polys), "complete") => {
            let result = buchberger(polys, &p.comm_order, limits)?;
            let text = result
                .basis
                .iter()
                .map(|f| f.format_with(&p.comm_order))
                .collect::<Vec<_>>()
                .join("\n");
            let code = status_code(&result.status);
            emit(common.format, &result.to_json(&p.comm_order), &text);
            Ok(code)
        }
        (Relations::Lie(_), _) => Err(Error::Invalid(
            "completion of Lie presentations is not supported; complete the expansions".into(),
        )),
        (_, "complete") => {
            let rels = p.algebra_relations()?;
            let result = shirshov_complete(&rels, &p.order, limits)?;
            let text = result
                .basis
                .iter()
                .map(|f| f.format_with(&p.order))
                .collect::<Vec<_>>()
                .join("\n");
            let code = status_code(&result.status);
            emit(common.format, &result.to_json(&p.order), &text);
            Ok(code)
        }
        (_, other) => Err(Error::Invalid(format!("unknown completion mode {other:?}"))),
    }
}

fn cmd_nf(common: &Common, expr: &str) -> Result<u8, Error> {
    let p = load(common)?;
    let shown = match &p.relations {
        Relations::Commutative(polys) => {
            let f = CommutativePolynomial::parse(&p.alphabet, expr)?;
            comm_normal_form(&f, polys, &p.comm_order)?.format_with(&p.comm_order)
        }
        Relations::Lie(elems) => {
            let f = lie_recognize(&parse_lie_polynomial(&p.alphabet, expr)?)?;
            lie_normal_form(&f, elems)?.format()
        }
        _ => {
            let rels = p.algebra_relations()?;
            let f = FreePolynomial::parse(&p.alphabet, expr)?;
            normal_form(&f, &rels, &p.order)?.format_with(&p.order)
        }
    };
    emit(common.format, &json!({"normal_form": shown}), &shown);
    Ok(0)
}

fn cmd_irr(common: &Common, max_length: usize) -> Result<u8, Error> {
    let p = load(common)?;
    let shown: Vec<String> = match &p.relations {
        Relations::Commutative(polys) => {
            let mut leads = Vec::new();
            for r in polys {
                leads.push(r.leading(&p.comm_order)?.0);
            }
            irreducible_monomials(p.alphabet.len(), &leads, max_length)
                .iter()
                .map(|e| CommutativePolynomial::format_monomial(&p.alphabet, e))
                .collect()
        }
        Relations::Lie(elems) => lie_irr(&p.alphabet, elems, max_length)?
            .iter()
            .map(|t| t.format(&p.alphabet))
            .collect(),
        _ => {
            let rels = p.algebra_relations()?;
            irr(&p.alphabet, &rels, &p.order, max_length)?
                .iter()
                .map(|w| p.alphabet.format_word(w))
                .collect()
        }
    };
    emit(
        common.format,
        &json!({"irreducible": shown, "count": shown.len()}),
        &shown.join("\n"),
    );
    Ok(0)
}

/// Monomials of total degree <= max divisible by no leading monomial,
/// listed degree first then by exponents.
fn irreducible_monomials(n: usize, leads: &[Vec<u32>], max: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    enumerate_exponents(&mut e, 0, max as u32, leads, &mut out);
    out.sort_by_key(|e| (commutative::exp_total_degree(e), e.clone()));
    out
}

fn enumerate_exponents(
    e: &mut Vec<u32>,
    i: usize,
    budget: u32,
    leads: &[Vec<u32>],
    out: &mut Vec<Vec<u32>>,
) {
    if i == e.len() {
        if !leads.iter().any(|l| commutative::exp_divides(l, e)) {
            out.push(e.clone());
        }
        return;
    }
    for v in 0..=budget {
        e[i] = v;
        enumerate_exponents(e, i + 1, budget - v, leads, out);
    }
    e[i] = 0;
}

/// Builds the x1..xn alphabet implied by an inline expression, so the word
/// commands work without a presentation file.
fn infer_alphabet(text: &str) -> Result<Arc<Alphabet>, Error> {
    let mut n = 0usize;
    let mut tok = String::new();
    for c in text.chars().chain(std::iter::once(' ')) {
        if c.is_alphanumeric() || c == '_' {
            tok.push(c);
            continue;
        }
        if !tok.is_empty() {
            if tok.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
                let idx: usize = tok
                    .strip_prefix('x')
                    .and_then(|d| d.parse().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| {
                        Error::Parse(format!(
                            "generator {tok:?} is not of the form x<k>; pass --input"
                        ))
                    })?;
                n = n.max(idx);
            }
            tok.clear();
        }
    }
    if n == 0 {
        return Err(Error::Parse("no generators in expression; pass --input".into()));
    }
    Ok(Alphabet::standard(n))
}

fn alphabet_for(
    text: &str,
    input: Option<&std::path::Path>,
) -> Result<Arc<Alphabet>, Error> {
    match input {
        Some(path) => Ok(load_path(path, None)?.alphabet),
        None => infer_alphabet(text),
    }
}

fn cmd_lyndon(
    word: &str,
    mode: &str,
    input: Option<&std::path::Path>,
    max_length: usize,
    format: Format,
) -> Result<u8, Error> {
    let alphabet = alphabet_for(word, input)?;
    let w = alphabet.parse_word(word)?;
    match mode {
        "factorize" => {
            let parts = shirshov_factorize(&w)?;
            let shown: Vec<String> = parts.iter().map(|u| alphabet.format_word(u)).collect();
            emit(format, &json!({"factors": shown}), &shown.join(" | "));
            Ok(0)
        }
        "bracket" | "cfl" => {
            let tree = if mode == "bracket" {
                standard_bracketing(&w)?
            } else {
                cfl_bracketing(&w)?
            };
            let shown = tree.format(&alphabet);
            emit(format, &json!({"bracketing": shown}), &shown);
            Ok(0)
        }
        "check" => {
            let verdict = is_alsw(&w)?;
            emit(format, &json!({"alsw": verdict}), &verdict.to_string());
            Ok(if verdict { 0 } else { 1 })
        }
        "list" => {
            let shown: Vec<String> = alsw_enumerate(&alphabet, max_length)
                .iter()
                .map(|u| alphabet.format_word(u))
                .collect();
            emit(format, &json!({"alsws": shown, "count": shown.len()}), &shown.join("\n"));
            Ok(0)
        }
        other => Err(Error::Invalid(format!("unknown lyndon mode {other:?}"))),
    }
}

fn cmd_lie(
    expr: Option<&str>,
    mode: &str,
    input: Option<&std::path::Path>,
    format: Format,
) -> Result<u8, Error> {
    match mode {
        "recognize" => {
            let expr = expr
                .ok_or_else(|| Error::Invalid("lie --mode recognize needs an expression".into()))?;
            let alphabet = alphabet_for(expr, input)?;
            let f = if expr.contains('(') {
                parse_lie_polynomial(&alphabet, expr)?
            } else {
                FreePolynomial::parse(&alphabet, expr)?
            };
            match lie_recognize(&f) {
                Ok(e) => {
                    let shown = e.format();
                    emit(format, &json!({"lie": true, "element": shown}), &shown);
                    Ok(0)
                }
                Err(Error::NotLieElement(w)) => {
                    emit(
                        format,
                        &json!({"lie": false, "obstruction": w}),
                        &format!("not a Lie element: leftover leading word {w}"),
                    );
                    Ok(1)
                }
                Err(e) => Err(e),
            }
        }
        "pbw" => {
            let path = input
                .ok_or_else(|| Error::Invalid("lie --mode pbw needs --input".into()))?;
            let p = load_path(path, None)?;
            let Relations::Lie(elems) = &p.relations else {
                return Err(Error::Invalid("lie --mode pbw needs a lie presentation".into()));
            };
            let check = pbw_shirshov_check(elems)?;
            let j = json!({
                "lie_verdict": check.lie_verdict,
                "associative_verdict": check.associative_verdict,
                "agree": check.agree,
            });
            let text = format!(
                "lie: {}, associative: {}, agree: {}",
                check.lie_verdict, check.associative_verdict, check.agree
            );
            emit(format, &j, &text);
            Ok(if check.lie_verdict && check.associative_verdict { 0 } else { 1 })
        }
        other => Err(Error::Invalid(format!("unknown lie mode {other:?}"))),
    }
}

fn tableau_rows_json(t: &Tableau, alphabet: &Alphabet) -> Value {
    let parts: Vec<Vec<String>> = match t {
        Tableau::Rows(rows) => rows
            .iter()
            .map(|r| r.to_word().letters().iter().map(|&l| alphabet.name(l).to_string()).collect())
            .collect(),
        Tableau::Columns(cols) => cols
            .iter()
            .map(|c| c.to_word().letters().iter().map(|&l| alphabet.name(l).to_string()).collect())
            .collect(),
    };
    json!({"tableau": parts})
}

fn cmd_tableau(
    word: &str,
    mode: &str,
    input: Option<&std::path::Path>,
    format: Format,
) -> Result<u8, Error> {
    let alphabet = alphabet_for(word, input)?;
    let w = alphabet.parse_word(word)?;
    let mode = match mode {
        "row" => TableauMode::Row,
        "column" => TableauMode::Column,
        other => return Err(Error::Invalid(format!("unknown tableau mode {other:?}"))),
    };
    let t = tableau_normal_form(&w, alphabet.len(), mode)?;
    emit(format, &tableau_rows_json(&t, &alphabet), &t.format(&alphabet));
    Ok(0)
}

fn cmd_wp(common: &Common, u: &str, v: &str, limits: Limits) -> Result<u8, Error> {
    let p = load(common)?;
    let uw = p.alphabet.parse_word(u)?;
    let vw = p.alphabet.parse_word(v)?;
    let answer = word_problem(&p, &uw, &vw, limits)?;
    emit(common.format, &json!({"answer": answer.as_str()}), answer.as_str());
    Ok(if answer == WordProblemAnswer::Equal { 0 } else { 1 })
}
