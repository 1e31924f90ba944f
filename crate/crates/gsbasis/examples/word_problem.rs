//! The word problem in the positive braid monoid on two strands.
//!
//! Equal normal forms prove equality outright. Inequality is only certified
//! when the partial completion covered every ambiguity up to twice the query
//! length; beyond that radius the honest answer is Unknown.

use gsbasis::presentation::{word_problem, Presentation, PresentationKind, WordProblemAnswer};
use gsbasis::{Alphabet, Limits, MonomialOrder};

fn main() {
    let a = Alphabet::standard(2);
    let braid = Presentation::new_pairs(
        a.clone(),
        PresentationKind::Semigroup,
        MonomialOrder::DegLex,
        vec![(a.parse_word("x2 x1 x2").unwrap(), a.parse_word("x1 x2 x1").unwrap())],
    )
    .unwrap();

    let queries = [
        ("x2 x1 x2", "x1 x2 x1"),
        ("x2 x1 x2 x1", "x1 x2 x1 x1"),
        ("x2 x2 x1", "x1 x2 x2"),
        ("x2 x1 x1 x2 x1", "x1 x2 x1 x1 x2"),
    ];
    for limits in [Limits { max_degree: 4, max_steps: 10_000 }, Limits::default()] {
        println!("== completion degree bound {} ==", limits.max_degree);
        for (u, v) in queries {
            let uw = a.parse_word(u).unwrap();
            let vw = a.parse_word(v).unwrap();
            let answer = word_problem(&braid, &uw, &vw, limits).unwrap();
            let shown = match answer {
                WordProblemAnswer::Equal => "equal",
                WordProblemAnswer::NotEqual => "not equal",
                WordProblemAnswer::Unknown => "unknown",
            };
            println!("  {u}  =?  {v}  ->  {shown}");
        }
        println!();
    }
}
