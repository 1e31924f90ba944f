//! Shirshov completion of the positive braid relation x2 x1 x2 = x1 x2 x1.
//!
//! The single self-overlap produces a new degree-5 relation; the next round
//! only finds ambiguities above the degree bound, so the run stops with a
//! DegreeBounded status rather than claiming closure.

use gsbasis::{shirshov_complete, Alphabet, CompletionStatus, FreePolynomial, Limits, MonomialOrder};

fn main() {
    let a = Alphabet::standard(2);
    let order = MonomialOrder::DegLex;
    let rels = vec![FreePolynomial::parse(&a, "x2 x1 x2 - x1 x2 x1").unwrap()];

    for max_degree in [5, 7, 9] {
        let result =
            shirshov_complete(&rels, &order, Limits { max_degree, max_steps: 100_000 }).unwrap();
        println!("== max degree {max_degree} ==");
        for p in &result.basis {
            println!("  {}", p.format_with(&order));
        }
        match result.status {
            CompletionStatus::Complete => println!("status: complete"),
            CompletionStatus::DegreeBounded(d) => println!("status: degree bounded at {d}"),
            CompletionStatus::StepBounded(s) => println!("status: step bounded at {s}"),
        }
        println!("rounds: {}, relations added: {}\n", result.rounds, result.added);
    }
}
