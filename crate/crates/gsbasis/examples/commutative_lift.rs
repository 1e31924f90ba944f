//! Buchberger completion in a commutative polynomial ring, and the lift of a
//! commutative Gröbner basis to a noncommutative set that stays closed under
//! composition for the commutative-image order.

use gsbasis::commutative::{
    buchberger, check_groebner, eps_lift, CommutativePolynomial, DEFAULT_COMPANION_CAP,
};
use gsbasis::{check_gs_basis, Alphabet, CommutativeOrder, Limits, MonomialOrder};

fn main() {
    // name the smaller variable first so x > y under deg-lex
    let ring = Alphabet::new(["y", "x"]).unwrap();
    let order = CommutativeOrder::DegLex;

    let rels = vec![
        CommutativePolynomial::parse(&ring, "x^2 - y").unwrap(),
        CommutativePolynomial::parse(&ring, "y^2 - x").unwrap(),
    ];
    println!("== ideal (x^2 - y, y^2 - x) ==");
    let report = check_groebner(&rels, &order).unwrap();
    println!("already a Gröbner basis: {}", report.verdict);
    for r in &report.records {
        println!(
            "  s-polynomial ({}, {}): coprime {}, residue {}",
            r.i,
            r.j,
            r.coprime,
            r.residue.format_with(&order)
        );
    }
    let completed = buchberger(&rels, &order, Limits::default()).unwrap();
    println!("completion adds {} elements", completed.added);

    // lifting the monomial ideal (x1 x2) into the free algebra
    let a = Alphabet::standard(2);
    let demo = vec![CommutativePolynomial::parse(&a, "x1 x2").unwrap()];
    let lifted = eps_lift(&demo, &order, DEFAULT_COMPANION_CAP).unwrap();
    let eps = MonomialOrder::Eps(order);
    println!("\n== lift of the commutative ideal (x1 x2) ==");
    for p in &lifted {
        println!("  {}", p.format_with(&eps));
    }
    let closed = check_gs_basis(&lifted, &eps).unwrap();
    println!("lifted set closed under composition: {}", closed.verdict);
}
