//! Checking closure under composition for the exterior algebra on three
//! generators, then reading off the linear basis of the quotient.

use gsbasis::{check_gs_basis, irr, normal_form, Alphabet, FreePolynomial, MonomialOrder};

fn main() {
    let a = Alphabet::standard(3);
    let order = MonomialOrder::DegLex;

    // x_i^2 = 0 and x_i x_j = -x_j x_i for i > j
    let mut rels = Vec::new();
    for i in 1..=3 {
        rels.push(FreePolynomial::parse(&a, &format!("x{i} x{i}")).unwrap());
    }
    for i in 1..=3 {
        for j in 1..i {
            rels.push(FreePolynomial::parse(&a, &format!("x{i} x{j} + x{j} x{i}")).unwrap());
        }
    }

    println!("== relations ==");
    for r in &rels {
        println!("  {} = 0", r.format_with(&order));
    }

    let report = check_gs_basis(&rels, &order).unwrap();
    println!("\nclosed under composition: {}", report.verdict);
    println!("ambiguities examined: {}", report.records.len());

    println!("\n== irreducible words up to length 3 ==");
    for w in irr(&a, &rels, &order, 3).unwrap() {
        println!("  {}", a.format_word(&w));
    }

    // every product rewrites to a signed strictly increasing word
    let f = FreePolynomial::parse(&a, "x3 x1 x2 x1").unwrap();
    let nf = normal_form(&f, &rels, &order).unwrap();
    println!("\nnf(x3 x1 x2 x1) = {}", nf.format_with(&order));
}
