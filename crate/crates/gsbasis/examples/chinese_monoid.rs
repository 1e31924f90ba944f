//! The Chinese monoid: its defining relations are already closed under
//! composition, so rewriting alone computes the staircase normal forms.

use gsbasis::presentation::{chinese_normal_form, chinese_relations, lambda_shape, Relations};
use gsbasis::{check_gs_basis, Alphabet};

fn main() {
    let n = 3;
    let p = chinese_relations(n).unwrap();
    let Relations::Pairs(pairs) = &p.relations else { unreachable!() };

    println!("== Chinese relations on three generators ==");
    for (u, v) in pairs {
        println!("  {}  =  {}", p.alphabet.format_word(u), p.alphabet.format_word(v));
    }

    let rels = p.algebra_relations().unwrap();
    let closed = check_gs_basis(&rels, &p.order).unwrap().verdict;
    println!("\nclosed under composition: {closed}");

    let a = Alphabet::standard(n);
    println!("\n== normal forms ==");
    for text in ["x3 x1 x2", "x3 x2 x1 x3", "x2 x2 x1 x1", "x3 x3 x2 x1 x1"] {
        let w = a.parse_word(text).unwrap();
        let nf = chinese_normal_form(&w, n).unwrap();
        println!(
            "  {text:18} ->  {}   (staircase: {})",
            a.format_word(&nf),
            lambda_shape(&nf, n)
        );
    }
}
