//! Plactic normal forms: folding a word into a tableau by rows or by
//! columns, and checking that Knuth-equivalent words share a tableau.

use gsbasis::plactic::{knuth_relations, tableau_normal_form, TableauMode};
use gsbasis::Alphabet;

fn main() {
    let a = Alphabet::standard(3);

    println!("== Knuth relations for three letters ==");
    for (u, v) in knuth_relations(&a) {
        println!("  {}  =  {}", a.format_word(&u), a.format_word(&v));
    }

    let words = ["x1 x2 x1", "x2 x1 x1", "x3 x1 x2 x1 x3 x2"];
    println!("\n== tableau normal forms ==");
    for text in words {
        let w = a.parse_word(text).unwrap();
        let rows = tableau_normal_form(&w, a.len(), TableauMode::Row).unwrap();
        let cols = tableau_normal_form(&w, a.len(), TableauMode::Column).unwrap();
        println!("  {text}");
        println!("    rows:    {}   shape {:?}", rows.format(&a), rows.shape());
        println!("    columns: {}   shape {:?}", cols.format(&a), cols.shape());
    }

    // the two Knuth-equivalent words above fold to the same tableau
    let u = a.parse_word("x1 x2 x1").unwrap();
    let v = a.parse_word("x2 x1 x1").unwrap();
    assert_eq!(
        tableau_normal_form(&u, a.len(), TableauMode::Row).unwrap(),
        tableau_normal_form(&v, a.len(), TableauMode::Row).unwrap()
    );
    println!("\nx1 x2 x1 and x2 x1 x1 share a tableau, as Knuth equivalence demands");
}
