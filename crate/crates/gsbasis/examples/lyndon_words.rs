//! Lyndon-Shirshov words: enumeration, the unique non-decreasing
//! factorization of an arbitrary word, and the two canonical bracketings.

use gsbasis::lyndon::{
    alsw_enumerate, cfl_bracketing, shirshov_factorize, special_bracketing, standard_bracketing,
};
use gsbasis::Alphabet;

fn main() {
    let a = Alphabet::standard(2);

    println!("== ALSWs on two letters up to degree 4 ==");
    for w in alsw_enumerate(&a, 4) {
        println!("  {}", a.format_word(&w));
    }

    let w = a.parse_word("x2 x1 x1 x1 x2 x1 x1 x2 x1 x2 x2 x1").unwrap();
    println!("\n== factorization of {} ==", a.format_word(&w));
    let parts = shirshov_factorize(&w).unwrap();
    println!(
        "  {}",
        parts.iter().map(|u| a.format_word(u)).collect::<Vec<_>>().join("  |  ")
    );

    let u = a.parse_word("x2 x2 x1 x1 x2 x1 x1 x1").unwrap();
    println!("\n== bracketings of the ALSW {} ==", a.format_word(&u));
    let down_up = standard_bracketing(&u).unwrap();
    let up_down = cfl_bracketing(&u).unwrap();
    println!("  down-to-up: {}", down_up.format(&a));
    println!("  up-to-down: {}", up_down.format(&a));
    assert_eq!(down_up, up_down);

    // bracketing around a designated ALSW subword, expansion still led by u
    let sub = a.parse_word("x2 x2 x1").unwrap();
    let special = special_bracketing(&u, &sub, 0).unwrap();
    println!("  special at {}: {}", a.format_word(&sub), special.format(&a));
}
