//! Lie relations of the infinitesimal pure braid algebra on four strands:
//! closure under Lie composition, the matching associative check of the
//! commutator expansions, and the linear basis of the quotient by degree.

use gsbasis::liegsb::{check_lie_gs_basis, lie_irr, pbw_shirshov_check};
use gsbasis::presentation::{drinfeld_kohno, lie_graded_dimensions};

fn main() {
    let (a, rels) = drinfeld_kohno(4).unwrap();
    println!("generators: {}", a.names().join(", "));
    println!("== relations (expanded) ==");
    for r in &rels {
        println!("  {} = 0", r.format());
    }

    let report = check_lie_gs_basis(&rels).unwrap();
    println!("\nclosed under Lie composition: {}", report.verdict);

    let check = pbw_shirshov_check(&rels).unwrap();
    println!(
        "associative check of the expansions: {} (agree: {})",
        check.associative_verdict, check.agree
    );

    println!("\n== irreducible NLSWs up to degree 3 ==");
    for t in lie_irr(&a, &rels, 3).unwrap() {
        println!("  {}", t.format(&a));
    }
    let dims = lie_graded_dimensions(&a, &rels, 3).unwrap();
    println!("graded dimensions: {dims:?}");
}
