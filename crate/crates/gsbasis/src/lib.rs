//! Gröbner-Shirshov bases for associative algebras, Lie algebras,
//! commutative rings and finitely presented monoids.
//!
//! The core objects are polynomials of the free associative algebra over the
//! rationals with a fixed monomial order. A set of monic relations is a
//! Gröbner-Shirshov basis when every composition of a pair of relations
//! reduces to zero; the diamond consequence is that the irreducible words
//! form a linear basis of the quotient, which powers everything else here:
//! completion, normal forms, word problems in monoids, a lift of commutative
//! Gröbner bases, and the Lie theory via Lyndon-Shirshov words.

pub mod alphabet;
pub mod commutative;
pub mod error;
pub mod gsb;
pub mod liegsb;
pub mod lyndon;
pub mod order;
pub mod plactic;
pub mod poly;
pub mod presentation;
pub mod reduce;

pub use alphabet::{Alphabet, Word};
pub use error::{Error, Result};
pub use gsb::{
    check_gs_basis, ideal_linear_basis, interreduce, irr, reduced_basis, shirshov_complete,
    Ambiguity, AmbiguityKind, CompletionResult, CompletionStatus, GsReport, Limits,
};
pub use order::{CommutativeOrder, MonomialOrder};
pub use poly::{FreePolynomial, Scalar};
pub use reduce::{normal_form, normal_form_with_trace, RewriteStep};
