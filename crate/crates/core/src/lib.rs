//! Computing with finitary operations on finite sets: majority operations,
//! the ternary parts of the clones they generate, minimality, symmetry and
//! semigroup structure, congruences of the midpoint algebras, and exhaustive
//! classification on small domains.
//!
//! Everything here is a pure function of immutable inputs; all values are
//! safe to share and to send between worker threads.

pub mod classify;
pub mod clone;
mod dense3;
pub mod midpoint;
pub mod op;
pub mod reference;
pub mod symmetry;
pub mod term;

pub use classify::{
    check_small_clone_constraints, classify_three_element, conservative_restriction_profile,
    enumerate_majority, minimality_cross_check, verify_four_element_tables, ClassificationReport,
    ClassifyError, MajorityFilter, ThreeElementScan,
};
pub use clone::{
    check_clone_axioms, compose3, is_minimal_majority_clone, nu_reduce, satisfies_m1_identities,
    subalgebra_generated, ternary_closure, ternary_closure_with_budget, ternary_hom_check,
    ternary_parts_isomorphic, CloneError, HomCheck, MinimalityVerdict, TernaryPart, DEFAULT_BUDGET,
};
pub use midpoint::{ideal_closure, is_simple, midpoint_algebra, principal_congruence, Partition};
pub use op::{DomainBijection, FiniteOperation, OpError, OpFile, PermutationS};
pub use symmetry::{
    bullet, check_associativity, circ, find_idempotent, orbits, stabilizer, star, symmetry_class,
    Associativity, SemigroupOp, SymmetryClass, SymmetryError,
};
pub use term::Term;
