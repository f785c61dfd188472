//! Finite commutative semigroups and Γ-semirings: representation, axiom
//! checks, sub-Γ-semirings, homomorphisms and example families.

mod axioms;
mod generators;
mod hom;
mod structure;
mod sub;

pub use axioms::{check_commutative_semigroup, check_gamma_semiring, Axiom, AxiomReport, Mode, Violation};
pub use generators::{make_matrix_gamma, make_minmax_gamma, make_zn_gamma, MATRIX_MAX_CARRIER};
pub use hom::{find_homomorphisms, is_gamma_homomorphism, kernel, GammaHom};
pub use structure::{FiniteCommutativeSemigroup, GammaSemiring};
pub use sub::{
    closure_failure, enumerate_sub_gamma_semirings, enumerate_sub_gamma_semirings_bounded,
    generated_by, is_sub_gamma_semiring, is_sub_gamma_semiring_labels, max_carrier,
    subset_from_labels, ClosureFailure, DEFAULT_MAX_CARRIER, MAX_CARRIER_ENV,
};
