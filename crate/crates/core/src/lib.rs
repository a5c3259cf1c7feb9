//! Oriented matroid algebra on chirotopes.
//!
//! The crate is organized around a dense chirotope representation
//! ([`Chirotope`]) with circuits, cocircuits, duality, minors, and
//! reorientations ([`chirotope`]); an exact integer linear-algebra backend
//! that realizes chirotopes from matrices and acts as an independent oracle
//! ([`realizable`]); generic single-element extensions and liftings driven
//! by total antisymmetric signatures ([`extlift`]); and the bijection
//! between bases and the reorientations selected by a signature pair,
//! computed both by the direct signature formula and through optimal bases
//! of bounded regions ([`bijection`]).
//!
//! All values are immutable after construction and every operation is a
//! pure function, so concurrent reads are safe. Ground sets are capped at
//! 20 elements; the enumerative operations are exponential in the ground
//! size.

pub mod bijection;
pub mod chirotope;
pub mod error;
pub mod extlift;
pub mod realizable;
pub mod sign;
pub mod subset;

pub use bijection::{
    activities, basis_to_region, bijection_table, bounded_regions, compatible_reorientations,
    fully_optimal_check, fully_optimal_in_region, inverse_map, is_compatible, is_compatible_ext,
    is_compatible_lift, optimal_basis, forward_map, verify_all, verify_oracle, BijectionRecord,
    VerificationCheck, VerificationReport,
};
pub use chirotope::{Chirotope, GroundSet, Reorientation};
pub use error::{OmError, Result};
pub use extlift::{
    compose_compliant, extend, is_compliant, is_generic_extension, is_generic_lifting, lift,
    signatures_of, ExtensionLifting, ExtensionSignature, LiftingSignature,
};
pub use realizable::{
    chirotope_from_matrix, lifting_from_heights, localization_from_vector,
    realize_extension_lifting, realize_extension_lifting_with_t, sample_generic_heights,
    sample_generic_vector, GenericVector, HeightVector, RealizationMatrix, Realized,
};
pub use sign::{Sign, SignedSet};
pub use subset::{all_subsets, binomial, k_subsets, subset_rank, Subset, MAX_GROUND};
