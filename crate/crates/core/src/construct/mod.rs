//! Concrete automorphism groups of the classified maps, their parameter
//! sets, and the relator lists that present them.

mod build;
mod models;
mod params;
mod relators;
mod verify;

use thiserror::Error;

use crate::cosetenum::EnumError;

pub use build::{build_g, build_h, kernel_of_theta, AglGroup, Group};
pub use models::{AffineModel, DipoleModel, MAX_MODEL_FIELD, MAX_MODEL_ORDER};
pub use params::{
    alpha_of, dipole_face_length, dipole_solutions, ell_of, param_sets, ParamSet, Variant,
    MAX_MULTIPLICITY,
};
pub use relators::{agl_relators, build_relators, presentation_of, w_word, w_word_alpha, yq_word};
pub use verify::{derived_type, verify_construction, DerivedType, VerifyReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("group of order {0} exceeds the model size limit")]
    TooLarge(u64),
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("malformed parameter set: {0}")]
    Malformed(String),
    #[error("coset enumeration failed: {0}")]
    Enumeration(#[from] EnumError),
    #[error("coset enumeration did not close within {limit} cosets")]
    Inconclusive { limit: usize },
    #[error("construction check failed: {0}")]
    Check(String),
}
