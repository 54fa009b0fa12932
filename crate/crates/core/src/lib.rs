//! Exact construction, analysis and classification of self-dual additive
//! codes over `Z2^alpha x Z4^beta`.
//!
//! Everything works on fully enumerated codes with integer or rational
//! arithmetic, so results are exact; sizes are bounded by a [`Guard`].

pub mod algebra;
pub mod classify;
pub mod code;
pub mod construct;
pub mod duality;
pub mod enumerator;
pub mod error;
pub mod format;
pub mod guard;
pub mod search;
pub mod shadow;
pub mod standard_form;
pub mod verify;

pub use algebra::{AmbientParams, MixedVector};
pub use classify::{
    admissible, check_structure_relations, classify, gray_image_linear, AdmissibilityQuery,
    SelfDualClass, StructureReport,
};
pub use code::{span, AdditiveCode, GeneratorMatrix, TypeParams};
pub use construct::{catalog, direct_product, ladder_build, neighbor, CatalogEntry};
pub use duality::{brute_force_dual, dual, dual_type, is_self_dual, is_self_orthogonal, DualityReport};
pub use enumerator::{gleason_decompose, GleasonDecomposition, WeightEnumerator};
pub use error::{Error, Result};
pub use format::{parse_code_file, write_code_file};
pub use guard::Guard;
pub use search::{search, SearchCensus, SearchOptions};
pub use shadow::{decompose, glue, non_type0_neighbors, orthogonality_table, shadow, ShadowDecomposition};
pub use standard_form::{standard_form, StandardFormMatrix};
