//! Duality and chirality groups of oriented regular hypermaps.
//!
//! A hypermap is a finite permutation group `G = ⟨x, y⟩` with its ordered
//! generating pair. Permutations act on the right and products read left to
//! right: `p * q` applies `p` first.

pub mod dualics;
pub mod error;
pub mod families;
pub mod fp;
pub mod group;
pub mod hypermap;
pub mod perm;
pub mod structure;

pub use dualics::{
    analyze, analyze_ops, bruteforce_minimal_normal, duality_coindex, duality_index,
    duality_quotient, index_via_presentation, is_extreme, is_self_dual, operation_kernel,
    product_duality_check, DualityReport, OperationKernel, OperationKind, OperationSpec,
    OperationSummary,
};
pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use fp::{parse_word, todd_coxeter, CosetEnumeration, Presentation, Word, DEFAULT_MAX_COSETS};
pub use group::{CosetSpace, PermGroup, DEFAULT_DEGREE_CAP};
pub use hypermap::{
    covers, direct_product, marked_iso, orthogonal, parallel_product, EulerCharacteristic,
    HypermapType, OrientedHypermap,
};
pub use perm::Permutation;
pub use structure::{describe, StructureDescription};
