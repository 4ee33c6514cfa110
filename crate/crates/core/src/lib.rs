//! Idempotent-sum free sequences over finite cyclic semigroups `C_{k;n}`.
//!
//! The crate covers the arithmetic of `C_{k;n}` in index form, multisets
//! over it with capped subset-sum profiles, every per-sequence
//! classification (idempotent-sum free, minimal idempotent-sum, 1-smooth,
//! g-smooth, sequence index), and exhaustive engines that verify the
//! structure of long idempotent-sum free sequences and compute the
//! invariants `Smo`, `Ŝmo` and `I(Z/nZ)` for small parameters.
//!
//! ```
//! use idemsum_core::{classify, SemigroupParams, Sequence};
//!
//! let p = SemigroupParams::new(5, 3).unwrap();
//! let t = Sequence::parse(p, "2,4").unwrap();
//! let report = classify(&t).unwrap();
//! assert!(report.is_minimal_idempotent_sum);
//! ```

mod bits;
pub mod bounds;
pub mod classifier;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod group;
pub mod profile;
pub mod search;
pub mod semigroup;
pub mod sequence;

pub use bounds::Bounds;
pub use classifier::{
    classify, find_smooth_generator, idempotent_sum_witness, is_g_smooth, is_idempotent_sum,
    is_idempotent_sum_free, is_minimal_idempotent_sum, is_one_smooth, sequence_index, sequence_norm,
    structure_condition, ClassificationReport, IndexValue, SmoothKind,
};
pub use enumerate::{enumerate_multisets, enumerate_shard, multiset_count};
pub use error::{Error, Result};
pub use families::{generate_family, Family};
pub use profile::SumProfile;
pub use search::{
    compute_index_invariant, compute_smo, compute_smo_hat, explore_open_problem, verify_classification_lemma,
    verify_structure_theorem, Counterexample, ExplorationRow, InvariantKind, InvariantResult, SearchConfig,
    VerificationKind, VerificationReport,
};
pub use semigroup::{Element, Residue, SemigroupParams};
pub use sequence::{format_indices, parse_indices, Sequence};
