//! Fixtures shared by the benchmarks: representative parameters and
//! sequences for the hot loops of the search engines.

use idemsum_core::{SemigroupParams, Sequence};

/// `C(k;n)`, panicking on invalid input (fixtures are constants).
pub fn params(k: u32, n: u32) -> SemigroupParams {
    SemigroupParams::new(k, n).expect("fixture parameters are valid")
}

/// A long sequence that stays idempotent-sum free, so the subset-sum
/// dynamic program never short-circuits: `1^(threshold-1)`.
pub fn long_free_sequence(p: SemigroupParams) -> Sequence {
    let ones = vec![1; p.threshold() as usize - 1];
    Sequence::from_indices(p, &ones).expect("index 1 exists")
}

/// A mixed sequence with every element once.
pub fn all_elements(p: SemigroupParams) -> Sequence {
    let all: Vec<u32> = (1..=p.size()).collect();
    Sequence::from_indices(p, &all).expect("indices in range")
}

/// Parameters used for the end-to-end search benchmarks.
pub const SEARCH_CASES: [(u32, u32); 3] = [(5, 3), (6, 6), (7, 5)];
