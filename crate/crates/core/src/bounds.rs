//! Closed-form lengths and invariant values for `C_{k;n}`.
//!
//! These are the known values and intervals that the exhaustive engines are
//! checked against; nothing in the search path depends on them.

use serde::{Deserialize, Serialize};

use crate::semigroup::SemigroupParams;

/// An inclusive interval `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub lower: u32,
    pub upper: u32,
}

impl Bounds {
    pub fn exact(v: u32) -> Self {
        Bounds { lower: v, upper: v }
    }

    pub fn contains(&self, v: u32) -> bool {
        self.lower <= v && v <= self.upper
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Minimum length from which every idempotent-sum free sequence has the
/// smooth structure: `⌊(⌈k/n⌉+1)n/2⌋` for `k > n`, else `⌊n/2⌋ + 1`.
pub fn structure_length_bound(p: SemigroupParams) -> u32 {
    if p.is_k_greater() {
        (p.quotient() + 1) * p.n() / 2
    } else {
        p.n() / 2 + 1
    }
}

/// `(⌈k/n⌉+1)n`, twice the critical length of the `k > n` classification.
fn doubled_critical(p: SemigroupParams) -> u32 {
    (p.quotient() + 1) * p.n()
}

/// `⌈(⌈k/n⌉+1)n/2⌉ - 1`: the shortest length covered by the `k > n`
/// classification of idempotent-sum free sequences.
pub fn classification_min_length(p: SemigroupParams) -> u32 {
    doubled_critical(p).div_ceil(2) - 1
}

/// `(⌈k/n⌉+1)n/2 - 1` when it is an integer: the only length at which the
/// exceptional (non 1-smooth) families can appear.
pub fn exceptional_length(p: SemigroupParams) -> Option<u32> {
    let d = doubled_critical(p);
    d.is_multiple_of(2).then(|| d / 2 - 1)
}

/// `k > n ≥ 3` with `⌈k/n⌉n` even, where only bounds are known.
pub fn is_open_regime(p: SemigroupParams) -> bool {
    p.is_k_greater() && p.n() >= 3 && p.threshold().is_multiple_of(2)
}

/// Known value or interval of `Ŝmo(C_{k;n})`.
pub fn predicted_smo_hat(p: SemigroupParams) -> Bounds {
    let n = p.n();
    if !p.is_k_greater() {
        return Bounds::exact(match n {
            1 => 0,
            5 => 1,
            2..=4 | 7 => n / 2,
            _ => n / 2 + 1,
        });
    }
    let d = doubled_critical(p);
    if is_open_regime(p) {
        Bounds {
            lower: p.threshold() / 2 + 1,
            upper: d.div_ceil(2) - 1,
        }
    } else {
        Bounds::exact(d / 2)
    }
}

/// Known value or interval of `Smo(C_{k;n})`.
pub fn predicted_smo(p: SemigroupParams) -> Bounds {
    let n = p.n();
    if !p.is_k_greater() {
        return Bounds::exact(match n {
            1 => 1,
            5 => 3,
            2..=4 | 7 => n / 2 + 1,
            _ => n / 2 + 2,
        });
    }
    let d = doubled_critical(p);
    if is_open_regime(p) {
        Bounds {
            lower: p.threshold() / 2 + 1,
            upper: d.div_ceil(2),
        }
    } else if n == 2 {
        Bounds::exact(d / 2)
    } else {
        Bounds::exact(d / 2 + 1)
    }
}

/// Known value of `I(Z/nZ)`.
pub fn predicted_index_invariant(n: u32) -> u32 {
    match n {
        1..=5 | 7 => 1,
        _ => n / 2 + 2,
    }
}
