//! Per-sequence predicates: idempotent-sum, idempotent-sum free, minimal
//! idempotent-sum, 1-smoothness of the index image, g-smoothness of the
//! residue image, and the sequence index `ind(R)` with `‖R‖_g`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group;
use crate::profile::{find_subsequence, SumProfile};
use crate::semigroup::SemigroupParams;
use crate::sequence::{format_indices, Sequence};

/// Outcome of testing a residue multiset against one generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SmoothKind {
    NotSmooth,
    /// g-smooth with `Σ n_i < n`.
    Smooth,
    /// g-smooth with `Σ n_i = n`.
    ZeroSumSmooth,
}

/// An exact rational `numerator / denominator`, kept unreduced so that
/// `‖R‖_g = (Σ n_i) / n` reads back as computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexValue {
    pub numerator: u64,
    pub denominator: u64,
}

impl IndexValue {
    pub fn is_one(&self) -> bool {
        self.numerator == self.denominator
    }
}

impl PartialOrd for IndexValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IndexValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = u128::from(self.numerator) * u128::from(other.denominator);
        let b = u128::from(other.numerator) * u128::from(self.denominator);
        a.cmp(&b).then(self.denominator.cmp(&other.denominator))
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for IndexValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            token: s.to_string(),
            reason: "expected `numerator/denominator`".into(),
        };
        let (a, b) = s.split_once('/').ok_or_else(bad)?;
        let numerator = a.trim().parse().map_err(|_| bad())?;
        let denominator: u64 = b.trim().parse().map_err(|_| bad())?;
        if denominator == 0 {
            return Err(bad());
        }
        Ok(IndexValue {
            numerator,
            denominator,
        })
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IndexValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// --- index-slice primitives, shared with the search engines ---

/// Idempotent-sum test on a raw index multiset (`Σ ≥ threshold`, `Σ ≡ 0`).
pub(crate) fn indices_idempotent_sum(params: SemigroupParams, indices: &[u32]) -> bool {
    let sum: u64 = indices.iter().map(|&t| u64::from(t)).sum();
    !indices.is_empty() && sum >= u64::from(params.threshold()) && sum.is_multiple_of(u64::from(params.n()))
}

/// Profile with cap = threshold, the smallest cap that decides freeness.
pub(crate) fn free_profile(params: SemigroupParams) -> SumProfile {
    SumProfile::empty(params.threshold(), params.n()).expect("threshold and n are positive")
}

/// With cap = threshold, an idempotent sum is exactly a high sum in class 0.
pub(crate) fn profile_is_free(profile: &SumProfile) -> bool {
    !profile.has_high_residue(0)
}

pub(crate) fn indices_free(params: SemigroupParams, indices: &[u32]) -> bool {
    let mut p = free_profile(params);
    for &t in indices {
        p.push(t);
        if !profile_is_free(&p) {
            return false;
        }
    }
    true
}

/// Minimality for a nonempty index multiset; a proper idempotent-sum
/// subsequence omits at least one term, so testing each single deletion
/// suffices.
pub(crate) fn indices_minimal(params: SemigroupParams, indices: &[u32]) -> bool {
    if !indices_idempotent_sum(params, indices) {
        return false;
    }
    let mut tried: Vec<u32> = Vec::new();
    for i in 0..indices.len() {
        if tried.contains(&indices[i]) {
            continue;
        }
        tried.push(indices[i]);
        let rest: Vec<u32> = indices
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &t)| t)
            .collect();
        if !indices_free(params, &rest) {
            return false;
        }
    }
    true
}

fn sorted_one_smooth(sorted: &[u32]) -> bool {
    let mut reach: u64 = 0;
    for &h in sorted {
        if u64::from(h) > reach + 1 {
            return false;
        }
        reach += u64::from(h);
    }
    true
}

// --- public predicates ---

/// Lemma-style criterion: `T` sums to the idempotent iff its index sum is
/// at least `⌈k/n⌉n` and divisible by `n`.
pub fn is_idempotent_sum(seq: &Sequence) -> Result<bool> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(indices_idempotent_sum(seq.params(), &seq.indices()))
}

pub fn is_idempotent_sum_free(seq: &Sequence) -> bool {
    let p = seq.params();
    let profile = seq.sum_profile(p.threshold() + p.n()).expect("positive cap");
    !profile.exists_sum_at_least(p.threshold(), 0)
}

/// A nonempty idempotent-sum subsequence, if one exists.
pub fn idempotent_sum_witness(seq: &Sequence) -> Option<Sequence> {
    let p = seq.params();
    let w = find_subsequence(&seq.indices(), p.threshold(), 0, p.n()).expect("valid inputs")?;
    Some(Sequence::from_indices(p, &w).expect("subsequence of a valid sequence"))
}

pub fn is_minimal_idempotent_sum(seq: &Sequence) -> Result<bool> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    Ok(indices_minimal(seq.params(), &seq.indices()))
}

/// 1-smoothness of a positive integer multiset: its subsequence sums are
/// exactly `[1, Σ h]`.
pub fn is_one_smooth(values: &[u32]) -> Result<bool> {
    if values.is_empty() {
        return Err(Error::EmptySequence);
    }
    if let Some(&v) = values.iter().find(|&&v| v == 0) {
        return Err(Error::NonPositiveTerm { value: v });
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    Ok(sorted_one_smooth(&sorted))
}

/// Classifies `R` against generator `g`: write each term as `n_i·g` with
/// `n_i ∈ [1, n]`; smooth when the `n_i` are 1-smooth with `Σ n_i < n`,
/// zero-sum smooth when `Σ n_i = n`.
pub fn is_g_smooth(n: u32, residues: &[u32], g: u32) -> Result<SmoothKind> {
    let mut mult = group::generator_multiples(n, residues, g)?;
    if mult.is_empty() {
        return Ok(SmoothKind::NotSmooth);
    }
    mult.sort_unstable();
    let total: u64 = mult.iter().map(|&m| u64::from(m)).sum();
    let n64 = u64::from(n);
    Ok(if total > n64 || !sorted_one_smooth(&mult) {
        SmoothKind::NotSmooth
    } else if total == n64 {
        SmoothKind::ZeroSumSmooth
    } else {
        SmoothKind::Smooth
    })
}

/// Least generator for which `R` is smooth or zero-sum smooth.
pub fn find_smooth_generator(n: u32, residues: &[u32]) -> Result<Option<(u32, SmoothKind)>> {
    if n < 2 {
        return Err(Error::Domain(format!("smoothness needs n >= 2, got {n}")));
    }
    for g in group::generators(n) {
        match is_g_smooth(n, residues, g)? {
            SmoothKind::NotSmooth => {}
            kind => return Ok(Some((g, kind))),
        }
    }
    Ok(None)
}

/// `‖R‖_g = (Σ n_i) / n`.
pub fn sequence_norm(n: u32, residues: &[u32], g: u32) -> Result<IndexValue> {
    let mult = group::generator_multiples(n, residues, g)?;
    Ok(IndexValue {
        numerator: mult.iter().map(|&m| u64::from(m)).sum(),
        denominator: u64::from(n),
    })
}

/// `ind(R)`: the least `‖R‖_g` over all generators `g`.
pub fn sequence_index(n: u32, residues: &[u32]) -> Result<IndexValue> {
    if n < 2 {
        return Err(Error::Domain(format!("the sequence index needs n >= 2, got {n}")));
    }
    let mut best: Option<IndexValue> = None;
    for g in group::generators(n) {
        let v = sequence_norm(n, residues, g)?;
        if best.is_none_or(|b| v < b) {
            best = Some(v);
        }
    }
    Ok(best.expect("Z/nZ has a generator for n >= 2"))
}

/// The structure condition of the long-sequence theorem: for `k > n` the
/// index image is 1-smooth with sum below the threshold; for `k ≤ n` the
/// residue image is (zero-sum free) g-smooth for some generator.
pub fn structure_condition(seq: &Sequence) -> bool {
    indices_structure_condition(seq.params(), &seq.indices())
}

pub(crate) fn indices_structure_condition(params: SemigroupParams, indices: &[u32]) -> bool {
    if indices.is_empty() {
        return false;
    }
    if params.is_k_greater() {
        let sum: u64 = indices.iter().map(|&t| u64::from(t)).sum();
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        sorted_one_smooth(&sorted) && sum < u64::from(params.threshold())
    } else if params.n() < 2 {
        false
    } else {
        let n = params.n();
        let residues: Vec<u32> = indices.iter().map(|&t| t % n).collect();
        matches!(
            find_smooth_generator(n, &residues),
            Ok(Some((_, SmoothKind::Smooth)))
        )
    }
}

/// Every classification of one sequence, as a flat record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub k: u32,
    pub n: u32,
    pub sequence: String,
    pub length: usize,
    pub index_sum: u64,
    pub threshold: u32,
    pub regime: String,
    pub is_idempotent_sum: bool,
    pub is_idempotent_sum_free: bool,
    pub idempotent_sum_witness: Option<String>,
    pub is_minimal_idempotent_sum: bool,
    pub one_smooth: bool,
    pub structure_condition: bool,
    pub smooth_generator: Option<u32>,
    pub smooth_kind: Option<SmoothKind>,
    pub sequence_index: Option<IndexValue>,
    pub psi_zero_sum_free: Option<bool>,
    pub psi_minimal_zero_sum: Option<bool>,
}

pub fn regime_label(params: SemigroupParams) -> &'static str {
    if params.is_k_greater() {
        "k>n"
    } else {
        "k<=n"
    }
}

pub fn classify(seq: &Sequence) -> Result<ClassificationReport> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let params = seq.params();
    let n = params.n();
    let indices = seq.indices();
    let residues = seq.residues();

    let witness = idempotent_sum_witness(seq);
    let (smooth_generator, smooth_kind, sequence_index) = if n >= 2 {
        let found = find_smooth_generator(n, &residues)?;
        (
            found.map(|(g, _)| g),
            found.map(|(_, kind)| kind),
            Some(self::sequence_index(n, &residues)?),
        )
    } else {
        (None, None, None)
    };
    let (psi_free, psi_minimal) = if params.is_k_greater() {
        (None, None)
    } else {
        (
            Some(group::is_zero_sum_free(n, &residues)),
            Some(group::is_minimal_zero_sum(n, &residues)),
        )
    };

    Ok(ClassificationReport {
        k: params.k(),
        n,
        sequence: format_indices(&indices),
        length: indices.len(),
        index_sum: seq.index_sum(),
        threshold: params.threshold(),
        regime: regime_label(params).to_string(),
        is_idempotent_sum: is_idempotent_sum(seq)?,
        is_idempotent_sum_free: witness.is_none(),
        idempotent_sum_witness: witness.map(|w| w.to_text()),
        is_minimal_idempotent_sum: is_minimal_idempotent_sum(seq)?,
        one_smooth: is_one_smooth(&indices)?,
        structure_condition: indices_structure_condition(params, &indices),
        smooth_generator,
        smooth_kind,
        sequence_index,
        psi_zero_sum_free: psi_free,
        psi_minimal_zero_sum: psi_minimal,
    })
}
