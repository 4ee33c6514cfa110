use crate::classifier::{find_smooth_generator, indices_minimal, is_one_smooth, sequence_index, SmoothKind};
use crate::error::Result;
use crate::search::walk::{walk, Visitor};
use crate::search::{Extremes, InvariantKind, InvariantResult, SearchConfig};
use crate::semigroup::SemigroupParams;
use crate::sequence::format_indices;

/// `threshold + n - 1`: no idempotent-sum free sequence is this long.
pub fn default_smo_hat_cap(p: SemigroupParams) -> u32 {
    p.threshold() + p.n() - 1
}

pub fn default_smo_cap(p: SemigroupParams) -> u32 {
    p.threshold() + p.n()
}

/// Whether a sequence has the smooth structure required of long sequences:
/// 1-smooth index image for `k > n`; otherwise a residue image that is
/// smooth of the requested kind for some generator.
fn has_structure(p: SemigroupParams, terms: &[u32], kind: SmoothKind) -> bool {
    if p.is_k_greater() {
        return is_one_smooth(terms).unwrap_or(false);
    }
    let n = p.n();
    let residues: Vec<u32> = terms.iter().map(|&t| t % n).collect();
    matches!(find_smooth_generator(n, &residues), Ok(Some((_, found))) if found == kind)
}

struct BadFree {
    params: SemigroupParams,
    bad: Extremes,
}

impl Visitor for BadFree {
    fn free(&mut self, terms: &[u32]) {
        if !has_structure(self.params, terms, SmoothKind::Smooth) {
            self.bad.record(terms);
        }
    }

    fn merge(&mut self, other: Self) {
        self.bad.merge(other.bad);
    }
}

/// Minimal idempotent-sum sequences failing a structure predicate.
struct BadMinimal<F> {
    params: SemigroupParams,
    is_bad: F,
    bad: Extremes,
}

impl<F: Fn(&[u32]) -> bool + Send> Visitor for BadMinimal<F> {
    fn blocked(&mut self, prefix: &[u32], next: u32) {
        let mut t = Vec::with_capacity(prefix.len() + 1);
        t.extend_from_slice(prefix);
        t.push(next);
        if indices_minimal(self.params, &t) && (self.is_bad)(&t) {
            self.bad.record(&t);
        }
    }

    fn merge(&mut self, other: Self) {
        self.bad.merge(other.bad);
    }
}

fn result(
    which: InvariantKind,
    k: Option<u32>,
    n: u32,
    bad: Extremes,
    cap: u32,
    frontier: bool,
) -> InvariantResult {
    InvariantResult {
        which,
        k,
        n,
        value: bad.best.map_or(1, |b| b as u32 + 1),
        witnesses: bad.kept.iter().map(|t| format_indices(t)).collect(),
        witness_count: bad.count,
        search_cap: cap,
        frontier_hit: frontier,
    }
}

fn is_trivial(p: SemigroupParams) -> bool {
    p.k() == 1 && p.n() == 1
}

/// `Ŝmo(C_{k;n})`: one more than the longest idempotent-sum free sequence
/// lacking the smooth structure. `cap` defaults to [`default_smo_hat_cap`].
pub fn compute_smo_hat(
    p: SemigroupParams,
    cap: Option<u32>,
    config: &SearchConfig,
) -> Result<InvariantResult> {
    let cap = cap.unwrap_or_else(|| default_smo_hat_cap(p));
    if is_trivial(p) {
        // convention for the one-element semigroup
        return Ok(InvariantResult {
            which: InvariantKind::SmoHat,
            k: Some(1),
            n: 1,
            value: 0,
            witnesses: Vec::new(),
            witness_count: 0,
            search_cap: cap,
            frontier_hit: false,
        });
    }
    let walked = walk(p, cap as usize, config, || BadFree {
        params: p,
        bad: Extremes::default(),
    })?;
    Ok(result(
        InvariantKind::SmoHat,
        Some(p.k()),
        p.n(),
        walked.visitor.bad,
        cap,
        walked.frontier,
    ))
}

/// `Smo(C_{k;n})`: one more than the longest minimal idempotent-sum
/// sequence lacking the (zero-sum) smooth structure. `cap` defaults to
/// [`default_smo_cap`].
pub fn compute_smo(p: SemigroupParams, cap: Option<u32>, config: &SearchConfig) -> Result<InvariantResult> {
    let cap = cap.unwrap_or_else(|| default_smo_cap(p));
    if is_trivial(p) {
        return Ok(InvariantResult {
            which: InvariantKind::Smo,
            k: Some(1),
            n: 1,
            value: 1,
            witnesses: Vec::new(),
            witness_count: 0,
            search_cap: cap,
            frontier_hit: false,
        });
    }
    let walked = walk(p, cap as usize, config, || BadMinimal {
        params: p,
        is_bad: move |t: &[u32]| !has_structure(p, t, SmoothKind::ZeroSumSmooth),
        bad: Extremes::default(),
    })?;
    Ok(result(
        InvariantKind::Smo,
        Some(p.k()),
        p.n(),
        walked.visitor.bad,
        cap,
        walked.frontier,
    ))
}

/// `I(Z/nZ)`: one more than the longest minimal zero-sum sequence whose
/// index is not 1.
///
/// The group is walked as `C_{1;n}` (index `n` is the identity), so the
/// witnesses are written in that semigroup's index notation.
pub fn compute_index_invariant(n: u32, config: &SearchConfig) -> Result<InvariantResult> {
    let p = SemigroupParams::new(1, n)?;
    if n == 1 {
        // Z/1Z: the only minimal zero-sum sequence is {0}, of index 1
        return Ok(InvariantResult {
            which: InvariantKind::Index,
            k: None,
            n,
            value: 1,
            witnesses: Vec::new(),
            witness_count: 0,
            search_cap: n,
            frontier_hit: false,
        });
    }
    // minimal zero-sum sequences over Z/nZ have length at most n
    let walked = walk(p, n as usize, config, || BadMinimal {
        params: p,
        is_bad: move |t: &[u32]| {
            let residues: Vec<u32> = t.iter().map(|&x| x % n).collect();
            !sequence_index(n, &residues).is_ok_and(|v| v.is_one())
        },
        bad: Extremes::default(),
    })?;
    Ok(result(
        InvariantKind::Index,
        None,
        n,
        walked.visitor.bad,
        n,
        walked.frontier,
    ))
}
