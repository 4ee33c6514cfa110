//! Depth-first walk over idempotent-sum free sequences.
//!
//! Freeness is downward closed, so every free sequence is reached from its
//! prefix in canonical (nondecreasing) order, and every minimal
//! idempotent-sum sequence `T` is a non-free one-term extension of the free
//! sequence `T` minus its largest term. The walk therefore visits both
//! classes while pruning everything else.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::classifier::{free_profile, profile_is_free};
use crate::enumerate::multiset_count;
use crate::error::{Error, Result};
use crate::profile::SumProfile;
use crate::search::SearchConfig;
use crate::semigroup::SemigroupParams;

pub(crate) trait Visitor: Send {
    /// A nonempty idempotent-sum free sequence.
    fn free(&mut self, _terms: &[u32]) {}

    /// `prefix·next` is not free, while `prefix` (possibly empty) is.
    fn blocked(&mut self, _prefix: &[u32], _next: u32) {}

    fn merge(&mut self, other: Self)
    where
        Self: Sized;
}

pub(crate) struct Walked<V> {
    pub visitor: V,
    /// Some free sequence has length `cap`, so the walk did not close.
    pub frontier: bool,
}

struct Shard<'a, V> {
    params: SemigroupParams,
    cap: usize,
    idempotent: u32,
    visitor: V,
    frontier: bool,
    nodes: &'a AtomicU64,
    abort: &'a AtomicBool,
    budget: u128,
}

impl<V: Visitor> Shard<'_, V> {
    fn descend(&mut self, terms: &mut Vec<u32>, profile: &SumProfile) {
        let visited = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if u128::from(visited) > self.budget {
            self.abort.store(true, Ordering::Relaxed);
        }
        if self.abort.load(Ordering::Relaxed) {
            return;
        }
        if terms.len() >= self.cap {
            self.frontier = true;
            return;
        }
        let last = *terms.last().expect("descend starts from a nonempty prefix");
        for next in last..=self.params.size() {
            // prefix·e always contains the idempotent-sum {e}; nothing to find
            if next == self.idempotent {
                continue;
            }
            let extended = profile.with_term(next);
            if profile_is_free(&extended) {
                terms.push(next);
                self.visitor.free(terms);
                self.descend(terms, &extended);
                terms.pop();
            } else {
                self.visitor.blocked(terms, next);
            }
        }
    }
}

/// Walks all free sequences of length at most `cap` and reports blocked
/// extensions of free sequences of length below `cap`.
pub(crate) fn walk<V, F>(
    params: SemigroupParams,
    cap: usize,
    config: &SearchConfig,
    make: F,
) -> Result<Walked<V>>
where
    V: Visitor,
    F: Fn() -> V + Sync,
{
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let size = params.size();
    let empty = free_profile(params);

    let shard = |first: u32| -> (V, bool) {
        let mut s = Shard {
            params,
            cap,
            idempotent: params.threshold(),
            visitor: make(),
            frontier: false,
            nodes: &nodes,
            abort: &abort,
            budget: config.budget,
        };
        if cap == 0 {
            return (s.visitor, false);
        }
        let profile = empty.with_term(first);
        if profile_is_free(&profile) {
            let mut terms = vec![first];
            s.visitor.free(&terms);
            s.descend(&mut terms, &profile);
        } else {
            s.visitor.blocked(&[], first);
        }
        (s.visitor, s.frontier)
    };

    let parts: Vec<(V, bool)> = config.run(|| (1..=size).into_par_iter().map(shard).collect())?;

    if abort.load(Ordering::Relaxed) {
        let bound: u128 = (0..=cap).fold(0u128, |acc, l| acc.saturating_add(multiset_count(size, l)));
        return Err(Error::Budget {
            estimate: u128::from(nodes.load(Ordering::Relaxed)),
            limit: config.budget,
            detail: format!(
                "search nodes visited before stopping for {params} up to length {cap}; \
                 unpruned space is sum over L<={cap} of C({size}+L-1, L) = {bound}"
            ),
        });
    }

    let mut iter = parts.into_iter();
    let (mut visitor, mut frontier) = iter.next().unwrap_or_else(|| (make(), false));
    for (v, f) in iter {
        visitor.merge(v);
        frontier |= f;
    }
    Ok(Walked { visitor, frontier })
}
