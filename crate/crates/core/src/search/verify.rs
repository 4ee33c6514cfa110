use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{classification_min_length, exceptional_length, structure_length_bound};
use crate::classifier::{indices_free, indices_structure_condition, is_one_smooth};
use crate::enumerate::{enumerate_shard, multiset_count};
use crate::error::{Error, Result};
use crate::families::{generate_family, Family};
use crate::search::walk::{walk, Visitor};
use crate::search::{Counterexample, SearchConfig, VerificationKind, VerificationReport, REPORT_LIMIT};
use crate::semigroup::SemigroupParams;
use crate::sequence::format_indices;

#[derive(Default)]
struct Tally {
    total: u64,
    free: u64,
    converse: u64,
    violations: u64,
    kept: BTreeSet<(usize, Vec<u32>, String)>,
    cases: BTreeMap<String, u64>,
}

impl Tally {
    fn violation(&mut self, terms: &[u32], reason: impl Into<String>) {
        self.violations += 1;
        self.kept.insert((terms.len(), terms.to_vec(), reason.into()));
        if self.kept.len() > REPORT_LIMIT {
            self.kept.pop_last();
        }
    }

    fn merge(&mut self, other: Tally) {
        self.total += other.total;
        self.free += other.free;
        self.converse += other.converse;
        self.violations += other.violations;
        self.kept.extend(other.kept);
        while self.kept.len() > REPORT_LIMIT {
            self.kept.pop_last();
        }
        for (case, c) in other.cases {
            *self.cases.entry(case).or_default() += c;
        }
    }

    fn into_report(
        self,
        kind: VerificationKind,
        p: SemigroupParams,
        min: u32,
        max: u32,
    ) -> VerificationReport {
        VerificationReport {
            kind,
            k: p.k(),
            n: p.n(),
            min_length: min,
            max_length: max,
            total_sequences: self.total,
            free_sequences: self.free,
            converse_checked: self.converse,
            counterexample_count: self.violations,
            counterexamples: self
                .kept
                .into_iter()
                .map(|(_, t, reason)| Counterexample {
                    sequence: format_indices(&t),
                    reason,
                })
                .collect(),
            case_tallies: self.cases,
        }
    }
}

/// Checks, for every sequence with length in `[bound, max_length]`, that
/// being idempotent-sum free is equivalent to the structure condition
/// (1-smooth index image with sum below `⌈k/n⌉n` for `k > n`; g-smooth
/// residue image for `k ≤ n`). Every multiset in the range is enumerated.
pub fn verify_structure_theorem(
    p: SemigroupParams,
    max_length: u32,
    config: &SearchConfig,
) -> Result<VerificationReport> {
    let bound = structure_length_bound(p);
    if max_length < bound {
        return Err(Error::Domain(format!(
            "max length {max_length} is below the structure bound {bound} for {p}"
        )));
    }
    let size = p.size();
    let estimate = (bound..=max_length).fold(0u128, |acc, l| {
        acc.saturating_add(multiset_count(size, l as usize))
    });
    if estimate > config.budget {
        return Err(Error::Budget {
            estimate,
            limit: config.budget,
            detail: format!("sum over L in [{bound}, {max_length}] of C({size}+L-1, L) multisets for {p}"),
        });
    }

    let shard = |first: u32| {
        let mut tally = Tally::default();
        for len in bound..=max_length {
            for terms in enumerate_shard(size, len as usize, first) {
                tally.total += 1;
                let free = indices_free(p, &terms);
                let condition = indices_structure_condition(p, &terms);
                if free {
                    tally.free += 1;
                }
                if free != condition {
                    let reason = if free {
                        "idempotent-sum free but fails the structure condition"
                    } else {
                        "satisfies the structure condition but is not idempotent-sum free"
                    };
                    tally.violation(&terms, reason);
                }
            }
        }
        tally
    };
    let parts: Vec<Tally> = config.run(|| (1..=size).into_par_iter().map(shard).collect())?;
    let mut total = Tally::default();
    for part in parts {
        total.merge(part);
    }
    Ok(total.into_report(VerificationKind::StructureTheorem, p, bound, max_length))
}

/// The five shapes of long idempotent-sum free sequences for `k > n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LemmaCase {
    /// 1-smooth index image with sum at most `⌈k/n⌉n - 1`.
    I,
    Ii,
    Iii,
    Iv,
    V,
}

impl LemmaCase {
    pub fn label(self) -> &'static str {
        match self {
            LemmaCase::I => "i",
            LemmaCase::Ii => "ii",
            LemmaCase::Iii => "iii",
            LemmaCase::Iv => "iv",
            LemmaCase::V => "v",
        }
    }
}

fn family_matches(p: SemigroupParams, family: Family, sorted: &[u32]) -> bool {
    generate_family(p, family).is_ok_and(|s| s.indices() == sorted)
}

/// Every case whose shape and side conditions `sorted` meets.
pub(crate) fn lemma_cases(p: SemigroupParams, sorted: &[u32]) -> Vec<LemmaCase> {
    let mut out = Vec::new();
    let sum: u64 = sorted.iter().map(|&t| u64::from(t)).sum();
    if is_one_smooth(sorted).unwrap_or(false) && sum < u64::from(p.threshold()) {
        out.push(LemmaCase::I);
    }
    if family_matches(p, Family::CaseIi, sorted) {
        out.push(LemmaCase::Ii);
    }
    let odd_one: Vec<u32> = sorted.iter().copied().filter(|&t| t != 2).collect();
    if let [z] = odd_one[..] {
        if family_matches(p, Family::CaseIii { z }, sorted) {
            out.push(LemmaCase::Iii);
        }
    }
    if family_matches(p, Family::CaseIv, sorted) {
        out.push(LemmaCase::Iv);
    }
    if family_matches(p, Family::CaseV, sorted) {
        out.push(LemmaCase::V);
    }
    out
}

struct LongFree {
    params: SemigroupParams,
    min_length: usize,
    tally: Tally,
}

impl Visitor for LongFree {
    fn free(&mut self, terms: &[u32]) {
        if terms.len() < self.min_length {
            return;
        }
        self.tally.total += 1;
        self.tally.free += 1;
        let cases = lemma_cases(self.params, terms);
        if cases.is_empty() {
            self.tally
                .violation(terms, "idempotent-sum free but matches none of cases (i)-(v)");
            return;
        }
        let exceptional = cases.iter().any(|&c| c != LemmaCase::I);
        if exceptional && exceptional_length(self.params) != Some(terms.len() as u32) {
            self.tally
                .violation(terms, "exceptional case outside the critical length");
        }
        for c in cases {
            *self.tally.cases.entry(c.label().to_string()).or_default() += 1;
        }
    }

    fn merge(&mut self, other: Self) {
        self.tally.merge(other.tally);
    }
}

/// 1-smooth nondecreasing sequences over `[1, size]` with sum below
/// `limit`, built by the prefix criterion `h_{i+1} ≤ 1 + Σ_{j≤i} h_j`.
fn one_smooth_sequences(size: u32, limit: u64, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>, sum: u64) {
    let lo = prefix.last().copied().unwrap_or(1);
    let hi = u64::from(size).min(sum + 1);
    for h in u64::from(lo)..=hi {
        if sum + h >= limit {
            break;
        }
        prefix.push(h as u32);
        out.push(prefix.clone());
        one_smooth_sequences(size, limit, out, prefix, sum + h);
        prefix.pop();
    }
}

/// For `k > n`: the idempotent-sum free sequences of length at least
/// `⌈(⌈k/n⌉+1)n/2⌉ - 1` are exactly the members of cases (i)-(v), and the
/// exceptional cases (ii)-(v) occur only at length `(⌈k/n⌉+1)n/2 - 1`.
///
/// Free sequences come from the pruned walk; the converse direction builds
/// every case member directly and checks that it is free.
pub fn verify_classification_lemma(p: SemigroupParams, config: &SearchConfig) -> Result<VerificationReport> {
    if !p.is_k_greater() {
        return Err(Error::Domain(format!("the classification needs k > n, got {p}")));
    }
    let min_length = classification_min_length(p);
    // a free sequence with 1-smooth image has length below the threshold,
    // and the exceptional ones are shorter still
    let cap = p.threshold() + p.n() - 1;
    let walked = walk(p, cap as usize, config, || LongFree {
        params: p,
        min_length: min_length as usize,
        tally: Tally::default(),
    })?;
    let mut tally = walked.visitor.tally;
    if walked.frontier {
        tally.violation(&[], format!("free sequences reach the search cap {cap}"));
    }

    let mut members = Vec::new();
    one_smooth_sequences(
        p.size(),
        u64::from(p.threshold()),
        &mut members,
        &mut Vec::new(),
        0,
    );
    members.retain(|m| m.len() >= min_length as usize);
    let mut families = vec![Family::CaseIi, Family::CaseIv, Family::CaseV];
    families.extend((3..=p.size()).step_by(2).map(|z| Family::CaseIii { z }));
    for f in families {
        if let Ok(s) = generate_family(p, f) {
            if s.len() >= min_length as usize {
                members.push(s.indices());
            }
        }
    }
    for m in members {
        tally.converse += 1;
        if !indices_free(p, &m) {
            tally.violation(&m, "case member is not idempotent-sum free");
        }
    }

    Ok(tally.into_report(VerificationKind::ClassificationLemma, p, min_length, cap))
}
