//! Unordered sequences (multisets) over `C_{k;n}` and their text format.
//!
//! The text format is a comma-separated list of indices in nondecreasing
//! order, with `v^m` standing for `m` copies of `v`: `1^3,5^2` is
//! `1,1,1,5,5`. [`format_indices`] always emits the compressed canonical
//! form, and [`parse_indices`] accepts either spelling.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::profile::SumProfile;
use crate::semigroup::{Element, Residue, SemigroupParams};

/// Length above which [`Sequence::sumset_bruteforce`] refuses to run.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// A sequence over `C_{k;n}`, stored as a multiplicity table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequence {
    params: SemigroupParams,
    // counts[t - 1] = multiplicity of index t
    counts: Vec<u32>,
}

impl Sequence {
    pub fn empty(params: SemigroupParams) -> Self {
        Self {
            params,
            counts: vec![0; params.size() as usize],
        }
    }

    pub fn from_indices(params: SemigroupParams, indices: &[u32]) -> Result<Self> {
        let mut seq = Self::empty(params);
        for &t in indices {
            seq.push(params.element(t)?);
        }
        Ok(seq)
    }

    pub fn from_elements(params: SemigroupParams, elements: &[Element]) -> Result<Self> {
        let indices: Vec<u32> = elements.iter().map(|e| e.index()).collect();
        Self::from_indices(params, &indices)
    }

    /// Parses the text format against `params`.
    pub fn parse(params: SemigroupParams, text: &str) -> Result<Self> {
        let indices = parse_indices(text)?;
        let mut seq = Self::empty(params);
        for t in indices {
            let e = params.element(t).map_err(|_| Error::Parse {
                token: t.to_string(),
                reason: format!("index outside [1, {}] for {params}", params.size()),
            })?;
            seq.push(e);
        }
        Ok(seq)
    }

    pub fn params(&self) -> SemigroupParams {
        self.params
    }

    pub fn push(&mut self, e: Element) {
        self.counts[e.index() as usize - 1] += 1;
    }

    /// Multiplicity of the element with index `t` (the `v_a(T)` count).
    pub fn count(&self, t: u32) -> u32 {
        match t {
            0 => 0,
            t => self.counts.get(t as usize - 1).copied().unwrap_or(0),
        }
    }

    /// `|T|`.
    pub fn len(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0)
    }

    /// The multiset `{ind(a) : a | T}` in nondecreasing order.
    pub fn indices(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len());
        for (i, &c) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat_n(i as u32 + 1, c as usize));
        }
        out
    }

    /// Distinct indices with their multiplicities, ascending.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| (i as u32 + 1, c))
    }

    /// `Σ_{a|T} ind(a)` as an integer (not reduced in the semigroup).
    pub fn index_sum(&self) -> u64 {
        self.multiplicities()
            .map(|(t, c)| u64::from(t) * u64::from(c))
            .sum()
    }

    /// `Ψ(T)`: the residues `ind(a) mod n`, nondecreasing in index order.
    pub fn residues(&self) -> Vec<u32> {
        let n = self.params.n();
        self.indices().into_iter().map(|t| t % n).collect()
    }

    pub fn psi_image(&self) -> Vec<Residue> {
        let n = self.params.n();
        self.indices()
            .into_iter()
            .map(|t| Residue::new(t % n, n).expect("reduced modulo n"))
            .collect()
    }

    /// `T · t^{[-1]}`, or `None` when `t` does not occur.
    pub fn without_one(&self, t: u32) -> Option<Self> {
        if self.count(t) == 0 {
            return None;
        }
        let mut s = self.clone();
        s.counts[t as usize - 1] -= 1;
        Some(s)
    }

    /// `σ(T)`, the semigroup sum of all terms.
    pub fn sigma(&self) -> Result<Element> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(self
            .params
            .element(self.params.reduce(self.index_sum()))
            .expect("reduce yields a valid index"))
    }

    /// `Σ(T)` by direct iteration over every nonempty sub-multiset, folding
    /// with semigroup addition. Oracle only.
    pub fn sumset_bruteforce(&self) -> Result<BTreeSet<Element>> {
        self.sumset_bruteforce_with_cap(DEFAULT_ORACLE_CAP)
    }

    pub fn sumset_bruteforce_with_cap(&self, cap: usize) -> Result<BTreeSet<Element>> {
        let len = self.len();
        if len > cap {
            return Err(Error::OracleCap { length: len, cap });
        }
        let support: Vec<(Element, u32)> = self
            .multiplicities()
            .map(|(t, c)| (self.params.element(t).unwrap(), c))
            .collect();
        let mut out = BTreeSet::new();
        let mut choice = vec![0u32; support.len()];
        loop {
            // odometer over multiplicity vectors
            let mut i = 0;
            while i < support.len() && choice[i] == support[i].1 {
                choice[i] = 0;
                i += 1;
            }
            if i == support.len() {
                break;
            }
            choice[i] += 1;

            let mut acc: Option<Element> = None;
            for (&(e, _), &m) in support.iter().zip(&choice) {
                for _ in 0..m {
                    acc = Some(match acc {
                        None => e,
                        Some(a) => self.params.add(a, e)?,
                    });
                }
            }
            out.insert(acc.expect("nonempty choice"));
        }
        Ok(out)
    }

    /// Capped subset-sum profile of the index multiset, residues mod `n`.
    pub fn sum_profile(&self, cap: u32) -> Result<SumProfile> {
        SumProfile::of_terms(&self.indices(), cap, self.params.n())
    }

    /// Canonical text form, e.g. `1^3,5^2`.
    pub fn to_text(&self) -> String {
        format_indices(&self.indices())
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses `a,b,c` / `v^m` text into a nondecreasing index list.
///
/// The empty string is the empty sequence. Every term must be a positive
/// integer and every multiplicity a positive integer.
pub fn parse_indices(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for raw in text.split(',') {
        let token = raw.trim();
        let bad = |reason: &str| Error::Parse {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let (value, mult) = match token.split_once('^') {
            Some((v, m)) => (v.trim(), m.trim()),
            None => (token, "1"),
        };
        let value: u32 = value
            .parse()
            .map_err(|_| bad("expected a positive integer index"))?;
        let mult: u32 = mult
            .parse()
            .map_err(|_| bad("expected a positive multiplicity after `^`"))?;
        if value == 0 {
            return Err(bad("indices start at 1"));
        }
        if mult == 0 {
            return Err(bad("multiplicity must be positive"));
        }
        out.extend(std::iter::repeat_n(value, mult as usize));
    }
    out.sort_unstable();
    Ok(out)
}

/// Canonical text for an index list: sorted, repeated values as `v^m`.
pub fn format_indices(indices: &[u32]) -> String {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let v = sorted[i];
        let mut j = i;
        while j < sorted.len() && sorted[j] == v {
            j += 1;
        }
        match j - i {
            1 => parts.push(v.to_string()),
            m => parts.push(format!("{v}^{m}")),
        }
        i = j;
    }
    parts.join(",")
}
