//! Capped subset-sum dynamic programming over positive index values.
//!
//! Sums below `cap` are tracked exactly; once a partial sum reaches `cap`
//! only its residue modulo `n` is kept, as a sticky flag. Every term is
//! positive, so sums only grow and the promotion is exact.

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Achievable nonempty-subsequence index sums, exact below `cap` and by
/// residue class at or above it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SumProfile {
    cap: u32,
    modulus: u32,
    // bit s set iff some subsequence sums to s; bit 0 is the empty subsequence
    exact: Bits,
    high: Bits,
}

impl SumProfile {
    /// Profile of the empty sequence.
    pub fn empty(cap: u32, modulus: u32) -> Result<Self> {
        if cap == 0 {
            return Err(Error::Domain("sum profile cap must be positive".into()));
        }
        if modulus == 0 {
            return Err(Error::Domain("sum profile modulus must be positive".into()));
        }
        let mut exact = Bits::new(cap as usize);
        exact.set(0);
        Ok(Self {
            cap,
            modulus,
            exact,
            high: Bits::new(modulus as usize),
        })
    }

    /// Builds the profile of `terms` (all positive).
    pub fn of_terms(terms: &[u32], cap: u32, modulus: u32) -> Result<Self> {
        let mut p = Self::empty(cap, modulus)?;
        for &t in terms {
            if t == 0 {
                return Err(Error::NonPositiveTerm { value: t });
            }
            p.push(t);
        }
        Ok(p)
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Adds one positive term to the underlying sequence.
    pub fn push(&mut self, term: u32) {
        debug_assert!(term > 0);
        let n = self.modulus as usize;
        let cap = self.cap as usize;
        let t = term as usize;

        let mut high = self.high.rotated(t % n);
        high.union_with(&self.high);
        // sums s + t that cross the cap, from exact s in [cap - t, cap)
        for s in cap.saturating_sub(t)..cap {
            if self.exact.get(s) {
                high.set((s + t) % n);
            }
        }
        self.high = high;
        self.exact.or_shifted(t);
    }

    pub fn with_term(&self, term: u32) -> Self {
        let mut p = self.clone();
        p.push(term);
        p
    }

    /// Nonempty subsequence sums below the cap, ascending.
    pub fn exact_sums(&self) -> Vec<u32> {
        self.exact.ones().filter(|&s| s > 0).map(|s| s as u32).collect()
    }

    pub fn has_exact(&self, sum: u32) -> bool {
        sum > 0 && self.exact.get(sum as usize)
    }

    /// Flag per residue: some subsequence sum `≥ cap` lies in that class.
    pub fn high_residues(&self) -> Vec<bool> {
        (0..self.modulus as usize).map(|r| self.high.get(r)).collect()
    }

    pub fn has_high_residue(&self, residue: u32) -> bool {
        self.high.get((residue % self.modulus) as usize)
    }

    /// Whether some nonempty subsequence has sum `≥ bound` and `≡ residue`.
    /// Requires `bound ≤ cap`.
    pub fn exists_sum_at_least(&self, bound: u32, residue: u32) -> bool {
        assert!(bound <= self.cap, "bound {bound} above cap {}", self.cap);
        let r = residue % self.modulus;
        if self.high.get(r as usize) {
            return true;
        }
        (bound.max(1)..self.cap).any(|s| s % self.modulus == r && self.exact.get(s as usize))
    }
}

/// Finds a nonempty subsequence of `terms` whose sum is `≥ bound` and
/// `≡ residue (mod modulus)`, by a layered version of the profile DP and a
/// back-trace through the layers. The witness is returned sorted.
pub fn find_subsequence(terms: &[u32], bound: u32, residue: u32, modulus: u32) -> Result<Option<Vec<u32>>> {
    if bound == 0 || modulus == 0 {
        return Err(Error::Domain("bound and modulus must be positive".into()));
    }
    if let Some(&t) = terms.iter().find(|&&t| t == 0) {
        return Err(Error::NonPositiveTerm { value: t });
    }
    let cap = bound as usize;
    let n = modulus as usize;
    let target = cap + (residue % modulus) as usize;
    // states [0, cap) are exact sums; cap + r means "≥ cap and ≡ r"
    let step = |state: usize, t: usize| -> usize {
        if state < cap {
            let s = state + t;
            if s < cap {
                s
            } else {
                cap + s % n
            }
        } else {
            cap + (state - cap + t) % n
        }
    };

    let mut layers = Vec::with_capacity(terms.len() + 1);
    let mut current = Bits::new(cap + n);
    current.set(0);
    layers.push(current.clone());
    for &t in terms {
        let mut next = current.clone();
        for s in current.ones() {
            next.set(step(s, t as usize));
        }
        layers.push(next.clone());
        current = next;
    }
    if !current.get(target) {
        return Ok(None);
    }

    let mut chosen = Vec::new();
    let mut state = target;
    for i in (0..terms.len()).rev() {
        if layers[i].get(state) {
            continue;
        }
        let t = terms[i] as usize;
        let prev = layers[i]
            .ones()
            .find(|&s| step(s, t) == state)
            .expect("reachable state has a predecessor");
        chosen.push(terms[i]);
        state = prev;
    }
    debug_assert_eq!(state, 0);
    chosen.sort_unstable();
    Ok(Some(chosen))
}
