//! Enumeration of multisets (combinations with repetition) in canonical
//! nondecreasing order, with sharding by smallest element.

/// Iterator over all nondecreasing tuples of a fixed length with values in
/// `[lo, hi]`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct Multisets {
    lo: u32,
    hi: u32,
    current: Option<Vec<u32>>,
}

impl Multisets {
    pub fn new(lo: u32, hi: u32, length: usize) -> Self {
        let current = if length == 0 {
            Some(Vec::new())
        } else if lo == 0 || lo > hi {
            None
        } else {
            Some(vec![lo; length])
        };
        Self { lo, hi, current }
    }
}

impl Iterator for Multisets {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        // advance: bump the rightmost entry below `hi`, reset the tail to it
        if let Some(pos) = out.iter().rposition(|&v| v < self.hi) {
            let mut next = out.clone();
            let v = next[pos] + 1;
            next[pos..].iter_mut().for_each(|x| *x = v);
            self.current = Some(next);
        }
        debug_assert!(out.iter().all(|&v| v >= self.lo));
        Some(out)
    }
}

/// Every multiset of `length` values from `[1, universe_max]`, each exactly
/// once, as nondecreasing tuples.
pub fn enumerate_multisets(universe_max: u32, length: usize) -> Multisets {
    Multisets::new(1, universe_max, length)
}

/// The shard of [`enumerate_multisets`] whose smallest element is `first`.
/// Shards for `first ∈ [1, universe_max]` partition the full enumeration
/// (for `length ≥ 1`).
pub fn enumerate_shard(universe_max: u32, length: usize, first: u32) -> impl Iterator<Item = Vec<u32>> {
    let tail = if length == 0 || first == 0 || first > universe_max {
        Multisets::new(1, 0, 1)
    } else {
        Multisets::new(first, universe_max, length - 1)
    };
    tail.map(move |mut rest| {
        rest.insert(0, first);
        rest
    })
}

/// `C(universe + length - 1, length)`, saturating at `u128::MAX`.
pub fn multiset_count(universe: u32, length: usize) -> u128 {
    if length == 0 {
        return 1;
    }
    if universe == 0 {
        return 0;
    }
    let top = u128::from(universe) + length as u128 - 1;
    let k = (length as u128).min(top - length as u128);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // exact at every step: acc * (top - k + i) / i = C(top - k + i, i)
        match acc.checked_mul(top - k + i) {
            Some(v) => acc = v / i,
            None => return u128::MAX,
        }
    }
    acc
}
