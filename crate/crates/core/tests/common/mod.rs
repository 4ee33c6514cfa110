//! Independent brute-force oracles shared by the integration suites.
//!
//! Nothing here reuses the library's dynamic programs, smoothness
//! criteria or group helpers: semigroup sums come from the repeated
//! generator model, subsequence sums from explicit sub-multiset
//! enumeration, and discrete logarithms from table lookup.

#![allow(dead_code)]

pub mod properties;

use std::collections::BTreeSet;

/// `t·s` in `C_{k;n}` by walking multiples of the generator: indices past
/// `k+n-1` fold back by `n` one period at a time.
pub fn naive_multiple(k: u32, n: u32, t: u64) -> u32 {
    let top = u64::from(k + n - 1);
    let mut t = t;
    while t > top {
        t -= u64::from(n);
    }
    t as u32
}

pub fn naive_add(k: u32, n: u32, a: u32, b: u32) -> u32 {
    naive_multiple(k, n, u64::from(a) + u64::from(b))
}

pub fn naive_is_idempotent(k: u32, n: u32, a: u32) -> bool {
    naive_add(k, n, a, a) == a
}

/// Every nonempty sub-multiset of `terms` (taken as a multiplicity
/// table), in odometer order.
pub fn sub_multisets(terms: &[u32]) -> Vec<Vec<u32>> {
    let mut distinct: Vec<(u32, u32)> = Vec::new();
    let mut sorted = terms.to_vec();
    sorted.sort_unstable();
    for t in sorted {
        match distinct.last_mut() {
            Some((v, m)) if *v == t => *m += 1,
            _ => distinct.push((t, 1)),
        }
    }
    let mut out = Vec::new();
    let mut pick = vec![0u32; distinct.len()];
    loop {
        let mut i = 0;
        while i < pick.len() && pick[i] == distinct[i].1 {
            pick[i] = 0;
            i += 1;
        }
        if i == pick.len() {
            return out;
        }
        pick[i] += 1;
        let sub: Vec<u32> = distinct
            .iter()
            .zip(&pick)
            .flat_map(|(&(v, _), &c)| std::iter::repeat_n(v, c as usize))
            .collect();
        out.push(sub);
    }
}

/// All raw integer subsequence sums (nonempty subsequences).
pub fn raw_subset_sums(terms: &[u32]) -> BTreeSet<u64> {
    sub_multisets(terms)
        .iter()
        .map(|s| s.iter().map(|&t| u64::from(t)).sum())
        .collect()
}

pub fn naive_sigma(k: u32, n: u32, terms: &[u32]) -> u32 {
    let mut acc = terms[0];
    for &t in &terms[1..] {
        acc = naive_add(k, n, acc, t);
    }
    acc
}

pub fn naive_is_idempotent_sum(k: u32, n: u32, terms: &[u32]) -> bool {
    !terms.is_empty() && naive_is_idempotent(k, n, naive_sigma(k, n, terms))
}

pub fn naive_free(k: u32, n: u32, terms: &[u32]) -> bool {
    sub_multisets(terms)
        .iter()
        .all(|s| !naive_is_idempotent_sum(k, n, s))
}

pub fn naive_minimal(k: u32, n: u32, terms: &[u32]) -> bool {
    if !naive_is_idempotent_sum(k, n, terms) {
        return false;
    }
    sub_multisets(terms)
        .iter()
        .filter(|s| s.len() < terms.len())
        .all(|s| !naive_is_idempotent_sum(k, n, s))
}

/// 1-smooth by definition: the subsequence sums are exactly `[1, Σ]`.
pub fn naive_one_smooth(values: &[u32]) -> bool {
    let total: u64 = values.iter().map(|&v| u64::from(v)).sum();
    let sums = raw_subset_sums(values);
    sums.len() as u64 == total && sums.iter().copied().eq(1..=total)
}

// --- group side ---

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn naive_generators(n: u32) -> Vec<u32> {
    (1..n).filter(|&g| gcd(g, n) == 1).collect()
}

pub fn order(n: u32, g: u32) -> u32 {
    (1..=n).find(|&m| (m * g).is_multiple_of(n)).unwrap()
}

/// Residues reached by nonempty subsequences.
pub fn naive_group_sumset(n: u32, residues: &[u32]) -> BTreeSet<u32> {
    sub_multisets(residues)
        .iter()
        .map(|s| (s.iter().map(|&r| u64::from(r)).sum::<u64>() % u64::from(n)) as u32)
        .collect()
}

pub fn naive_zero_sum_free(n: u32, residues: &[u32]) -> bool {
    !naive_group_sumset(n, residues).contains(&0)
}

pub fn naive_zero_sum(n: u32, residues: &[u32]) -> bool {
    !residues.is_empty() && residues.iter().map(|&r| u64::from(r)).sum::<u64>() % u64::from(n) == 0
}

pub fn naive_minimal_zero_sum(n: u32, residues: &[u32]) -> bool {
    naive_zero_sum(n, residues)
        && sub_multisets(residues)
            .iter()
            .filter(|s| s.len() < residues.len())
            .all(|s| !naive_zero_sum(n, s))
}

/// Discrete logarithm by table: the `m ∈ [1, n]` with `m·g ≡ r`.
pub fn discrete_log(n: u32, g: u32, r: u32) -> u32 {
    (1..=n).find(|&m| (m * g) % n == r % n).expect("g generates")
}

/// Smoothness straight from the definition: `1 = n_1 ≤ … `, `Σ n_i ≤ n`
/// and `Σ(R) = {g, 2g, …, (Σ n_i)g}`. Returns 0 (not smooth), 1 (smooth)
/// or 2 (zero-sum smooth).
pub fn naive_g_smooth(n: u32, residues: &[u32], g: u32) -> u8 {
    if residues.is_empty() {
        return 0;
    }
    let logs: Vec<u32> = residues.iter().map(|&r| discrete_log(n, g, r)).collect();
    let total: u32 = logs.iter().sum();
    if *logs.iter().min().unwrap() != 1 || total > n {
        return 0;
    }
    let want: BTreeSet<u32> = (1..=total).map(|j| (j * g) % n).collect();
    if naive_group_sumset(n, residues) != want {
        return 0;
    }
    if total == n {
        2
    } else {
        1
    }
}

/// `ind(R)` as an exact pair `(Σ n_i, n)` minimised by cross-multiplying.
pub fn naive_index(n: u32, residues: &[u32]) -> (u64, u64) {
    naive_generators(n)
        .into_iter()
        .map(|g| {
            residues
                .iter()
                .map(|&r| u64::from(discrete_log(n, g, r)))
                .sum::<u64>()
        })
        .min()
        .map(|s| (s, u64::from(n)))
        .unwrap()
}

/// Nondecreasing tuples of `length` values from `lo..=hi`, generated
/// recursively (independent of the library enumerator).
pub fn tuples(lo: u32, hi: u32, length: usize) -> Vec<Vec<u32>> {
    fn go(lo: u32, hi: u32, left: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in lo..=hi {
            prefix.push(v);
            go(v, hi, left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(lo, hi, length, &mut Vec::new(), &mut out);
    out
}
