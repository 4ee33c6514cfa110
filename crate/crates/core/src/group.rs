//! Zero-sum notions over the residue group `Z/nZ`.

use num_integer::Integer;

use crate::bits::Bits;
use crate::error::{Error, Result};

pub fn is_generator(n: u32, g: u32) -> bool {
    n >= 2 && g < n && g.gcd(&n) == 1
}

/// The generators of `Z/nZ` (elements of order `n`), ascending.
pub fn generators(n: u32) -> impl Iterator<Item = u32> {
    (1..n).filter(move |&g| is_generator(n, g))
}

/// Inverse of the unit `g` modulo `n`.
pub fn unit_inverse(g: u32, n: u32) -> Result<u32> {
    if !is_generator(n, g) {
        return Err(Error::NotGenerator { g, n });
    }
    let e = i64::from(g).extended_gcd(&i64::from(n));
    Ok(e.x.rem_euclid(i64::from(n)) as u32)
}

/// Writes each residue `r` as `m·g` with `m ∈ [1, n]` (zero maps to `n`).
pub fn generator_multiples(n: u32, residues: &[u32], g: u32) -> Result<Vec<u32>> {
    let inv = u64::from(unit_inverse(g, n)?);
    Ok(residues
        .iter()
        .map(|&r| match (u64::from(r % n) * inv % u64::from(n)) as u32 {
            0 => n,
            m => m,
        })
        .collect())
}

/// Residues reachable as sums of nonempty subsequences.
fn reachable(n: u32, residues: &[u32]) -> Bits {
    let n = n as usize;
    let mut reach = Bits::new(n);
    for &r in residues {
        let r = r as usize % n;
        let mut next = reach.rotated(r);
        next.union_with(&reach);
        next.set(r);
        reach = next;
    }
    reach
}

/// `Σ(R)` over `Z/nZ`, ascending.
pub fn sumset(n: u32, residues: &[u32]) -> Vec<u32> {
    reachable(n, residues).ones().map(|r| r as u32).collect()
}

pub fn is_zero_sum(n: u32, residues: &[u32]) -> bool {
    !residues.is_empty() && residues.iter().map(|&r| u64::from(r)).sum::<u64>() % u64::from(n) == 0
}

pub fn is_zero_sum_free(n: u32, residues: &[u32]) -> bool {
    !reachable(n, residues).get(0)
}

/// Nonempty, sums to zero, and no nonempty proper subsequence does.
pub fn is_minimal_zero_sum(n: u32, residues: &[u32]) -> bool {
    if !is_zero_sum(n, residues) {
        return false;
    }
    // a proper zero-sum subsequence misses some term
    let mut seen = Vec::new();
    for i in 0..residues.len() {
        let r = residues[i] % n;
        if seen.contains(&r) {
            continue;
        }
        seen.push(r);
        let mut rest = residues.to_vec();
        rest.remove(i);
        if !is_zero_sum_free(n, &rest) {
            return false;
        }
    }
    true
}
