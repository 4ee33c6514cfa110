//! Named witness families: the exceptional long idempotent-sum free
//! sequences for `k > n`, and the sequences showing the invariant values
//! are not smaller.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semigroup::SemigroupParams;
use crate::sequence::Sequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `1^[(n-5)/2]·((n+3)/2)^[2]` (n odd) or `1^[(n-4)/2]·((n+2)/2)^[2]`
    /// (n even): free of length `⌊n/2⌋`, residue image not smooth. `k ≤ n`,
    /// `n = 6` or `n ≥ 8`.
    RemarkV,
    /// `2^[(⌈k/n⌉+1)n/2 - 1]` with `n ≥ 3`, `⌈k/n⌉n` odd.
    CaseIi,
    /// `z·2^[⌈k/2⌉-1]` with `n = 2`, `z ≥ 3` odd.
    CaseIii { z: u32 },
    /// `1^[(k-3)/2]·(k+1)/2` with `n = 1`, `k` odd.
    CaseIv,
    /// `2^[(k-1)/2]` with `n = 1`, `k` odd.
    CaseV,
    /// Minimal idempotent-sum, residue image not zero-sum smooth, for
    /// `k ≤ n`, `n ∈ {2,3,4,5,7}`: `n`, `1·(n-1)` or `1·1·5`.
    SmallW,
    /// Free, index image not 1-smooth, for `k > n`: `3·2^[⌈k/n⌉n/2 - 1]`
    /// (`n ≥ 2`, `⌈k/n⌉n` even) else `2^[⌊(⌈k/n⌉+1)n/2⌋ - 1]`.
    LargeV,
    /// Minimal idempotent-sum `2^[ℓ]` for `k > n`, with `ℓ = ⌈k/n⌉n/2` when
    /// that is an integer and `(⌈k/n⌉+1)n/2` otherwise.
    LargeW,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::RemarkV => f.write_str("remark-v"),
            Family::CaseIi => f.write_str("case-ii"),
            Family::CaseIii { z } => write!(f, "case-iii:{z}"),
            Family::CaseIv => f.write_str("case-iv"),
            Family::CaseV => f.write_str("case-v"),
            Family::SmallW => f.write_str("small-w"),
            Family::LargeV => f.write_str("large-v"),
            Family::LargeW => f.write_str("large-w"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            token: s.to_string(),
            reason: reason.to_string(),
        };
        Ok(match s.trim() {
            "remark-v" => Family::RemarkV,
            "case-ii" => Family::CaseIi,
            "case-iv" => Family::CaseIv,
            "case-v" => Family::CaseV,
            "small-w" => Family::SmallW,
            "large-v" => Family::LargeV,
            "large-w" => Family::LargeW,
            other => match other.strip_prefix("case-iii:") {
                Some(z) => Family::CaseIii {
                    z: z.parse().map_err(|_| bad("expected case-iii:<z>"))?,
                },
                None => return Err(bad("unknown family")),
            },
        })
    }
}

fn domain(family: Family, p: SemigroupParams, why: &str) -> Error {
    Error::Domain(format!("family {family} is undefined for {p}: {why}"))
}

fn build(p: SemigroupParams, parts: &[(u32, u32)]) -> Result<Sequence> {
    let mut indices = Vec::new();
    for &(value, mult) in parts {
        indices.extend(std::iter::repeat_n(value, mult as usize));
    }
    Sequence::from_indices(p, &indices)
}

/// Constructs the named family member for `p`.
pub fn generate_family(p: SemigroupParams, family: Family) -> Result<Sequence> {
    let (k, n, q) = (p.k(), p.n(), p.quotient());
    let need = |ok: bool, why: &str| if ok { Ok(()) } else { Err(domain(family, p, why)) };
    match family {
        Family::RemarkV => {
            need(k <= n, "requires k <= n")?;
            need(n == 6 || n >= 8, "requires n = 6 or n >= 8")?;
            if n % 2 == 1 {
                build(p, &[(1, (n - 5) / 2), ((n + 3) / 2, 2)])
            } else {
                build(p, &[(1, (n - 4) / 2), ((n + 2) / 2, 2)])
            }
        }
        Family::CaseIi => {
            need(k > n, "requires k > n")?;
            need(n >= 3, "requires n >= 3")?;
            need(p.threshold() % 2 == 1, "requires ⌈k/n⌉n odd")?;
            build(p, &[(2, (q + 1) * n / 2 - 1)])
        }
        Family::CaseIii { z } => {
            need(k > n, "requires k > n")?;
            need(n == 2, "requires n = 2")?;
            need(z >= 3 && z % 2 == 1, "requires z >= 3 odd")?;
            build(p, &[(2, k.div_ceil(2) - 1), (z, 1)])
        }
        Family::CaseIv => {
            need(n == 1, "requires n = 1")?;
            need(k >= 3 && k % 2 == 1, "requires k >= 3 odd")?;
            build(p, &[(1, (k - 3) / 2), (k.div_ceil(2), 1)])
        }
        Family::CaseV => {
            need(n == 1, "requires n = 1")?;
            need(k >= 3 && k % 2 == 1, "requires k >= 3 odd")?;
            build(p, &[(2, (k - 1) / 2)])
        }
        Family::SmallW => {
            need(k <= n, "requires k <= n")?;
            match n {
                2 | 3 => build(p, &[(n, 1)]),
                4 | 5 => build(p, &[(1, 1), (n - 1, 1)]),
                7 => build(p, &[(1, 2), (5, 1)]),
                _ => Err(domain(family, p, "requires n in {2,3,4,5,7}")),
            }
        }
        Family::LargeV => {
            need(k > n, "requires k > n")?;
            let t = p.threshold();
            if n >= 2 && t.is_multiple_of(2) {
                build(p, &[(3, 1), (2, t / 2 - 1)])
            } else {
                build(p, &[(2, (q + 1) * n / 2 - 1)])
            }
        }
        Family::LargeW => {
            need(k > n, "requires k > n")?;
            let t = p.threshold();
            let len = if t.is_multiple_of(2) {
                t / 2
            } else {
                (q + 1) * n / 2
            };
            build(p, &[(2, len)])
        }
    }
}
