//! Arithmetic of the finite cyclic semigroup `C_{k;n}`.
//!
//! An element `a = t·s` is stored only through its index `t ∈ [1, k+n-1]`;
//! the generator `s` itself never materializes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index `k` and period `n` of a finite cyclic semigroup `C_{k;n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct SemigroupParams {
    k: u32,
    n: u32,
    #[serde(skip_serializing)]
    threshold: u32,
}

#[derive(Deserialize)]
struct RawParams {
    k: u32,
    n: u32,
}

impl TryFrom<RawParams> for SemigroupParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        SemigroupParams::new(raw.k, raw.n)
    }
}

impl SemigroupParams {
    pub fn new(k: u32, n: u32) -> Result<Self> {
        if k == 0 || n == 0 {
            return Err(Error::InvalidParams { k, n });
        }
        if k.checked_add(n).and_then(|s| s.checked_add(n)).is_none() {
            return Err(Error::Domain(format!("parameters k={k}, n={n} overflow")));
        }
        Ok(Self {
            k,
            n,
            threshold: k.div_ceil(n) * n,
        })
    }

    /// The index `k`.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// The period `n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of elements, `k + n - 1`. Also the largest valid index.
    pub fn size(&self) -> u32 {
        self.k + self.n - 1
    }

    /// `⌈k/n⌉·n`: the idempotent's index and the cutoff an index sum must
    /// reach before it can land on the idempotent.
    pub fn threshold(&self) -> u32 {
        self.threshold
    }

    /// `⌈k/n⌉`.
    pub fn quotient(&self) -> u32 {
        self.threshold / self.n
    }

    /// True when `k > n` (the "integer" regime); otherwise the semigroup
    /// behaves like `Z/nZ` under `psi`.
    pub fn is_k_greater(&self) -> bool {
        self.k > self.n
    }

    pub fn element(&self, index: u32) -> Result<Element> {
        if index == 0 || index > self.size() {
            return Err(Error::InvalidIndex {
                index,
                max: self.size(),
            });
        }
        Ok(Element(index))
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (1..=self.size()).map(Element)
    }

    fn check(&self, a: Element) -> Result<()> {
        self.element(a.0).map(|_| ())
    }

    /// Reduces a positive index sum to the canonical index it represents.
    pub fn reduce(&self, sum: u64) -> u32 {
        debug_assert!(sum >= 1);
        let size = u64::from(self.size());
        if sum <= size {
            return sum as u32;
        }
        // t ∈ [k, k+n-1] with t ≡ sum (mod n)
        let k = u64::from(self.k);
        let n = u64::from(self.n);
        (k + (sum - k) % n) as u32
    }

    /// Semigroup addition.
    pub fn add(&self, a: Element, b: Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(Element(self.reduce(u64::from(a.0) + u64::from(b.0))))
    }

    /// The unique idempotent, at index `⌈k/n⌉·n`.
    pub fn idempotent(&self) -> Element {
        Element(self.threshold)
    }

    pub fn is_idempotent(&self, a: Element) -> Result<bool> {
        self.check(a)?;
        Ok(a.0 == self.threshold)
    }

    /// The projection `ψ: a ↦ ind(a) + nZ`.
    pub fn psi(&self, a: Element) -> Result<Residue> {
        self.check(a)?;
        Ok(Residue(a.0 % self.n))
    }
}

impl fmt::Display for SemigroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({};{})", self.k, self.n)
    }
}

/// A semigroup element, identified by its canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(u32);

impl Element {
    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}s", self.0)
    }
}

/// A class of `Z/nZ`, stored as its representative in `[0, n-1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Residue(u32);

impl Residue {
    pub fn new(value: u32, n: u32) -> Result<Self> {
        if n == 0 || value >= n {
            return Err(Error::Domain(format!("residue {value} is not in [0, {n})")));
        }
        Ok(Residue(value))
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
