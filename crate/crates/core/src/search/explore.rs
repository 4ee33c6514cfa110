use serde::{Deserialize, Serialize};

use crate::bounds::{is_open_regime, predicted_smo, predicted_smo_hat, Bounds};
use crate::error::{Error, Result};
use crate::search::{compute_smo, compute_smo_hat, InvariantResult, SearchConfig};
use crate::semigroup::SemigroupParams;

/// Exact small-case values in the regime `k > n ≥ 3`, `⌈k/n⌉n` even,
/// next to the interval they are known to lie in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorationRow {
    pub k: u32,
    pub n: u32,
    pub smo_hat: InvariantResult,
    pub smo: InvariantResult,
    pub smo_hat_bounds: Bounds,
    pub smo_bounds: Bounds,
    pub within_bounds: bool,
}

/// Computes `Ŝmo` and `Smo` for each pair. `cap` overrides both default
/// search caps when given.
pub fn explore_open_problem(
    pairs: &[(u32, u32)],
    cap: Option<u32>,
    config: &SearchConfig,
) -> Result<Vec<ExplorationRow>> {
    let params = pairs
        .iter()
        .map(|&(k, n)| {
            let p = SemigroupParams::new(k, n)?;
            if !is_open_regime(p) {
                return Err(Error::Domain(format!(
                    "{p} is outside the open regime k > n >= 3 with ⌈k/n⌉n even"
                )));
            }
            Ok(p)
        })
        .collect::<Result<Vec<_>>>()?;

    params
        .into_iter()
        .map(|p| {
            let smo_hat = compute_smo_hat(p, cap, config)?;
            let smo = compute_smo(p, cap, config)?;
            let smo_hat_bounds = predicted_smo_hat(p);
            let smo_bounds = predicted_smo(p);
            let within_bounds = smo_hat.is_exact()
                && smo.is_exact()
                && smo_hat_bounds.contains(smo_hat.value)
                && smo_bounds.contains(smo.value);
            Ok(ExplorationRow {
                k: p.k(),
                n: p.n(),
                smo_hat,
                smo,
                smo_hat_bounds,
                smo_bounds,
                within_bounds,
            })
        })
        .collect()
}
