//! Grid sweeps of `Ŝmo` and `Smo`, one row per `(k, n)`.

use serde::{Deserialize, Serialize};

use idemsum_core::bounds::{is_open_regime, predicted_smo, predicted_smo_hat};
use idemsum_core::classifier::regime_label;
use idemsum_core::SemigroupParams;

use crate::render::{self, Format};
use crate::{params, CliError, Context, Which};

/// Column order of the sweep table.
pub const COLUMNS: [&str; 14] = [
    "k",
    "n",
    "regime",
    "parity_class",
    "status",
    "smo_hat",
    "smo",
    "smo_hat_lower",
    "smo_hat_upper",
    "smo_lower",
    "smo_upper",
    "smo_hat_frontier_hit",
    "smo_frontier_hit",
    "within_bounds",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub k: u32,
    pub n: u32,
    pub regime: String,
    pub parity_class: String,
    /// `ok`, or `refused` when a search exceeded the budget.
    pub status: String,
    pub smo_hat: Option<u32>,
    pub smo: Option<u32>,
    pub smo_hat_lower: u32,
    pub smo_hat_upper: u32,
    pub smo_lower: u32,
    pub smo_upper: u32,
    pub smo_hat_frontier_hit: Option<bool>,
    pub smo_frontier_hit: Option<bool>,
    pub within_bounds: Option<bool>,
}

/// `k<=n`; for `k > n`: `n=1`, `n=2`, or the parity of `⌈k/n⌉n`
/// (`even` is the open regime).
pub fn parity_class(p: SemigroupParams) -> &'static str {
    if !p.is_k_greater() {
        "k<=n"
    } else if p.n() == 1 {
        "n=1"
    } else if p.n() == 2 {
        "n=2"
    } else if is_open_regime(p) {
        "even"
    } else {
        "odd"
    }
}

/// Computes each row, marking rows over budget as `refused` and carrying
/// on. `pairs` must already be in lexicographic order.
pub fn sweep(ctx: &Context, pairs: &[(u32, u32)], cap: Option<u32>) -> Result<Vec<SweepRow>, CliError> {
    let mut rows = Vec::with_capacity(pairs.len());
    for &(k, n) in pairs {
        let p = params(k, n)?;
        let (hat_bounds, smo_bounds) = (predicted_smo_hat(p), predicted_smo(p));
        let mut row = SweepRow {
            k,
            n,
            regime: regime_label(p).to_string(),
            parity_class: parity_class(p).to_string(),
            status: "ok".into(),
            smo_hat: None,
            smo: None,
            smo_hat_lower: hat_bounds.lower,
            smo_hat_upper: hat_bounds.upper,
            smo_lower: smo_bounds.lower,
            smo_upper: smo_bounds.upper,
            smo_hat_frontier_hit: None,
            smo_frontier_hit: None,
            within_bounds: None,
        };
        let computed = ctx
            .invariant(Which::SmoHat, Some(k), n, cap)
            .and_then(|hat| Ok((hat, ctx.invariant(Which::Smo, Some(k), n, cap)?)));
        match computed {
            Ok((hat, smo)) => {
                row.within_bounds = Some(
                    !hat.frontier_hit
                        && !smo.frontier_hit
                        && hat_bounds.contains(hat.value)
                        && smo_bounds.contains(smo.value),
                );
                row.smo_hat = Some(hat.value);
                row.smo = Some(smo.value);
                row.smo_hat_frontier_hit = Some(hat.frontier_hit);
                row.smo_frontier_hit = Some(smo.frontier_hit);
            }
            Err(CliError::Budget(_)) => row.status = "refused".into(),
            Err(e) => return Err(e),
        }
        rows.push(row);
    }
    Ok(rows)
}

/// CSV always carries the header row, even for an empty grid.
pub fn render_rows(rows: &[SweepRow], format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => {
            let header: Vec<String> = COLUMNS.iter().map(|c| c.to_string()).collect();
            let cells = rows
                .iter()
                .map(|row| {
                    let value = serde_json::to_value(row).map_err(|e| CliError::Output(e.to_string()))?;
                    Ok(render::flatten(&value)
                        .into_iter()
                        .map(|(_, cell)| cell)
                        .collect())
                })
                .collect::<Result<Vec<Vec<String>>, CliError>>()?;
            render::csv_table(&header, cells)
        }
        other => render::render(&rows, other),
    }
}
