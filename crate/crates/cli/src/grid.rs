//! Parameter grids: explicit `k:n` pairs, a `k × n` product of value
//! lists, or the diagonal `k = n`.

use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, clap::Args)]
pub struct GridArgs {
    /// Comma-separated `k:n` pairs; an empty string is an empty grid.
    #[arg(long, conflicts_with_all = ["k", "diagonal"])]
    pub pairs: Option<String>,

    /// Values of k, e.g. `1-8` or `2,4,6-9`.
    #[arg(long)]
    pub k: Option<String>,

    /// Values of n, e.g. `1-8`.
    #[arg(long)]
    pub n: Option<String>,

    /// Use k = n for every listed n.
    #[arg(long, conflicts_with = "k")]
    pub diagonal: bool,
}

impl GridArgs {
    /// The grid as distinct pairs in lexicographic `(k, n)` order.
    pub fn pairs(&self) -> Result<Vec<(u32, u32)>, String> {
        let set: BTreeSet<(u32, u32)> = if let Some(pairs) = &self.pairs {
            parse_pairs(pairs)?.into_iter().collect()
        } else {
            let ns = parse_values(
                self.n
                    .as_deref()
                    .ok_or("sweep needs --pairs, or --n with --k or --diagonal")?,
            )?;
            if self.diagonal {
                ns.iter().map(|&n| (n, n)).collect()
            } else {
                let ks = parse_values(
                    self.k
                        .as_deref()
                        .ok_or("sweep needs --k or --diagonal alongside --n")?,
                )?;
                ks.iter().flat_map(|&k| ns.iter().map(move |&n| (k, n))).collect()
            }
        };
        Ok(set.into_iter().collect())
    }
}

fn positive(token: &str) -> Result<u32, String> {
    match token.trim().parse::<u32>() {
        Ok(0) => Err(format!("`{token}`: parameters must be at least 1")),
        Ok(v) => Ok(v),
        Err(_) => Err(format!("`{token}`: expected a positive integer")),
    }
}

/// `1-3,7` → `[1, 2, 3, 7]`. An empty string is an empty list; a
/// descending range such as `5-2` is empty.
pub fn parse_values(text: &str) -> Result<Vec<u32>, String> {
    let mut out = BTreeSet::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token.split_once('-') {
            Some((lo, hi)) => out.extend(positive(lo)?..=positive(hi)?),
            None => {
                out.insert(positive(token)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// `4:3,5:4` → `[(4, 3), (5, 4)]`, in the given order.
pub fn parse_pairs(text: &str) -> Result<Vec<(u32, u32)>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|token| {
            let (k, n) = token
                .split_once(':')
                .ok_or_else(|| format!("`{token}`: expected a pair k:n"))?;
            Ok((positive(k)?, positive(n)?))
        })
        .collect()
}
