//! The closed-form bound family for nonhamiltonian graphs.
//!
//! * `h(n, d) = C(n−d, 2) + d²`, the edge count of `H_{n,d}`;
//! * `e(n, d) = max{h(n, d), h(n, ⌊(n−1)/2⌋)}`, the largest edge count of a
//!   nonhamiltonian `n`-vertex graph with minimum degree at least `d`;
//! * `d0(n)`, the first `d` at which `e(n, ·)` stops decreasing;
//! * `C(n−d, 2) + C(d+1, 2)`, the edge count of `H'_{n,d}`.
//!
//! Everything is exact integer arithmetic.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("d = {d} is outside 0..={n} for h(n, d)")]
    DegreeExceedsOrder { n: u64, d: u64 },
    #[error("d = {d} is outside 1..={max} for n = {n}")]
    DegreeOutOfRange { n: u64, d: u64, max: u64 },
    #[error("n = {0} is too small; at least 3 vertices are needed")]
    OrderTooSmall(u64),
}

/// `C(m, 2)`.
pub const fn pairs(m: u64) -> u64 {
    m * m.saturating_sub(1) / 2
}

/// `⌊(n−1)/2⌋`, the largest admissible minimum degree for a nonhamiltonian graph.
pub const fn max_degree_param(n: u64) -> u64 {
    n.saturating_sub(1) / 2
}

fn check_param(n: u64, d: u64) -> Result<(), FormulaError> {
    let max = max_degree_param(n);
    if d == 0 || d > max {
        return Err(FormulaError::DegreeOutOfRange { n, d, max });
    }
    Ok(())
}

/// `h(n, d) = C(n−d, 2) + d²`.
pub fn h_edges(n: u64, d: u64) -> Result<u64, FormulaError> {
    if d > n {
        return Err(FormulaError::DegreeExceedsOrder { n, d });
    }
    Ok(pairs(n - d) + d * d)
}

/// `e(n, d) = max{h(n, d), h(n, ⌊(n−1)/2⌋)}` for `1 ≤ d ≤ ⌊(n−1)/2⌋`.
pub fn e_bound(n: u64, d: u64) -> Result<u64, FormulaError> {
    check_param(n, d)?;
    let low = h_edges(n, d)?;
    let plateau = h_edges(n, max_degree_param(n))?;
    Ok(low.max(plateau))
}

/// `⌈(n+1)/6⌉` for odd `n`, `⌈(n+4)/6⌉` for even `n`.
pub const fn d0(n: u64) -> u64 {
    if n % 2 == 1 {
        (n + 1).div_ceil(6)
    } else {
        (n + 4).div_ceil(6)
    }
}

/// Edge count of `H'_{n,d}`: `C(n−d, 2) + C(d+1, 2)`.
pub fn hprime_edges(n: u64, d: u64) -> Result<u64, FormulaError> {
    check_param(n, d)?;
    Ok(pairs(n - d) + pairs(d + 1))
}

/// All `d` in `1..d0(n)` for which `H'_{n,d}` has more than `e(n, d+1)` edges.
///
/// A plain scan: the qualifying set is not assumed to be an interval.
pub fn hprime_qualifying_range(n: u64) -> Result<Vec<u64>, FormulaError> {
    if n < 3 {
        return Err(FormulaError::OrderTooSmall(n));
    }
    let top = d0(n).min(max_degree_param(n));
    let mut out = Vec::new();
    for d in 1..top {
        if hprime_edges(n, d)? > e_bound(n, d + 1)? {
            out.push(d);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub d: u64,
    pub h: u64,
    pub e: u64,
    pub hprime: u64,
    /// `hprime > e(n, d+1)`; false in the last row, where `e(n, d+1)` is undefined.
    pub qualifies: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTable {
    pub n: u64,
    pub d0: u64,
    pub rows: Vec<BoundRow>,
}

impl BoundTable {
    pub fn e_column(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.e).collect()
    }

    /// Checks `e(n,1) > … > e(n,d0) = … = e(n,⌊(n−1)/2⌋)` on this table.
    pub fn chain_holds(&self) -> bool {
        self.rows.windows(2).all(|w| {
            if w[0].d < self.d0 {
                w[0].e > w[1].e
            } else {
                w[0].e == w[1].e
            }
        })
    }
}

pub fn bound_table(n: u64) -> Result<BoundTable, FormulaError> {
    if n < 3 {
        return Err(FormulaError::OrderTooSmall(n));
    }
    let max = max_degree_param(n);
    let rows = (1..=max)
        .map(|d| {
            let e = e_bound(n, d)?;
            let hprime = hprime_edges(n, d)?;
            let qualifies = d < max && hprime > e_bound(n, d + 1)?;
            Ok(BoundRow {
                d,
                h: h_edges(n, d)?,
                e,
                hprime,
                qualifies,
            })
        })
        .collect::<Result<_, FormulaError>>()?;
    Ok(BoundTable { n, d0: d0(n), rows })
}
