//! Supports of two families with closed-form projection dimensions: the
//! Plücker-embedded complete flag variety of a `(p+1)`-dimensional space, and
//! the iterated Keel–Tevelev embedding of `M̄_{0,p+3}`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polymatroid::{msupp_from_rank, RankFunction};
use crate::subset::Subset;
use crate::support::{compositions, Support};

fn check_p(p: usize) -> Result<()> {
    if p == 0 {
        return Err(Error::InvalidArgument("p must be at least 1".into()));
    }
    Ok(())
}

/// `S(J) = Σ_{i<j} d_i d_j`, the dimension of the partial flag variety with
/// subspace dimensions `J`, where `d` are the gaps of `0 < j_1 < ... < j_k < p+1`.
pub fn partial_flag_dimension(p: usize, j: Subset) -> u32 {
    let mut cuts: Vec<u32> = vec![0];
    cuts.extend(j.elements().map(|x| x as u32));
    cuts.push(p as u32 + 1);
    let gaps: Vec<u32> = cuts.windows(2).map(|w| w[1] - w[0]).collect();
    let total: u32 = gaps.iter().sum();
    let squares: u32 = gaps.iter().map(|g| g * g).sum();
    if j.is_empty() {
        return 0;
    }
    (total * total - squares) / 2
}

pub fn flag_rank_function(p: usize) -> Result<RankFunction> {
    check_p(p)?;
    RankFunction::from_fn(p, |j| partial_flag_dimension(p, j))
}

pub fn flag_msupp(p: usize) -> Result<Support> {
    msupp_from_rank(&flag_rank_function(p)?)
}

/// `binom(p+1, 2)`, the dimension of the complete flag variety.
pub fn flag_dimension(p: usize) -> u32 {
    (p * (p + 1) / 2) as u32
}

/// Index convention for the displayed prefix bounds
/// `1 <= n_k <= Σ_{j=1}^k (c - j) - Σ_{i<k} n_i`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FlagReading {
    /// `c = p`, exactly as printed.
    Literal,
    /// `c = p + 1`.
    Shifted,
}

impl FlagReading {
    pub const ALL: [FlagReading; 2] = [FlagReading::Literal, FlagReading::Shifted];
}

/// Evaluates the displayed prefix inequalities under `reading`; the total
/// `|n| = binom(p+1, 2)` is required as well.
pub fn flag_display_inequalities(p: usize, n: &[u32], reading: FlagReading) -> Result<bool> {
    check_p(p)?;
    if n.len() != p {
        return Err(Error::DimensionMismatch {
            expected: p,
            got: n.len(),
        });
    }
    if n.iter().sum::<u32>() != flag_dimension(p) {
        return Ok(false);
    }
    let c = match reading {
        FlagReading::Literal => p as i64,
        FlagReading::Shifted => p as i64 + 1,
    };
    let mut bound = 0i64;
    let mut prefix = 0i64;
    for (k, &nk) in n.iter().enumerate() {
        bound += c - (k as i64 + 1);
        let nk = nk as i64;
        if nk < 1 || nk > bound - prefix {
            return Ok(false);
        }
        prefix += nk;
    }
    Ok(true)
}

/// The displayed inequalities exactly as printed.
pub fn flag_simple_inequalities(p: usize, n: &[u32]) -> Result<bool> {
    flag_display_inequalities(p, n, FlagReading::Literal)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReadingComparison {
    pub reading: FlagReading,
    pub accepted: usize,
    pub agrees: bool,
    /// In the rank-function support but rejected by the display.
    pub only_rank_route: Vec<Vec<u32>>,
    /// Accepted by the display but outside the rank-function support.
    pub only_display: Vec<Vec<u32>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FlagComparison {
    pub p: usize,
    pub weight: u32,
    pub rank_route: Support,
    pub readings: Vec<ReadingComparison>,
}

/// Pointwise comparison of the rank-function support with the displayed
/// inequalities over every `n` of weight `binom(p+1, 2)`.
pub fn flag_comparison(p: usize) -> Result<FlagComparison> {
    let rank_route = flag_msupp(p)?;
    let weight = flag_dimension(p);
    let all = compositions(weight, p);
    let readings = FlagReading::ALL
        .iter()
        .map(|&reading| {
            let mut only_rank_route = Vec::new();
            let mut only_display = Vec::new();
            let mut accepted = 0;
            for n in &all {
                let shown = flag_display_inequalities(p, n, reading)?;
                accepted += usize::from(shown);
                match (rank_route.contains(n), shown) {
                    (true, false) => only_rank_route.push(n.clone()),
                    (false, true) => only_display.push(n.clone()),
                    _ => {}
                }
            }
            Ok(ReadingComparison {
                reading,
                accepted,
                agrees: only_rank_route.is_empty() && only_display.is_empty(),
                only_rank_route,
                only_display,
            })
        })
        .collect::<Result<_>>()?;
    Ok(FlagComparison {
        p,
        weight,
        rank_route,
        readings,
    })
}

/// `r(J) = max J`, the projection dimensions of `M̄_{0,p+3}`.
pub fn m0n_rank_function(p: usize) -> Result<RankFunction> {
    check_p(p)?;
    RankFunction::from_fn(p, |j| j.elements().max().unwrap_or(0) as u32)
}

pub fn m0n_msupp(p: usize) -> Result<Support> {
    msupp_from_rank(&m0n_rank_function(p)?)
}

/// `{n : n_1 + ... + n_k <= k for k < p, |n| = p}` by direct enumeration.
pub fn m0n_prefix_enumeration(p: usize) -> Result<Support> {
    check_p(p)?;
    let pts = compositions(p as u32, p).into_iter().filter(|n| {
        let mut acc = 0;
        n[..p - 1].iter().enumerate().all(|(k, &x)| {
            acc += x;
            acc as usize <= k + 1
        })
    });
    Support::new(p, pts)
}
