//! Rank functions, discrete polymatroids and M-convex sets.
//!
//! A rank function on `[p]` is stored as a dense table of `2^p` values indexed
//! by subset bitmask. The multidegree support of an irreducible variety is the
//! set of lattice points `n` with `n(J) <= r(J)` for every proper `J` and
//! `n([p]) = r([p])`, where `r(J)` is the dimension of the projection onto the
//! factors in `J`.

use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{is_prime, ModP, RationalJson};
use crate::subset::{Subset, MAX_GROUND_SET};
use crate::support::Support;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RankJson", into = "RankJson")]
pub struct RankFunction {
    p: usize,
    values: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RankJson {
    p: usize,
    values: Vec<u32>,
}

impl TryFrom<RankJson> for RankFunction {
    type Error = Error;
    fn try_from(raw: RankJson) -> Result<Self> {
        RankFunction::from_values(raw.p, raw.values)
    }
}

impl From<RankFunction> for RankJson {
    fn from(r: RankFunction) -> Self {
        RankJson {
            p: r.p,
            values: r.values,
        }
    }
}

fn check_ground_set(p: usize) -> Result<()> {
    if p > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            p,
            max: MAX_GROUND_SET,
        });
    }
    Ok(())
}

impl RankFunction {
    /// Table indexed by bitmask; must have exactly `2^p` entries.
    pub fn from_values(p: usize, values: Vec<u32>) -> Result<Self> {
        check_ground_set(p)?;
        let expected = 1usize << p;
        if values.len() != expected {
            return Err(Error::RankTableLength {
                p,
                expected,
                got: values.len(),
            });
        }
        Ok(RankFunction { p, values })
    }

    pub fn from_fn(p: usize, f: impl Fn(Subset) -> u32) -> Result<Self> {
        check_ground_set(p)?;
        Ok(RankFunction {
            p,
            values: Subset::all(p).map(f).collect(),
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn get(&self, s: Subset) -> u32 {
        self.values[s.index()]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn total(&self) -> u32 {
        self.get(Subset::full(self.p))
    }
}

/// A violated rank-function axiom together with its witness.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    /// `r(∅) != 0`.
    Normalization { value: u32 },
    /// `subset ⊆ superset` but `r(subset) > r(superset)`.
    Monotonicity {
        subset: Subset,
        superset: Subset,
        lower: u32,
        upper: u32,
    },
    /// `r(first ∩ second) + r(first ∪ second) > r(first) + r(second)`.
    Submodularity {
        first: Subset,
        second: Subset,
        lhs: u64,
        rhs: u64,
    },
}

impl Violation {
    /// Re-evaluates the witness against `r`; true if it really is a violation.
    pub fn holds_for(&self, r: &RankFunction) -> bool {
        match *self {
            Violation::Normalization { .. } => r.get(Subset::EMPTY) != 0,
            Violation::Monotonicity {
                subset, superset, ..
            } => subset.is_subset_of(superset) && r.get(subset) > r.get(superset),
            Violation::Submodularity { first, second, .. } => {
                let lhs =
                    r.get(first.intersection(second)) as u64 + r.get(first.union(second)) as u64;
                lhs > r.get(first) as u64 + r.get(second) as u64
            }
        }
    }
}

/// Outcome of [`validate_rank_function`].
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RankReport {
    pub valid: bool,
    /// At most [`RankReport::MAX_LISTED`] violations are listed.
    pub violations: Vec<Violation>,
    pub total_violations: u64,
}

impl RankReport {
    pub const MAX_LISTED: usize = 256;

    fn summary(&self) -> String {
        match self.violations.first() {
            Some(v) => format!("{} violation(s), first: {v:?}", self.total_violations),
            None => "valid".to_string(),
        }
    }
}

/// Checks normalization, monotonicity and submodularity.
///
/// Monotonicity and submodularity are tested in their local forms
/// (`r(S) <= r(S+i)` and `r(S+i) + r(S+j) >= r(S) + r(S+i+j)`), which are
/// equivalent to the global axioms.
pub fn validate_rank_function(r: &RankFunction) -> RankReport {
    let p = r.p;
    let mut violations = Vec::new();
    let mut total = 0u64;
    let mut record = |v: Violation| {
        total += 1;
        if violations.len() < RankReport::MAX_LISTED {
            violations.push(v);
        }
    };

    let empty = r.get(Subset::EMPTY);
    if empty != 0 {
        record(Violation::Normalization { value: empty });
    }
    for s in Subset::all(p) {
        for i in 1..=p {
            if s.contains(i) {
                continue;
            }
            let si = s.union(Subset::singleton(i));
            if r.get(s) > r.get(si) {
                record(Violation::Monotonicity {
                    subset: s,
                    superset: si,
                    lower: r.get(s),
                    upper: r.get(si),
                });
            }
            for j in i + 1..=p {
                if s.contains(j) {
                    continue;
                }
                let sj = s.union(Subset::singleton(j));
                let sij = si.union(sj);
                let lhs = r.get(s) as u64 + r.get(sij) as u64;
                let rhs = r.get(si) as u64 + r.get(sj) as u64;
                if lhs > rhs {
                    record(Violation::Submodularity {
                        first: si,
                        second: sj,
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    RankReport {
        valid: total == 0,
        violations,
        total_violations: total,
    }
}

/// Lattice points of `{n : n(J) <= r(J) for J ⊊ [p], n([p]) = r([p])}`
/// without checking that `r` is a rank function.
///
/// Depth-first over coordinates in order, each bounded by `r({i})`; every
/// subset sum touching the prefix is checked as soon as it is complete, and a
/// branch is cut when the remaining mass exceeds the rank of the remaining
/// coordinates.
pub fn polytope_lattice_points(r: &RankFunction) -> Support {
    let p = r.p;
    if p == 0 {
        return Support::new(0, [vec![]]).expect("single empty point");
    }
    let total = r.total() as u64;
    let mut sums = vec![0u64; 1 << p];
    let mut point = vec![0u32; p];
    let mut out = Vec::new();
    descend(r, 0, total, &mut sums, &mut point, &mut out);
    Support::new(p, out).expect("all points have weight r([p])")
}

fn descend(
    r: &RankFunction,
    k: usize,
    remaining: u64,
    sums: &mut [u64],
    point: &mut [u32],
    out: &mut Vec<Vec<u32>>,
) {
    let p = r.p;
    if k == p {
        if remaining == 0 {
            out.push(point.to_vec());
        }
        return;
    }
    let bit = 1usize << k;
    let rest = Subset::from_mask((((1usize << p) - 1) & !((bit << 1) - 1)) as u32);
    let cap = (r.get(Subset::from_mask(bit as u32)) as u64).min(remaining);
    'values: for v in 0..=cap {
        let after = remaining - v;
        if after > r.get(rest) as u64 {
            continue;
        }
        for m in 0..bit {
            let s = sums[m] + v;
            if s > r.values[m | bit] as u64 {
                continue 'values;
            }
            sums[m | bit] = s;
        }
        point[k] = v as u32;
        descend(r, k + 1, after, sums, point, out);
    }
}

/// Multidegree support determined by a rank function (the lattice points of
/// its base polymatroid polytope). Rejects invalid rank functions.
pub fn msupp_from_rank(r: &RankFunction) -> Result<Support> {
    let report = validate_rank_function(r);
    if !report.valid {
        return Err(Error::InvalidRank(report.summary()));
    }
    Ok(polytope_lattice_points(r))
}

/// Failed instance of the exchange axiom: `x_i > y_i`, yet no `j` with
/// `x_j < y_j` puts `x - e_i + e_j` back in the set. Coordinates are 1-based.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ExchangeWitness {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub i: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MConvexReport {
    pub mconvex: bool,
    pub witness: Option<ExchangeWitness>,
}

fn exchange_failure(s: &Support, x: &[u32], y: &[u32]) -> Option<usize> {
    let p = x.len();
    let mut probe = x.to_vec();
    for i in 0..p {
        if x[i] <= y[i] {
            continue;
        }
        probe[i] -= 1;
        let ok = (0..p).filter(|&j| x[j] < y[j]).any(|j| {
            probe[j] += 1;
            let hit = s.contains(&probe);
            probe[j] -= 1;
            hit
        });
        probe[i] += 1;
        if !ok {
            return Some(i + 1);
        }
    }
    None
}

/// Tests the exchange axiom on every ordered pair of points. The reported
/// witness is the first failing pair in lexicographic order.
pub fn is_mconvex(s: &Support) -> Result<MConvexReport> {
    if s.is_empty() {
        return Err(Error::Empty("support"));
    }
    let pts: Vec<&Vec<u32>> = s.points().collect();
    let witness = pts.par_iter().find_map_first(|x| {
        pts.iter().find_map(|y| {
            exchange_failure(s, x, y).map(|i| ExchangeWitness {
                x: x.to_vec(),
                y: y.to_vec(),
                i,
            })
        })
    });
    Ok(MConvexReport {
        mconvex: witness.is_none(),
        witness,
    })
}

/// `r(J) = max over points x of x(J)`.
pub fn rank_from_support(s: &Support) -> Result<RankFunction> {
    if s.is_empty() {
        return Err(Error::Empty("support"));
    }
    let p = s.p();
    check_ground_set(p)?;
    let mut values = vec![0u32; 1 << p];
    let mut sums = vec![0u32; 1 << p];
    for pt in s.points() {
        for mask in 1usize..1 << p {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = sums[mask & (mask - 1)] + pt[low];
            values[mask] = values[mask].max(sums[mask]);
        }
    }
    RankFunction::from_values(p, values)
}

/// Union of supports sharing `p` and weight. Reducible schemes have support
/// equal to the union over their top-dimensional components.
pub fn msupp_union(supports: &[Support]) -> Result<Support> {
    let (first, rest) = supports.split_first().ok_or(Error::Empty("support list"))?;
    rest.iter().try_fold(first.clone(), |acc, s| acc.union(s))
}

/// Coefficient field of a [`SubspaceFamily`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "Q" => Ok(FieldSpec::Rational),
            t => {
                let p = t
                    .strip_prefix("Fp:")
                    .and_then(|n| n.parse::<u64>().ok())
                    .ok_or_else(|| {
                        Error::InvalidField(format!("{t:?}; expected \"Q\" or \"Fp:<prime>\""))
                    })?;
                if !is_prime(p) || p > u32::MAX as u64 {
                    return Err(Error::InvalidField(format!("{p} is not a supported prime")));
                }
                Ok(FieldSpec::Prime(p))
            }
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Subspaces `V_1, ..., V_p` of `k^ambient`, each given by spanning vectors.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(try_from = "FamilyJson", into = "FamilyJson")]
pub struct SubspaceFamily {
    ambient: usize,
    field: FieldSpec,
    subspaces: Vec<Vec<Vec<BigRational>>>,
}

#[derive(Serialize, Deserialize)]
struct FamilyJson {
    ambient: usize,
    #[serde(default = "default_field")]
    field: String,
    subspaces: Vec<Vec<Vec<RationalJson>>>,
}

fn default_field() -> String {
    "Q".to_string()
}

impl TryFrom<FamilyJson> for SubspaceFamily {
    type Error = Error;
    fn try_from(raw: FamilyJson) -> Result<Self> {
        let field = FieldSpec::parse(&raw.field)?;
        let subspaces = raw
            .subspaces
            .into_iter()
            .map(|gens| {
                gens.into_iter()
                    .map(|v| v.into_iter().map(|q| q.0).collect())
                    .collect()
            })
            .collect();
        SubspaceFamily::new(raw.ambient, field, subspaces)
    }
}

impl From<SubspaceFamily> for FamilyJson {
    fn from(f: SubspaceFamily) -> Self {
        FamilyJson {
            ambient: f.ambient,
            field: f.field.to_string(),
            subspaces: f
                .subspaces
                .into_iter()
                .map(|gens| {
                    gens.into_iter()
                        .map(|v| v.into_iter().map(RationalJson).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl SubspaceFamily {
    pub fn new(
        ambient: usize,
        field: FieldSpec,
        subspaces: Vec<Vec<Vec<BigRational>>>,
    ) -> Result<Self> {
        check_ground_set(subspaces.len())?;
        for gens in &subspaces {
            for v in gens {
                if v.len() != ambient {
                    return Err(Error::RaggedVectors {
                        expected: ambient,
                        got: v.len(),
                    });
                }
                if let FieldSpec::Prime(p) = field {
                    for q in v {
                        ModP::from_rational(q, p)?;
                    }
                }
            }
        }
        Ok(SubspaceFamily {
            ambient,
            field,
            subspaces,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn p(&self) -> usize {
        self.subspaces.len()
    }

    fn stacked<F>(&self, s: Subset, convert: impl Fn(&BigRational) -> F) -> Vec<Vec<F>> {
        s.elements()
            .flat_map(|i| self.subspaces[i - 1].iter())
            .map(|v| v.iter().map(&convert).collect())
            .collect()
    }
}

/// `r(J) = dim(sum of V_j for j in J)`, by exact elimination over the family's field.
pub fn linear_rank(fam: &SubspaceFamily) -> Result<RankFunction> {
    let p = fam.p();
    RankFunction::from_fn(p, |s| {
        let rank = match fam.field {
            FieldSpec::Rational => linalg::rank(&fam.stacked(s, Clone::clone)),
            FieldSpec::Prime(q) => linalg::rank(&fam.stacked(s, |x| {
                ModP::from_rational(x, q).expect("checked at construction")
            })),
        };
        rank as u32
    })
}
