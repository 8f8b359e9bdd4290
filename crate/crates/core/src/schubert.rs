//! Permutations, Schubert polynomials, Rothe diagrams and the `θ_D` statistic.
//!
//! Rows, columns, positions and values are 1-based throughout, matching the
//! `[p] × [p]` grid convention.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polymatroid::{msupp_from_rank, RankFunction};
use crate::subset::{Subset, MAX_GROUND_SET};
use crate::support::Support;
use crate::IntPolynomial;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "PermutationJson", into = "PermutationJson")]
pub struct Permutation {
    one_line: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationJson {
    p: usize,
    one_line: Vec<usize>,
}

impl TryFrom<PermutationJson> for Permutation {
    type Error = Error;
    fn try_from(raw: PermutationJson) -> Result<Self> {
        if raw.one_line.len() != raw.p {
            return Err(Error::InvalidPermutation(format!(
                "one_line has {} entries but p = {}",
                raw.one_line.len(),
                raw.p
            )));
        }
        Permutation::new(raw.one_line)
    }
}

impl From<Permutation> for PermutationJson {
    fn from(pi: Permutation) -> Self {
        PermutationJson {
            p: pi.p(),
            one_line: pi.one_line,
        }
    }
}

impl Permutation {
    /// From one-line notation `pi(1), ..., pi(p)`.
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let p = one_line.len();
        if p == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        let mut seen = vec![false; p + 1];
        for &v in &one_line {
            if v == 0 || v > p || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{one_line:?} is not a bijection of [{p}]"
                )));
            }
        }
        Ok(Permutation { one_line })
    }

    /// Parses comma-separated one-line notation such as `"4,2,5,3,1"`; for
    /// `p < 10` the commas may be dropped (`"42531"`).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let parts: Vec<&str> = if t.contains(',') {
            t.split(',').map(str::trim).collect()
        } else {
            t.split("").filter(|s| !s.is_empty()).collect()
        };
        let one_line = parts
            .iter()
            .map(|s| s.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse {
                what: "permutation",
                text: text.to_string(),
            })?;
        Permutation::new(one_line)
    }

    pub fn identity(p: usize) -> Self {
        Permutation {
            one_line: (1..=p).collect(),
        }
    }

    /// `pi_0 = (p, p-1, ..., 1)`.
    pub fn longest(p: usize) -> Self {
        Permutation {
            one_line: (1..=p).rev().collect(),
        }
    }

    pub fn p(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `pi(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.p()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Swaps the entries in positions `i` and `i + 1`.
    pub fn swap_positions(&self, i: usize) -> Permutation {
        let mut v = self.one_line.clone();
        v.swap(i - 1, i);
        Permutation { one_line: v }
    }

    /// Positions `i` with `pi(i) < pi(i + 1)`.
    pub fn ascents(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.p()).filter(|&i| self.apply(i) < self.apply(i + 1))
    }

    /// Every permutation of `[p]` in lexicographic order.
    pub fn all(p: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(p);
        let mut used = vec![false; p + 1];
        fn rec(p: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == p {
                out.push(Permutation {
                    one_line: cur.clone(),
                });
                return;
            }
            for v in 1..=p {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(p, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        rec(p, &mut cur, &mut used, &mut out);
        out
    }
}

/// Number of inversions `i < j` with `pi(i) > pi(j)`.
pub fn length(pi: &Permutation) -> usize {
    let w = pi.one_line();
    (0..w.len())
        .map(|i| w[i + 1..].iter().filter(|&&b| b < w[i]).count())
        .sum()
}

/// Write-once memo of Schubert polynomials keyed by permutation.
#[derive(Default)]
pub struct SchubertCache {
    memo: HashMap<Permutation, IntPolynomial>,
}

impl SchubertCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `S_{pi_0} = prod t_i^{p-i}`; otherwise `S_pi = ∂_i S_{pi s_i}` at the
    /// smallest ascent `i` of `pi`, where `pi s_i` swaps positions `i, i+1`.
    pub fn get(&mut self, pi: &Permutation) -> IntPolynomial {
        if let Some(f) = self.memo.get(pi) {
            return f.clone();
        }
        let p = pi.p();
        let f = match pi.ascents().next() {
            None => {
                let exps: Vec<u32> = (1..=p).map(|i| (p - i) as u32).collect();
                IntPolynomial::term(&exps, BigInt::one())
            }
            Some(i) => {
                let up = self.get(&pi.swap_positions(i));
                up.divided_difference(i - 1).expect("ascent index below p")
            }
        };
        self.memo.insert(pi.clone(), f.clone());
        f
    }
}

pub fn schubert_polynomial(pi: &Permutation) -> IntPolynomial {
    SchubertCache::new().get(pi)
}

/// Coordinates in which a Schubert support is reported.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Convention {
    /// Multidegree coordinates `n = (p - 1)·1 - m`.
    #[default]
    Msupp,
    /// Exponent vectors `m` of the polynomial.
    Exponent,
}

/// Positive support of `S_pi` in the requested coordinates.
pub fn schubert_polynomial_support(pi: &Permutation, convention: Convention) -> Support {
    let exps = schubert_polynomial(pi)
        .support()
        .expect("Schubert polynomials are homogeneous");
    match convention {
        Convention::Exponent => exps,
        Convention::Msupp => exps
            .complement(&vec![(pi.p() - 1) as u32; pi.p()])
            .expect("exponents of S_pi are at most p - 1"),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "DiagramJson", into = "DiagramJson")]
pub struct Diagram {
    p: usize,
    cells: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DiagramJson {
    p: usize,
    cells: Vec<[usize; 2]>,
}

impl TryFrom<DiagramJson> for Diagram {
    type Error = Error;
    fn try_from(raw: DiagramJson) -> Result<Self> {
        Diagram::new(raw.p, raw.cells.into_iter().map(|[r, c]| (r, c)))
    }
}

impl From<Diagram> for DiagramJson {
    fn from(d: Diagram) -> Self {
        DiagramJson {
            p: d.p,
            cells: d.cells.into_iter().map(|(r, c)| [r, c]).collect(),
        }
    }
}

impl Diagram {
    pub fn new(p: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if p > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                p,
                max: MAX_GROUND_SET,
            });
        }
        let cells: BTreeSet<_> = cells.into_iter().collect();
        if let Some(&(row, col)) = cells
            .iter()
            .find(|&&(r, c)| r == 0 || c == 0 || r > p || c > p)
        {
            return Err(Error::CellOutOfRange { row, col, p });
        }
        Ok(Diagram { p, cells })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.cells.contains(&(row, col))
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cells.iter().copied()
    }
}

/// `D_pi = {(i, j) : pi(i) > j and pi^{-1}(j) > i}`.
pub fn rothe_diagram(pi: &Permutation) -> Diagram {
    let p = pi.p();
    let inv = pi.inverse();
    let cells = (1..=p)
        .flat_map(|i| (1..=p).map(move |j| (i, j)))
        .filter(|&(i, j)| pi.apply(i) > j && inv.apply(j) > i);
    Diagram::new(p, cells).expect("cells lie in the grid")
}

/// `θ_D(J)`: for each column read top to bottom, `(` for an empty cell in a
/// row of `J`, `)` for a box in a row outside `J`, `⋆` for a box in a row of
/// `J`; count matched `()` pairs plus stars, summed over columns.
pub fn theta(d: &Diagram, rows: Subset) -> u32 {
    let mut total = 0;
    for col in 1..=d.p {
        let mut open = 0u32;
        for row in 1..=d.p {
            match (d.contains(row, col), rows.contains(row)) {
                (false, true) => open += 1,
                (true, false) if open > 0 => {
                    open -= 1;
                    total += 1;
                }
                (true, true) => total += 1,
                _ => {}
            }
        }
    }
    total
}

/// `θ_D` on every subset of `[p]`, as a table in bitmask order.
pub fn theta_table(d: &Diagram) -> RankFunction {
    RankFunction::from_fn(d.p, |s| theta(d, s)).expect("p within the ground-set cap")
}

/// Rank function in multidegree coordinates whose polymatroid is the
/// `θ_{D_pi}` inequality polytope:
/// `r(K) = (p - 1)|K| - θ([p]) + θ([p] \ K)`.
pub fn complementary_rank(pi: &Permutation) -> RankFunction {
    let p = pi.p();
    let th = theta_table(&rothe_diagram(pi));
    let full = th.get(Subset::full(p)) as i64;
    RankFunction::from_fn(p, |k| {
        let v = (p as i64 - 1) * k.len() as i64 - full + th.get(k.complement(p)) as i64;
        u32::try_from(v).expect("complementary rank is nonnegative")
    })
    .expect("p within the ground-set cap")
}

/// Lattice points `n` with `Σ_{j∈J} ((p-1) - n_j) <= θ_{D_pi}(J)` for proper
/// `J` and equality for `J = [p]`, in multidegree coordinates.
pub fn schubert_support_polytope(pi: &Permutation) -> Result<Support> {
    msupp_from_rank(&complementary_rank(pi))
}

/// Codimension of the projection of the matrix Schubert variety onto the rows in `rows`.
pub fn projection_codim(pi: &Permutation, rows: Subset) -> u32 {
    let p = pi.p();
    let d = rothe_diagram(pi);
    theta(&d, Subset::full(p)) - theta(&d, rows.complement(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert_eq!(perm("3,2,1"), Permutation::longest(3));
        assert_eq!(perm("42531").one_line(), &[4, 2, 5, 3, 1]);
        assert!(serde_json::from_str::<Permutation>(r#"{"p":3,"one_line":[1,2]}"#).is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(length(&Permutation::identity(5)), 0);
        for p in 1..7 {
            assert_eq!(length(&Permutation::longest(p)), p * (p - 1) / 2);
        }
        assert_eq!(length(&perm("42531")), 7);
    }

    #[test]
    fn schubert_examples() {
        assert_eq!(
            schubert_polynomial(&perm("321")),
            IntPolynomial::term(&[2, 1, 0], BigInt::one())
        );
        assert_eq!(
            schubert_polynomial(&perm("231")),
            IntPolynomial::term(&[1, 1, 0], BigInt::one())
        );
        for p in 1..6 {
            assert_eq!(
                schubert_polynomial(&Permutation::identity(p)),
                IntPolynomial::one(p)
            );
        }
        assert_eq!(schubert_polynomial(&perm("132")).to_string(), "t1 + t2");
        assert_eq!(schubert_polynomial(&perm("312")).to_string(), "t1^2");
    }

    #[test]
    fn rothe_examples() {
        assert!(rothe_diagram(&Permutation::identity(4)).is_empty());
        let d = rothe_diagram(&perm("2143"));
        assert_eq!(d.cells().collect::<Vec<_>>(), vec![(1, 1), (3, 3)]);
        let d = rothe_diagram(&perm("42531"));
        assert_eq!(
            d.cells().collect::<Vec<_>>(),
            vec![(1, 1), (1, 2), (1, 3), (2, 1), (3, 1), (3, 3), (4, 1)]
        );
        assert_eq!(d.len(), length(&perm("42531")));
    }

    #[test]
    fn theta_examples() {
        let d = rothe_diagram(&perm("42531"));
        assert_eq!(theta(&d, Subset::from_elements(&[2, 3])), 3);
        assert_eq!(theta(&d, Subset::EMPTY), 0);
        assert_eq!(theta(&d, Subset::full(5)), 7);
        // dropping the cell (3,1) does not change this value
        let drawn = Diagram::new(5, [(1, 1), (1, 2), (1, 3), (2, 1), (4, 1), (3, 3)]).unwrap();
        assert_eq!(theta(&drawn, Subset::from_elements(&[2, 3])), 3);
        assert!(Diagram::new(2, [(3, 1)]).is_err());
    }

    #[test]
    fn support_polytope_examples() {
        let id = schubert_support_polytope(&Permutation::identity(4)).unwrap();
        assert_eq!(
            id.points().cloned().collect::<Vec<_>>(),
            vec![vec![3, 3, 3, 3]]
        );
        let top = schubert_support_polytope(&Permutation::longest(3)).unwrap();
        assert_eq!(
            top.points().cloned().collect::<Vec<_>>(),
            vec![vec![0, 1, 2]]
        );
        let pi = perm("42531");
        let poly_side = schubert_polynomial_support(&pi, Convention::Msupp);
        assert_eq!(schubert_support_polytope(&pi).unwrap(), poly_side);
        assert_eq!(poly_side.len(), schubert_polynomial(&pi).num_terms());
    }

    #[test]
    fn projection_codim_examples() {
        let pi = perm("42531");
        assert_eq!(projection_codim(&pi, Subset::full(5)), 7);
        assert_eq!(projection_codim(&pi, Subset::EMPTY), 0);
        for s in Subset::all(4) {
            assert_eq!(projection_codim(&Permutation::identity(4), s), 0);
        }
    }

    #[test]
    fn json_forms() {
        let d = rothe_diagram(&perm("2143"));
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"p":4,"cells":[[1,1],[3,3]]}"#);
        assert_eq!(serde_json::from_str::<Diagram>(&json).unwrap(), d);
        let pi = perm("231");
        assert_eq!(
            serde_json::to_string(&pi).unwrap(),
            r#"{"p":3,"one_line":[2,3,1]}"#
        );
    }
}
