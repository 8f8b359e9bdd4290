//! Multigraded K-polynomials of monomial ideals and the Stanley–Reisner
//! constructions built on them.
//!
//! The K-polynomial is the numerator of the multigraded Hilbert series of
//! `S/I` over `∏_x (1 - t^{deg x})`. Truncating `K(1 - t)` to total degree
//! `dim S - dim S/I` gives the multidegree polynomial whenever `S/I` has no
//! torsion supported on the irrelevant ideal; that hypothesis is the caller's
//! responsibility.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND_SET};
use crate::support::Support;
use crate::IntPolynomial;

/// Degree of each variable as a vector in `N^p`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grading {
    p: usize,
    degrees: Vec<Vec<u32>>,
}

impl Grading {
    pub fn new(p: usize, degrees: Vec<Vec<u32>>) -> Result<Self> {
        for (i, d) in degrees.iter().enumerate() {
            if d.len() != p {
                return Err(Error::InvalidGrading(format!(
                    "degree of variable {} has length {}, expected {p}",
                    i + 1,
                    d.len()
                )));
            }
            if d.iter().all(|&x| x == 0) {
                return Err(Error::InvalidGrading(format!(
                    "variable {} has zero degree",
                    i + 1
                )));
            }
        }
        Ok(Grading { p, degrees })
    }

    /// Standard `N^p` grading: block `j` holds `sizes[j]` variables of degree `e_j`,
    /// the coordinate ring of `P^{sizes[0]-1} × ... × P^{sizes[p-1]-1}`.
    pub fn standard(sizes: &[usize]) -> Self {
        let p = sizes.len();
        let degrees = sizes
            .iter()
            .enumerate()
            .flat_map(|(j, &n)| {
                let mut e = vec![0; p];
                e[j] = 1;
                std::iter::repeat_n(e, n)
            })
            .collect();
        Grading { p, degrees }
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn degree_of(&self, var: usize) -> &[u32] {
        &self.degrees[var]
    }

    /// Multidegree of the monomial `x^exponents`.
    pub fn degree(&self, exponents: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.p];
        for (var, &a) in exponents.iter().enumerate() {
            for (o, &d) in out.iter_mut().zip(&self.degrees[var]) {
                *o += a * d;
            }
        }
        out
    }

    /// True when every degree is an elementary vector.
    pub fn is_standard(&self) -> bool {
        self.degrees.iter().all(|d| d.iter().sum::<u32>() == 1)
    }

    /// Number of variables of degree `e_j` for each `j`, for standard gradings.
    pub fn block_sizes(&self) -> Option<Vec<usize>> {
        if !self.is_standard() {
            return None;
        }
        Some(
            (0..self.p)
                .map(|j| self.degrees.iter().filter(|d| d[j] == 1).count())
                .collect(),
        )
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Removes duplicates and non-minimal generators; canonical sorted order.
fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort();
    gens.dedup();
    let keep: Vec<bool> = (0..gens.len())
        .map(|i| !(0..gens.len()).any(|j| j != i && divides(&gens[j], &gens[i])))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    grading: Grading,
    generators: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    nvars: usize,
    p: usize,
    degrees: Vec<Vec<u32>>,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;
    fn try_from(raw: IdealJson) -> Result<Self> {
        if raw.degrees.len() != raw.nvars {
            return Err(Error::InvalidGrading(format!(
                "{} degree vectors for {} variables",
                raw.degrees.len(),
                raw.nvars
            )));
        }
        MonomialIdeal::new(Grading::new(raw.p, raw.degrees)?, raw.generators)
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(i: MonomialIdeal) -> Self {
        IdealJson {
            nvars: i.grading.nvars(),
            p: i.grading.p,
            degrees: i.grading.degrees,
            generators: i.generators,
        }
    }
}

impl MonomialIdeal {
    /// Rejects generator lists in which one generator divides another.
    pub fn new(grading: Grading, generators: Vec<Vec<u32>>) -> Result<Self> {
        let n = grading.nvars();
        for g in &generators {
            if g.len() != n {
                return Err(Error::ExponentLength {
                    expected: n,
                    got: g.len(),
                });
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for (j, b) in generators.iter().enumerate() {
                if i != j && divides(a, b) {
                    return Err(Error::NonMinimalGenerators {
                        divisor: i,
                        multiple: j,
                    });
                }
            }
        }
        Ok(MonomialIdeal {
            grading,
            generators,
        })
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.grading.nvars()
    }

    pub fn contains_monomial(&self, exponents: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, exponents))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&a| a <= 1))
    }

    /// Same generators listed in a different order.
    pub fn reordered(&self, order: &[usize]) -> MonomialIdeal {
        MonomialIdeal {
            grading: self.grading.clone(),
            generators: order.iter().map(|&i| self.generators[i].clone()).collect(),
        }
    }
}

/// Which generator the K-polynomial recursion splits off.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PivotRule {
    /// Last generator among those of largest total degree.
    #[default]
    LargestDegree,
    /// First generator in the current list.
    First,
}

struct KRecursion<'a> {
    grading: &'a Grading,
    rule: PivotRule,
    memo: HashMap<Vec<Vec<u32>>, IntPolynomial>,
}

impl KRecursion<'_> {
    fn one_minus_t(&self, g: &[u32]) -> IntPolynomial {
        let p = self.grading.p;
        IntPolynomial::one(p).add_unchecked(&IntPolynomial::term(
            &self.grading.degree(g),
            -BigInt::one(),
        ))
    }

    fn pairwise_coprime(gens: &[Vec<u32>]) -> bool {
        let n = gens.first().map_or(0, Vec::len);
        (0..n).all(|v| gens.iter().filter(|g| g[v] > 0).count() <= 1)
    }

    fn pivot(&self, gens: &[Vec<u32>]) -> usize {
        match self.rule {
            PivotRule::First => 0,
            PivotRule::LargestDegree => {
                let deg = |g: &Vec<u32>| g.iter().map(|&a| a as u64).sum::<u64>();
                let top = gens.iter().map(deg).max().expect("nonempty");
                gens.iter()
                    .rposition(|g| deg(g) == top)
                    .expect("max attained")
            }
        }
    }

    fn k(&mut self, gens: Vec<Vec<u32>>) -> IntPolynomial {
        let p = self.grading.p;
        if gens.is_empty() {
            return IntPolynomial::one(p);
        }
        if gens.iter().any(|g| g.iter().all(|&a| a == 0)) {
            return IntPolynomial::zero(p);
        }
        if Self::pairwise_coprime(&gens) {
            return gens.iter().fold(IntPolynomial::one(p), |acc, g| {
                acc.mul_unchecked(&self.one_minus_t(g))
            });
        }
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        // K(S/(J + (m))) = K(S/J) - t^{deg m} K(S/(J : m))
        let at = self.pivot(&gens);
        let m = gens[at].clone();
        let rest: Vec<Vec<u32>> = gens
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != at)
            .map(|(_, g)| g.clone())
            .collect();
        let colon: Vec<Vec<u32>> = rest
            .iter()
            .map(|g| {
                g.iter()
                    .zip(&m)
                    .map(|(&a, &b)| a.saturating_sub(b))
                    .collect()
            })
            .collect();
        let key = gens;
        let base = self.k(match self.rule {
            PivotRule::LargestDegree => minimalize(rest),
            PivotRule::First => rest,
        });
        let colon = minimalize(colon);
        let shifted = self
            .k(colon)
            .shift(&self.grading.degree(&m))
            .expect("length p");
        let out = base.add_unchecked(&shifted.neg());
        self.memo.insert(key, out.clone());
        out
    }
}

pub fn kpolynomial(ideal: &MonomialIdeal) -> IntPolynomial {
    kpolynomial_with(ideal, PivotRule::default())
}

pub fn kpolynomial_with(ideal: &MonomialIdeal, rule: PivotRule) -> IntPolynomial {
    let mut rec = KRecursion {
        grading: &ideal.grading,
        rule,
        memo: HashMap::new(),
    };
    let gens = match rule {
        PivotRule::LargestDegree => minimalize(ideal.generators.clone()),
        PivotRule::First => ideal.generators.clone(),
    };
    rec.k(gens)
}

/// Default cap on exponent vectors visited by [`hilbert_function_oracle`].
pub const ORACLE_BUDGET: u64 = 50_000_000;

/// `dim_k [S/I]_nu`, counted by enumerating all monomials of multidegree `nu`.
pub fn hilbert_function_oracle(ideal: &MonomialIdeal, nu: &[u32]) -> Result<u64> {
    hilbert_function_oracle_with_budget(ideal, nu, ORACLE_BUDGET)
}

pub fn hilbert_function_oracle_with_budget(
    ideal: &MonomialIdeal,
    nu: &[u32],
    budget: u64,
) -> Result<u64> {
    let g = &ideal.grading;
    if nu.len() != g.p {
        return Err(Error::DimensionMismatch {
            expected: g.p,
            got: nu.len(),
        });
    }
    struct Walk<'a> {
        ideal: &'a MonomialIdeal,
        visited: u64,
        budget: u64,
        count: u64,
        exps: Vec<u32>,
    }
    fn walk(w: &mut Walk<'_>, var: usize, remaining: &mut [u32]) -> Result<()> {
        w.visited += 1;
        if w.visited > w.budget {
            return Err(Error::BudgetExceeded { budget: w.budget });
        }
        let g = &w.ideal.grading;
        if var == g.nvars() {
            if remaining.iter().all(|&r| r == 0) && !w.ideal.contains_monomial(&w.exps) {
                w.count += 1;
            }
            return Ok(());
        }
        let deg = g.degree_of(var).to_vec();
        let mut a = 0u32;
        loop {
            w.exps[var] = a;
            walk(w, var + 1, remaining)?;
            if remaining.iter().zip(&deg).any(|(&r, &d)| r < d) {
                break;
            }
            for (r, &d) in remaining.iter_mut().zip(&deg) {
                *r -= d;
            }
            a += 1;
        }
        for (r, &d) in remaining.iter_mut().zip(&deg) {
            *r += a * d;
        }
        w.exps[var] = 0;
        Ok(())
    }
    let mut w = Walk {
        ideal,
        visited: 0,
        budget,
        count: 0,
        exps: vec![0; g.nvars()],
    };
    let mut remaining = nu.to_vec();
    walk(&mut w, 0, &mut remaining)?;
    Ok(w.count)
}

/// Coefficients of `K(t) / ∏_x (1 - t^{deg x})` for every `nu <= bound`,
/// expanded as a truncated power series.
pub fn hilbert_series_truncated(
    ideal: &MonomialIdeal,
    bound: &[u32],
) -> Result<BTreeMap<Vec<u32>, BigInt>> {
    let g = &ideal.grading;
    if bound.len() != g.p {
        return Err(Error::DimensionMismatch {
            expected: g.p,
            got: bound.len(),
        });
    }
    let within = |e: &[u32]| e.iter().zip(bound).all(|(a, b)| a <= b);
    let mut series: BTreeMap<Vec<u32>, BigInt> = kpolynomial(ideal)
        .terms()
        .filter(|(e, _)| within(e.as_slice()))
        .map(|(e, c)| (e.as_slice().to_vec(), c.clone()))
        .collect();
    for var in 0..g.nvars() {
        // multiply by 1/(1 - t^d): c'(nu) = c(nu) + c'(nu - d), in increasing order
        let d = g.degree_of(var);
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for nu in lattice_box(bound) {
            let mut c = series.get(&nu).cloned().unwrap_or_else(BigInt::zero);
            if nu.iter().zip(d).all(|(a, b)| a >= b) {
                let prev: Vec<u32> = nu.iter().zip(d).map(|(a, b)| a - b).collect();
                if let Some(pc) = out.get(&prev) {
                    c += pc;
                }
            }
            if !c.is_zero() {
                out.insert(nu, c);
            }
        }
        series = out;
    }
    Ok(series)
}

/// All `nu` with `0 <= nu <= bound`, in lexicographic order.
pub fn lattice_box(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=b).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// Krull dimension of `S/I`: `nvars` minus the smallest set of variables
/// meeting the support of every generator.
pub fn krull_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    let n = ideal.nvars();
    if !ideal.is_squarefree() && n > MAX_GROUND_SET {
        return Err(Error::DimensionRefused(format!(
            "non-squarefree ideal in {n} variables exceeds the {MAX_GROUND_SET}-variable limit"
        )));
    }
    if ideal.generators.iter().any(|g| g.iter().all(|&a| a == 0)) {
        // unit ideal: S/I = 0; report dimension 0 by convention
        return Ok(0);
    }
    let supports: Vec<Vec<usize>> = ideal
        .generators
        .iter()
        .map(|g| {
            g.iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(v, _)| v)
                .collect()
        })
        .collect();
    let mut chosen = vec![false; n];
    let mut best = supports.len().min(n);
    min_cover(&supports, &mut chosen, 0, &mut best);
    Ok(n - best)
}

fn min_cover(supports: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    match supports.iter().find(|s| !s.iter().any(|&v| chosen[v])) {
        None => *best = size,
        Some(unhit) => {
            for &v in unhit {
                chosen[v] = true;
                min_cover(supports, chosen, size + 1, best);
                chosen[v] = false;
            }
        }
    }
}

/// Terms of `K(S/I; 1 - t)` of total degree `dim S - dim S/I`.
///
/// Equals the multidegree polynomial of `MultiProj(S/I)` only when `S/I` has
/// no torsion supported on the irrelevant ideal; that is not checked.
pub fn multidegree_polynomial(ideal: &MonomialIdeal) -> Result<IntPolynomial> {
    let codim = ideal.nvars() - krull_dimension(ideal)?;
    Ok(kpolynomial(ideal)
        .substitute_one_minus()
        .truncate_total_degree(codim as u64))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "ComplexJson", into = "ComplexJson")]
pub struct SimplicialComplex {
    nverts: usize,
    facets: Vec<BTreeSet<usize>>,
}

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    nverts: usize,
    facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = Error;
    fn try_from(raw: ComplexJson) -> Result<Self> {
        SimplicialComplex::new(raw.nverts, raw.facets)
    }
}

impl From<SimplicialComplex> for ComplexJson {
    fn from(c: SimplicialComplex) -> Self {
        ComplexJson {
            nverts: c.nverts,
            facets: c
                .facets
                .into_iter()
                .map(|f| f.into_iter().collect())
                .collect(),
        }
    }
}

impl SimplicialComplex {
    /// Vertices are `1..=nverts`; facets must be pairwise non-contained.
    pub fn new(nverts: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if nverts > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                p: nverts,
                max: MAX_GROUND_SET,
            });
        }
        let facets: Vec<BTreeSet<usize>> = facets
            .into_iter()
            .map(|f| f.into_iter().collect())
            .collect();
        for f in &facets {
            if let Some(&v) = f.iter().find(|&&v| v == 0 || v > nverts) {
                return Err(Error::InvalidComplex(format!(
                    "vertex {v} outside [{nverts}]"
                )));
            }
        }
        for (i, a) in facets.iter().enumerate() {
            for (j, b) in facets.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(Error::InvalidComplex(format!(
                        "facet {} is contained in facet {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(SimplicialComplex { nverts, facets })
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    fn facet_masks(&self) -> Vec<Subset> {
        self.facets
            .iter()
            .map(|f| Subset::from_elements(&f.iter().copied().collect::<Vec<_>>()))
            .collect()
    }

    pub fn is_face(&self, s: Subset) -> bool {
        self.facet_masks().iter().any(|&f| s.is_subset_of(f))
    }

    /// Nonempty faces, by bitmask.
    pub fn faces(&self) -> BTreeSet<Subset> {
        let mut out = BTreeSet::new();
        for f in self.facet_masks() {
            let mut sub = f.mask();
            while sub != 0 {
                out.insert(Subset::from_mask(sub));
                sub = (sub - 1) & f.mask();
            }
        }
        out
    }

    /// `f_i` = number of faces with `i + 1` vertices.
    pub fn f_vector(&self) -> Vec<usize> {
        let faces = self.faces();
        let top = faces.iter().map(|s| s.len()).max().unwrap_or(0);
        (1..=top)
            .map(|k| faces.iter().filter(|s| s.len() == k).count())
            .collect()
    }

    /// Number of edges at each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let edges: Vec<Subset> = self.faces().into_iter().filter(|s| s.len() == 2).collect();
        (1..=self.nverts)
            .map(|v| edges.iter().filter(|e| e.contains(v)).count())
            .collect()
    }

    /// Minimal subsets of `[nverts]` that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Subset> {
        let masks = self.facet_masks();
        let face = |s: Subset| masks.iter().any(|&f| s.is_subset_of(f));
        Subset::all(self.nverts)
            .filter(|&s| {
                !face(s)
                    && s.elements()
                        .all(|v| face(Subset::from_mask(s.mask() & !(1 << (v - 1)))))
            })
            .collect()
    }
}

/// `I_Δ` in `k[x_1..x_n]` with `deg x_i = e_i`.
pub fn stanley_reisner_ideal(c: &SimplicialComplex) -> MonomialIdeal {
    stanley_reisner_ideal_blocks(c, 0)
}

/// `I_Δ` inside the coordinate ring of `(P^m)^n`: vertex `i` owns the block
/// `x_{i,0}, ..., x_{i,m}` of degree `e_i` and the ideal uses `x_{i,0}`.
/// Variables are numbered block by block.
pub fn stanley_reisner_ideal_blocks(c: &SimplicialComplex, m: usize) -> MonomialIdeal {
    let n = c.nverts;
    let block = m + 1;
    let grading = Grading::standard(&vec![block; n]);
    let gens = c
        .minimal_nonfaces()
        .into_iter()
        .map(|s| {
            let mut g = vec![0u32; n * block];
            for v in s.elements() {
                g[(v - 1) * block] = 1;
            }
            g
        })
        .collect();
    MonomialIdeal::new(grading, gens).expect("minimal non-faces form a minimal generating set")
}

/// Incidence vectors of the facets of maximal size.
pub fn facet_support(c: &SimplicialComplex) -> Support {
    let top = c.facets.iter().map(BTreeSet::len).max().unwrap_or(0);
    let pts = c.facets.iter().filter(|f| f.len() == top).map(|f| {
        (1..=c.nverts)
            .map(|v| u32::from(f.contains(&v)))
            .collect::<Vec<u32>>()
    });
    Support::new(c.nverts, pts).expect("maximal facets share a size")
}

/// Complexes shipped with the crate.
pub mod fixtures {
    use super::SimplicialComplex;

    /// Boundary of the triangle on `{1, 2, 3}`.
    pub fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::new(3, vec![vec![1, 2], vec![1, 3], vec![2, 3]]).expect("valid")
    }

    /// Boundary of the octahedron; antipodal pairs are `{1,2}`, `{3,4}`, `{5,6}`.
    pub fn octahedron() -> SimplicialComplex {
        let mut facets = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    facets.push(vec![a, b, c]);
                }
            }
        }
        SimplicialComplex::new(6, facets).expect("valid")
    }

    /// Boundary of the icosahedron: apex 1, upper ring 2..=6, lower ring
    /// 7..=11, apex 12.
    pub fn icosahedron() -> SimplicialComplex {
        let up = |i: usize| 2 + i % 5;
        let low = |i: usize| 7 + i % 5;
        let mut facets = Vec::new();
        for i in 0..5 {
            facets.push(vec![1, up(i), up(i + 1)]);
            facets.push(vec![up(i), up(i + 1), low(i)]);
            facets.push(vec![up(i + 1), low(i), low(i + 1)]);
            facets.push(vec![12, low(i), low(i + 1)]);
        }
        SimplicialComplex::new(12, facets).expect("valid")
    }

    pub fn by_name(name: &str) -> Option<SimplicialComplex> {
        match name {
            "hollow-triangle" | "hollow_triangle" => Some(hollow_triangle()),
            "octahedron" => Some(octahedron()),
            "icosahedron" => Some(icosahedron()),
            _ => None,
        }
    }

    pub const NAMES: [&str; 3] = ["hollow-triangle", "octahedron", "icosahedron"];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(blocks: &[usize], gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            Grading::standard(blocks),
            gens.iter().map(|g| g.to_vec()).collect(),
        )
        .unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> IntPolynomial {
        IntPolynomial::from_terms(
            nvars,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn kpolynomial_examples() {
        assert_eq!(kpolynomial(&ideal(&[2, 3], &[])), IntPolynomial::one(2));
        assert_eq!(
            kpolynomial(&ideal(&[1], &[&[1]])),
            poly(1, &[(&[0], 1), (&[1], -1)])
        );
        assert_eq!(
            kpolynomial(&ideal(&[1, 1], &[&[1, 1]])),
            poly(2, &[(&[0, 0], 1), (&[1, 1], -1)])
        );
    }

    #[test]
    fn kpolynomial_needs_recursion() {
        // (x^2, xy) in one block of two variables
        let i = ideal(&[2], &[&[2, 0], &[1, 1]]);
        let series = hilbert_series_truncated(&i, &[6]).unwrap();
        for k in 0..=6u32 {
            let want = hilbert_function_oracle(&i, &[k]).unwrap();
            assert_eq!(
                series.get(&vec![k]).cloned().unwrap_or_default(),
                BigInt::from(want)
            );
        }
        assert_eq!(kpolynomial(&i), kpolynomial_with(&i, PivotRule::First));
    }

    #[test]
    fn non_minimal_generators_rejected() {
        let e =
            MonomialIdeal::new(Grading::standard(&[2]), vec![vec![1, 0], vec![2, 1]]).unwrap_err();
        assert_eq!(
            e,
            Error::NonMinimalGenerators {
                divisor: 0,
                multiple: 1
            }
        );
        assert!(Grading::new(1, vec![vec![0]]).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            hilbert_function_oracle(&ideal(&[1, 1], &[]), &[2, 2]).unwrap(),
            1
        );
        assert_eq!(
            hilbert_function_oracle(&ideal(&[2, 2], &[]), &[1, 1]).unwrap(),
            4
        );
        for k in 1..5 {
            assert_eq!(
                hilbert_function_oracle(&ideal(&[1], &[&[1]]), &[k]).unwrap(),
                0
            );
        }
        assert_eq!(
            hilbert_function_oracle(&ideal(&[1, 1], &[&[1, 1]]), &[1, 1]).unwrap(),
            0
        );
        let e = hilbert_function_oracle_with_budget(&ideal(&[4], &[]), &[10], 50).unwrap_err();
        assert_eq!(e, Error::BudgetExceeded { budget: 50 });
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(
            multidegree_polynomial(&ideal(&[1], &[])).unwrap(),
            IntPolynomial::one(1)
        );
        // 1 - (1 - t1)(1 - t2) = t1 + t2 - t1 t2, codimension one
        assert_eq!(
            multidegree_polynomial(&ideal(&[1, 1], &[&[1, 1]])).unwrap(),
            poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        let oct = stanley_reisner_ideal(&fixtures::octahedron());
        let c = multidegree_polynomial(&oct).unwrap();
        assert_eq!(c.num_terms(), 8);
    }

    #[test]
    fn dimension_refusal() {
        let mut g = vec![0u32; 21];
        g[0] = 2;
        let i = MonomialIdeal::new(Grading::standard(&[21]), vec![g]).unwrap();
        assert!(matches!(
            krull_dimension(&i),
            Err(Error::DimensionRefused(_))
        ));
        assert_eq!(
            krull_dimension(&ideal(&[2, 2], &[&[1, 0, 1, 0], &[0, 1, 0, 1]])).unwrap(),
            2
        );
    }

    #[test]
    fn stanley_reisner_examples() {
        let simplex = SimplicialComplex::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert!(stanley_reisner_ideal(&simplex).generators().is_empty());
        assert_eq!(
            stanley_reisner_ideal(&fixtures::hollow_triangle()).generators(),
            &[vec![1, 1, 1]]
        );
        let oct = stanley_reisner_ideal(&fixtures::octahedron());
        assert_eq!(
            oct.generators(),
            &[
                vec![1, 1, 0, 0, 0, 0],
                vec![0, 0, 1, 1, 0, 0],
                vec![0, 0, 0, 0, 1, 1]
            ]
        );
        let blocks = stanley_reisner_ideal_blocks(&fixtures::hollow_triangle(), 1);
        assert_eq!(blocks.nvars(), 6);
        assert_eq!(blocks.generators(), &[vec![1, 0, 1, 0, 1, 0]]);
    }

    #[test]
    fn facet_support_examples() {
        let s = facet_support(&fixtures::hollow_triangle());
        assert_eq!(
            s.points().cloned().collect::<Vec<_>>(),
            vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
        let ico = fixtures::icosahedron();
        assert_eq!(facet_support(&ico).len(), 20);
        let single = SimplicialComplex::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(
            facet_support(&single).points().next().unwrap(),
            &vec![1, 1, 1, 1]
        );
    }

    #[test]
    fn icosahedron_is_a_closed_surface() {
        let ico = fixtures::icosahedron();
        assert_eq!(ico.f_vector(), vec![12, 30, 20]);
        assert_eq!(ico.vertex_degrees(), vec![5; 12]);
        for edge in ico.faces().into_iter().filter(|s| s.len() == 2) {
            let through = ico
                .facet_masks()
                .iter()
                .filter(|f| edge.is_subset_of(**f))
                .count();
            assert_eq!(through, 2);
        }
    }

    #[test]
    fn complex_validation() {
        assert!(SimplicialComplex::new(3, vec![vec![1, 2], vec![1, 2, 3]]).is_err());
        assert!(SimplicialComplex::new(3, vec![vec![1, 4]]).is_err());
        assert!(SimplicialComplex::new(3, vec![vec![0, 1]]).is_err());
    }
}
