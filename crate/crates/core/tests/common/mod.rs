//! Brute-force oracles shared by the integration tests. None of these call
//! the routine they are used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use msupp::hilbert::SimplicialComplex;
use msupp::mixedvol::Polytope;
use msupp::polymatroid::RankFunction;
use msupp::subset::Subset;
use msupp::{IntPolynomial, LatticePolytope};
use num_bigint::BigInt;
use rand::Rng;

pub fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> IntPolynomial {
    IntPolynomial::from_terms(
        nvars,
        terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
    )
    .unwrap()
}

/// Schubert polynomials of every permutation of `[p]` as sums over reduced
/// pipe dreams. A cross at `(i, j)` with `i + j <= p` stands for `s_{i+j-1}`;
/// crosses are read right to left along each row, rows top to bottom.
pub fn pipe_dream_table(p: usize) -> BTreeMap<Vec<usize>, IntPolynomial> {
    let cells: Vec<(usize, usize)> = (1..p)
        .flat_map(|i| (1..=p - i).rev().map(move |j| (i, j)))
        .collect();
    let mut out: BTreeMap<Vec<usize>, IntPolynomial> = BTreeMap::new();
    for mask in 0u64..(1 << cells.len()) {
        let mut w: Vec<usize> = (1..=p).collect();
        let mut exps = vec![0u32; p];
        let mut reduced = true;
        for (k, &(i, j)) in cells.iter().enumerate() {
            if mask >> k & 1 == 0 {
                continue;
            }
            let a = i + j - 2;
            if w[a] > w[a + 1] {
                reduced = false;
                break;
            }
            w.swap(a, a + 1);
            exps[i - 1] += 1;
        }
        if !reduced {
            continue;
        }
        let term = IntPolynomial::term(&exps, BigInt::from(1));
        let entry = out.entry(w).or_insert_with(|| IntPolynomial::zero(p));
        *entry = entry.add(&term).unwrap();
    }
    out
}

/// Every `n` with `|n| = r([p])` that satisfies all `2^p` inequalities.
pub fn brute_force_polytope(r: &RankFunction) -> BTreeSet<Vec<u32>> {
    let p = r.p();
    let total = r.get(Subset::full(p));
    all_compositions(total, p)
        .into_iter()
        .filter(|n| Subset::all(p).all(|s| s.sum_of(n) <= r.get(s) as u64))
        .collect()
}

pub fn all_compositions(total: u32, p: usize) -> Vec<Vec<u32>> {
    if p == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in all_compositions(total - first, p - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `C_0, ..., C_n` from `C_{k+1} = Σ_i C_i C_{k-i}`.
pub fn catalan(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::from(1)];
    for k in 0..n {
        let next = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
        c.push(next);
    }
    c
}

/// `∂_i` applied monomial by monomial with the closed form
/// `(x^a y^b - x^b y^a)/(x - y) = (xy)^b (x^{a-b-1} + ... + y^{a-b-1})` for `a > b`.
pub fn divided_difference_termwise(f: &IntPolynomial, i: usize) -> IntPolynomial {
    let n = f.nvars();
    let mut out = IntPolynomial::zero(n);
    for (e, c) in f.terms() {
        let e = e.as_slice();
        let (a, b) = (e[i], e[i + 1]);
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
        for k in 0..hi - lo {
            let mut m = e.to_vec();
            m[i] = lo + (hi - lo - 1 - k);
            m[i + 1] = lo + k;
            out = out
                .add(&IntPolynomial::term(&m, c * BigInt::from(sign)))
                .unwrap();
        }
    }
    out
}

/// Sum of truncated modular functions `min(c, Σ_{j∈J} w_j)`; always a rank function.
pub fn random_submodular<R: Rng>(rng: &mut R, p: usize) -> RankFunction {
    let pieces: Vec<(u32, Vec<u32>)> = (0..rng.gen_range(1..=3))
        .map(|_| {
            (
                rng.gen_range(0..=5),
                (0..p).map(|_| rng.gen_range(0..=3)).collect(),
            )
        })
        .collect();
    RankFunction::from_fn(p, |s| {
        pieces
            .iter()
            .map(|(c, w)| (*c).min(s.sum_of(w) as u32))
            .sum()
    })
    .unwrap()
}

pub fn random_polytope<R: Rng>(rng: &mut R, d: usize, max_vertices: usize) -> LatticePolytope {
    let k = rng.gen_range(1..=max_vertices);
    let pts: Vec<Vec<i64>> = (0..k)
        .map(|_| (0..d).map(|_| rng.gen_range(-2..=2)).collect())
        .collect();
    Polytope::from_integer_points(d, &pts).unwrap()
}

pub fn segment(a: &[i64], b: &[i64]) -> LatticePolytope {
    Polytope::from_integer_points(a.len(), &[a.to_vec(), b.to_vec()]).unwrap()
}

/// Random complex: some random subsets, keeping the inclusion-maximal ones.
pub fn random_complex<R: Rng>(rng: &mut R, nverts: usize) -> SimplicialComplex {
    let mut sets: Vec<BTreeSet<usize>> = (0..rng.gen_range(1..=6))
        .map(|_| (1..=nverts).filter(|_| rng.gen_bool(0.5)).collect())
        .collect();
    sets.sort();
    sets.dedup();
    let maximal: Vec<Vec<usize>> = sets
        .iter()
        .filter(|a| !sets.iter().any(|b| b != *a && a.is_subset(b)))
        .map(|s| s.iter().copied().collect())
        .collect();
    SimplicialComplex::new(nverts, maximal).unwrap()
}

/// `Σ_F ∏_{i∉F} t_i` over the facets of maximal size.
pub fn facet_multidegree(c: &SimplicialComplex) -> IntPolynomial {
    let n = c.nverts();
    let top = c.facets().iter().map(|f| f.len()).max().unwrap_or(0);
    let mut out = IntPolynomial::zero(n);
    for f in c.facets().iter().filter(|f| f.len() == top) {
        let e: Vec<u32> = (1..=n).map(|v| u32::from(!f.contains(&v))).collect();
        out = out.add(&IntPolynomial::term(&e, BigInt::from(1))).unwrap();
    }
    out
}

/// `|det(v_1, ..., v_d)|` for `d <= 3` integer vectors, by cofactor expansion.
pub fn abs_det(vs: &[Vec<i64>]) -> i64 {
    let det = match vs.len() {
        1 => vs[0][0],
        2 => vs[0][0] * vs[1][1] - vs[0][1] * vs[1][0],
        3 => {
            let (a, b, c) = (&vs[0], &vs[1], &vs[2]);
            a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0])
        }
        _ => panic!("dimension at most three"),
    };
    det.abs()
}
