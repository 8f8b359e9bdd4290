//! Polytopes with exact coordinates in dimension at most three, Minkowski
//! sums, volumes, and mixed volumes recovered from the volume polynomial.
//!
//! Everything here is generic over [`Scalar`] so the same code runs on
//! `BigRational` (the default, via [`crate::LatticePolytope`]) or any other
//! exact ordered field.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{RationalJson, Scalar};
use crate::subset::{Subset, MAX_GROUND_SET};
use crate::support::compositions;

/// Largest ambient dimension with hulls and volumes.
pub const MAX_DIM: usize = 3;

#[derive(Clone, PartialEq, Debug)]
pub struct Polytope<T> {
    d: usize,
    vertices: Vec<Vec<T>>,
}

fn sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

fn add<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn cross<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    vec![
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn det3<T: Scalar>(a: &[T], b: &[T], c: &[T]) -> T {
    dot(a, &cross(b, c))
}

fn cross2<T: Scalar>(o: &[T], a: &[T], b: &[T]) -> T {
    (a[0].clone() - o[0].clone()) * (b[1].clone() - o[1].clone())
        - (a[1].clone() - o[1].clone()) * (b[0].clone() - o[0].clone())
}

fn lex_cmp<T: Scalar>(a: &[T], b: &[T]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y).expect("scalars are totally ordered") {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn sorted_unique<T: Scalar>(mut pts: Vec<Vec<T>>) -> Vec<Vec<T>> {
    pts.sort_by(|a, b| lex_cmp(a, b));
    pts.dedup();
    pts
}

/// Dimension of the affine hull.
fn affine_dim<T: Scalar>(pts: &[Vec<T>]) -> usize {
    let diffs: Vec<Vec<T>> = pts[1..].iter().map(|q| sub(q, &pts[0])).collect();
    linalg::rank(&diffs)
}

/// Counter-clockwise strictly convex hull of planar points (indices).
fn hull2<T: Scalar>(pts: &[Vec<T>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| lex_cmp(&pts[a], &pts[b]));
    if order.len() < 3 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = hull.len();
        let seq: Vec<usize> = if pass == 0 {
            order.clone()
        } else {
            order.iter().rev().copied().collect()
        };
        for i in seq {
            while hull.len() >= start + 2
                && !cross2(
                    &pts[hull[hull.len() - 2]],
                    &pts[hull[hull.len() - 1]],
                    &pts[i],
                )
                .is_positive()
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// Coordinates `(a, b)` on which the affine plane through `pts` projects bijectively.
fn planar_chart<T: Scalar>(pts: &[Vec<T>]) -> (usize, usize) {
    let diffs: Vec<Vec<T>> = pts[1..].iter().map(|q| sub(q, &pts[0])).collect();
    let d = pts[0].len();
    for a in 0..d {
        for b in a + 1..d {
            let proj: Vec<Vec<T>> = diffs
                .iter()
                .map(|v| vec![v[a].clone(), v[b].clone()])
                .collect();
            if linalg::rank(&proj) == 2 {
                return (a, b);
            }
        }
    }
    unreachable!("points span a plane")
}

/// Outward-oriented triangulated boundary of a full-dimensional point set in `R^3`.
fn hull3<T: Scalar>(pts: &[Vec<T>]) -> Vec<[usize; 3]> {
    let orient = |a: usize, b: usize, c: usize, r: usize| {
        det3(
            &sub(&pts[b], &pts[a]),
            &sub(&pts[c], &pts[a]),
            &sub(&pts[r], &pts[a]),
        )
    };
    let i0 = 0;
    let i1 = 1;
    let zero = vec![T::zero(); 3];
    let i2 = (2..pts.len())
        .find(|&i| cross(&sub(&pts[i1], &pts[i0]), &sub(&pts[i], &pts[i0])) != zero)
        .expect("not collinear");
    let i3 = (2..pts.len())
        .find(|&i| !orient(i0, i1, i2, i).is_zero())
        .expect("not coplanar");
    let (i1, i2) = if orient(i0, i1, i2, i3).is_negative() {
        (i1, i2)
    } else {
        (i2, i1)
    };
    let mut faces = vec![[i0, i1, i2], [i0, i3, i1], [i1, i3, i2], [i0, i2, i3]];
    for r in 0..pts.len() {
        if [i0, i1, i2, i3].contains(&r) {
            continue;
        }
        let visible: Vec<bool> = faces
            .iter()
            .map(|f| orient(f[0], f[1], f[2], r).is_positive())
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let edges: HashSet<(usize, usize)> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(f, _)| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])])
            .collect();
        let horizon: Vec<(usize, usize)> = faces
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| v)
            .flat_map(|(f, _)| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])])
            .filter(|&(u, v)| !edges.contains(&(v, u)))
            .collect();
        faces = faces
            .into_iter()
            .zip(visible)
            .filter(|(_, v)| !v)
            .map(|(f, _)| f)
            .collect();
        faces.extend(horizon.into_iter().map(|(u, v)| [u, v, r]));
    }
    faces
}

/// Vertices of the convex hull, sorted lexicographically.
fn extreme_points<T: Scalar>(pts: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let pts = sorted_unique(pts);
    if pts.len() <= 1 {
        return pts;
    }
    let out = match affine_dim(&pts) {
        0 => vec![pts[0].clone()],
        1 => {
            let v = pts
                .iter()
                .map(|q| sub(q, &pts[0]))
                .find(|v| v.iter().any(|x| !x.is_zero()))
                .expect("dim 1");
            let key = |q: &Vec<T>| dot(&v, q);
            let lo = pts
                .iter()
                .min_by(|a, b| key(a).partial_cmp(&key(b)).expect("ordered"))
                .expect("nonempty");
            let hi = pts
                .iter()
                .max_by(|a, b| key(a).partial_cmp(&key(b)).expect("ordered"))
                .expect("nonempty");
            vec![lo.clone(), hi.clone()]
        }
        2 => {
            let (a, b) = planar_chart(&pts);
            let proj: Vec<Vec<T>> = pts
                .iter()
                .map(|q| vec![q[a].clone(), q[b].clone()])
                .collect();
            hull2(&proj).into_iter().map(|i| pts[i].clone()).collect()
        }
        _ => {
            let faces = hull3(&pts);
            let mut normals: BTreeMap<usize, Vec<Vec<T>>> = BTreeMap::new();
            for f in &faces {
                let n = cross(&sub(&pts[f[1]], &pts[f[0]]), &sub(&pts[f[2]], &pts[f[0]]));
                for &i in f {
                    normals.entry(i).or_default().push(n.clone());
                }
            }
            normals
                .into_iter()
                .filter(|(_, ns)| linalg::rank(ns) == 3)
                .map(|(i, _)| pts[i].clone())
                .collect()
        }
    };
    sorted_unique(out)
}

impl<T: Scalar> Polytope<T> {
    /// Convex hull of `vertices` in `R^d`; redundant points are allowed.
    pub fn new(d: usize, vertices: Vec<Vec<T>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "ambient dimension must be at least 1".into(),
            ));
        }
        if vertices.is_empty() {
            return Err(Error::Empty("polytope vertex list"));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
        Ok(Polytope { d, vertices })
    }

    pub fn from_integer_points(d: usize, vertices: &[Vec<i64>]) -> Result<Self> {
        let conv = |x: i64| T::from_i64(x).expect("integer embeds in scalar type");
        Self::new(
            d,
            vertices
                .iter()
                .map(|v| v.iter().map(|&x| conv(x)).collect())
                .collect(),
        )
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertices(&self) -> &[Vec<T>] {
        &self.vertices
    }

    /// Same polytope listed by its extreme points in lexicographic order.
    /// Above dimension three only duplicates are removed.
    pub fn canonical(&self) -> Polytope<T> {
        let vertices = if self.d <= MAX_DIM {
            extreme_points(self.vertices.clone())
        } else {
            sorted_unique(self.vertices.clone())
        };
        Polytope {
            d: self.d,
            vertices,
        }
    }

    pub fn scaled(&self, w: u64) -> Polytope<T> {
        let w = T::from_count(w);
        Polytope {
            d: self.d,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x.clone() * w.clone()).collect())
                .collect(),
        }
    }

    /// Nonzero vectors `v_i - v_0` over the listed vertices.
    pub fn difference_vectors(&self) -> Vec<Vec<T>> {
        let base = &self.vertices[0];
        self.vertices
            .iter()
            .map(|v| sub(v, base))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect()
    }
}

pub fn polytope_dim<T: Scalar>(k: &Polytope<T>) -> usize {
    affine_dim(&k.vertices)
}

fn common_dim<T: Scalar>(ks: &[Polytope<T>]) -> Result<usize> {
    let first = ks.first().ok_or(Error::Empty("polytope list"))?;
    if let Some(k) = ks.iter().find(|k| k.d != first.d) {
        return Err(Error::DimensionMismatch {
            expected: first.d,
            got: k.d,
        });
    }
    Ok(first.d)
}

/// `w_1 K_1 + ... + w_p K_p`, reduced to extreme points after each summand.
pub fn minkowski_sum<T: Scalar>(ks: &[Polytope<T>], weights: &[u64]) -> Result<Polytope<T>> {
    let d = common_dim(ks)?;
    if weights.len() != ks.len() {
        return Err(Error::DimensionMismatch {
            expected: ks.len(),
            got: weights.len(),
        });
    }
    let mut acc: Option<Polytope<T>> = None;
    for (k, &w) in ks.iter().zip(weights) {
        if w == 0 {
            continue;
        }
        let term = k.scaled(w).canonical();
        acc = Some(match acc {
            None => term,
            Some(s) => {
                let pts = s
                    .vertices
                    .iter()
                    .flat_map(|a| term.vertices.iter().map(move |b| add(a, b)))
                    .collect();
                Polytope { d, vertices: pts }.canonical()
            }
        });
    }
    acc.ok_or_else(|| Error::InvalidArgument("all Minkowski weights are zero".into()))
}

/// `d`-dimensional volume; zero for polytopes that are not full-dimensional.
pub fn volume<T: Scalar>(k: &Polytope<T>) -> Result<T> {
    if k.d > MAX_DIM {
        return Err(Error::UnsupportedDimension {
            d: k.d,
            max: MAX_DIM,
        });
    }
    let c = k.canonical();
    let pts = &c.vertices;
    if affine_dim(pts) < k.d {
        return Ok(T::zero());
    }
    Ok(match k.d {
        1 => pts[pts.len() - 1][0].clone() - pts[0][0].clone(),
        2 => {
            let ring = hull2(pts);
            let mut twice = T::zero();
            for w in 0..ring.len() {
                let (a, b) = (&pts[ring[w]], &pts[ring[(w + 1) % ring.len()]]);
                twice = twice + a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone();
            }
            twice / T::from_count(2)
        }
        _ => {
            let o = &pts[0];
            let six = hull3(pts).iter().fold(T::zero(), |acc, f| {
                acc + det3(
                    &sub(&pts[f[0]], o),
                    &sub(&pts[f[1]], o),
                    &sub(&pts[f[2]], o),
                )
            });
            debug_assert!(six.is_positive(), "outward orientation");
            six / T::from_count(6)
        }
    })
}

fn multinomial(n: &[u32]) -> BigInt {
    let fact = |k: u32| (1..=k).fold(BigInt::from(1), |a, i| a * i);
    let total: u32 = n.iter().sum();
    n.iter().fold(fact(total), |acc, &k| acc / fact(k))
}

/// Mixed volumes `V(K; n)` for every `n` with `|n| = d`.
#[derive(Clone, PartialEq, Debug)]
pub struct MixedVolumes<T> {
    pub d: usize,
    pub p: usize,
    pub entries: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MixedVolumes<T> {
    pub fn get(&self, n: &[u32]) -> Option<&T> {
        self.entries.get(n)
    }
}

/// Interpolation nodes: the lexicographically first tuples of `{1..d+1}^p`
/// whose monomial rows are independent, one per degree-`d` monomial.
pub fn interpolation_nodes(d: usize, p: usize) -> Vec<Vec<u64>> {
    let monos = compositions(d as u32, p);
    let row = |w: &[u64]| -> Vec<BigRational> {
        monos
            .iter()
            .map(|n| {
                let v = w.iter().zip(n).fold(BigInt::from(1), |acc, (&x, &e)| {
                    acc * BigInt::from(x).pow(e)
                });
                BigRational::from_integer(v)
            })
            .collect()
    };
    let mut nodes = Vec::new();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut w = vec![1u64; p];
    loop {
        rows.push(row(&w));
        if linalg::rank(&rows) == rows.len() {
            nodes.push(w.clone());
            if nodes.len() == monos.len() {
                return nodes;
            }
        } else {
            rows.pop();
        }
        // next grid tuple in lexicographic order
        let mut i = p;
        loop {
            assert!(
                i > 0,
                "node grid {{1..d+1}}^p always contains a unisolvent set"
            );
            i -= 1;
            if w[i] < d as u64 + 1 {
                w[i] += 1;
                break;
            }
            w[i] = 1;
        }
    }
}

pub fn mixed_volumes<T: Scalar>(ks: &[Polytope<T>]) -> Result<MixedVolumes<T>> {
    let d = common_dim(ks)?;
    if d > MAX_DIM {
        return Err(Error::UnsupportedDimension { d, max: MAX_DIM });
    }
    let p = ks.len();
    let monos = compositions(d as u32, p);
    let nodes = interpolation_nodes(d, p);
    let canon: Vec<Polytope<T>> = ks.iter().map(Polytope::canonical).collect();
    let values: Vec<T> = nodes
        .par_iter()
        .map(|w| minkowski_sum(&canon, w).and_then(|s| volume(&s)))
        .collect::<Result<_>>()?;
    let to_t = |x: &BigInt| T::from_i64(i64::try_from(x).expect("small integer")).expect("embeds");
    let matrix: Vec<Vec<T>> = nodes
        .iter()
        .map(|w| {
            monos
                .iter()
                .map(|n| {
                    to_t(&w.iter().zip(n).fold(BigInt::from(1), |acc, (&x, &e)| {
                        acc * BigInt::from(x).pow(e)
                    }))
                })
                .collect()
        })
        .collect();
    let coef = linalg::solve(&matrix, &values).expect("interpolation nodes are unisolvent");
    let entries = monos.into_iter().zip(coef).map(|(n, c)| {
        let m = to_t(&multinomial(&n));
        (n, c / m)
    });
    Ok(MixedVolumes {
        d,
        p,
        entries: entries.collect(),
    })
}

/// `dim(Σ_{j∈J} K_j)` for every subset `J`, indexed by bitmask.
pub fn sum_dimensions<T: Scalar>(ks: &[Polytope<T>]) -> Result<Vec<usize>> {
    common_dim(ks)?;
    let p = ks.len();
    if p > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge {
            p,
            max: MAX_GROUND_SET,
        });
    }
    let canon: Vec<Polytope<T>> = ks.iter().map(Polytope::canonical).collect();
    Subset::all(p)
        .map(|s| {
            if s.is_empty() {
                return Ok(0);
            }
            let w: Vec<u64> = (1..=p).map(|i| u64::from(s.contains(i))).collect();
            Ok(polytope_dim(&minkowski_sum(&canon, &w)?))
        })
        .collect()
}

fn check_n<T>(ks: &[Polytope<T>], n: &[u32]) -> Result<()> {
    if n.len() != ks.len() {
        return Err(Error::DimensionMismatch {
            expected: ks.len(),
            got: n.len(),
        });
    }
    Ok(())
}

/// `|n| = d` and `Σ_{j∈J} n_j <= dim(Σ_{j∈J} K_j)` for every `J`.
pub fn positivity_criterion<T: Scalar>(ks: &[Polytope<T>], n: &[u32]) -> Result<bool> {
    let d = common_dim(ks)?;
    check_n(ks, n)?;
    if n.iter().map(|&x| x as usize).sum::<usize>() != d {
        return Ok(false);
    }
    let dims = sum_dimensions(ks)?;
    Ok(Subset::all(ks.len()).all(|s| s.sum_of(n) <= dims[s.index()] as u64))
}

/// A segment `[from, to]` inside body `body` (1-based).
#[derive(Clone, PartialEq, Debug)]
pub struct Segment<T> {
    pub body: usize,
    pub from: Vec<T>,
    pub to: Vec<T>,
}

/// Searches for `n_i` segments in each `K_i` whose directions are `d`
/// linearly independent vectors. Candidate segments join the first vertex
/// of `K_i` to its other vertices.
pub fn independent_segments<T: Scalar>(
    ks: &[Polytope<T>],
    n: &[u32],
) -> Result<Option<Vec<Segment<T>>>> {
    let d = common_dim(ks)?;
    check_n(ks, n)?;
    if n.iter().map(|&x| x as usize).sum::<usize>() != d {
        return Ok(None);
    }
    let canon: Vec<Polytope<T>> = ks.iter().map(Polytope::canonical).collect();

    fn search<T: Scalar>(
        canon: &[Polytope<T>],
        n: &[u32],
        body: usize,
        from: usize,
        taken: u32,
        chosen: &mut Vec<Segment<T>>,
        dirs: &mut Vec<Vec<T>>,
    ) -> bool {
        if body == canon.len() {
            return true;
        }
        if taken == n[body] {
            return search(canon, n, body + 1, 1, 0, chosen, dirs);
        }
        let verts = &canon[body].vertices;
        for j in from..verts.len() {
            let dir = sub(&verts[j], &verts[0]);
            dirs.push(dir);
            if linalg::rank(dirs) == dirs.len() {
                chosen.push(Segment {
                    body: body + 1,
                    from: verts[0].clone(),
                    to: verts[j].clone(),
                });
                if search(canon, n, body, j + 1, taken + 1, chosen, dirs) {
                    return true;
                }
                chosen.pop();
            }
            dirs.pop();
        }
        false
    }

    let mut chosen = Vec::new();
    let found = search(&canon, n, 0, 1, 0, &mut chosen, &mut Vec::new());
    Ok(found.then_some(chosen))
}

pub fn segments_criterion<T: Scalar>(ks: &[Polytope<T>], n: &[u32]) -> Result<bool> {
    Ok(independent_segments(ks, n)?.is_some())
}

#[derive(Serialize, Deserialize)]
struct PolytopeJson {
    d: usize,
    vertices: Vec<Vec<RationalJson>>,
}

impl Serialize for Polytope<BigRational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeJson {
            d: self.d,
            vertices: self
                .vertices
                .iter()
                .map(|v| v.iter().cloned().map(RationalJson).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polytope<BigRational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolytopeJson::deserialize(d)?;
        let verts = raw
            .vertices
            .into_iter()
            .map(|v| v.into_iter().map(|x| x.0).collect())
            .collect();
        Polytope::new(raw.d, verts).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    n: Vec<u32>,
    v: RationalJson,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    d: usize,
    p: usize,
    entries: Vec<EntryJson>,
}

impl Serialize for MixedVolumes<BigRational> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableJson {
            d: self.d,
            p: self.p,
            entries: self
                .entries
                .iter()
                .map(|(n, v)| EntryJson {
                    n: n.clone(),
                    v: RationalJson(v.clone()),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MixedVolumes<BigRational> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableJson::deserialize(d)?;
        Ok(MixedVolumes {
            d: raw.d,
            p: raw.p,
            entries: raw.entries.into_iter().map(|e| (e.n, e.v.0)).collect(),
        })
    }
}
