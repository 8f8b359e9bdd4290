use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Finite set of points of `N^p` sharing one coordinate sum.
///
/// Points are kept sorted lexicographically.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "SupportJson", into = "SupportJson")]
pub struct Support {
    p: usize,
    points: BTreeSet<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct SupportJson {
    p: usize,
    points: Vec<Vec<u32>>,
}

impl TryFrom<SupportJson> for Support {
    type Error = Error;
    fn try_from(raw: SupportJson) -> Result<Self> {
        Support::new(raw.p, raw.points)
    }
}

impl From<Support> for SupportJson {
    fn from(s: Support) -> Self {
        SupportJson {
            p: s.p,
            points: s.points.into_iter().collect(),
        }
    }
}

fn weight_of(point: &[u32]) -> u64 {
    point.iter().map(|&x| x as u64).sum()
}

impl Support {
    pub fn new<I: IntoIterator<Item = Vec<u32>>>(p: usize, points: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        let mut weight = None;
        for pt in points {
            if pt.len() != p {
                return Err(Error::DimensionMismatch {
                    expected: p,
                    got: pt.len(),
                });
            }
            let w = weight_of(&pt);
            match weight {
                None => weight = Some(w),
                Some(first) if first != w => return Err(Error::WeightMismatch { first, other: w }),
                _ => {}
            }
            set.insert(pt);
        }
        Ok(Support { p, points: set })
    }

    pub fn empty(p: usize) -> Self {
        Support {
            p,
            points: BTreeSet::new(),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Common coordinate sum, `None` for the empty set.
    pub fn weight(&self) -> Option<u64> {
        self.points.first().map(|pt| weight_of(pt))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, point: &[u32]) -> bool {
        self.points.contains(point)
    }

    pub fn points(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.points.iter()
    }

    /// Image under `n -> bound - n`, the passage between multidegree
    /// coordinates and exponent coordinates.
    pub fn complement(&self, bound: &[u32]) -> Result<Support> {
        if bound.len() != self.p {
            return Err(Error::DimensionMismatch {
                expected: self.p,
                got: bound.len(),
            });
        }
        let mut pts = Vec::with_capacity(self.len());
        for pt in &self.points {
            let mut out = Vec::with_capacity(self.p);
            for (&x, &b) in pt.iter().zip(bound) {
                if x > b {
                    return Err(Error::InvalidArgument(format!(
                        "point {pt:?} exceeds complement bound {bound:?}"
                    )));
                }
                out.push(b - x);
            }
            pts.push(out);
        }
        Support::new(self.p, pts)
    }

    /// Set union; both sides must live in the same `N^p` with the same weight.
    pub fn union(&self, other: &Support) -> Result<Support> {
        if self.p != other.p {
            return Err(Error::DimensionMismatch {
                expected: self.p,
                got: other.p,
            });
        }
        if let (Some(a), Some(b)) = (self.weight(), other.weight()) {
            if a != b {
                return Err(Error::WeightMismatch { first: a, other: b });
            }
        }
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        Ok(Support { p: self.p, points })
    }

    /// Sum of the monomials `t^x` over the points, all coefficients one.
    pub fn indicator_polynomial(&self) -> Polynomial<BigInt> {
        Polynomial::from_terms(
            self.p,
            self.points.iter().map(|pt| (pt.clone(), BigInt::one())),
        )
        .expect("point lengths equal p")
    }
}

/// Exponent vectors of `N^p` with coordinate sum `d`, lexicographically.
pub fn compositions(d: u32, p: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(left - x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p > 0 {
        go(d, p, &mut Vec::with_capacity(p), &mut out);
    }
    out
}
