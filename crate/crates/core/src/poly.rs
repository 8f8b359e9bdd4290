//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration (and
//! therefore every serialized form) is in lexicographic exponent order.
//! Variables are indexed from 0 in this API; `t_{i+1}` in displayed output is
//! variable `i`.

use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_traits::{Num, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::support::Support;

/// Ring of coefficients. Blanket-implemented for all integer-like `num` types.
pub trait Coefficient: Num + Neg<Output = Self> + Clone + Debug + Send + Sync {}

impl<T> Coefficient for T where T: Num + Neg<Output = T> + Clone + Debug + Send + Sync {}

/// Exponent vector of a monomial; ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Box<[u32]>);

impl ExponentVector {
    pub fn new(entries: impl Into<Box<[u32]>>) -> Self {
        ExponentVector(entries.into())
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n].into_boxed_slice())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn with(&self, index: usize, value: u32) -> Self {
        let mut v = self.0.clone();
        v[index] = value;
        ExponentVector(v)
    }

    fn plus(&self, other: &ExponentVector) -> Self {
        ExponentVector(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    fn swapped(&self, i: usize, j: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i, j);
        ExponentVector(v)
    }
}

impl Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v.into_boxed_slice())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    nvars: usize,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(ExponentVector::zeros(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    fn monomial(exp: ExponentVector, c: C) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { nvars, terms }
    }

    /// The single term `c * t^exponents`.
    pub fn term(exponents: &[u32], c: C) -> Self {
        Self::monomial(ExponentVector::new(exponents.to_vec()), c)
    }

    /// The variable with 0-based index `index`.
    pub fn variable(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::VariableIndex { index, nvars });
        }
        Ok(Self::monomial(
            ExponentVector::zeros(nvars).with(index, 1),
            C::one(),
        ))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, E>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<ExponentVector>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            let e = e.into();
            if e.len() != nvars {
                return Err(Error::ExponentLength {
                    expected: nvars,
                    got: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: ExponentVector, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> C {
        self.terms
            .get(&ExponentVector::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(ExponentVector::total_degree).max()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.plus(eb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Multiplies by the monomial `t^exponents`.
    pub fn shift(&self, exponents: &[u32]) -> Result<Self> {
        if exponents.len() != self.nvars {
            return Err(Error::ExponentLength {
                expected: self.nvars,
                got: exponents.len(),
            });
        }
        let m = ExponentVector::new(exponents.to_vec());
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.plus(&m), c.clone()))
                .collect(),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Exchanges variables `i` and `j` (0-based).
    pub fn swap_variables(&self, i: usize, j: usize) -> Result<Self> {
        for idx in [i, j] {
            if idx >= self.nvars {
                return Err(Error::VariableIndex {
                    index: idx,
                    nvars: self.nvars,
                });
            }
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.swapped(i, j), c.clone()))
                .collect(),
        })
    }

    /// Divided difference `(f - s_i f) / (t_i - t_{i+1})` in the 0-based
    /// variables `i` and `i + 1`.
    ///
    /// The numerator is antisymmetric in the two variables, so the division is
    /// exact. It is carried out by synthetic division by `x - y` with `x = t_i`
    /// and coefficients in the remaining variables; a nonzero remainder means
    /// the arithmetic is broken and aborts.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        if i + 1 >= self.nvars {
            return Err(Error::VariableIndex {
                index: i + 1,
                nvars: self.nvars,
            });
        }
        let numerator = self.add_unchecked(&self.swap_variables(i, i + 1)?.neg());
        if numerator.is_zero() {
            return Ok(numerator);
        }

        // Coefficients of x^k, as polynomials free of x.
        let degree = numerator
            .terms
            .keys()
            .map(|e| e.as_slice()[i])
            .max()
            .unwrap_or(0) as usize;
        let mut coeffs = vec![Self::zero(self.nvars); degree + 1];
        for (e, c) in &numerator.terms {
            let k = e.as_slice()[i] as usize;
            coeffs[k].add_term(e.with(i, 0), c.clone());
        }

        let mut y = vec![0u32; self.nvars];
        y[i + 1] = 1;
        let times_y = |p: &Self| p.shift(&y).expect("shift length matches");

        // Horner-style synthetic division by (x - y).
        let mut quotient = vec![Self::zero(self.nvars); degree.max(1)];
        let mut carry = Self::zero(self.nvars);
        for k in (1..=degree).rev() {
            carry = coeffs[k].add_unchecked(&times_y(&carry));
            quotient[k - 1] = carry.clone();
        }
        let remainder = coeffs[0].add_unchecked(&times_y(&carry));
        assert!(
            remainder.is_zero(),
            "divided difference left a nonzero remainder: arithmetic invariant violated"
        );

        let mut out = Self::zero(self.nvars);
        for (k, q) in quotient.into_iter().enumerate() {
            for (e, c) in q.terms {
                out.add_term(e.with(i, k as u32), c);
            }
        }
        Ok(out)
    }

    /// Replaces every variable `t_i` by `1 - t_i` and expands.
    pub fn substitute_one_minus(&self) -> Self {
        let n = self.nvars;
        let mut cache: BTreeMap<(usize, u32), Self> = BTreeMap::new();
        let mut one_minus_pow = |var: usize, k: u32| -> Self {
            cache
                .entry((var, k))
                .or_insert_with(|| {
                    let t = Self::variable(n, var).expect("index in range");
                    Self::one(n).add_unchecked(&t.neg()).pow(k)
                })
                .clone()
        };
        let mut out = Self::zero(n);
        for (e, c) in &self.terms {
            let mut prod = Self::constant(n, c.clone());
            for (var, &k) in e.as_slice().iter().enumerate() {
                if k > 0 {
                    prod = prod.mul_unchecked(&one_minus_pow(var, k));
                }
            }
            out = out.add_unchecked(&prod);
        }
        out
    }

    /// Keeps only the terms of total degree exactly `degree`.
    pub fn truncate_total_degree(&self, degree: u64) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total_degree() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<C: Coefficient + Signed> Polynomial<C> {
    /// Exponent vectors carrying a strictly positive coefficient.
    ///
    /// Fails only if those exponents have different total degrees, since a
    /// [`Support`] has constant weight.
    pub fn support(&self) -> Result<Support> {
        let points = self
            .terms
            .iter()
            .filter(|(_, c)| c.is_positive())
            .map(|(e, _)| e.as_slice().to_vec());
        Support::new(self.nvars, points)
    }

    /// Exponent vectors with negative coefficients, which [`Self::support`] drops.
    pub fn negative_terms(&self) -> Vec<ExponentVector> {
        self.terms
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(e, _)| e.clone())
            .collect()
    }
}

impl<C: Coefficient + Display + Signed> Display for Polynomial<C> {
    /// Human-readable form, highest lexicographic term first, e.g. `t1^2*t2 - t3 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .as_slice()
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| {
                    if a == 1 {
                        format!("t{}", i + 1)
                    } else {
                        format!("t{}^{a}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient + Display + Signed> Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({self})", self.nvars)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl<C: Coefficient + Display> Serialize for Polynomial<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.as_slice().to_vec(),
                    coef: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coefficient + FromStr> Deserialize<'de> for Polynomial<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolynomialJson::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let c = C::from_str(t.coef.trim())
                .map_err(|_| D::Error::custom(format!("invalid coefficient {:?}", t.coef)))?;
            terms.push((t.exp, c));
        }
        Polynomial::from_terms(raw.nvars, terms).map_err(D::Error::custom)
    }
}
