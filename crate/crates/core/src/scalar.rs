//! Scalar abstractions shared by the exact linear algebra and the polytope code.
//!
//! [`Field`] is what Gaussian elimination needs: it is implemented for every
//! `num_traits::Num` type (so `BigRational` and, for experiments, `f64`) and
//! for [`ModP`], whose modulus is only known at run time. [`Scalar`] adds the
//! ordering and integer embedding that convex geometry requires.

use std::fmt::{self, Debug};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero_elem(&self) -> bool;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    /// Division by a nonzero element.
    fn div_elem(&self, other: &Self) -> Self;
}

impl<T> Field for T
where
    T: Num + Clone + Debug + Send + Sync,
{
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }
    fn div_elem(&self, other: &Self) -> Self {
        self.clone() / other.clone()
    }
}

/// Ordered field with an embedding of the integers; what hulls and volumes need.
pub trait Scalar: Num + Signed + FromPrimitive + Clone + PartialOrd + Debug + Send + Sync {
    fn from_count(n: u64) -> Self {
        <Self as FromPrimitive>::from_u64(n).expect("integer embeds in scalar type")
    }
}

impl<T> Scalar for T where T: Num + Signed + FromPrimitive + Clone + PartialOrd + Debug + Send + Sync
{}

/// Element of the prime field `F_p`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModP {
    value: u64,
    modulus: u64,
}

impl ModP {
    pub fn new(value: u64, modulus: u64) -> Self {
        ModP {
            value: value % modulus,
            modulus,
        }
    }

    /// Reduces a rational number modulo `modulus`; fails when the denominator
    /// is divisible by the modulus.
    pub fn from_rational(q: &BigRational, modulus: u64) -> Result<Self> {
        let m = BigInt::from(modulus);
        let num = q
            .numer()
            .mod_floor(&m)
            .to_u64()
            .expect("reduced residue fits u64");
        let den = q
            .denom()
            .mod_floor(&m)
            .to_u64()
            .expect("reduced residue fits u64");
        if den == 0 {
            return Err(Error::InvalidField(format!(
                "denominator of {q} vanishes modulo {modulus}"
            )));
        }
        let den = ModP::new(den, modulus);
        Ok(ModP::new(num, modulus).div_elem(&den))
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn pow(self, mut exp: u64) -> Self {
        let mut base = self.value as u128;
        let m = self.modulus as u128;
        let mut acc = 1u128 % m;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        ModP {
            value: acc as u64,
            modulus: self.modulus,
        }
    }

    fn inverse(self) -> Self {
        assert!(self.value != 0, "inverse of zero in F_{}", self.modulus);
        // Fermat; the modulus is checked prime at construction of the family.
        self.pow(self.modulus - 2)
    }
}

impl Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl Field for ModP {
    fn is_zero_elem(&self) -> bool {
        self.value == 0
    }
    fn sub_elem(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        ModP::new(self.value + self.modulus - other.value, self.modulus)
    }
    fn mul_elem(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let v = (self.value as u128 * other.value as u128) % self.modulus as u128;
        ModP {
            value: v as u64,
            modulus: self.modulus,
        }
    }
    fn div_elem(&self, other: &Self) -> Self {
        self.mul_elem(&other.inverse())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parses `"a"`, `"-a"` or `"a/b"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let err = || Error::Parse {
        what: "rational",
        text: text.to_string(),
    };
    let t = text.trim();
    let q = match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(BigInt::from_str(t).map_err(|_| err())?),
    };
    Ok(q)
}

/// Canonical text form: integers without a denominator, otherwise `p/q` in lowest terms.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// JSON form of an exact rational: a string `"p/q"` or a plain integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalJson(pub BigRational);

impl serde::Serialize for RationalJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> serde::Deserialize<'de> for RationalJson {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(RationalJson(rational_from_i64(n))),
            Raw::Text(t) => parse_rational(&t)
                .map(RationalJson)
                .map_err(serde::de::Error::custom),
        }
    }
}

pub(crate) fn rational_from_i64(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// Operator impls so `ModP` reads naturally in tests and callers.
impl Add for ModP {
    type Output = ModP;
    fn add(self, rhs: ModP) -> ModP {
        ModP::new(self.value + rhs.value, self.modulus)
    }
}
impl Sub for ModP {
    type Output = ModP;
    fn sub(self, rhs: ModP) -> ModP {
        self.sub_elem(&rhs)
    }
}
impl Mul for ModP {
    type Output = ModP;
    fn mul(self, rhs: ModP) -> ModP {
        self.mul_elem(&rhs)
    }
}
impl Div for ModP {
    type Output = ModP;
    fn div(self, rhs: ModP) -> ModP {
        self.div_elem(&rhs)
    }
}
impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        ModP::new(self.modulus - self.value, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modp_inverse_round_trip() {
        for v in 1..13 {
            let a = ModP::new(v, 13);
            assert_eq!(a.div_elem(&a), ModP::new(1, 13));
        }
    }

    #[test]
    fn rational_reduction_mod_p() {
        let half = parse_rational("1/2").unwrap();
        let h = ModP::from_rational(&half, 7).unwrap();
        assert_eq!(h.value(), 4);
        assert!(ModP::from_rational(&parse_rational("1/7").unwrap(), 7).is_err());
        assert_eq!(
            ModP::from_rational(&parse_rational("-1").unwrap(), 5)
                .unwrap()
                .value(),
            4
        );
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "-3", "5/7", "-12/5"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
