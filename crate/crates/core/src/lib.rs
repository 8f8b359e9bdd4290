//! Multidegree supports of multiprojective varieties from combinatorial data.
//!
//! The positivity of a multidegree is decided by the dimensions of the
//! coordinate projections, so most computations here reduce to enumerating
//! the lattice points of a polymatroid base polytope. Inputs come as rank
//! tables, subspace families, permutations, monomial ideals, simplicial
//! complexes or polytope tuples. All arithmetic is exact.

pub mod error;
pub mod flagmoduli;
pub mod hilbert;
pub mod linalg;
pub mod mixedvol;
pub mod poly;
pub mod polymatroid;
pub mod scalar;
pub mod schubert;
pub mod subset;
pub mod support;

pub use error::{Error, Result};

/// Sparse polynomial with arbitrary-precision integer coefficients.
pub type IntPolynomial = poly::Polynomial<num_bigint::BigInt>;
/// Exact rational number.
pub type Rational = num_rational::BigRational;
/// Polytope with exact rational vertex coordinates.
pub type LatticePolytope = mixedvol::Polytope<Rational>;
/// Exact mixed-volume table.
pub type MixedVolumeTable = mixedvol::MixedVolumes<Rational>;
