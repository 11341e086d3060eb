//! Exact integer linear algebra on `N ≅ ℤⁿ` and its dual `M`.
//!
//! Everything here is fraction-free. Determinants use Bareiss elimination
//! with `i128` intermediates and checked arithmetic; a result that does not
//! fit back into `i64` is reported as [`Error::Overflow`] rather than wrapped.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `N` or `M`, stored as its integer coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(Vec<i64>);

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Self(vec![0; dim])
    }

    /// The `i`-th standard basis vector of `ℤⁿ`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        Self(v)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// The pairing `⟨self, other⟩` between `M` and `N`.
    pub fn dot(&self, other: &Self) -> i64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// Gcd of the absolute coordinates; zero only for the zero vector.
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0, |g, &c| gcd(g, c))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    /// Concatenation, used to build product fans.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<i64>> for LatticeVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[i64; N]> for LatticeVector {
    fn from(v: [i64; N]) -> Self {
        Self(v.to_vec())
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: Self) -> LatticeVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: Self) -> LatticeVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|c| -c).collect())
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_square(vectors: &[LatticeVector]) -> Result<usize> {
    let n = vectors.len();
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }
    for v in vectors {
        if v.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v.dim(),
            });
        }
    }
    Ok(n)
}

/// Determinant of the matrix whose rows are `vectors`, by Bareiss elimination.
pub fn determinant(vectors: &[LatticeVector]) -> Result<i64> {
    check_square(vectors)?;
    let rows: Vec<Vec<i128>> = vectors
        .iter()
        .map(|v| v.coords().iter().map(|&c| c as i128).collect())
        .collect();
    let det = bareiss(rows)?;
    i64::try_from(det).map_err(|_| Error::Overflow)
}

fn bareiss(mut a: Vec<Vec<i128>>) -> Result<i128> {
    let n = a.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .ok_or(Error::Overflow)?;
                // Sylvester's identity guarantees exact division.
                debug_assert_eq!(num % prev, 0);
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Integer coefficients `c` with `Σ cᵢ·basisᵢ = target`, for a basis of
/// determinant ±1.
///
/// Solved by Cramer's rule over Bareiss determinants, so no rational
/// intermediate ever appears.
pub fn unimodular_solve(basis: &[LatticeVector], target: &LatticeVector) -> Result<Vec<i64>> {
    let n = check_square(basis)?;
    if target.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: target.dim(),
        });
    }
    let det = determinant(basis)?;
    if det.abs() != 1 {
        return Err(Error::NotUnimodular { det });
    }
    (0..n)
        .map(|i| {
            let mut replaced = basis.to_vec();
            replaced[i] = target.clone();
            Ok(determinant(&replaced)? * det)
        })
        .collect()
}

/// `Σ cᵢ·basisᵢ`.
pub fn combine(basis: &[LatticeVector], coeffs: &[i64]) -> LatticeVector {
    let dim = basis.first().map_or(0, LatticeVector::dim);
    let mut out = vec![0i64; dim];
    for (v, &c) in basis.iter().zip(coeffs) {
        for (o, x) in out.iter_mut().zip(v.coords()) {
            *o += c * x;
        }
    }
    LatticeVector(out)
}

/// The basis of `M` dual to a unimodular basis of `N`: `⟨uᵢ, vⱼ⟩ = δᵢⱼ`.
pub fn dual_basis(basis: &[LatticeVector]) -> Result<Vec<LatticeVector>> {
    let n = check_square(basis)?;
    // Column j of the inverse holds the coordinates of eⱼ in `basis`.
    let columns = (0..n)
        .map(|j| unimodular_solve(basis, &LatticeVector::unit(n, j)))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..n)
        .map(|i| LatticeVector((0..n).map(|j| columns[j][i]).collect()))
        .collect())
}

/// Number of lattice points on the closed segment `[p, q]`.
pub fn segment_lattice_count(p: &LatticeVector, q: &LatticeVector) -> i64 {
    (q - p).content() + 1
}
