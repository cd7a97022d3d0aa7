//! Integral quadratic lattices given by a Gram matrix in a fixed basis.

pub mod roots;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{self, IntMatrix, LinalgError, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vector has {got} coordinates, lattice rank is {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("expected {expected} vectors, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("vectors do not span a full-rank sublattice (infinite index)")]
    InfiniteIndex,
    #[error("vectors are linearly dependent")]
    Dependent,
    #[error("lattice is degenerate (determinant 0)")]
    Degenerate,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Integer coordinates with respect to some lattice basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticeVector(pub Vec<BigInt>);

impl LatticeVector {
    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![BigInt::zero(); n])
    }

    /// The `i`-th standard basis vector of `Z^n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = BigInt::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self(self.0.iter().map(|x| x * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &Self, k: &BigInt) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|x| i64::try_from(x).ok()).collect()
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: Self) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: Self) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector(self.0.iter().map(|a| -a).collect())
    }
}

/// A free abelian group with a symmetric integral bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        if !gram.is_square() {
            return Err(LinalgError::NotSquare { rows: gram.rows(), cols: gram.cols() }.into());
        }
        if !gram.is_symmetric() {
            return Err(LinalgError::NotSymmetric.into());
        }
        Ok(Self { gram })
    }

    /// Panics if `rows` is not a symmetric square matrix; meant for constants.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        Self::new(IntMatrix::from_rows(rows)).expect("constant Gram matrix must be symmetric")
    }

    /// Hyperbolic plane `U`.
    pub fn hyperbolic_plane() -> Self {
        Self::from_rows(&[vec![0, 1], vec![1, 0]])
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let (a, b) = (self.rank(), other.rank());
        let mut g = IntMatrix::zeros(a + b, a + b);
        for i in 0..a {
            for j in 0..a {
                g.set(i, j, self.gram.get(i, j).clone());
            }
        }
        for i in 0..b {
            for j in 0..b {
                g.set(a + i, a + j, other.gram.get(i, j).clone());
            }
        }
        Lattice { gram: g }
    }

    fn check(&self, v: &LatticeVector) -> Result<(), LatticeError> {
        if v.len() != self.rank() {
            return Err(LatticeError::WrongLength { expected: self.rank(), got: v.len() });
        }
        Ok(())
    }

    pub fn pair(&self, v: &LatticeVector, w: &LatticeVector) -> Result<BigInt, LatticeError> {
        self.check(v)?;
        self.check(w)?;
        let gw = self.gram.mul_vec(&w.0)?;
        Ok(v.0.iter().zip(&gw).map(|(a, b)| a * b).sum())
    }

    pub fn norm(&self, v: &LatticeVector) -> Result<BigInt, LatticeError> {
        self.pair(v, v)
    }

    /// Gram matrix of a family of vectors.
    pub fn gram_of(&self, vecs: &[LatticeVector]) -> Result<IntMatrix, LatticeError> {
        let n = vecs.len();
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let p = self.pair(&vecs[i], &vecs[j])?;
                g.set(j, i, p.clone());
                g.set(i, j, p);
            }
        }
        Ok(g)
    }

    /// Lattice induced on the span of `vecs`, in that basis.
    pub fn sublattice(&self, vecs: &[LatticeVector]) -> Result<Lattice, LatticeError> {
        Ok(Lattice { gram: self.gram_of(vecs)? })
    }

    fn coordinate_matrix(&self, vecs: &[LatticeVector]) -> Result<IntMatrix, LatticeError> {
        for v in vecs {
            self.check(v)?;
        }
        let rows: Vec<Vec<BigInt>> = vecs.iter().map(|v| v.0.clone()).collect();
        if rows.is_empty() {
            return Ok(IntMatrix::zeros(0, self.rank()));
        }
        Ok(IntMatrix::from_rows(&rows))
    }
}

/// Determinant, parity, unimodularity and inertia of a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeProfile {
    pub determinant: BigInt,
    pub even: bool,
    pub unimodular: bool,
    pub signature: Signature,
}

impl fmt::Display for LatticeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "det {}, {}, {}, signature {}",
            self.determinant,
            if self.even { "even" } else { "odd" },
            if self.unimodular { "unimodular" } else { "not unimodular" },
            self.signature
        )
    }
}

/// Finite abelian group `Z/d1 x ... x Z/dk` with `d1 | d2 | ... | dk`, all `> 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbelianInvariants {
    factors: Vec<BigInt>,
}

impl AbelianInvariants {
    /// Drops unit factors and checks the divisibility chain.
    pub fn from_factors(factors: Vec<BigInt>) -> Option<Self> {
        let factors: Vec<BigInt> = factors.into_iter().map(|f| f.abs()).filter(|f| !f.is_one()).collect();
        if factors.iter().any(Zero::is_zero) {
            return None;
        }
        if factors.windows(2).any(|w| !(&w[1] % &w[0]).is_zero()) {
            return None;
        }
        Some(Self { factors })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn order(&self) -> BigInt {
        self.factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors_i64(&self) -> Vec<i64> {
        self.factors.iter().map(|f| i64::try_from(f).unwrap_or(i64::MAX)).collect()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

pub fn profile(l: &Lattice) -> LatticeProfile {
    let determinant = linalg::det_exact(l.gram()).expect("Gram is square");
    let even = (0..l.rank()).all(|i| l.gram().get(i, i).is_even());
    let signature = linalg::signature(l.gram()).expect("Gram is symmetric");
    let unimodular = determinant.abs().is_one();
    LatticeProfile { determinant, even, unimodular, signature }
}

/// Index `[L : span(vecs)]` for a full-rank family of `rank(L)` vectors.
pub fn sublattice_index(l: &Lattice, vecs: &[LatticeVector]) -> Result<BigInt, LatticeError> {
    if vecs.len() != l.rank() {
        return Err(LatticeError::Dimension { expected: l.rank(), got: vecs.len() });
    }
    let c = l.coordinate_matrix(vecs)?;
    let d = linalg::det_exact(&c)?;
    if d.is_zero() {
        return Err(LatticeError::InfiniteIndex);
    }
    Ok(d.abs())
}

/// `sat(span) / span` where `sat` is the primitive closure inside `L`.
pub fn saturation_quotient(l: &Lattice, vecs: &[LatticeVector]) -> Result<AbelianInvariants, LatticeError> {
    let c = l.coordinate_matrix(vecs)?;
    let snf = linalg::smith_normal_form(&c);
    if snf.rank() != vecs.len() {
        return Err(LatticeError::Dependent);
    }
    Ok(AbelianInvariants::from_factors(snf.nontrivial_factors()).expect("SNF factors form a chain"))
}

/// `L^* / L`, read off the Smith form of the Gram matrix.
pub fn discriminant_group(l: &Lattice) -> Result<AbelianInvariants, LatticeError> {
    let snf = linalg::smith_normal_form(l.gram());
    if snf.rank() != l.rank() {
        return Err(LatticeError::Degenerate);
    }
    Ok(AbelianInvariants::from_factors(snf.nontrivial_factors()).expect("SNF factors form a chain"))
}
