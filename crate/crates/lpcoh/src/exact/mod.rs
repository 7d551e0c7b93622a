//! Exact rational linear algebra: scalars, vectors, matrices, rank and
//! kernel computations, and the simplex-based feasibility tests built on
//! top of them.
//!
//! All arithmetic is exact; rationals are kept in lowest terms with a
//! positive denominator at all times.

mod simplex;

pub use simplex::{cone_is_trivial, solve_strict_positive, strict_negative_witness};

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An arbitrary-precision rational, stored in lowest terms with a
/// positive denominator. Serialises as the string `"num/den"`
/// (or `"num"` when the denominator is 1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `num/den`; panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Rational(self.0.recip())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational prints "num/den", or just "num" when den == 1.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BigRational::from_str(s.trim())
            .map(Rational)
            .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::int(n)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        let mut acc = Rational::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A coordinate vector of rationals in an ambient Euclidean frame.
/// Equality and ordering are componentwise exact; the ordering is the
/// lexicographic one used as the canonical root order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RationalVector(Vec<Rational>);

impl RationalVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalVector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        RationalVector(vec![Rational::zero(); dim])
    }

    /// `i`-th standard basis vector of `R^dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&c| Rational::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn dot(&self, other: &RationalVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "frame mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), other.dim(), "frame mismatch");
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RationalVector) -> RationalVector {
        assert_eq!(self.dim(), other.dim(), "frame mismatch");
        RationalVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RationalVector {
        RationalVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> RationalVector {
        RationalVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn l1_norm(&self) -> Rational {
        self.0.iter().map(Rational::abs).sum()
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A dense matrix of rationals, stored row-wise. All rows share one frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<RationalVector>,
    cols: usize,
}

impl RationalMatrix {
    pub fn new(rows: Vec<RationalVector>) -> Result<Self> {
        let cols = rows.first().map(RationalVector::dim).unwrap_or(0);
        for r in &rows {
            if r.dim() != cols {
                return Err(Error::Dimension {
                    expected: cols,
                    got: r.dim(),
                });
            }
        }
        Ok(RationalMatrix { rows, cols })
    }

    /// Empty matrix (no rows) over a frame of the given dimension.
    pub fn empty(cols: usize) -> Self {
        RationalMatrix { rows: vec![], cols }
    }

    pub fn rows(&self) -> &[RationalVector] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    fn to_vecs(&self) -> Vec<Vec<Rational>> {
        self.rows.iter().map(|r| r.coords().to_vec()).collect()
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.to_vecs();
        eliminate(&mut m).len()
    }

    /// Exact basis of the right kernel `{x : A x = 0}`.
    pub fn kernel_basis(&self) -> Vec<RationalVector> {
        let mut m = self.to_vecs();
        let pivots = eliminate(&mut m);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = vec![];
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            // back-substitute through the echelon rows, bottom-up
            for &(r, c) in pivots.iter().rev() {
                let mut s = Rational::zero();
                for j in (c + 1)..self.cols {
                    s += &(&m[r][j] * &x[j]);
                }
                x[c] = -(s / m[r][c].clone());
            }
            basis.push(RationalVector::new(x));
        }
        basis
    }

    /// One exact solution of `A x = b` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.nrows(), "rhs length mismatch");
        let mut m: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .zip(rhs)
            .map(|(r, b)| {
                let mut row = r.coords().to_vec();
                row.push(b.clone());
                row
            })
            .collect();
        let n = self.cols;
        let pivots = eliminate_cols(&mut m, n);
        // inconsistent iff a pivot landed in the augmented column
        for row in m.iter().skip(pivots.len()) {
            if !row[n].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rational::zero(); n];
        for &(r, c) in pivots.iter().rev() {
            let mut s = m[r][n].clone();
            for j in (c + 1)..n {
                s -= &(&m[r][j] * &x[j]);
            }
            x[c] = s / m[r][c].clone();
        }
        Some(x)
    }
}

/// Row-reduce `m` in place to echelon form; returns the pivot positions
/// `(row, col)` in order.
fn eliminate(m: &mut Vec<Vec<Rational>>) -> Vec<(usize, usize)> {
    let cols = m.first().map(Vec::len).unwrap_or(0);
    eliminate_cols(m, cols)
}

/// Like `eliminate`, but only pivots on the first `ncols` columns (used
/// for augmented systems).
fn eliminate_cols(m: &mut [Vec<Rational>], ncols: usize) -> Vec<(usize, usize)> {
    let nrows = m.len();
    let mut pivots = vec![];
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in (row + 1)..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[row][col];
            for j in col..m[r].len() {
                let t = &f * &m[row][j];
                m[r][j] -= &t;
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == nrows {
            break;
        }
    }
    pivots
}
