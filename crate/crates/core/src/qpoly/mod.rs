//! Dense polynomials in one variable `q` with arbitrary-precision integer
//! coefficients, together with the q-combinatorial constructors and the
//! coefficient-shape predicates used by the rest of the crate.

mod factor;
mod qcomb;
mod serde_impl;
mod shape;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use factor::{factor_quantum, FactoredForm};
pub use qcomb::{eps_poly, gaussian_binomial, q_factorial, quantum_integer, EpsVector};
pub use shape::{is_strictly_unimodal, is_symmetric, is_unimodal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QPolyError {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivideByZero,
    #[error("the zero polynomial has no factored form")]
    ZeroPolynomial,
    #[error("eps entries must be 0 or 1, found {0}")]
    InvalidEps(i64),
    #[error("malformed coefficient list: {0}")]
    Parse(String),
}

/// A polynomial `c_0 + c_1 q + ... + c_d q^d` stored densely from `q^0`.
///
/// The coefficient vector is always trimmed so that the last stored entry is
/// nonzero; the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigInt, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from coefficients in ascending order, trimming
    /// trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Coefficients from `q^0` up to the degree.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// The coefficients from `low_degree` through `degree`, internal zeros
    /// included. Empty for the zero polynomial.
    pub fn support_window(&self) -> &[BigInt] {
        match self.low_degree() {
            Some(low) => &self.coeffs[low..],
            None => &[],
        }
    }

    /// Multiplies by `q^m`.
    pub fn shift(&self, m: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `q^m`, which must divide the polynomial.
    fn unshift(&self, m: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(m).all(Zero::is_zero));
        Self {
            coeffs: self.coeffs.iter().skip(m).cloned().collect(),
        }
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// Long division from the top coefficient; any inexact coefficient
    /// division or nonzero remainder is reported as `NotDivisible`.
    pub fn exact_divide(&self, divisor: &QPolynomial) -> Result<QPolynomial, QPolyError> {
        let dlen = divisor.coeffs.len();
        let lead = divisor.coeffs.last().ok_or(QPolyError::DivideByZero)?;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < dlen {
            return Err(QPolyError::NotDivisible);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for top in (dlen - 1..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            if !(&rem[top] % lead).is_zero() {
                return Err(QPolyError::NotDivisible);
            }
            let c = &rem[top] / lead;
            let offset = top + 1 - dlen;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[offset + j] -= &c * d;
            }
            quot[offset] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(QPolyError::NotDivisible);
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a QPolynomial>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * f)
    }

    /// Parses a comma-separated ascending coefficient list such as
    /// `0,0,1,4,5,4,5,4,1`.
    pub fn parse_coeff_list(text: &str) -> Result<Self, QPolyError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(QPolyError::Parse("empty coefficient list".into()));
        }
        let coeffs = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<BigInt>()
                    .map_err(|_| QPolyError::Parse(format!("not an integer: {tok:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for QPolynomial {
    /// `c0 + c1*q + c2*q^2 + ...`, ascending, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}*q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (c, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c += r;
        }
        self.trim();
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}
