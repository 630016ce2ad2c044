use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::{QPolyError, QPolynomial};

/// `[n]_q = 1 + q + ... + q^(n-1)`; `[0]_q` is the zero polynomial.
pub fn quantum_integer(n: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![BigInt::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, k| &acc * &quantum_integer(k))
}

thread_local! {
    static BINOMIAL_MEMO: RefCell<HashMap<(usize, usize), QPolynomial>> =
        RefCell::new(HashMap::new());
}

/// Gaussian polynomial `binom(n, k)_q`, zero outside `0 <= k <= n`.
///
/// Built from the Pascal rule `binom(n, k) = binom(n-1, k-1) + q^k binom(n-1, k)`
/// with a per-thread memo table, so no polynomial division is involved.
pub fn gaussian_binomial(n: usize, k: i64) -> QPolynomial {
    if k < 0 || k as u64 > n as u64 {
        return QPolynomial::zero();
    }
    pascal(n, k as usize)
}

fn pascal(n: usize, k: usize) -> QPolynomial {
    if k == 0 || k == n {
        return QPolynomial::one();
    }
    if let Some(hit) = BINOMIAL_MEMO.with(|m| m.borrow().get(&(n, k)).cloned()) {
        return hit;
    }
    let left = pascal(n - 1, k - 1);
    let right = if k < n {
        pascal(n - 1, k).shift(k)
    } else {
        QPolynomial::zero()
    };
    let value = &left + &right;
    BINOMIAL_MEMO.with(|m| m.borrow_mut().insert((n, k), value.clone()));
    value
}

/// A 0/1 vector `(eps_0, eps_1, ...)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EpsVector(Vec<bool>);

impl EpsVector {
    pub fn new(bits: Vec<bool>) -> Self {
        Self(bits)
    }

    pub fn from_bits(bits: &[i64]) -> Result<Self, QPolyError> {
        bits.iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(QPolyError::InvalidEps(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
    }

    /// The vector whose bits are the low `len` bits of `mask`, bit 0 first.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        Self((0..len).map(|i| (mask >> i) & 1 == 1).collect())
    }

    /// Every vector of the given length, in increasing mask order.
    pub fn all(len: usize) -> impl Iterator<Item = EpsVector> {
        assert!(len < 64, "eps enumeration limited to 63 entries");
        (0..1u64 << len).map(move |mask| Self::from_mask(mask, len))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }
}

impl fmt::Display for EpsVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// `sum_i eps_i q^i`.
pub fn eps_poly(eps: &EpsVector) -> QPolynomial {
    QPolynomial::from_coeffs(
        eps.0
            .iter()
            .map(|&b| if b { BigInt::one() } else { BigInt::default() })
            .collect(),
    )
}
