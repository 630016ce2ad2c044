//! Closed forms for delayed hedgehogs (a root with `n` leaf children).

use num_bigint::BigInt;
use num_traits::One;

use super::PluckingError;
use crate::qpoly::{eps_poly, q_factorial, quantum_integer, EpsVector, QPolynomial};
use crate::tree::{format_delays, DelayedTree};

/// Left-to-right leaf delays `a_1, ..., a_n` of a hedgehog.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DelayedHedgehog {
    delays: Vec<u32>,
}

impl DelayedHedgehog {
    pub fn new(delays: Vec<u32>) -> Result<Self, PluckingError> {
        if delays.contains(&0) {
            return Err(PluckingError::InvalidParameter(
                "delay values must be at least 1".into(),
            ));
        }
        Ok(Self { delays })
    }

    /// The {1,2}-valued hedgehog described by `eps`, read right to left:
    /// `eps_i = 1` means the i-th leaf from the right has delay 1, else 2.
    pub fn from_eps(eps: &EpsVector) -> Self {
        let delays = eps
            .bits()
            .iter()
            .rev()
            .map(|&b| if b { 1 } else { 2 })
            .collect();
        Self { delays }
    }

    pub fn delays(&self) -> &[u32] {
        &self.delays
    }

    pub fn len(&self) -> usize {
        self.delays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delays.is_empty()
    }

    /// `f_i`: how many leaves carry delay `i`.
    pub fn count(&self, value: u32) -> usize {
        self.delays.iter().filter(|&&d| d == value).count()
    }

    /// `f_i^+`: leaves with delay `i` strictly right of the last delay-1 leaf.
    /// Zero when there is no delay-1 leaf.
    pub fn count_right_of_ones(&self, value: u32) -> usize {
        match self.delays.iter().rposition(|&d| d == 1) {
            Some(last) => self.delays[last + 1..]
                .iter()
                .filter(|&&d| d == value)
                .count(),
            None => 0,
        }
    }

    /// `max(a_1, a_n)`. Carried for completeness; no formula uses it.
    pub fn end_max(&self) -> Option<u32> {
        Some(*self.delays.first()?.max(self.delays.last()?))
    }

    /// Weakly decreasing, then weakly increasing.
    pub fn is_anti_unimodal(&self) -> bool {
        let d = &self.delays;
        let mut i = 0;
        while i + 1 < d.len() && d[i] >= d[i + 1] {
            i += 1;
        }
        while i + 1 < d.len() && d[i] <= d[i + 1] {
            i += 1;
        }
        i + 1 >= d.len()
    }

    /// The `eps` vector for a {1,2}-valued hedgehog, or `None` when some
    /// delay is outside {1,2}.
    pub fn eps_vector(&self) -> Option<EpsVector> {
        self.delays
            .iter()
            .rev()
            .map(|&d| match d {
                1 => Some(true),
                2 => Some(false),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(EpsVector::new)
    }

    pub fn to_tree(&self) -> DelayedTree {
        DelayedTree::hedgehog(&self.delays).expect("delays validated on construction")
    }

    pub fn descriptor(&self) -> String {
        format_delays(&self.delays)
    }
}

/// Closed form for an anti-unimodal delayed hedgehog:
/// `q^(sum_{i>=2} (i-1) f_i^+) * prod_{j=1..n} [f_1 + ... + f_j - j + 1]_q`.
///
/// Zero when no leaf has delay 1, or when some bracket is nonpositive.
pub fn hedgehog_anti_unimodal(h: &DelayedHedgehog) -> Result<QPolynomial, PluckingError> {
    if !h.is_anti_unimodal() {
        return Err(PluckingError::NotAntiUnimodal(h.descriptor()));
    }
    let n = h.len();
    if n == 0 {
        return Ok(QPolynomial::one());
    }
    if h.count(1) == 0 {
        return Ok(QPolynomial::zero());
    }
    let top = h.delays.iter().copied().max().unwrap_or(1);
    let exponent: usize = (2..=top)
        .map(|i| (i as usize - 1) * h.count_right_of_ones(i))
        .sum();

    let mut product = QPolynomial::one();
    let mut running = 0i64;
    for j in 1..=n {
        running += h.count(j as u32) as i64;
        let m = running - j as i64 + 1;
        if m <= 0 {
            return Ok(QPolynomial::zero());
        }
        product = &product * &quantum_integer(m as usize);
    }
    Ok(product.shift(exponent))
}

/// `p_n(q) [n-1]_q!` for the {1,2}-delay hedgehog encoded by `eps`
/// (see [`DelayedHedgehog::from_eps`]). The empty hedgehog gives 1.
pub fn hedgehog_delay12(eps: &EpsVector) -> QPolynomial {
    match eps.len() {
        0 => QPolynomial::one(),
        n => &eps_poly(eps) * &q_factorial(n - 1),
    }
}

/// Hedgehog `1^2 4^k 1^2`: `q^k [k+1]_q! (1+q)^2 (1+q+q^2) (1+q^(k+2))`.
pub fn family_1_4k_1(k: usize) -> Result<QPolynomial, PluckingError> {
    if k == 0 {
        return Err(PluckingError::InvalidParameter(
            "k must be at least 1".into(),
        ));
    }
    let one_plus_q = quantum_integer(2);
    let tail = &QPolynomial::one() + &QPolynomial::monomial(BigInt::one(), k + 2);
    let factors = [
        q_factorial(k + 1),
        one_plus_q.pow(2),
        quantum_integer(3),
        tail,
    ];
    Ok(QPolynomial::product(&factors).shift(k))
}

/// Hedgehog `1^a 3^k 1^b`:
/// `[k+a+b-2]_q! ((q^(k+b-1) + q^(k+b)) [a][b] + q^(2k+2b) [a][a-1] + [b][b-1])`.
pub fn family_1a3k1b(a: usize, k: usize, b: usize) -> Result<QPolynomial, PluckingError> {
    if a == 0 || k == 0 || b == 0 {
        return Err(PluckingError::InvalidParameter(
            "a, k and b must all be at least 1".into(),
        ));
    }
    let qa = quantum_integer(a);
    let qb = quantum_integer(b);
    let both = &(&qa * &qb) * &quantum_integer(2);
    let first = both.shift(k + b - 1);
    let second = (&qa * &quantum_integer(a - 1)).shift(2 * k + 2 * b);
    let third = &qb * &quantum_integer(b - 1);
    let bracket = &(&first + &second) + &third;
    Ok(&q_factorial(k + a + b - 2) * &bracket)
}

/// `Q` of the undelayed hedgehog with `n` leaves, `[n]_q!`.
pub fn hedgehog_plain(n: usize) -> QPolynomial {
    q_factorial(n)
}
