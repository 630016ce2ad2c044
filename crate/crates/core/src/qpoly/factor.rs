use std::fmt;

use serde::{Deserialize, Serialize};

use super::{quantum_integer, QPolyError, QPolynomial};

/// `q^shift * prod [n]_q * residual`, a reporting form for plucking
/// polynomials. Not a canonical factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredForm {
    pub shift: usize,
    /// Each entry `n >= 2` stands for one factor `[n]_q`, largest first.
    pub quantum_factors: Vec<usize>,
    pub residual: QPolynomial,
}

impl FactoredForm {
    pub fn expand(&self) -> QPolynomial {
        let product = self
            .quantum_factors
            .iter()
            .fold(self.residual.clone(), |acc, &n| &acc * &quantum_integer(n));
        product.shift(self.shift)
    }

    /// `(n, multiplicity)` pairs, largest `n` first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &n in &self.quantum_factors {
            match out.last_mut() {
                Some((m, count)) if *m == n => *count += 1,
                _ => out.push((n, 1)),
            }
        }
        out
    }
}

impl fmt::Display for FactoredForm {
    /// e.g. `q^3 [3]_q [2]_q^2`, with a non-unit residual in parentheses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.shift {
            0 => {}
            1 => parts.push("q".to_string()),
            m => parts.push(format!("q^{m}")),
        }
        for (n, mult) in self.multiplicities() {
            if mult == 1 {
                parts.push(format!("[{n}]_q"));
            } else {
                parts.push(format!("[{n}]_q^{mult}"));
            }
        }
        if !self.residual.is_one() || parts.is_empty() {
            if parts.is_empty() {
                parts.push(self.residual.to_string());
            } else {
                parts.push(format!("({})", self.residual));
            }
        }
        f.write_str(&parts.join(" "))
    }
}

/// Pulls out `q^low_degree`, then greedily divides by `[n]_q` for `n` from
/// `degree + 1` down to 2, repeating each `n` until the division fails.
pub fn factor_quantum(p: &QPolynomial) -> Result<FactoredForm, QPolyError> {
    let shift = p.low_degree().ok_or(QPolyError::ZeroPolynomial)?;
    let mut residual = p.unshift(shift);
    let mut quantum_factors = Vec::new();
    let top = residual.degree().unwrap_or(0) + 1;
    for n in (2..=top).rev() {
        let qn = quantum_integer(n);
        while residual.degree().unwrap_or(0) + 1 >= n {
            match residual.exact_divide(&qn) {
                Ok(quot) => {
                    residual = quot;
                    quantum_factors.push(n);
                }
                Err(_) => break,
            }
        }
    }
    Ok(FactoredForm {
        shift,
        quantum_factors,
        residual,
    })
}
