//! JSON form `{"low": <int>, "coeffs": [<int>, ...]}` where `coeffs[0]` is
//! the coefficient of `q^low`. Coefficients are written as bare JSON numbers
//! of any length.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

use super::QPolynomial;

#[derive(Serialize, Deserialize)]
struct Wire {
    low: usize,
    coeffs: Vec<Number>,
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let low = self.low_degree().unwrap_or(0);
        let coeffs = self
            .support_window()
            .iter()
            .map(|c| Number::from_str(&c.to_string()).map_err(S::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Wire { low, coeffs }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = Wire::deserialize(deserializer)?;
        let mut coeffs = vec![BigInt::default(); wire.low];
        for n in &wire.coeffs {
            let text = n.to_string();
            let c = BigInt::from_str(&text)
                .map_err(|_| D::Error::custom(format!("coefficient {text} is not an integer")))?;
            coeffs.push(c);
        }
        Ok(QPolynomial::from_coeffs(coeffs))
    }
}
