use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact integer polynomial, coefficients in ascending degree. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Conventional `x^3 - 6x^2 + 9x - 4` rendering.
    pub fn to_pretty(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{k}")),
            }
        }
        out
    }
}

/// Ascending coefficient list, e.g. `[-4, 9, -6, 1]`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render() {
        let p = IntPolynomial::from_i64s(&[-4, 9, -6, 1]);
        assert_eq!(p.to_string(), "[-4, 9, -6, 1]");
        assert_eq!(p.to_pretty(), "x^3 - 6x^2 + 9x - 4");
        assert_eq!(IntPolynomial::from_i64s(&[0, 0, -3, 1]).to_pretty(), "x^3 - 3x^2");
        assert_eq!(IntPolynomial::from_i64s(&[0, 0]).to_string(), "[]");
        assert_eq!(IntPolynomial::from_i64s(&[-1, 0, 0]).to_pretty(), "-1");
    }

    #[test]
    fn eval_and_degree() {
        let p = IntPolynomial::from_i64s(&[2, -3, 0, 1]);
        assert_eq!(p.degree(), Some(3));
        assert!(p.is_monic());
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::zero());
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(2));
        assert_eq!(p.coeff(7), BigInt::zero());
        assert_eq!(IntPolynomial::default().degree(), None);
    }
}
