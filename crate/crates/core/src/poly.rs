//! Dense univariate integer polynomials in `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Integer polynomial stored as a coefficient vector indexed by degree.
///
/// Trailing zeros are always stripped, so the zero polynomial has an empty
/// coefficient vector and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| c as i128).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `c * t^k`
    pub fn monomial(c: i128, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 - t^k`
    pub fn one_minus_t_pow(k: usize) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[0] = 1;
        coeffs[k] = -1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, t: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact division by `1 - t`; `None` when `self(1) != 0`.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.eval(1) != 0 {
            return None;
        }
        // (1 - t) q = p  =>  q_k = sum_{i <= k} p_i
        let n = self.coeffs.len();
        let mut q = Vec::with_capacity(n - 1);
        let mut acc = 0i128;
        for &c in &self.coeffs[..n - 1] {
            acc += c;
            q.push(acc);
        }
        Some(Self::new(q))
    }

    /// Comma-separated coefficient list, lowest degree first.
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn from_csv(s: &str) -> Option<Self> {
        let coeffs = s
            .split(',')
            .map(|x| x.trim().parse::<i128>().ok())
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(coeffs))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), 0);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(&a * &a, p(&[1, 2, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(&a + &p(&[0, 0, 3]), p(&[1, 1, 3]));
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
        assert_eq!(p(&[1, -1]).pow(3), p(&[1, -3, 3, -1]));
        assert_eq!(p(&[1, 12, 36, 24]).eval(1), 73);
    }

    #[test]
    fn division_by_one_minus_t() {
        // 1 - t^2 = (1 - t)(1 + t)
        assert_eq!(IntPolynomial::one_minus_t_pow(2).div_one_minus_t(), Some(p(&[1, 1])));
        assert_eq!(p(&[1, 1]).div_one_minus_t(), None);
        let h = p(&[1, 12, 18, 4]);
        let n = &h * &p(&[1, -1]).pow(4);
        let mut q = n;
        for _ in 0..4 {
            q = q.div_one_minus_t().unwrap();
        }
        assert_eq!(q, h);
    }

    #[test]
    fn display_and_csv() {
        assert_eq!(p(&[1, 12, 36, 24]).to_string(), "1 + 12t + 36t^2 + 24t^3");
        assert_eq!(p(&[1, 0, -1]).to_string(), "1 - t^2");
        assert_eq!(p(&[1, 12, 18, 4]).to_csv(), "1,12,18,4");
        assert_eq!(IntPolynomial::from_csv("1, 4,1"), Some(p(&[1, 4, 1])));
        assert_eq!(IntPolynomial::from_csv("1,x"), None);
    }
}
