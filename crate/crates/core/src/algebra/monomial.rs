use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Dense exponent vector; index `k` is the `k`-th smallest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        Monomial(exps)
    }

    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut e = vec![0; nvars];
        for &v in vars {
            e[v] += 1;
        }
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.0[var]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(v, _)| v)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a - b).collect())
    }

    /// `self * num / den`, computed without an intermediate product.
    pub fn replace(&self, den: &Monomial, num: &Monomial) -> Monomial {
        debug_assert!(den.divides(self));
        Monomial(
            self.0
                .iter()
                .zip(&den.0)
                .zip(&num.0)
                .map(|((&a, &d), &n)| a - d + n)
                .collect(),
        )
    }

    /// Colon by a single variable: lower its exponent by one if present.
    pub fn colon_var(&self, var: usize) -> Monomial {
        let mut e = self.0.clone();
        e[var] = e[var].saturating_sub(1);
        Monomial(e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The two monomial orders induced by the vertex order `x_a > x_b` iff `a`
/// is lexicographically larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Degree reverse lexicographic.
    Rev,
    /// Pure lexicographic.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Rev => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Rev => "rev",
            MonomialOrder::Lex => "lex",
        })
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rev" => Ok(MonomialOrder::Rev),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(crate::Error::InvalidArgument(format!(
                "unknown monomial order '{other}'"
            ))),
        }
    }
}
