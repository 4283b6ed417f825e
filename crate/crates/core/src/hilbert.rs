//! Hilbert series of monomial quotients and the h-polynomial of a collection.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{initial_ideal_with, minimalize, Monomial, MonomialIdeal, MonomialOrder};
use crate::deadline::Deadline;
use crate::grid::CellCollection;
use crate::poly::IntPolynomial;
use crate::unionfind::DisjointSet;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesResult {
    /// `N(t)` with `HP = N(t) / (1 - t)^n` over all vertex variables.
    pub numerator: IntPolynomial,
    pub h_poly: IntPolynomial,
    pub krull_dim: usize,
}

impl SeriesResult {
    /// Cancels every factor `1 - t` of the numerator.
    pub fn from_numerator(numerator: IntPolynomial, nvars: usize) -> Self {
        let mut h = numerator.clone();
        let mut mult = 0;
        while !h.is_zero() && h.eval(1) == 0 {
            h = h.div_one_minus_t().expect("N(1) = 0 implies divisibility");
            mult += 1;
        }
        let krull_dim = if h.is_zero() { 0 } else { nvars - mult };
        SeriesResult {
            numerator,
            h_poly: h,
            krull_dim,
        }
    }

    pub fn deg_h(&self) -> usize {
        self.h_poly.degree()
    }
}

/// Numerator of the Hilbert series of `S/I`, independent of how many extra
/// variables `S` carries.
pub fn numerator(ideal: &MonomialIdeal) -> IntPolynomial {
    numerator_with(ideal, &Deadline::none()).expect("no deadline")
}

pub fn numerator_with(ideal: &MonomialIdeal, deadline: &Deadline) -> Result<IntPolynomial> {
    let mut rec = Recursion {
        memo: HashMap::new(),
        deadline,
        steps: 0,
    };
    rec.run(ideal.generators().to_vec())
}

struct Recursion<'a> {
    memo: HashMap<Vec<Monomial>, IntPolynomial>,
    deadline: &'a Deadline,
    steps: u32,
}

impl Recursion<'_> {
    /// `gens` must be minimal.
    fn run(&mut self, mut gens: Vec<Monomial>) -> Result<IntPolynomial> {
        if gens.is_empty() {
            return Ok(IntPolynomial::one());
        }
        if gens.iter().any(Monomial::is_one) {
            return Ok(IntPolynomial::zero());
        }
        gens.sort();
        if let Some(n) = self.memo.get(&gens) {
            return Ok(n.clone());
        }
        self.steps += 1;
        if self.steps.is_multiple_of(256) {
            self.deadline.check()?;
        }
        let n = self.compute(&gens)?;
        self.memo.insert(gens, n.clone());
        Ok(n)
    }

    fn compute(&mut self, gens: &[Monomial]) -> Result<IntPolynomial> {
        let nvars = gens[0].nvars();
        if pairwise_coprime(gens) {
            return Ok(gens.iter().fold(IntPolynomial::one(), |acc, g| {
                acc * IntPolynomial::one_minus_t_pow(g.degree() as usize)
            }));
        }
        let parts = components(gens, nvars);
        if parts.len() > 1 {
            let mut acc = IntPolynomial::one();
            for part in parts {
                acc = acc * self.run(part)?;
            }
            return Ok(acc);
        }

        let x = pivot(gens, nvars);
        let rest: Vec<Monomial> = gens.iter().filter(|g| g.exponent(x) == 0).cloned().collect();
        let colon = minimalize(gens.iter().map(|g| g.colon_var(x)).collect());
        let with_x = self.run(rest)? * IntPolynomial::one_minus_t_pow(1);
        let quotient = self.run(colon)?.shift(1);
        Ok(with_x + quotient)
    }
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let nvars = gens[0].nvars();
    let mut seen = vec![false; nvars];
    for g in gens {
        for v in g.support() {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    true
}

fn components(gens: &[Monomial], nvars: usize) -> Vec<Vec<Monomial>> {
    let mut ds = DisjointSet::new(nvars);
    for g in gens {
        let mut sup = g.support();
        if let Some(first) = sup.next() {
            for v in sup {
                ds.union(first, v);
            }
        }
    }
    let mut by_root: HashMap<usize, Vec<Monomial>> = HashMap::new();
    for g in gens {
        let root = ds.find(g.support().next().expect("non-constant generator"));
        by_root.entry(root).or_default().push(g.clone());
    }
    let mut parts: Vec<_> = by_root.into_values().collect();
    parts.sort();
    parts
}

/// Most frequent variable, ties going to the larger variable.
fn pivot(gens: &[Monomial], nvars: usize) -> usize {
    let mut freq = vec![0usize; nvars];
    for g in gens {
        for v in g.support() {
            freq[v] += 1;
        }
    }
    (0..nvars).max_by_key(|&v| (freq[v], v)).expect("at least one variable")
}

pub fn h_polynomial(p: &CellCollection) -> SeriesResult {
    h_polynomial_with_order(p, MonomialOrder::Rev, &Deadline::none()).expect("no deadline")
}

pub fn h_polynomial_with_order(p: &CellCollection, order: MonomialOrder, deadline: &Deadline) -> Result<SeriesResult> {
    let ini = initial_ideal_with(p, order, deadline)?;
    let n = numerator_with(&ini, deadline)?;
    Ok(SeriesResult::from_numerator(n, ini.nvars()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRegularity {
    pub value: usize,
    /// Simple collections are Cohen–Macaulay, so `value` is the regularity.
    pub cm_certified: bool,
}

pub fn candidate_regularity(p: &CellCollection) -> CandidateRegularity {
    CandidateRegularity {
        value: h_polynomial(p).deg_h(),
        cm_certified: p.is_simple(),
    }
}

/// Krull dimension against `|V(P)| - |P|`; meaningful for simple collections.
pub fn dimension_check(p: &CellCollection) -> bool {
    h_polynomial(p).krull_dim == p.vertex_count() - p.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::initial_ideal;

    fn coll(c: &[(i32, i32)]) -> CellCollection {
        CellCollection::from_coords(c)
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn numerator_examples() {
        assert_eq!(numerator(&MonomialIdeal::zero(3)), IntPolynomial::one());
        let xy = MonomialIdeal::new(2, vec![Monomial::from_vars(2, &[0, 1])]);
        assert_eq!(numerator(&xy), poly(&[1, 0, -1]));
        let one = MonomialIdeal::new(2, vec![Monomial::one(2)]);
        assert_eq!(numerator(&one), IntPolynomial::zero());
        let cell = initial_ideal(&coll(&[(1, 1)]), MonomialOrder::Rev);
        assert_eq!(numerator(&cell), poly(&[1, 0, -1]));
    }

    #[test]
    fn non_squarefree_numerator() {
        // (x^2, xy) in 2 variables: 1 - 2t^2 + t^3
        let i = MonomialIdeal::new(
            2,
            vec![
                Monomial::from_exponents(vec![2, 0]),
                Monomial::from_exponents(vec![1, 1]),
            ],
        );
        assert_eq!(numerator(&i), poly(&[1, 0, -2, 1]));
    }

    #[test]
    fn h_examples() {
        let s = h_polynomial(&coll(&[(1, 1)]));
        assert_eq!(s.h_poly, poly(&[1, 1]));
        assert_eq!(s.krull_dim, 3);
        let b = h_polynomial(&CellCollection::rectangle(3, 4));
        assert_eq!(b.h_poly, poly(&[1, 12, 18, 4]));
        assert_eq!(b.krull_dim, 8);
        let two = h_polynomial(&coll(&[(1, 1), (3, 1)]));
        assert_eq!(two.h_poly, poly(&[1, 2, 1]));
        assert_eq!(h_polynomial(&CellCollection::empty()).h_poly, IntPolynomial::one());
    }

    #[test]
    fn regularity_and_dimension() {
        assert_eq!(
            candidate_regularity(&coll(&[(1, 1)])),
            CandidateRegularity {
                value: 1,
                cm_certified: true
            }
        );
        assert_eq!(
            candidate_regularity(&CellCollection::rectangle(3, 4)),
            CandidateRegularity {
                value: 3,
                cm_certified: true
            }
        );
        let ring = coll(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3), (3, 3)]);
        let r = candidate_regularity(&ring);
        assert!(!r.cm_certified);
        assert_eq!(r.value, h_polynomial(&ring).deg_h());
        assert!(dimension_check(&coll(&[(1, 1)])));
        assert!(dimension_check(&CellCollection::rectangle(3, 4)));
        assert!(dimension_check(&coll(&[(1, 1), (2, 1), (1, 2)])));
    }

    /// Counts standard monomials of each degree by brute force.
    fn standard_counts(ideal: &MonomialIdeal, max_deg: usize) -> Vec<u64> {
        fn walk(exps: &mut Vec<u16>, var: usize, left: usize, ideal: &MonomialIdeal, out: &mut [u64], deg: usize) {
            if var == exps.len() {
                if !ideal.contains(&Monomial::from_exponents(exps.clone())) {
                    out[deg] += 1;
                }
                return;
            }
            for e in 0..=left {
                exps[var] = e as u16;
                walk(exps, var + 1, left - e, ideal, out, deg + e);
            }
            exps[var] = 0;
        }
        let mut out = vec![0; max_deg + 1];
        walk(&mut vec![0; ideal.nvars()], 0, max_deg, ideal, &mut out, 0);
        out
    }

    fn series_counts(s: &SeriesResult, max_deg: usize) -> Vec<u64> {
        // coefficients of h(t) / (1 - t)^d
        let mut c: Vec<i128> = (0..=max_deg).map(|k| s.h_poly.coeff(k)).collect();
        for _ in 0..s.krull_dim {
            for k in 1..=max_deg {
                c[k] += c[k - 1];
            }
        }
        c.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn series_matches_standard_monomials() {
        for rank in 1..=3 {
            for kind in [crate::enumerate::Kind::Polyomino, crate::enumerate::Kind::Collection] {
                for p in crate::enumerate::enumerate(kind, rank) {
                    let ini = initial_ideal(&p, MonomialOrder::Rev);
                    let s = SeriesResult::from_numerator(numerator(&ini), ini.nvars());
                    assert_eq!(series_counts(&s, 4), standard_counts(&ini, 4), "{p}");
                }
            }
        }
    }
}
