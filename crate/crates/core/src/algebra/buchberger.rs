//! Buchberger's algorithm specialised to pure difference binomials.
//!
//! S-polynomials and reductions of `m1 - m2` binomials are again of that
//! form, so a basis element is just an oriented pair of monomials and a
//! reduction step replaces one term by a smaller one.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{Binomial, Monomial, MonomialOrder};
use crate::deadline::Deadline;
use crate::Result;

struct Pair {
    degree: u32,
    lcm: Monomial,
    order: MonomialOrder,
    seq: usize,
    i: usize,
    j: usize,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pair {}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pair {
    // reversed: BinaryHeap pops the smallest lcm degree, then smallest lcm
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree
            .cmp(&self.degree)
            .then_with(|| self.order.cmp(&other.lcm, &self.lcm))
            .then_with(|| other.seq.cmp(&self.seq))
    }
}

/// Fully reduces `f` modulo `basis`, skipping index `skip`. `None` means `f`
/// reduces to zero.
pub(crate) fn reduce(
    mut f: Binomial,
    basis: &[Binomial],
    skip: Option<usize>,
    order: MonomialOrder,
) -> Option<Binomial> {
    'outer: loop {
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            if g.lead.divides(&f.lead) {
                let lead = f.lead.replace(&g.lead, &g.trail);
                f = Binomial::new(lead, f.trail, order)?;
                continue 'outer;
            }
        }
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            if g.lead.divides(&f.trail) {
                let trail = f.trail.replace(&g.lead, &g.trail);
                f = Binomial::new(f.lead, trail, order)?;
                continue 'outer;
            }
        }
        return Some(f);
    }
}

/// Whether `gens` is already a Gröbner basis: every S-pair with non-coprime
/// leading terms reduces to zero modulo `gens`.
pub fn is_groebner_basis(gens: &[Binomial], order: MonomialOrder) -> bool {
    for (i, f) in gens.iter().enumerate() {
        for g in &gens[i + 1..] {
            if f.lead.is_coprime(&g.lead) {
                continue;
            }
            if let Some(s) = f.s_poly(g, order) {
                if reduce(s, gens, None, order).is_some() {
                    return false;
                }
            }
        }
    }
    true
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted by leading
/// term (descending in `order`).
pub fn buchberger(gens: &[Binomial], order: MonomialOrder) -> Vec<Binomial> {
    buchberger_with(gens, order, &Deadline::none()).expect("no deadline")
}

pub fn buchberger_with(gens: &[Binomial], order: MonomialOrder, deadline: &Deadline) -> Result<Vec<Binomial>> {
    let mut basis: Vec<Binomial> = Vec::with_capacity(gens.len());
    for g in gens {
        debug_assert_eq!(order.cmp(&g.lead, &g.trail), Ordering::Greater);
        if !basis.contains(g) {
            basis.push(g.clone());
        }
    }
    let mut heap = BinaryHeap::new();
    let mut seq = 0;
    let mut push_pair = |heap: &mut BinaryHeap<Pair>, basis: &[Binomial], i: usize, j: usize| {
        let (a, b) = (&basis[i].lead, &basis[j].lead);
        if a.is_coprime(b) {
            return;
        }
        let lcm = a.lcm(b);
        heap.push(Pair {
            degree: lcm.degree(),
            lcm,
            order,
            seq,
            i,
            j,
        });
        seq += 1;
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut heap, &basis, i, j);
        }
    }
    let mut steps = 0usize;
    while let Some(pair) = heap.pop() {
        steps += 1;
        if steps.is_multiple_of(256) {
            deadline.check()?;
        }
        let Some(s) = basis[pair.i].s_poly(&basis[pair.j], order) else {
            continue;
        };
        if let Some(r) = reduce(s, &basis, None, order) {
            basis.push(r);
            let n = basis.len() - 1;
            for i in 0..n {
                push_pair(&mut heap, &basis, i, n);
            }
        }
    }
    Ok(interreduce(basis, order))
}

fn interreduce(basis: Vec<Binomial>, order: MonomialOrder) -> Vec<Binomial> {
    // minimal: drop elements whose lead is divisible by another lead
    let mut keep: Vec<Binomial> = Vec::new();
    for (i, f) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(k, g)| k != i && g.lead.divides(&f.lead) && (g.lead != f.lead || k < i));
        if !redundant {
            keep.push(f.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        if let Some(r) = reduce(keep[i].clone(), &keep, Some(i), order) {
            reduced.push(r);
        }
    }
    reduced.sort_by(|a, b| order.cmp(&b.lead, &a.lead).then_with(|| order.cmp(&b.trail, &a.trail)));
    reduced
}
