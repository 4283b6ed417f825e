//! The ideal of inner 2-minors of a collection of cells, its Gröbner bases
//! under the two vertex-induced monomial orders, and initial ideals.

mod binomial;
mod buchberger;
mod ideal;
mod monomial;

pub use binomial::Binomial;
pub use buchberger::{buchberger, buchberger_with, is_groebner_basis};
pub(crate) use ideal::minimalize;
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, MonomialOrder};

use crate::deadline::Deadline;
use crate::grid::{CellCollection, Point};
use crate::Result;

/// Polynomial ring with one variable per vertex. Variable `k` is the `k`-th
/// smallest vertex in the lexicographic order on points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRing {
    vars: Vec<Point>,
}

impl VertexRing {
    pub fn new(p: &CellCollection) -> Self {
        VertexRing { vars: p.vertices() }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn points(&self) -> &[Point] {
        &self.vars
    }

    pub fn var(&self, v: &Point) -> Option<usize> {
        self.vars.binary_search(v).ok()
    }

    pub fn point(&self, var: usize) -> Point {
        self.vars[var]
    }

    pub fn monomial(&self, pts: &[Point]) -> Monomial {
        let idx: Vec<usize> = pts
            .iter()
            .map(|p| self.var(p).expect("point is a vertex of the collection"))
            .collect();
        Monomial::from_vars(self.nvars(), &idx)
    }

    /// Human-readable monomial in vertex names, e.g. `x(1,2)*x(2,1)`.
    pub fn describe(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for v in m.support() {
            let e = m.exponent(v);
            let p = self.point(v);
            if e == 1 {
                parts.push(format!("x{p}"));
            } else {
                parts.push(format!("x{p}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn describe_binomial(&self, b: &Binomial) -> String {
        format!("{} - {}", self.describe(&b.lead), self.describe(&b.trail))
    }
}

/// Inner 2-minors `x_a x_b - x_c x_d`, one per inner interval, oriented for
/// `order`, in inner-interval order.
pub fn generators(p: &CellCollection, order: MonomialOrder) -> Vec<Binomial> {
    generators_in(&VertexRing::new(p), p, order)
}

pub fn generators_in(ring: &VertexRing, p: &CellCollection, order: MonomialOrder) -> Vec<Binomial> {
    p.inner_intervals()
        .iter()
        .map(|iv| {
            let diag = ring.monomial(&[iv.a, iv.b]);
            let anti = ring.monomial(&[iv.c(), iv.d()]);
            Binomial::new(diag, anti, order).expect("diagonal and anti-diagonal products differ")
        })
        .collect()
}

/// Whether the inner 2-minors form a reduced Gröbner basis for `<rev`.
pub fn satisfies_sharp(p: &CellCollection) -> bool {
    is_groebner_basis(&generators(p, MonomialOrder::Rev), MonomialOrder::Rev)
}

/// Whether the inner 2-minors form a reduced Gröbner basis for `<lex`.
pub fn satisfies_sharp_prime(p: &CellCollection) -> bool {
    is_groebner_basis(&generators(p, MonomialOrder::Lex), MonomialOrder::Lex)
}

pub fn satisfies(p: &CellCollection, order: MonomialOrder) -> bool {
    match order {
        MonomialOrder::Rev => satisfies_sharp(p),
        MonomialOrder::Lex => satisfies_sharp_prime(p),
    }
}

/// Reduced Gröbner basis of the inner 2-minor ideal.
pub fn groebner_basis(p: &CellCollection, order: MonomialOrder, deadline: &Deadline) -> Result<Vec<Binomial>> {
    let gens = generators(p, order);
    if is_groebner_basis(&gens, order) {
        let mut gens = gens;
        gens.sort_by(|a, b| order.cmp(&b.lead, &a.lead).then_with(|| order.cmp(&b.trail, &a.trail)));
        return Ok(gens);
    }
    buchberger_with(&gens, order, deadline)
}

/// Minimal generators of the initial ideal, read off the reduced basis.
pub fn initial_ideal(p: &CellCollection, order: MonomialOrder) -> MonomialIdeal {
    initial_ideal_with(p, order, &Deadline::none()).expect("no deadline")
}

pub fn initial_ideal_with(p: &CellCollection, order: MonomialOrder, deadline: &Deadline) -> Result<MonomialIdeal> {
    let ring = VertexRing::new(p);
    let basis = groebner_basis(p, order, deadline)?;
    Ok(MonomialIdeal::new(
        ring.nvars(),
        basis.into_iter().map(|b| b.lead).collect(),
    ))
}
