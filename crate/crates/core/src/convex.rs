//! Dissection of convex collections at the top-left corner and the
//! recursion `h(P) = h(P') + t h(P'')`.
//!
//! Columns are lattice `i` values and rows are lattice `j` values; the
//! recursion works on the actual coordinates, no renormalisation needed.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::satisfies_sharp;
use crate::grid::{Cell, CellCollection, Occupancy, Point, Symmetry};
use crate::hilbert::h_polynomial;
use crate::poly::IntPolynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopLeftData {
    /// Top-left cell `X`.
    pub x_cell: Cell,
    /// Upper-left corner of `X`.
    pub v: Point,
    /// Union of the inner intervals containing `v`.
    pub p_v: CellCollection,
    /// Maximal horizontal edge interval through `v`.
    pub h_interval: Vec<Point>,
    /// Maximal vertical edge interval through `v`, along the left side of `P_v`.
    pub v_interval: Vec<Point>,
    pub y_cell: Cell,
    pub z_cell: Cell,
    /// Bottom row of `P_v`.
    pub j: i32,
    /// Column of `X`.
    pub k: i32,
    /// Right column of `P_v`.
    pub p: i32,
    /// Top row.
    pub n: i32,
}

pub fn top_left_data(p: &CellCollection) -> Result<TopLeftData> {
    let n = p.cells().iter().map(Cell::j).max().ok_or(Error::Empty)?;
    let k = p
        .cells()
        .iter()
        .filter(|c| c.j() == n)
        .map(Cell::i)
        .min()
        .expect("top row is nonempty");
    let x_cell = Cell::new(k, n);
    let mut right = k;
    while p.contains(&Cell::new(right + 1, n)) {
        right += 1;
    }
    let mut j = n;
    while p.contains(&Cell::new(k, j - 1)) {
        j -= 1;
    }

    let occ = Occupancy::new(p);
    let p_v = p.filter(|c| {
        c.i() >= k && c.i() <= right && c.j() >= j && occ.contains_rect(&Cell::new(k, c.j()), &Cell::new(c.i(), n))
    });
    let v = x_cell.upper_left();
    let h_interval = (k..=right + 1).map(|i| Point::new(i, n + 1)).collect();
    let v_interval = (j..=n + 1).map(|y| Point::new(k, y)).collect();
    let data = TopLeftData {
        x_cell,
        v,
        p_v,
        h_interval,
        v_interval,
        y_cell: Cell::new(k, j),
        z_cell: Cell::new(right, n),
        j,
        k,
        p: right,
        n,
    };
    let ferrers = data.p_v.contains(&data.y_cell)
        && data.p_v.contains(&data.z_cell)
        && data.p_v.bounding_box().map(|b| (b.first, b.last)) == Some((data.y_cell, data.z_cell));
    if !ferrers {
        return Err(Error::Invariant(format!("P_v of {p} is not spanned by Y, X, Z")));
    }
    Ok(data)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dissection {
    pub top: TopLeftData,
    /// `L`: cells left of column `k`.
    pub left: CellCollection,
    /// `R`: cells right of `P_v` in rows `j..n`.
    pub right: CellCollection,
    /// `D`: cells below `P_v` in columns `k+1..=p`.
    pub below: CellCollection,
    /// `E`: cells right of and below `P_v`.
    pub below_right: CellCollection,
    pub pi_d: Vec<Point>,
    pub gamma_r: Vec<Point>,
    /// Number of free variables of `in(I_P) : x_v` besides those of `P''`.
    pub d: usize,
    pub p_prime: CellCollection,
    pub p_double_prime: CellCollection,
}

impl Dissection {
    /// Either `E = D = ∅`, or `E ≠ ∅` and exactly one of `R`, `D` is nonempty.
    pub fn is_admissible(&self) -> bool {
        admissible(&self.right, &self.below, &self.below_right)
    }
}

fn admissible(r: &CellCollection, d: &CellCollection, e: &CellCollection) -> bool {
    if e.is_empty() {
        d.is_empty()
    } else {
        r.is_empty() != d.is_empty()
    }
}

struct Parts {
    left: CellCollection,
    right: CellCollection,
    below: CellCollection,
    below_right: CellCollection,
}

fn split(p: &CellCollection, t: &TopLeftData) -> Result<Parts> {
    let parts = Parts {
        left: p.filter(|c| c.i() < t.k),
        right: p.filter(|c| c.i() > t.p && c.j() >= t.j && c.j() < t.n),
        below: p.filter(|c| c.i() > t.k && c.i() <= t.p && c.j() < t.j),
        below_right: p.filter(|c| c.i() > t.p && c.j() < t.j),
    };
    let total = t.p_v.rank() + parts.left.rank() + parts.right.rank() + parts.below.rank() + parts.below_right.rank();
    if total != p.rank() {
        return Err(Error::NotConvex);
    }
    Ok(parts)
}

pub fn dissect(p: &CellCollection) -> Result<Dissection> {
    let top = top_left_data(p)?;
    let Parts {
        left,
        right,
        below,
        below_right,
    } = split(p, &top)?;
    if !admissible(&right, &below, &below_right) {
        return Err(Error::InvalidArgument(format!("{p} is not in dissection position")));
    }

    let pv_vertices: BTreeSet<Point> = top.p_v.vertices().into_iter().collect();
    let on_pv = |pts: Vec<Point>| -> Vec<Point> { pts.into_iter().filter(|q| pv_vertices.contains(q)).collect() };
    let pi_d: BTreeSet<Point> = on_pv(below.vertices())
        .into_iter()
        .map(|q| Point::new(q.i, top.n + 1))
        .collect();
    let mut gamma_r: BTreeSet<Point> = on_pv(right.vertices())
        .into_iter()
        .filter(|q| q.i == top.p + 1)
        .map(|q| Point::new(top.k, q.j))
        .collect();
    gamma_r.extend(on_pv(left.vertices()));
    if pi_d.iter().any(|q| gamma_r.contains(q)) {
        return Err(Error::Invariant(format!("pi(D) meets Gamma(R) for {p}")));
    }
    let hv: BTreeSet<Point> = top.h_interval.iter().chain(&top.v_interval).copied().collect();
    let d = hv
        .len()
        .checked_sub(pi_d.len() + gamma_r.len())
        .ok_or_else(|| Error::Invariant(format!("negative d for {p}")))?;

    let p_prime = p.without(&top.x_cell);
    let p_double_prime = if !below.is_empty() {
        left.union(&below).union(&below_right)
    } else {
        let shift = top.p + 1 - top.k;
        left.union(&right.union(&below_right).translate(-shift, 0))
    };

    let expected = p.vertex_count() - p.rank();
    if p_double_prime.vertex_count() - p_double_prime.rank() + d != expected {
        return Err(Error::Invariant(format!(
            "dimension bookkeeping fails for {p}: P'' = {p_double_prime}, d = {d}"
        )));
    }

    Ok(Dissection {
        top,
        left,
        right,
        below,
        below_right,
        pi_d: pi_d.into_iter().collect(),
        gamma_r: gamma_r.into_iter().collect(),
        d,
        p_prime,
        p_double_prime,
    })
}

const NORMALIZE_ORDER: [Symmetry; 8] = [
    Symmetry::Identity,
    Symmetry::Rot180,
    Symmetry::Rot90,
    Symmetry::Rot270,
    Symmetry::MirrorI,
    Symmetry::MirrorJ,
    Symmetry::Transpose,
    Symmetry::AntiTranspose,
];

/// A symmetric image satisfying (#) whose dissection is admissible.
pub fn normalize(p: &CellCollection) -> Result<CellCollection> {
    if p.is_empty() {
        return Err(Error::Empty);
    }
    if !p.is_weakly_connected() {
        return Err(Error::NotConnected);
    }
    if !p.is_convex() {
        return Err(Error::NotConvex);
    }
    for s in NORMALIZE_ORDER {
        let q = if s == Symmetry::Identity {
            p.clone()
        } else {
            p.transform(s)
        };
        if !satisfies_sharp(&q) {
            continue;
        }
        let top = top_left_data(&q)?;
        let parts = split(&q, &top)?;
        if admissible(&parts.right, &parts.below, &parts.below_right) {
            return Ok(q);
        }
    }
    Err(Error::ConditionFails)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexH {
    pub h: IntPolynomial,
    /// Whether the recursion ran; otherwise `h` comes from the Gröbner pipeline.
    pub certified: bool,
}

/// Recursive h-polynomial of a collection whose weak components are convex.
pub fn recursive_h(p: &CellCollection) -> Result<IntPolynomial> {
    Recursion::default().h(p)
}

/// Like [`recursive_h`], visiting every dissection performed.
pub fn recursive_h_visit<F: FnMut(&CellCollection, &Dissection)>(
    p: &CellCollection,
    visit: F,
) -> Result<IntPolynomial> {
    let mut rec = Recursion {
        memo: HashMap::new(),
        visit: Some(Box::new(visit)),
    };
    rec.h(p)
}

/// Falls back to the Gröbner pipeline when a weak component is not convex or
/// no symmetric image satisfies (#).
pub fn convex_h(p: &CellCollection) -> Result<ConvexH> {
    match recursive_h(p) {
        Ok(h) => Ok(ConvexH { h, certified: true }),
        Err(Error::ConditionFails | Error::NotConvex) => Ok(ConvexH {
            h: h_polynomial(p).h_poly,
            certified: false,
        }),
        Err(e) => Err(e),
    }
}

type Visitor<'a> = Box<dyn FnMut(&CellCollection, &Dissection) + 'a>;

#[derive(Default)]
struct Recursion<'a> {
    memo: HashMap<CellCollection, IntPolynomial>,
    visit: Option<Visitor<'a>>,
}

impl Recursion<'_> {
    fn h(&mut self, p: &CellCollection) -> Result<IntPolynomial> {
        if p.is_empty() {
            return Ok(IntPolynomial::one());
        }
        let key = p.canonical();
        if let Some(h) = self.memo.get(&key) {
            return Ok(h.clone());
        }
        let comps = p.weak_components();
        let h = if comps.len() > 1 {
            let mut acc = IntPolynomial::one();
            for c in &comps {
                acc = acc * self.h(c)?;
            }
            acc
        } else {
            let q = normalize(p)?;
            let dis = dissect(&q)?;
            if let Some(visit) = self.visit.as_mut() {
                visit(&q, &dis);
            }
            self.h(&dis.p_prime)? + self.h(&dis.p_double_prime)?.shift(1)
        };
        self.memo.insert(key, h.clone());
        Ok(h)
    }
}
