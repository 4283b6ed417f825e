//! Lattice geometry of finite collections of unit cells.

mod codec;
mod occupancy;
mod symmetry;

use std::cmp::Ordering;
#[cfg(test)]
use std::collections::HashSet;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use codec::{format_collection, parse_collection};
pub(crate) use occupancy::Occupancy;
pub use symmetry::Symmetry;

/// Lattice point. The derived order (`i` first, then `j`) is the total order
/// on the polynomial ring variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub i: i32,
    pub j: i32,
}

impl Point {
    pub const fn new(i: i32, j: i32) -> Self {
        Point { i, j }
    }

    /// Componentwise partial order.
    pub fn leq(&self, other: &Point) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    pub fn offset(&self, di: i32, dj: i32) -> Point {
        Point::new(self.i + di, self.j + dj)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Unit cell `[a, a + (1,1)]`, identified by its lower-left corner `a`.
///
/// Cells sort row-major (by `j`, then `i`), which is the order the text codec
/// writes them in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub lower_left: Point,
}

impl Cell {
    pub const fn new(i: i32, j: i32) -> Self {
        Cell {
            lower_left: Point::new(i, j),
        }
    }

    #[inline]
    pub fn i(&self) -> i32 {
        self.lower_left.i
    }

    #[inline]
    pub fn j(&self) -> i32 {
        self.lower_left.j
    }

    pub fn upper_right(&self) -> Point {
        self.lower_left.offset(1, 1)
    }

    pub fn upper_left(&self) -> Point {
        self.lower_left.offset(0, 1)
    }

    pub fn lower_right(&self) -> Point {
        self.lower_left.offset(1, 0)
    }

    /// The four corners `a, b, c, d` (lower-left, upper-right, upper-left,
    /// lower-right).
    pub fn vertices(&self) -> [Point; 4] {
        [
            self.lower_left,
            self.upper_right(),
            self.upper_left(),
            self.lower_right(),
        ]
    }

    pub fn offset(&self, di: i32, dj: i32) -> Cell {
        Cell::new(self.i() + di, self.j() + dj)
    }

    /// Same lattice row or column.
    pub fn is_aligned_with(&self, other: &Cell) -> bool {
        self.i() == other.i() || self.j() == other.j()
    }

    pub fn shares_vertex(&self, other: &Cell) -> bool {
        (self.i() - other.i()).abs() <= 1 && (self.j() - other.j()).abs() <= 1 && self != other
    }

    pub fn shares_edge(&self, other: &Cell) -> bool {
        (self.i() - other.i()).abs() + (self.j() - other.j()).abs() == 1
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.j(), self.i()).cmp(&(other.j(), other.i()))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ur = self.upper_right();
        write!(f, "{{{{{},{}}},{{{},{}}}}}", self.i(), self.j(), ur.i, ur.j)
    }
}

/// Proper interval `[a, b]` with `a < b` strictly in both coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProperInterval {
    pub a: Point,
    pub b: Point,
}

impl ProperInterval {
    pub fn new(a: Point, b: Point) -> Option<Self> {
        (a.i < b.i && a.j < b.j).then_some(ProperInterval { a, b })
    }

    /// Upper-left anti-diagonal corner `(i, l)`.
    pub fn c(&self) -> Point {
        Point::new(self.a.i, self.b.j)
    }

    /// Lower-right anti-diagonal corner `(k, j)`.
    pub fn d(&self) -> Point {
        Point::new(self.b.i, self.a.j)
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.a.leq(p) && p.leq(&self.b)
    }

    /// The cells of the interval as a cell interval.
    pub fn cell_interval(&self) -> CellInterval {
        CellInterval {
            first: Cell { lower_left: self.a },
            last: Cell {
                lower_left: self.b.offset(-1, -1),
            },
        }
    }
}

/// Cell interval (rectangle) `[A, B]` with `lower_left(A) <= lower_left(B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CellInterval {
    pub first: Cell,
    pub last: Cell,
}

impl CellInterval {
    pub fn new(first: Cell, last: Cell) -> Option<Self> {
        first
            .lower_left
            .leq(&last.lower_left)
            .then_some(CellInterval { first, last })
    }

    pub fn width(&self) -> usize {
        (self.last.i() - self.first.i() + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.last.j() - self.first.j() + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.width() * self.height()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.first.lower_left.leq(&c.lower_left) && c.lower_left.leq(&self.last.lower_left)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (self.first.j()..=self.last.j())
            .flat_map(move |j| (self.first.i()..=self.last.i()).map(move |i| Cell::new(i, j)))
    }

    pub fn as_proper_interval(&self) -> ProperInterval {
        ProperInterval {
            a: self.first.lower_left,
            b: self.last.upper_right(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convexity {
    pub row_convex: bool,
    pub column_convex: bool,
    pub convex: bool,
}

/// Class of a convex polyomino by the corner cells of its bounding
/// rectangle. Variants are ordered from strongest to weakest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConvexClass {
    Ferrers,
    Stack,
    Parallelogram,
    DirectedConvex,
    None,
}

impl ConvexClass {
    pub fn is_directed(&self) -> bool {
        *self != ConvexClass::None
    }
}

/// Which corner cells of the minimal bounding rectangle belong to a
/// collection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerCells {
    pub lower_left: bool,
    pub lower_right: bool,
    pub upper_left: bool,
    pub upper_right: bool,
}

/// A finite set of cells, stored sorted and without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CellCollection {
    cells: Vec<Cell>,
}

impl CellCollection {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        cells.dedup();
        CellCollection { cells }
    }

    pub fn from_coords(coords: &[(i32, i32)]) -> Self {
        Self::new(coords.iter().map(|&(i, j)| Cell::new(i, j)))
    }

    pub fn empty() -> Self {
        CellCollection { cells: Vec::new() }
    }

    /// The `width x height` rectangle with lower-left cell `(1,1)`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        Self::new((1..=height as i32).flat_map(|j| (1..=width as i32).map(move |i| Cell::new(i, j))))
    }

    pub fn rank(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.binary_search(c).is_ok()
    }

    pub fn index_of(&self, c: &Cell) -> Option<usize> {
        self.cells.binary_search(c).ok()
    }

    pub fn with(&self, c: Cell) -> Self {
        let mut cells = self.cells.clone();
        if let Err(pos) = cells.binary_search(&c) {
            cells.insert(pos, c);
        }
        CellCollection { cells }
    }

    pub fn without(&self, c: &Cell) -> Self {
        CellCollection {
            cells: self.cells.iter().filter(|x| *x != c).copied().collect(),
        }
    }

    pub fn union(&self, other: &CellCollection) -> Self {
        Self::new(self.cells.iter().chain(other.cells.iter()).copied())
    }

    pub fn filter<F: Fn(&Cell) -> bool>(&self, f: F) -> Self {
        CellCollection {
            cells: self.cells.iter().filter(|c| f(c)).copied().collect(),
        }
    }

    pub fn translate(&self, di: i32, dj: i32) -> Self {
        CellCollection {
            cells: self.cells.iter().map(|c| c.offset(di, dj)).collect(),
        }
    }

    /// V(P): union of the corners of all cells, sorted.
    pub fn vertices(&self) -> Vec<Point> {
        let set: BTreeSet<Point> = self.cells.iter().flat_map(|c| c.vertices()).collect();
        set.into_iter().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    /// Minimal bounding rectangle; `None` for the empty collection.
    pub fn bounding_box(&self) -> Option<CellInterval> {
        let first = self.cells.first()?;
        let (mut i0, mut j0, mut i1, mut j1) = (first.i(), first.j(), first.i(), first.j());
        for c in &self.cells {
            i0 = i0.min(c.i());
            i1 = i1.max(c.i());
            j0 = j0.min(c.j());
            j1 = j1.max(c.j());
        }
        Some(CellInterval {
            first: Cell::new(i0, j0),
            last: Cell::new(i1, j1),
        })
    }

    /// Translate so the bounding box starts at cell `(1,1)`.
    pub fn normalized(&self) -> Self {
        match self.bounding_box() {
            None => Self::empty(),
            Some(bb) => self.translate(1 - bb.first.i(), 1 - bb.first.j()),
        }
    }

    /// Every proper interval all of whose cells lie in the collection,
    /// sorted by `(a, b)`.
    pub fn inner_intervals(&self) -> Vec<ProperInterval> {
        let occ = Occupancy::new(self);
        let mut out = Vec::new();
        for a in &self.cells {
            // grow upward row by row, keeping the widest admissible run
            let mut max_w = i32::MAX;
            let mut h = 0;
            loop {
                let row = a.j() + h;
                let mut w = 0;
                while w < max_w && occ.contains(&Cell::new(a.i() + w, row)) {
                    w += 1;
                }
                if w == 0 {
                    break;
                }
                max_w = w;
                for dw in 0..w {
                    out.push(ProperInterval {
                        a: a.lower_left,
                        b: Point::new(a.i() + dw + 1, row + 1),
                    });
                }
                h += 1;
            }
        }
        out.sort_unstable();
        out
    }

    /// Maximal horizontal cell intervals contained in the collection.
    pub fn rows(&self) -> Vec<CellInterval> {
        runs(
            &self.cells,
            |c| (c.j(), c.i()),
            |run| CellInterval {
                first: run.0,
                last: run.1,
            },
        )
    }

    /// Maximal vertical cell intervals contained in the collection.
    pub fn columns(&self) -> Vec<CellInterval> {
        let mut by_col = self.cells.clone();
        by_col.sort_unstable_by_key(|c| (c.i(), c.j()));
        runs(
            &by_col,
            |c| (c.i(), c.j()),
            |run| CellInterval {
                first: run.0,
                last: run.1,
            },
        )
    }

    pub fn convexity(&self) -> Convexity {
        let single_run = |ivs: Vec<CellInterval>, key: fn(&CellInterval) -> i32| {
            let mut keys: Vec<i32> = ivs.iter().map(key).collect();
            let n = keys.len();
            keys.dedup();
            keys.len() == n
        };
        let row_convex = single_run(self.rows(), |r| r.first.j());
        let column_convex = single_run(self.columns(), |c| c.first.i());
        Convexity {
            row_convex,
            column_convex,
            convex: row_convex && column_convex,
        }
    }

    pub fn is_convex(&self) -> bool {
        self.convexity().convex
    }

    /// Components under edge adjacency (the maximal sub-polyominoes).
    pub fn connected_components(&self) -> Vec<CellCollection> {
        self.components_by(Cell::shares_edge)
    }

    /// Components under vertex adjacency.
    pub fn weak_components(&self) -> Vec<CellCollection> {
        self.components_by(Cell::shares_vertex)
    }

    pub fn is_polyomino(&self) -> bool {
        !self.is_empty() && self.connected_components().len() == 1
    }

    pub fn is_weakly_connected(&self) -> bool {
        !self.is_empty() && self.weak_components().len() == 1
    }

    fn components_by(&self, adjacent: fn(&Cell, &Cell) -> bool) -> Vec<CellCollection> {
        let n = self.cells.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut comp = Vec::new();
            while let Some(x) = queue.pop_front() {
                comp.push(self.cells[x]);
                for (y, s) in seen.iter_mut().enumerate() {
                    if !*s && adjacent(&self.cells[x], &self.cells[y]) {
                        *s = true;
                        queue.push_back(y);
                    }
                }
            }
            out.push(CellCollection::new(comp));
        }
        out
    }

    /// No holes: every cell outside the collection reaches the outside of
    /// the bounding box through edge-adjacent cells outside the collection.
    pub fn is_simple(&self) -> bool {
        let Some(bb) = self.bounding_box() else {
            return true;
        };
        let (i0, j0) = (bb.first.i() - 1, bb.first.j() - 1);
        let w = bb.width() + 2;
        let h = bb.height() + 2;
        let mut blocked = vec![false; w * h];
        for c in &self.cells {
            blocked[(c.j() - j0) as usize * w + (c.i() - i0) as usize] = true;
        }
        let free = blocked.iter().filter(|b| !**b).count();
        let mut seen = vec![false; w * h];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 0;
        while let Some(x) = stack.pop() {
            reached += 1;
            let (xi, xj) = (x % w, x / w);
            let mut push = |y: usize| {
                if !blocked[y] && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            };
            if xi > 0 {
                push(x - 1);
            }
            if xi + 1 < w {
                push(x + 1);
            }
            if xj > 0 {
                push(x - w);
            }
            if xj + 1 < h {
                push(x + w);
            }
        }
        reached == free
    }

    /// No 2x2 block of cells.
    pub fn is_thin(&self) -> bool {
        !self
            .cells
            .iter()
            .any(|c| self.contains(&c.offset(1, 0)) && self.contains(&c.offset(0, 1)) && self.contains(&c.offset(1, 1)))
    }

    pub fn corner_cells(&self) -> Option<CornerCells> {
        let bb = self.bounding_box()?;
        let (f, l) = (bb.first, bb.last);
        Some(CornerCells {
            lower_left: self.contains(&f),
            lower_right: self.contains(&Cell::new(l.i(), f.j())),
            upper_left: self.contains(&Cell::new(f.i(), l.j())),
            upper_right: self.contains(&l),
        })
    }

    /// Strongest class of a convex polyomino.
    pub fn classify_convex(&self) -> Result<ConvexClass> {
        if self.is_empty() {
            return Err(Error::Empty);
        }
        if !self.is_convex() {
            return Err(Error::NotConvex);
        }
        if !self.is_polyomino() {
            return Err(Error::NotConnected);
        }
        let cc = self.corner_cells().expect("nonempty");
        let n = [cc.lower_left, cc.lower_right, cc.upper_left, cc.upper_right]
            .iter()
            .filter(|b| **b)
            .count();
        Ok(match n {
            3 | 4 => ConvexClass::Ferrers,
            2 if (cc.lower_left && cc.upper_right) || (cc.lower_right && cc.upper_left) => ConvexClass::Parallelogram,
            2 => ConvexClass::Stack,
            1 => ConvexClass::DirectedConvex,
            _ => ConvexClass::None,
        })
    }

    /// Image under a plane symmetry, translated to start at `(1,1)`.
    pub fn transform(&self, s: Symmetry) -> Self {
        Self::new(self.cells.iter().map(|c| s.apply(c))).normalized()
    }

    /// Mirror image across a vertical axis.
    pub fn reflect(&self) -> Self {
        self.transform(Symmetry::MirrorI)
    }

    /// Representative of the symmetry orbit: among the 8 normalized dihedral
    /// images, the one with the lexicographically least sorted cell list.
    pub fn canonical(&self) -> Self {
        Symmetry::ALL
            .iter()
            .map(|&s| self.transform(s))
            .min()
            .unwrap_or_default()
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_collection(text)
    }

    pub fn format(&self) -> String {
        format_collection(self)
    }

    #[cfg(test)]
    pub(crate) fn cell_set(&self) -> HashSet<Cell> {
        self.cells.iter().copied().collect()
    }
}

impl fmt::Display for CellCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_collection(self))
    }
}

impl std::str::FromStr for CellCollection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_collection(s)
    }
}

impl FromIterator<Cell> for CellCollection {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Self::new(iter)
    }
}

fn runs<K, F>(sorted: &[Cell], key: fn(&Cell) -> (i32, i32), mut make: F) -> Vec<K>
where
    F: FnMut((Cell, Cell)) -> K,
{
    let mut out = Vec::new();
    let mut iter = sorted.iter();
    let Some(&first) = iter.next() else {
        return out;
    };
    let (mut start, mut prev) = (first, first);
    for &c in iter {
        let (kp, kc) = (key(&prev), key(&c));
        if kp.0 == kc.0 && kp.1 + 1 == kc.1 {
            prev = c;
        } else {
            out.push(make((start, prev)));
            start = c;
            prev = c;
        }
    }
    out.push(make((start, prev)));
    out
}
