//! Rook placements on collections of cells and the Hilbert series of their
//! inner 2-minor ideals.
//!
//! The crate is organised bottom-up:
//!
//! * [`grid`] holds the lattice geometry (cells, intervals, rows, columns,
//!   connectivity, symmetry and the brace text codec),
//! * [`enumerate`] generates polyominoes and weakly connected collections up
//!   to symmetry,
//! * [`rook`] and [`switch`] compute rook polynomials and switching rook
//!   polynomials,
//! * [`algebra`] builds the inner 2-minor ideal and runs a binomial
//!   Buchberger engine under the two monomial orders,
//! * [`hilbert`] turns initial ideals into h-polynomials,
//! * [`convex`] is the dissection recursion for convex collections,
//! * [`verify`] is the exhaustive comparison harness.

pub mod algebra;
pub mod convex;
pub mod deadline;
pub mod enumerate;
pub mod error;
pub mod grid;
pub mod hilbert;
pub mod poly;
pub mod rook;
pub mod switch;
pub mod unionfind;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{Cell, CellCollection, Point};
pub use poly::IntPolynomial;
