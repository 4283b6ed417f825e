//! Switch equivalence of rook configurations and the switching rook
//! polynomial.
//!
//! Two rooks sitting on the diagonal (or anti-diagonal) corner cells of an
//! inner interval may be moved to the opposite pair of corner cells. The
//! `k`-th coefficient of the switching rook polynomial counts the classes of
//! `k`-configurations under repeated switches.

use crate::deadline::Deadline;
use crate::grid::{Cell, CellCollection, Occupancy};
use crate::poly::IntPolynomial;
use crate::rook::{iter_bits, Board, RookConfig};
use crate::unionfind::DisjointSet;
use crate::{Error, Result};

/// Number of switch classes per level, `k = 0..=rook_number`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchClassCount {
    pub per_level: Vec<usize>,
}

impl SwitchClassCount {
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.per_level.iter().map(|&c| c as i128).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchReport {
    pub switching: IntPolynomial,
    pub rook_number: usize,
}

struct Switcher {
    board: Board,
    occ: Occupancy,
}

impl Switcher {
    fn new(p: &CellCollection) -> Result<Self> {
        Ok(Switcher {
            board: Board::new(p)?,
            occ: Occupancy::new(p),
        })
    }

    /// The two cells replacing rooks on `a` and `b` if they are in switching
    /// position.
    fn partner_cells(&self, a: Cell, b: Cell) -> Option<(Cell, Cell)> {
        if a.i() == b.i() || a.j() == b.j() {
            return None;
        }
        let first = Cell::new(a.i().min(b.i()), a.j().min(b.j()));
        let last = Cell::new(a.i().max(b.i()), a.j().max(b.j()));
        if !self.occ.contains_rect(&first, &last) {
            return None;
        }
        Some((Cell::new(a.i(), b.j()), Cell::new(b.i(), a.j())))
    }

    fn neighbours(&self, mask: u64, mut f: impl FnMut(u64)) {
        let idx: Vec<usize> = iter_bits(mask).collect();
        let p = self.board.collection();
        for (x, &ia) in idx.iter().enumerate() {
            for &ib in &idx[x + 1..] {
                let Some((c1, c2)) = self.partner_cells(self.board.cell(ia), self.board.cell(ib)) else {
                    continue;
                };
                let j1 = p.index_of(&c1).expect("switch target inside the interval");
                let j2 = p.index_of(&c2).expect("switch target inside the interval");
                let out = (mask & !(1 << ia) & !(1 << ib)) | (1 << j1) | (1 << j2);
                debug_assert!(self.board.is_non_attacking(out));
                f(out);
            }
        }
    }

    fn count_classes(&self, level: &[u64], deadline: &Deadline) -> Result<usize> {
        let mut ds = DisjointSet::new(level.len());
        for (x, &m) in level.iter().enumerate() {
            if x % 1024 == 0 {
                deadline.check()?;
            }
            self.neighbours(m, |n| {
                let y = level.binary_search(&n).expect("a switch preserves the level");
                ds.union(x, y);
            });
        }
        Ok(ds.components())
    }
}

/// All configurations reachable from `f` by exactly one switch.
pub fn single_switches(f: &RookConfig, p: &CellCollection) -> Result<Vec<RookConfig>> {
    let sw = Switcher::new(p)?;
    let mask = sw.board.mask_of(f)?;
    if !sw.board.is_non_attacking(mask) {
        return Err(Error::InvalidArgument(
            "rook configuration contains attacking rooks".into(),
        ));
    }
    let mut out = Vec::new();
    sw.neighbours(mask, |n| out.push(sw.board.config(n)));
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn switch_class_counts(p: &CellCollection, deadline: &Deadline) -> Result<SwitchClassCount> {
    let sw = Switcher::new(p)?;
    let mut per_level = vec![1];
    sw.board.for_each_level(deadline, |_, level| {
        per_level.push(sw.count_classes(level, deadline)?);
        Ok(())
    })?;
    Ok(SwitchClassCount { per_level })
}

pub fn switching_rook_polynomial(p: &CellCollection) -> Result<IntPolynomial> {
    switching_rook_polynomial_with(p, &Deadline::none())
}

pub fn switching_rook_polynomial_with(p: &CellCollection, deadline: &Deadline) -> Result<IntPolynomial> {
    Ok(switch_class_counts(p, deadline)?.polynomial())
}

/// The switching rook polynomial together with the rook number.
pub fn switching_rook_number_report(p: &CellCollection) -> Result<SwitchReport> {
    let counts = switch_class_counts(p, &Deadline::none())?;
    Ok(SwitchReport {
        rook_number: counts.per_level.len() - 1,
        switching: counts.polynomial(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rook::{all_configurations, rook_polynomial};
    use std::collections::BTreeSet;

    fn coll(c: &[(i32, i32)]) -> CellCollection {
        CellCollection::from_coords(c)
    }

    fn cfg(c: &[(i32, i32)]) -> RookConfig {
        RookConfig::new(c.iter().map(|&(i, j)| Cell::new(i, j)).collect())
    }

    /// Components of the graph whose edges join configurations differing by
    /// exchanging the two diagonal pairs of corner cells of an inner
    /// interval, found by comparing every pair of configurations.
    fn brute_force(p: &CellCollection) -> IntPolynomial {
        let levels = all_configurations(p).unwrap();
        let corners: Vec<(BTreeSet<Cell>, BTreeSet<Cell>)> = p
            .inner_intervals()
            .iter()
            .map(|iv| {
                let ci = iv.cell_interval();
                let (f, l) = (ci.first, ci.last);
                (
                    BTreeSet::from([f, l]),
                    BTreeSet::from([Cell::new(f.i(), l.j()), Cell::new(l.i(), f.j())]),
                )
            })
            .filter(|(d, a)| d.len() == 2 && a.len() == 2 && d != a)
            .collect();
        let mut coeffs = vec![1i128];
        for k in 1..=levels.rook_number() {
            let confs: Vec<BTreeSet<Cell>> = levels
                .level(k)
                .into_iter()
                .map(|c| c.rooks.into_iter().collect())
                .collect();
            let mut ds = DisjointSet::new(confs.len());
            for x in 0..confs.len() {
                for y in x + 1..confs.len() {
                    let gone: BTreeSet<Cell> = confs[x].difference(&confs[y]).copied().collect();
                    let new: BTreeSet<Cell> = confs[y].difference(&confs[x]).copied().collect();
                    if corners
                        .iter()
                        .any(|(d, a)| (gone == *d && new == *a) || (gone == *a && new == *d))
                    {
                        ds.union(x, y);
                    }
                }
            }
            coeffs.push(ds.components() as i128);
        }
        IntPolynomial::new(coeffs)
    }

    #[test]
    fn single_switch_examples() {
        let sq = CellCollection::rectangle(2, 2);
        assert_eq!(
            single_switches(&cfg(&[(1, 1), (2, 2)]), &sq).unwrap(),
            vec![cfg(&[(2, 1), (1, 2)])]
        );
        assert!(single_switches(&cfg(&[(1, 1)]), &sq).unwrap().is_empty());
        let l = coll(&[(1, 1), (2, 1), (1, 2)]);
        assert!(single_switches(&cfg(&[(2, 1), (1, 2)]), &l).unwrap().is_empty());
    }

    #[test]
    fn single_switch_rejects_invalid_configurations() {
        let sq = CellCollection::rectangle(2, 2);
        assert!(single_switches(&cfg(&[(1, 1), (2, 1)]), &sq).is_err());
        assert!(single_switches(&cfg(&[(1, 1), (7, 7)]), &sq).is_err());
    }

    #[test]
    fn switch_relation_is_symmetric() {
        let p = coll(&[(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (3, 2), (2, 3), (3, 3)]);
        let levels = all_configurations(&p).unwrap();
        for k in 2..=levels.rook_number() {
            for f in levels.level(k) {
                for g in single_switches(&f, &p).unwrap() {
                    assert!(single_switches(&g, &p).unwrap().contains(&f));
                }
            }
        }
    }

    #[test]
    fn switching_polynomial_examples() {
        assert_eq!(
            switching_rook_polynomial(&CellCollection::rectangle(3, 4)).unwrap(),
            IntPolynomial::from_i64s(&[1, 12, 18, 4])
        );
        assert_eq!(
            switching_rook_polynomial(&CellCollection::rectangle(2, 2)).unwrap(),
            IntPolynomial::from_i64s(&[1, 4, 1])
        );
        let thin = coll(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3), (3, 3)]);
        assert_eq!(
            switching_rook_polynomial(&thin).unwrap(),
            rook_polynomial(&thin).unwrap()
        );
    }

    #[test]
    fn report_examples() {
        let single = switching_rook_number_report(&coll(&[(1, 1)])).unwrap();
        assert_eq!(single.switching, IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(single.rook_number, 1);
        let b = switching_rook_number_report(&CellCollection::rectangle(3, 4)).unwrap();
        assert_eq!(b.switching, IntPolynomial::from_i64s(&[1, 12, 18, 4]));
        assert_eq!(b.rook_number, 3);
        let domino = switching_rook_number_report(&coll(&[(1, 1), (2, 1)])).unwrap();
        assert_eq!(domino.switching, IntPolynomial::from_i64s(&[1, 2]));
        assert_eq!(domino.rook_number, 1);
        let empty = switching_rook_number_report(&CellCollection::empty()).unwrap();
        assert_eq!(empty.switching, IntPolynomial::one());
        assert_eq!(empty.rook_number, 0);
    }

    #[test]
    fn union_find_matches_pairwise_scan() {
        let shapes = [
            CellCollection::rectangle(2, 3),
            CellCollection::rectangle(3, 3),
            coll(&[(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (3, 3), (2, 3)]),
            coll(&[(1, 1), (2, 1), (1, 2), (2, 2), (3, 3), (4, 3), (3, 4), (4, 4)]),
            coll(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3), (3, 3)]),
        ];
        for p in shapes {
            assert_eq!(switching_rook_polynomial(&p).unwrap(), brute_force(&p), "{p}");
        }
    }
}
