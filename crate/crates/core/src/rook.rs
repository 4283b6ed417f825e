//! Non-attacking rook configurations and the rook polynomial.
//!
//! Two rooks attack each other when their cells lie in the same row or the
//! same column of the collection, i.e. when the cell interval between them is
//! entirely contained in the collection. A gap in a lattice row therefore
//! shields rooks from each other.

use crate::deadline::Deadline;
use crate::grid::{Cell, CellCollection, CellInterval};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// Precomputed attack structure of a collection. Cells are indexed in the
/// collection's sorted order and configurations are bitmasks over those
/// indices.
#[derive(Debug, Clone)]
pub struct Board {
    collection: CellCollection,
    row_of: Vec<usize>,
    col_of: Vec<usize>,
    attacks: Vec<u64>,
}

impl Board {
    pub fn new(p: &CellCollection) -> Result<Self> {
        let n = p.rank();
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        let mut row_of = vec![0; n];
        let mut col_of = vec![0; n];
        for (r, iv) in p.rows().iter().enumerate() {
            for c in iv.cells() {
                row_of[p.index_of(&c).expect("row cell in P")] = r;
            }
        }
        for (r, iv) in p.columns().iter().enumerate() {
            for c in iv.cells() {
                col_of[p.index_of(&c).expect("column cell in P")] = r;
            }
        }
        let attacks = (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| b != a && (row_of[a] == row_of[b] || col_of[a] == col_of[b]))
                    .fold(0u64, |m, b| m | (1 << b))
            })
            .collect();
        Ok(Board {
            collection: p.clone(),
            row_of,
            col_of,
            attacks,
        })
    }

    pub fn collection(&self) -> &CellCollection {
        &self.collection
    }

    pub fn len(&self) -> usize {
        self.collection.rank()
    }

    pub fn is_empty(&self) -> bool {
        self.collection.is_empty()
    }

    pub fn cell(&self, idx: usize) -> Cell {
        self.collection.cells()[idx]
    }

    pub fn row_of(&self, idx: usize) -> usize {
        self.row_of[idx]
    }

    pub fn col_of(&self, idx: usize) -> usize {
        self.col_of[idx]
    }

    /// Bitmask of the cells attacked from `idx`.
    pub fn attack_mask(&self, idx: usize) -> u64 {
        self.attacks[idx]
    }

    pub fn is_non_attacking(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let a = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.attacks[a] & mask != 0 {
                return false;
            }
        }
        true
    }

    pub fn config(&self, mask: u64) -> RookConfig {
        RookConfig {
            rooks: iter_bits(mask).map(|i| self.cell(i)).collect(),
        }
    }

    pub fn mask_of(&self, cfg: &RookConfig) -> Result<u64> {
        cfg.rooks.iter().try_fold(0u64, |m, c| {
            let i = self.collection.index_of(c).ok_or(Error::CellOutsideCollection(*c))?;
            Ok(m | (1 << i))
        })
    }

    /// Algorithm-1 extension step: every non-attacking one-cell extension of
    /// every configuration, sorted and deduplicated.
    pub fn extend(&self, level: &[u64], deadline: &Deadline) -> Result<Vec<u64>> {
        let n = self.len();
        let mut out = Vec::new();
        for (step, &conf) in level.iter().enumerate() {
            if step % 4096 == 0 {
                deadline.check()?;
            }
            for c in 0..n {
                if conf & (1 << c) == 0 && self.attacks[c] & conf == 0 {
                    out.push(conf | (1 << c));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Runs the level-by-level extension, handing each nonempty level
    /// `k >= 1` to `visit` and keeping only the current level alive.
    pub fn for_each_level<F>(&self, deadline: &Deadline, mut visit: F) -> Result<()>
    where
        F: FnMut(usize, &[u64]) -> Result<()>,
    {
        let mut conf: Vec<u64> = (0..self.len()).map(|c| 1u64 << c).collect();
        let mut k = 1;
        while !conf.is_empty() {
            visit(k, &conf)?;
            conf = self.extend(&conf, deadline)?;
            k += 1;
        }
        Ok(())
    }
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// A set of pairwise non-attacking rooks, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookConfig {
    pub rooks: Vec<Cell>,
}

impl RookConfig {
    pub fn new(mut rooks: Vec<Cell>) -> Self {
        rooks.sort_unstable();
        rooks.dedup();
        RookConfig { rooks }
    }

    pub fn len(&self) -> usize {
        self.rooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rooks.is_empty()
    }
}

/// All rook configurations grouped by size; `level(k)` holds the
/// `k`-configurations for `1 <= k <= rook_number`.
#[derive(Debug, Clone)]
pub struct RookLevels {
    board: Board,
    levels: Vec<Vec<u64>>,
}

impl RookLevels {
    pub fn board(&self) -> &Board {
        &self.board
    }

    /// Largest `k` with a nonempty level.
    pub fn rook_number(&self) -> usize {
        self.levels.len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn masks(&self, k: usize) -> &[u64] {
        k.checked_sub(1)
            .and_then(|i| self.levels.get(i))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn level(&self, k: usize) -> Vec<RookConfig> {
        self.masks(k).iter().map(|&m| self.board.config(m)).collect()
    }
}

/// Whether rooks on `a` and `b` attack each other in `p`.
pub fn attacks(a: &Cell, b: &Cell, p: &CellCollection) -> Result<bool> {
    for c in [a, b] {
        if !p.contains(c) {
            return Err(Error::CellOutsideCollection(*c));
        }
    }
    if a == b {
        return Err(Error::InvalidArgument("attacks needs two distinct cells".into()));
    }
    if !a.is_aligned_with(b) {
        return Ok(false);
    }
    let first = Cell::new(a.i().min(b.i()), a.j().min(b.j()));
    let last = Cell::new(a.i().max(b.i()), a.j().max(b.j()));
    Ok(CellInterval::new(first, last)
        .expect("componentwise min <= max")
        .cells()
        .all(|c| p.contains(&c)))
}

pub fn all_configurations(p: &CellCollection) -> Result<RookLevels> {
    all_configurations_with(p, &Deadline::none())
}

pub fn all_configurations_with(p: &CellCollection, deadline: &Deadline) -> Result<RookLevels> {
    let board = Board::new(p)?;
    let mut levels = Vec::new();
    board.for_each_level(deadline, |_, lvl| {
        levels.push(lvl.to_vec());
        Ok(())
    })?;
    Ok(RookLevels { board, levels })
}

pub fn rook_polynomial(p: &CellCollection) -> Result<IntPolynomial> {
    rook_polynomial_with(p, &Deadline::none())
}

pub fn rook_polynomial_with(p: &CellCollection, deadline: &Deadline) -> Result<IntPolynomial> {
    let board = Board::new(p)?;
    let mut coeffs = vec![1i128];
    board.for_each_level(deadline, |_, lvl| {
        coeffs.push(lvl.len() as i128);
        Ok(())
    })?;
    Ok(IntPolynomial::new(coeffs))
}

pub fn rook_number(p: &CellCollection) -> Result<usize> {
    Ok(rook_polynomial(p)?.degree())
}

/// `sum_k C(m,k) * n(n-1)...(n-k+1) * t^k`
pub fn rectangle_rook_polynomial(m: usize, n: usize) -> Result<IntPolynomial> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("rectangle sides must be positive".into()));
    }
    let coeffs = (0..=m.min(n))
        .map(|k| binomial(m, k) * falling_factorial(n, k))
        .collect();
    Ok(IntPolynomial::new(coeffs))
}

pub(crate) fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

pub(crate) fn falling_factorial(n: usize, k: usize) -> i128 {
    (0..k).map(|i| (n - i) as i128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coll(c: &[(i32, i32)]) -> CellCollection {
        CellCollection::from_coords(c)
    }

    fn l_tromino() -> CellCollection {
        coll(&[(1, 1), (2, 1), (1, 2)])
    }

    /// Counts k-subsets that are pairwise non-attacking, judged from the
    /// rows/columns partition directly.
    fn brute_force(p: &CellCollection) -> IntPolynomial {
        let cells = p.cells();
        let n = cells.len();
        let rows = p.rows();
        let cols = p.columns();
        let row_id = |c: &Cell| rows.iter().position(|r| r.contains(c)).unwrap();
        let col_id = |c: &Cell| cols.iter().position(|r| r.contains(c)).unwrap();
        let mut counts = vec![0i128; n + 1];
        for mask in 0u32..(1 << n) {
            let chosen: Vec<&Cell> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| &cells[i]).collect();
            let ok = chosen.iter().enumerate().all(|(x, a)| {
                chosen[x + 1..]
                    .iter()
                    .all(|b| row_id(a) != row_id(b) && col_id(a) != col_id(b))
            });
            if ok {
                counts[chosen.len()] += 1;
            }
        }
        IntPolynomial::new(counts)
    }

    #[test]
    fn attack_examples() {
        let r = CellCollection::rectangle(3, 4);
        assert!(attacks(&Cell::new(1, 2), &Cell::new(3, 2), &r).unwrap());
        let gap = coll(&[(1, 1), (3, 1), (1, 2), (2, 2), (3, 2)]);
        assert!(!attacks(&Cell::new(1, 1), &Cell::new(3, 1), &gap).unwrap());
        assert!(attacks(&Cell::new(1, 2), &Cell::new(3, 2), &gap).unwrap());
        let sq = CellCollection::rectangle(2, 2);
        assert!(!attacks(&Cell::new(1, 1), &Cell::new(2, 2), &sq).unwrap());
        assert!(attacks(&Cell::new(1, 1), &Cell::new(5, 5), &sq).is_err());
        assert!(attacks(&Cell::new(1, 1), &Cell::new(1, 1), &sq).is_err());
    }

    #[test]
    fn attack_agrees_with_board() {
        let gap = coll(&[(1, 1), (3, 1), (1, 2), (2, 2), (3, 2), (2, 3)]);
        let board = Board::new(&gap).unwrap();
        for a in 0..gap.rank() {
            for b in 0..gap.rank() {
                if a != b {
                    let direct = attacks(&board.cell(a), &board.cell(b), &gap).unwrap();
                    assert_eq!(direct, board.attack_mask(a) & (1 << b) != 0);
                }
            }
        }
    }

    #[test]
    fn configuration_levels() {
        let single = all_configurations(&coll(&[(1, 1)])).unwrap();
        assert_eq!(single.level_sizes(), vec![1]);
        let b34 = all_configurations(&CellCollection::rectangle(3, 4)).unwrap();
        assert_eq!(b34.level_sizes(), vec![12, 36, 24]);
        assert_eq!(all_configurations(&l_tromino()).unwrap().level_sizes(), vec![3, 1]);
        let levels = all_configurations(&l_tromino()).unwrap();
        assert_eq!(
            levels.level(2),
            vec![RookConfig::new(vec![Cell::new(2, 1), Cell::new(1, 2)])]
        );
    }

    #[test]
    fn every_configuration_extends_a_smaller_one() {
        let p = coll(&[(1, 1), (2, 1), (3, 1), (2, 2), (3, 2), (3, 3)]);
        let levels = all_configurations(&p).unwrap();
        for k in 2..=levels.rook_number() {
            for &m in levels.masks(k) {
                assert!(iter_bits(m).any(|b| levels.masks(k - 1).contains(&(m & !(1 << b)))));
            }
        }
    }

    #[test]
    fn rook_polynomial_examples() {
        assert_eq!(
            rook_polynomial(&CellCollection::rectangle(3, 4)).unwrap(),
            IntPolynomial::from_i64s(&[1, 12, 36, 24])
        );
        assert_eq!(rook_polynomial(&CellCollection::empty()).unwrap(), IntPolynomial::one());
        assert_eq!(
            rook_polynomial(&l_tromino()).unwrap(),
            IntPolynomial::from_i64s(&[1, 3, 1])
        );
    }

    #[test]
    fn rook_number_examples() {
        assert_eq!(rook_number(&CellCollection::rectangle(3, 4)).unwrap(), 3);
        assert_eq!(rook_number(&coll(&[(1, 1)])).unwrap(), 1);
        assert_eq!(rook_number(&coll(&[(1, 1), (2, 1)])).unwrap(), 1);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            rectangle_rook_polynomial(3, 4).unwrap(),
            IntPolynomial::from_i64s(&[1, 12, 36, 24])
        );
        assert_eq!(
            rectangle_rook_polynomial(1, 1).unwrap(),
            IntPolynomial::from_i64s(&[1, 1])
        );
        assert_eq!(
            rectangle_rook_polynomial(2, 2).unwrap(),
            IntPolynomial::from_i64s(&[1, 4, 2])
        );
        assert!(rectangle_rook_polynomial(0, 3).is_err());
    }

    #[test]
    fn algorithm_matches_subset_scan() {
        let shapes = [
            l_tromino(),
            CellCollection::rectangle(2, 3),
            coll(&[(1, 1), (3, 1), (1, 2), (2, 2), (3, 2)]),
            coll(&[(1, 1), (2, 2), (3, 3), (3, 2), (1, 3)]),
            coll(&[(1, 1), (2, 1), (3, 1), (1, 2), (3, 2), (2, 3)]),
        ];
        for p in shapes {
            assert_eq!(rook_polynomial(&p).unwrap(), brute_force(&p), "{p}");
        }
    }

    #[test]
    fn rejects_oversized_boards() {
        let big = CellCollection::rectangle(13, 5);
        assert!(matches!(Board::new(&big), Err(Error::TooLarge(65))));
    }
}
