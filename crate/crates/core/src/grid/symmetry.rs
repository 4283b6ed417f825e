use super::Cell;

/// The eight symmetries of the square acting on cell positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Rot90,
    Rot180,
    Rot270,
    /// `(i, j) -> (-i, j)`
    MirrorI,
    /// `(i, j) -> (i, -j)`
    MirrorJ,
    /// `(i, j) -> (j, i)`
    Transpose,
    /// `(i, j) -> (-j, -i)`
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rot90,
        Symmetry::Rot180,
        Symmetry::Rot270,
        Symmetry::MirrorI,
        Symmetry::MirrorJ,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
    ];

    /// Image of a cell, up to a common translation. Acting on lower-left
    /// corners differs from acting on the unit squares by the same offset for
    /// every cell, which callers remove by normalizing.
    pub fn apply(&self, c: &Cell) -> Cell {
        let (i, j) = (c.i(), c.j());
        let (x, y) = match self {
            Symmetry::Identity => (i, j),
            Symmetry::Rot90 => (-j, i),
            Symmetry::Rot180 => (-i, -j),
            Symmetry::Rot270 => (j, -i),
            Symmetry::MirrorI => (-i, j),
            Symmetry::MirrorJ => (i, -j),
            Symmetry::Transpose => (j, i),
            Symmetry::AntiTranspose => (-j, -i),
        };
        Cell::new(x, y)
    }

    pub fn is_reflection(&self) -> bool {
        matches!(
            self,
            Symmetry::MirrorI | Symmetry::MirrorJ | Symmetry::Transpose | Symmetry::AntiTranspose
        )
    }
}
