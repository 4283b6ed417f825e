use super::{Cell, CellCollection};

/// Dense occupancy bitmap over the bounding box with 2-D prefix sums, so that
/// "is this whole rectangle inside P" is O(1).
#[derive(Debug, Clone)]
pub(crate) struct Occupancy {
    i0: i32,
    j0: i32,
    w: usize,
    h: usize,
    filled: Vec<bool>,
    // (w+1) x (h+1) inclusive prefix sums
    prefix: Vec<u32>,
}

impl Occupancy {
    pub fn new(p: &CellCollection) -> Self {
        let Some(bb) = p.bounding_box() else {
            return Occupancy {
                i0: 0,
                j0: 0,
                w: 0,
                h: 0,
                filled: Vec::new(),
                prefix: vec![0],
            };
        };
        let (i0, j0) = (bb.first.i(), bb.first.j());
        let (w, h) = (bb.width(), bb.height());
        let mut filled = vec![false; w * h];
        for c in p.cells() {
            filled[(c.j() - j0) as usize * w + (c.i() - i0) as usize] = true;
        }
        let mut prefix = vec![0u32; (w + 1) * (h + 1)];
        for y in 0..h {
            for x in 0..w {
                let v = filled[y * w + x] as u32;
                prefix[(y + 1) * (w + 1) + x + 1] =
                    v + prefix[y * (w + 1) + x + 1] + prefix[(y + 1) * (w + 1) + x] - prefix[y * (w + 1) + x];
            }
        }
        Occupancy {
            i0,
            j0,
            w,
            h,
            filled,
            prefix,
        }
    }

    #[inline]
    fn local(&self, c: &Cell) -> Option<(usize, usize)> {
        let x = c.i() - self.i0;
        let y = c.j() - self.j0;
        (x >= 0 && y >= 0 && (x as usize) < self.w && (y as usize) < self.h).then_some((x as usize, y as usize))
    }

    #[inline]
    pub fn contains(&self, c: &Cell) -> bool {
        self.local(c).is_some_and(|(x, y)| self.filled[y * self.w + x])
    }

    /// Whether every cell with lower-left corner in `[first, last]` is present.
    pub fn contains_rect(&self, first: &Cell, last: &Cell) -> bool {
        if first.i() > last.i() || first.j() > last.j() {
            return false;
        }
        let (Some((x0, y0)), Some((x1, y1))) = (self.local(first), self.local(last)) else {
            return false;
        };
        let s = |x: usize, y: usize| self.prefix[y * (self.w + 1) + x] as i64;
        let count = s(x1 + 1, y1 + 1) - s(x0, y1 + 1) - s(x1 + 1, y0) + s(x0, y0);
        count == ((x1 - x0 + 1) * (y1 - y0 + 1)) as i64
    }
}
