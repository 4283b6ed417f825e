//! Brace text format: `{{{1,1},{2,2}},{{2,1},{3,2}}}` lists each cell by its
//! two diagonal corners.

use super::{Cell, CellCollection, Point};
use crate::{Error, Result};

pub fn format_collection(p: &CellCollection) -> String {
    let mut s = String::with_capacity(2 + p.rank() * 16);
    s.push('{');
    for (n, c) in p.cells().iter().enumerate() {
        if n > 0 {
            s.push(',');
        }
        s.push_str(&c.to_string());
    }
    s.push('}');
    s
}

pub fn parse_collection(text: &str) -> Result<CellCollection> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let cells = p.collection()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing characters after collection"));
    }
    let n = cells.len();
    let out = CellCollection::new(cells);
    if out.rank() != n {
        return Err(Error::Parse {
            pos: 0,
            msg: "duplicate cell".into(),
        });
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn collection(&mut self) -> Result<Vec<Cell>> {
        self.expect(b'{')?;
        let mut cells = Vec::new();
        if self.peek() == Some(b'}') {
            self.pos += 1;
            return Ok(cells);
        }
        loop {
            cells.push(self.cell()?);
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    return Ok(cells);
                }
                _ => return Err(self.err("expected ',' or '}'")),
            }
        }
    }

    fn cell(&mut self) -> Result<Cell> {
        let start = self.pos;
        self.expect(b'{')?;
        let a = self.point()?;
        self.expect(b',')?;
        let b = self.point()?;
        self.expect(b'}')?;
        if b != a.offset(1, 1) {
            return Err(Error::Parse {
                pos: start,
                msg: format!("corners {a} and {b} do not span a unit cell"),
            });
        }
        Ok(Cell { lower_left: a })
    }

    fn point(&mut self) -> Result<Point> {
        self.expect(b'{')?;
        let i = self.int()?;
        self.expect(b',')?;
        let j = self.int()?;
        self.expect(b'}')?;
        Ok(Point::new(i, j))
    }

    fn int(&mut self) -> Result<i32> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        s.parse::<i32>().map_err(|_| Error::Parse {
            pos: start,
            msg: "expected an integer coordinate".into(),
        })
    }
}
