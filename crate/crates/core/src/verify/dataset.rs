//! Plain-text datasets: one brace-encoded collection per line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::grid::CellCollection;
use crate::{Error, Result};

/// Reads every line of `reader`; blank lines are skipped. `label` names the
/// source in errors.
pub fn read_dataset_from<R: BufRead>(reader: R, label: &Path) -> Result<Vec<CellCollection>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let wrap = |e: Error| Error::Dataset {
            path: label.to_path_buf(),
            line: idx + 1,
            source: Box::new(e),
        };
        let line = line.map_err(|e| wrap(e.into()))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(CellCollection::parse(&line).map_err(wrap)?);
    }
    Ok(out)
}

pub fn read_dataset(path: &Path) -> Result<Vec<CellCollection>> {
    let file = File::open(path)?;
    read_dataset_from(BufReader::new(file), path)
}

pub fn write_dataset_to<'a, W, I>(mut w: W, shapes: I) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a CellCollection>,
{
    for p in shapes {
        writeln!(w, "{p}")?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_dataset<'a, I>(path: &Path, shapes: I) -> Result<()>
where
    I: IntoIterator<Item = &'a CellCollection>,
{
    write_dataset_to(BufWriter::new(File::create(path)?), shapes)
}

/// Dataset path label used for standard input.
pub fn stdin_label() -> PathBuf {
    PathBuf::from("<stdin>")
}
