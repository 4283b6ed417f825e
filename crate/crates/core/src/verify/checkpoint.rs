//! Resumable progress of a verification run.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::enumerate::Kind;
use crate::grid::CellCollection;
use crate::{Error, Result};

use super::{Config, Summary};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub kind: Kind,
    pub rank: usize,
    pub total: usize,
    /// Index into the sorted work list of the first unverified shape.
    pub next_index: usize,
    /// Key of the last verified shape, if any.
    pub last_key: Option<String>,
    pub summary: Summary,
}

impl Checkpoint {
    pub(crate) fn new(config: &Config, shapes: &[CellCollection], next_index: usize, summary: Summary) -> Self {
        Checkpoint {
            kind: config.kind,
            rank: config.rank,
            total: shapes.len(),
            next_index,
            last_key: next_index.checked_sub(1).map(|i| shapes[i].format()),
            summary,
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
    }

    /// Written to a sibling file first so an interrupted save leaves the old
    /// checkpoint intact.
    pub fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_string_pretty(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    pub(crate) fn check_matches(&self, config: &Config, shapes: &[CellCollection]) -> Result<()> {
        let mismatch = |what: &str| {
            Err(Error::InvalidArgument(format!(
                "checkpoint does not match this run: {what}"
            )))
        };
        if self.kind != config.kind || self.rank != config.rank {
            return mismatch("kind or rank");
        }
        if self.total != shapes.len() || self.next_index > shapes.len() {
            return mismatch("shape count");
        }
        let last = self.next_index.checked_sub(1).map(|i| shapes[i].format());
        if last != self.last_key {
            return mismatch("last verified key");
        }
        Ok(())
    }
}
