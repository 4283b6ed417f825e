use std::time::{Duration, Instant};

use crate::{Error, Result};

/// Cooperative time limit checked from inside the long-running loops.
#[derive(Debug, Clone, Copy, Default)]
pub struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    pub fn none() -> Self {
        Deadline { at: None }
    }

    pub fn after(limit: Duration) -> Self {
        Deadline {
            at: Instant::now().checked_add(limit),
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.at.is_none()
    }

    #[inline]
    pub fn check(&self) -> Result<()> {
        match self.at {
            Some(at) if Instant::now() >= at => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}
