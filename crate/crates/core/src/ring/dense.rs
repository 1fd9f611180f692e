//! The simplest possible ring: a boolean liveness array scanned linearly.
//!
//! Kept deliberately naive so the cleverer structures have an obviously
//! correct reference to be tested against.

use crate::error::{Error, Result};

use super::{empty_ring_error, validate_members, AliveRing};

/// Liveness flags plus a cursor; every cursor move is a forward scan.
#[derive(Debug, Clone)]
pub struct DenseRing {
    alive: Vec<bool>,
    len: u64,
    cursor: usize,
}

impl DenseRing {
    /// Full ring over labels `0..n`, cursor on 0.
    pub fn new(n: u64) -> Result<Self> {
        let n_us = usize::try_from(n).map_err(|_| Error::Domain(format!("ring size {n} exceeds addressable memory")))?;
        Ok(DenseRing { alive: vec![true; n_us], len: n, cursor: 0 })
    }

    /// Partial ring over the given members with the cursor on one of them.
    pub fn from_members(n: u64, members: &[u64], cursor: u64) -> Result<Self> {
        let alive = validate_members(n, members, cursor)?;
        Ok(DenseRing { alive, len: members.len() as u64, cursor: cursor as usize })
    }

    fn next_alive_after(&self, mut i: usize) -> usize {
        loop {
            i += 1;
            if i == self.alive.len() {
                i = 0;
            }
            if self.alive[i] {
                return i;
            }
        }
    }
}

impl AliveRing for DenseRing {
    fn len(&self) -> u64 {
        self.len
    }

    fn current(&self) -> Option<u64> {
        (self.len > 0).then_some(self.cursor as u64)
    }

    fn advance(&mut self, steps: u64) -> Result<u64> {
        if self.len == 0 {
            return Err(empty_ring_error());
        }
        for _ in 0..(steps % self.len) {
            self.cursor = self.next_alive_after(self.cursor);
        }
        Ok(self.cursor as u64)
    }

    fn remove_current(&mut self) -> Result<u64> {
        if self.len == 0 {
            return Err(empty_ring_error());
        }
        let removed = self.cursor;
        self.alive[removed] = false;
        self.len -= 1;
        if self.len > 0 {
            self.cursor = self.next_alive_after(removed);
        }
        Ok(removed as u64)
    }
}
