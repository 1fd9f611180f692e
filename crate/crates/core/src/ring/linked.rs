//! Doubly linked ring: constant work per single cursor step or removal.

use crate::error::{Error, Result};

use super::{empty_ring_error, validate_members, AliveRing};

/// Successor/predecessor tables over labels; the workhorse structure for
/// long simulations.
#[derive(Debug, Clone)]
pub struct LinkedRing {
    next: Vec<usize>,
    prev: Vec<usize>,
    len: u64,
    cursor: usize,
}

impl LinkedRing {
    /// Full ring over labels `0..n`, cursor on 0.
    pub fn new(n: u64) -> Result<Self> {
        let n_us = usize::try_from(n).map_err(|_| Error::Domain(format!("ring size {n} exceeds addressable memory")))?;
        let mut next: Vec<usize> = (1..=n_us).collect();
        let mut prev: Vec<usize> = (0..n_us).map(|i| i.wrapping_sub(1)).collect();
        if n_us > 0 {
            next[n_us - 1] = 0;
            prev[0] = n_us - 1;
        }
        Ok(LinkedRing { next, prev, len: n, cursor: 0 })
    }

    /// Partial ring over the given members with the cursor on one of them.
    pub fn from_members(n: u64, members: &[u64], cursor: u64) -> Result<Self> {
        let flags = validate_members(n, members, cursor)?;
        let present: Vec<usize> = flags
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| a.then_some(i))
            .collect();
        let mut next = vec![usize::MAX; flags.len()];
        let mut prev = vec![usize::MAX; flags.len()];
        for (idx, &label) in present.iter().enumerate() {
            next[label] = present[(idx + 1) % present.len()];
            prev[label] = present[(idx + present.len() - 1) % present.len()];
        }
        Ok(LinkedRing { next, prev, len: present.len() as u64, cursor: cursor as usize })
    }
}

impl AliveRing for LinkedRing {
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
            self.cursor = self.next[self.cursor];
        }
        Ok(self.cursor as u64)
    }

    fn remove_current(&mut self) -> Result<u64> {
        if self.len == 0 {
            return Err(empty_ring_error());
        }
        let removed = self.cursor;
        let (p, n) = (self.prev[removed], self.next[removed]);
        self.next[p] = n;
        self.prev[n] = p;
        self.len -= 1;
        if self.len > 0 {
            self.cursor = n;
        }
        Ok(removed as u64)
    }
}
