//! Order-statistic ring: a Fenwick-indexed liveness bitmap.
//!
//! Ranks and select-kth-alive both cost O(log n), so a cursor jump of any
//! length is a single rank computation plus one select — no per-label walking
//! and no rebalancing.

use crate::error::{Error, Result};

use super::{empty_ring_error, validate_members, AliveRing};

/// Liveness bitmap with a Fenwick tree over its prefix sums.
#[derive(Debug, Clone)]
pub struct IndexedRing {
    /// 1-based Fenwick tree; `tree[i]` covers labels `i - lowbit(i) .. i`.
    tree: Vec<u64>,
    alive: Vec<bool>,
    len: u64,
    cursor: usize,
    /// Highest power of two ≤ n, the starting stride for binary descent.
    top_bit: usize,
}

impl IndexedRing {
    /// Full ring over labels `0..n`, cursor on 0.
    pub fn new(n: u64) -> Result<Self> {
        let n_us = usize::try_from(n).map_err(|_| Error::Domain(format!("ring size {n} exceeds addressable memory")))?;
        // All-ones Fenwick tree built directly: node i sums lowbit(i) ones.
        let mut tree = vec![0u64; n_us + 1];
        for i in 1..=n_us {
            tree[i] = (i & i.wrapping_neg()) as u64;
        }
        Ok(IndexedRing {
            tree,
            alive: vec![true; n_us],
            len: n,
            cursor: 0,
            top_bit: top_bit(n_us),
        })
    }

    /// Partial ring over the given members with the cursor on one of them.
    pub fn from_members(n: u64, members: &[u64], cursor: u64) -> Result<Self> {
        let alive = validate_members(n, members, cursor)?;
        let n_us = alive.len();
        // Linear-time Fenwick build from the liveness counts.
        let mut tree = vec![0u64; n_us + 1];
        for i in 1..=n_us {
            tree[i] += u64::from(alive[i - 1]);
            let parent = i + (i & i.wrapping_neg());
            if parent <= n_us {
                let v = tree[i];
                tree[parent] += v;
            }
        }
        Ok(IndexedRing {
            tree,
            alive,
            len: members.len() as u64,
            cursor: cursor as usize,
            top_bit: top_bit(n_us),
        })
    }

    /// Number of alive labels strictly below `label`.
    fn rank(&self, label: usize) -> u64 {
        let mut i = label;
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    }

    /// Label of the `target`-th alive entry (1-based); `target` must be in
    /// `1..=len`.
    fn select(&self, target: u64) -> usize {
        let mut pos = 0usize;
        let mut rem = target;
        let mut bit = self.top_bit;
        while bit != 0 {
            let next = pos + bit;
            if next < self.tree.len() && self.tree[next] < rem {
                rem -= self.tree[next];
                pos = next;
            }
            bit >>= 1;
        }
        pos // prefix(pos) < target ≤ prefix(pos + 1), so label `pos` is the hit
    }

    fn clear(&mut self, label: usize) {
        self.alive[label] = false;
        let mut i = label + 1;
        while i < self.tree.len() {
            self.tree[i] -= 1;
            i += i & i.wrapping_neg();
        }
    }
}

fn top_bit(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        1 << (usize::BITS - 1 - n.leading_zeros())
    }
}

impl AliveRing for IndexedRing {
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
        let from = self.rank(self.cursor); // 0-based position of the cursor
        let target = (from + steps % self.len) % self.len + 1;
        self.cursor = self.select(target);
        Ok(self.cursor as u64)
    }

    fn remove_current(&mut self) -> Result<u64> {
        if self.len == 0 {
            return Err(empty_ring_error());
        }
        let removed = self.cursor;
        let from = self.rank(removed);
        self.clear(removed);
        self.len -= 1;
        if self.len > 0 {
            // The label that followed the removed one now sits at the same rank.
            let target = from % self.len + 1;
            self.cursor = self.select(target);
        }
        Ok(removed as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn select_and_rank_agree_on_scattered_members() {
        let members = [2u64, 3, 5, 8, 13, 21, 34];
        let ring = IndexedRing::from_members(40, &members, 5).unwrap();
        for (idx, &label) in members.iter().enumerate() {
            assert_eq!(ring.rank(label as usize), idx as u64);
            assert_eq!(ring.select(idx as u64 + 1), label as usize);
        }
    }

    #[test]
    fn advance_jumps_in_one_select() {
        let mut ring = IndexedRing::from_members(40, &[2, 3, 5, 8, 13, 21, 34], 5).unwrap();
        assert_eq!(ring.advance(3).unwrap(), 21);
        assert_eq!(ring.advance(4).unwrap(), 5); // wraps past 34, 2, 3
        assert_eq!(ring.advance(7).unwrap(), 5); // full lap
    }
}
