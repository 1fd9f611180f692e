//! Interchangeable alive-set structures behind the simulator.
//!
//! A ring is an ordered cyclic set of soldier labels with a cursor. All three
//! implementations expose the same contract and produce identical traces; they
//! differ only in the cost of moving the cursor:
//!
//! * [`DenseRing`] — a boolean array scanned linearly; the simplest possible
//!   implementation, kept as the reference the others are tested against.
//! * [`LinkedRing`] — doubly linked labels; constant work per single step.
//! * [`IndexedRing`] — a prefix-sum-indexed liveness bitmap supporting
//!   select-kth-alive, so a cursor jump of any length costs O(log n).

mod dense;
mod indexed;
mod linked;

pub use dense::DenseRing;
pub use indexed::IndexedRing;
pub use linked::LinkedRing;

use serde::Serialize;

use crate::error::{Error, Result};

/// Which concrete ring structure backs a simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RingKind {
    /// Boolean liveness array with linear scans.
    DenseArray,
    /// Doubly linked list over labels.
    DoublyLinked,
    /// Fenwick-indexed bitmap with logarithmic select.
    OrderStatistic,
}

/// Behavioral contract shared by all ring structures.
///
/// Constructors are inherent on each concrete type with identical signatures:
/// `new(n)` builds the full ring `0..n-1` with the cursor on label 0, and
/// `from_members(n, members, cursor)` rebuilds a partial ring (members listed
/// in any order, cursor on one of them). Cyclic order is always ascending
/// label order.
pub trait AliveRing {
    /// Number of alive labels.
    fn len(&self) -> u64;

    /// True when no labels remain.
    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Label under the cursor, or `None` on an empty ring.
    fn current(&self) -> Option<u64>;

    /// Moves the cursor forward over alive labels only, cyclically, and
    /// returns the label it lands on. `advance(0)` returns the current label.
    fn advance(&mut self, steps: u64) -> Result<u64>;

    /// Removes the label under the cursor; the cursor moves to the next alive
    /// label (cyclically). Returns the removed label.
    fn remove_current(&mut self) -> Result<u64>;
}

pub(crate) fn empty_ring_error() -> Error {
    Error::State("ring is empty".into())
}

/// Checks `n`, `members`, and `cursor` for the partial-ring constructors and
/// returns the validated member flags.
pub(crate) fn validate_members(n: u64, members: &[u64], cursor: u64) -> Result<Vec<bool>> {
    let n_us = usize::try_from(n).map_err(|_| Error::Domain(format!("ring size {n} exceeds addressable memory")))?;
    if members.is_empty() {
        return Err(Error::Domain("ring must have at least one member".into()));
    }
    let mut flags = vec![false; n_us];
    for &m in members {
        if m >= n {
            return Err(Error::Domain(format!("member label {m} is outside 0..{n}")));
        }
        if flags[m as usize] {
            return Err(Error::Domain(format!("member label {m} is duplicated")));
        }
        flags[m as usize] = true;
    }
    if cursor >= n || !flags[cursor as usize] {
        return Err(Error::Domain(format!("cursor {cursor} is not a member of the ring")));
    }
    Ok(flags)
}

/// Runtime-selected ring, so one game-state type serves all three structures.
#[derive(Debug, Clone)]
pub(crate) enum RingBox {
    Dense(DenseRing),
    Linked(LinkedRing),
    Indexed(IndexedRing),
}

impl RingBox {
    pub(crate) fn new(kind: RingKind, n: u64) -> Result<Self> {
        Ok(match kind {
            RingKind::DenseArray => RingBox::Dense(DenseRing::new(n)?),
            RingKind::DoublyLinked => RingBox::Linked(LinkedRing::new(n)?),
            RingKind::OrderStatistic => RingBox::Indexed(IndexedRing::new(n)?),
        })
    }

    pub(crate) fn from_members(kind: RingKind, n: u64, members: &[u64], cursor: u64) -> Result<Self> {
        Ok(match kind {
            RingKind::DenseArray => RingBox::Dense(DenseRing::from_members(n, members, cursor)?),
            RingKind::DoublyLinked => RingBox::Linked(LinkedRing::from_members(n, members, cursor)?),
            RingKind::OrderStatistic => RingBox::Indexed(IndexedRing::from_members(n, members, cursor)?),
        })
    }
}

impl AliveRing for RingBox {
    fn len(&self) -> u64 {
        match self {
            RingBox::Dense(r) => r.len(),
            RingBox::Linked(r) => r.len(),
            RingBox::Indexed(r) => r.len(),
        }
    }

    fn current(&self) -> Option<u64> {
        match self {
            RingBox::Dense(r) => r.current(),
            RingBox::Linked(r) => r.current(),
            RingBox::Indexed(r) => r.current(),
        }
    }

    fn advance(&mut self, steps: u64) -> Result<u64> {
        match self {
            RingBox::Dense(r) => r.advance(steps),
            RingBox::Linked(r) => r.advance(steps),
            RingBox::Indexed(r) => r.advance(steps),
        }
    }

    fn remove_current(&mut self) -> Result<u64> {
        match self {
            RingBox::Dense(r) => r.remove_current(),
            RingBox::Linked(r) => r.remove_current(),
            RingBox::Indexed(r) => r.remove_current(),
        }
    }
}
