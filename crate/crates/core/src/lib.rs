//! Exact simulation and closed-form analysis of a Josephus variant: the
//! counting walk skips one soldier, then strikes the next `k` slots, and every
//! soldier starts with the same number of lives. A strike costs one life; a
//! soldier at zero lives leaves the circle and is never counted again.
//!
//! The crate has four layers:
//!
//! * [`ring`] — three interchangeable circle data structures (dense scan,
//!   doubly linked, order-statistic tree) behind one trait, so simulations can
//!   be cross-checked structure against structure.
//! * [`game`] — the step-by-step engine: event stream, elimination order,
//!   survivor and depletion modes, and the all-at-one-life snapshot probe.
//! * [`closed_form`] — the published formulas (single life, elimination
//!   times, `lives = k`, the one-life set, and the two reduction rules),
//!   each available both as printed and in a reconciled form that matches
//!   the simulation, plus a dispatcher that picks formula or simulation.
//! * [`explorer`] — parameter sweeps that compare every formula against the
//!   simulation oracle and tabulate the open-ended surveys, with
//!   deterministic, budget-aware reporting.

pub mod closed_form;
pub mod error;
pub mod explorer;
pub mod game;
pub mod ring;

pub use error::{Error, Result};
pub use game::{
    one_life_snapshot, run, run_events, GameConfig, GameEvent, GameMode, GameOutcome, GameState,
    OneLifeSnapshot,
};
pub use ring::{AliveRing, RingKind};
