//! Event-level simulation of the game: the ground truth every formula in this
//! crate is checked against.
//!
//! Rules: soldiers `0..n-1` stand in a circle, each holding `lives` lives. The
//! action is a stream of slots. The first slot skips soldier 0; after every
//! skip the next `k` alive soldiers each take one hit; then the next alive
//! soldier is skipped again, and so on. A soldier whose lives reach zero is
//! eliminated on the spot and never occupies a slot again. When few soldiers
//! remain a hit block may wrap around the circle and strike the same soldier
//! more than once.
//!
//! Survivor mode stops the instant exactly one soldier is alive — even in the
//! middle of a hit block. Depletion mode (single-life games only) keeps
//! skipping and hitting until nobody remains, which gives every soldier an
//! elimination ordinal, the survivor-mode winner last.

use crate::error::{Error, Result};
use crate::ring::{AliveRing, RingBox, RingKind};

/// The triple defining one game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameConfig {
    /// Soldier count; labels run `0..n-1` in circle order.
    pub n: u64,
    /// Hit-block length: soldiers struck after each skip.
    pub k: u64,
    /// Lives per soldier.
    pub lives: u64,
}

impl GameConfig {
    /// Builds a validated configuration.
    pub fn new(n: u64, k: u64, lives: u64) -> Result<Self> {
        let config = GameConfig { n, k, lives };
        config.validate()?;
        Ok(config)
    }

    /// All three parameters must be at least 1.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 || self.lives == 0 {
            return Err(Error::Domain(format!(
                "n, k, and lives must all be at least 1 (got n={}, k={}, lives={})",
                self.n, self.k, self.lives
            )));
        }
        Ok(())
    }
}

/// How a game ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GameMode {
    /// Stop the instant exactly one soldier is alive.
    Survivor,
    /// Run until zero soldiers remain; defined only for single-life games.
    Depletion,
}

/// One slot of game action, or the terminal marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GameEvent {
    /// The soldier under the cursor is passed over unharmed.
    Skip { soldier: u64 },
    /// The soldier under the cursor loses one life and survives it.
    Hit { soldier: u64, remaining_lives: u64 },
    /// The soldier's last life is taken; `ordinal` is 1-based elimination order.
    Eliminate { soldier: u64, ordinal: u64 },
    /// The game is over; `survivor` is present in survivor mode only.
    Finished { survivor: Option<u64> },
}

/// Final result of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameOutcome {
    pub config: GameConfig,
    pub mode: GameMode,
    /// Last soldier standing (survivor mode); absent in depletion mode.
    pub survivor: Option<u64>,
    /// Elimination sequence as `(label, ordinal)` pairs, ordinals 1,2,3,…
    pub order: Vec<(u64, u64)>,
}

/// Circle state at the first round boundary where every alive soldier has
/// exactly one life left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneLifeSnapshot {
    /// Alive labels in circle order starting at the cursor.
    pub alive: Vec<u64>,
    /// The next soldier to be skipped; always the first element of `alive`.
    pub cursor: u64,
    /// Skip/hit slots taken before the captured instant.
    pub slots_elapsed: u64,
}

/// A game in progress. Single-owner; mutate by calling [`GameState::step`].
#[derive(Debug, Clone)]
pub struct GameState {
    config: GameConfig,
    mode: GameMode,
    ring: RingBox,
    /// Remaining lives per label; 0 means eliminated.
    lives: Vec<u64>,
    /// Hits still owed in the current round; 0 means the next slot is a skip.
    hits_pending: u64,
    slots_elapsed: u64,
    next_ordinal: u64,
    order: Vec<(u64, u64)>,
    finished: bool,
    survivor: Option<u64>,
}

impl GameState {
    /// Fresh game on the full circle.
    pub fn new(config: GameConfig, mode: GameMode, ring: RingKind) -> Result<Self> {
        config.validate()?;
        if mode == GameMode::Depletion && config.lives != 1 {
            return Err(Error::UnsupportedMode(format!(
                "depletion mode is defined only for single-life games (lives={})",
                config.lives
            )));
        }
        let n_us = usize::try_from(config.n)
            .map_err(|_| Error::Domain(format!("n={} exceeds addressable memory", config.n)))?;
        let mut state = GameState {
            config,
            mode,
            ring: RingBox::new(ring, config.n)?,
            lives: vec![config.lives; n_us],
            hits_pending: 0,
            slots_elapsed: 0,
            next_ordinal: 1,
            order: Vec::new(),
            finished: false,
            survivor: None,
        };
        state.check_finished();
        Ok(state)
    }

    /// Rebuilds a game from a one-life snapshot: every listed soldier is alive
    /// with exactly one life, the cursor is about to skip, and elimination
    /// ordinals continue from the soldiers already gone.
    pub fn resume(config: GameConfig, mode: GameMode, snapshot: &OneLifeSnapshot, ring: RingKind) -> Result<Self> {
        config.validate()?;
        if mode == GameMode::Depletion && config.lives != 1 {
            return Err(Error::UnsupportedMode(format!(
                "depletion mode is defined only for single-life games (lives={})",
                config.lives
            )));
        }
        let n_us = usize::try_from(config.n)
            .map_err(|_| Error::Domain(format!("n={} exceeds addressable memory", config.n)))?;
        let ring = RingBox::from_members(ring, config.n, &snapshot.alive, snapshot.cursor)?;
        let mut lives = vec![0u64; n_us];
        for &label in &snapshot.alive {
            lives[label as usize] = 1;
        }
        let eliminated = config.n - snapshot.alive.len() as u64;
        let mut state = GameState {
            config,
            mode,
            ring,
            lives,
            hits_pending: 0,
            slots_elapsed: snapshot.slots_elapsed,
            next_ordinal: eliminated + 1,
            order: Vec::new(),
            finished: false,
            survivor: None,
        };
        state.check_finished();
        Ok(state)
    }

    fn check_finished(&mut self) {
        match self.mode {
            GameMode::Survivor => {
                if self.ring.len() == 1 {
                    self.finished = true;
                    self.survivor = self.ring.current();
                }
            }
            GameMode::Depletion => {
                if self.ring.is_empty() {
                    self.finished = true;
                }
            }
        }
    }

    /// Advances by exactly one slot — one skip or one hit — and reports what
    /// happened. Stepping a finished game is a state error.
    pub fn step(&mut self) -> Result<GameEvent> {
        if self.finished {
            return Err(Error::State("game is already finished".into()));
        }
        let soldier = self.ring.current().expect("unfinished game has a cursor");
        let event = if self.hits_pending == 0 {
            self.ring.advance(1)?;
            self.hits_pending = self.config.k;
            GameEvent::Skip { soldier }
        } else {
            self.hits_pending -= 1;
            let idx = soldier as usize;
            self.lives[idx] -= 1;
            if self.lives[idx] == 0 {
                self.ring.remove_current()?;
                let ordinal = self.next_ordinal;
                self.next_ordinal += 1;
                self.order.push((soldier, ordinal));
                GameEvent::Eliminate { soldier, ordinal }
            } else {
                self.ring.advance(1)?;
                GameEvent::Hit { soldier, remaining_lives: self.lives[idx] }
            }
        };
        self.slots_elapsed += 1;
        self.check_finished();
        Ok(event)
    }

    /// True once the game has ended.
    pub fn finished(&self) -> bool {
        self.finished
    }

    /// The winner, once a survivor-mode game has ended.
    pub fn survivor(&self) -> Option<u64> {
        self.survivor
    }

    /// Skip/hit slots taken so far.
    pub fn slots_elapsed(&self) -> u64 {
        self.slots_elapsed
    }

    /// Soldiers still alive.
    pub fn alive_count(&self) -> u64 {
        self.ring.len()
    }

    /// Label under the cursor (the next soldier to act on), if any remain.
    pub fn cursor(&self) -> Option<u64> {
        self.ring.current()
    }

    /// True exactly when the next slot is a skip (a round boundary).
    pub fn at_round_boundary(&self) -> bool {
        self.hits_pending == 0
    }

    /// Remaining lives of a label (0 = eliminated); `None` if out of range.
    pub fn remaining_lives(&self, label: u64) -> Option<u64> {
        self.lives.get(usize::try_from(label).ok()?).copied()
    }

    /// Alive labels in ascending order.
    pub fn alive_labels(&self) -> Vec<u64> {
        (0..self.config.n).filter(|&l| self.lives[l as usize] > 0).collect()
    }

    /// Alive labels in circle order starting at the cursor.
    pub fn alive_from_cursor(&self) -> Vec<u64> {
        match self.ring.current() {
            None => Vec::new(),
            Some(c) => (c..self.config.n)
                .chain(0..c)
                .filter(|&l| self.lives[l as usize] > 0)
                .collect(),
        }
    }

    /// Eliminations so far as `(label, ordinal)` pairs.
    pub fn order(&self) -> &[(u64, u64)] {
        &self.order
    }

    fn into_outcome(self) -> GameOutcome {
        GameOutcome {
            config: self.config,
            mode: self.mode,
            survivor: self.survivor,
            order: self.order,
        }
    }
}

/// Runs a game to completion and returns its outcome.
pub fn run(config: GameConfig, mode: GameMode, ring: RingKind) -> Result<GameOutcome> {
    let mut state = GameState::new(config, mode, ring)?;
    while !state.finished() {
        state.step()?;
    }
    Ok(state.into_outcome())
}

/// Runs a game to completion, also collecting the full event stream. The
/// stream ends with a [`GameEvent::Finished`] marker.
pub fn run_events(config: GameConfig, mode: GameMode, ring: RingKind) -> Result<(GameOutcome, Vec<GameEvent>)> {
    let mut state = GameState::new(config, mode, ring)?;
    let mut events = Vec::new();
    while !state.finished() {
        events.push(state.step()?);
    }
    events.push(GameEvent::Finished { survivor: state.survivor() });
    Ok((state.into_outcome(), events))
}

/// Simulates until the first round boundary (instant before a skip, including
/// the starting position) at which every alive soldier has exactly one life.
/// Returns `None` when the game ends without such an instant.
pub fn one_life_snapshot(config: GameConfig) -> Result<Option<OneLifeSnapshot>> {
    let mut state = GameState::new(config, GameMode::Survivor, RingKind::DoublyLinked)?;
    let all_ones = |s: &GameState| s.alive_labels().iter().all(|&l| s.remaining_lives(l) == Some(1));
    if state.at_round_boundary() && all_ones(&state) {
        return Ok(Some(capture(&state)));
    }
    while !state.finished() {
        state.step()?;
        if !state.finished() && state.at_round_boundary() && all_ones(&state) {
            return Ok(Some(capture(&state)));
        }
    }
    Ok(None)
}

fn capture(state: &GameState) -> OneLifeSnapshot {
    OneLifeSnapshot {
        alive: state.alive_from_cursor(),
        cursor: state.cursor().expect("snapshot is taken from a nonempty circle"),
        slots_elapsed: state.slots_elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn survivor_of(n: u64, k: u64, lives: u64) -> u64 {
        run(GameConfig { n, k, lives }, GameMode::Survivor, RingKind::DoublyLinked)
            .unwrap()
            .survivor
            .unwrap()
    }

    #[test]
    fn ten_soldiers_pairs_of_hits() {
        let outcome = run(GameConfig { n: 10, k: 2, lives: 1 }, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
        assert_eq!(outcome.survivor, Some(6));
        let order: Vec<u64> = outcome.order.iter().map(|&(l, _)| l).collect();
        assert_eq!(order, vec![1, 2, 4, 5, 7, 8, 0, 3, 9]);
        let ordinals: Vec<u64> = outcome.order.iter().map(|&(_, o)| o).collect();
        assert_eq!(ordinals, (1..=9).collect::<Vec<_>>());
    }

    #[test]
    fn two_life_game_of_seven() {
        let outcome = run(GameConfig { n: 7, k: 3, lives: 2 }, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
        assert_eq!(outcome.survivor, Some(4));
        let order: Vec<u64> = outcome.order.iter().map(|&(l, _)| l).collect();
        assert_eq!(order, vec![2, 3, 6, 0, 1, 5]);
    }

    #[test]
    fn four_life_game_of_thirteen() {
        assert_eq!(survivor_of(13, 4, 4), 10);
    }

    #[test]
    fn lone_soldier_wins_instantly() {
        let outcome = run(GameConfig { n: 1, k: 5, lives: 3 }, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
        assert_eq!(outcome.survivor, Some(0));
        assert!(outcome.order.is_empty());
    }

    #[test]
    fn deck_of_52_runs_to_depletion() {
        let outcome = run(GameConfig { n: 52, k: 3, lives: 1 }, GameMode::Depletion, RingKind::DoublyLinked).unwrap();
        assert_eq!(outcome.survivor, None);
        let order: Vec<u64> = outcome.order.iter().map(|&(l, _)| l).collect();
        assert_eq!(order.len(), 52);
        assert_eq!(&order[39..], &[4, 8, 12, 20, 24, 28, 36, 40, 44, 0, 16, 32, 48]);
    }

    #[test]
    fn first_steps_follow_the_slot_stream() {
        let mut game = GameState::new(GameConfig { n: 10, k: 2, lives: 1 }, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
        assert_eq!(game.step().unwrap(), GameEvent::Skip { soldier: 0 });
        assert_eq!(game.step().unwrap(), GameEvent::Eliminate { soldier: 1, ordinal: 1 });

        let mut game = GameState::new(GameConfig { n: 7, k: 3, lives: 2 }, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
        assert_eq!(game.step().unwrap(), GameEvent::Skip { soldier: 0 });
        assert_eq!(game.step().unwrap(), GameEvent::Hit { soldier: 1, remaining_lives: 1 });
    }

    #[test]
    fn stepping_a_finished_game_is_a_state_error() {
        let mut game = GameState::new(GameConfig { n: 1, k: 2, lives: 1 }, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
        assert!(game.finished());
        assert!(matches!(game.step(), Err(Error::State(_))));
    }

    #[test]
    fn invalid_configs_are_domain_errors() {
        for (n, k, lives) in [(0, 2, 1), (5, 0, 1), (5, 2, 0)] {
            let err = run(GameConfig { n, k, lives }, GameMode::Survivor, RingKind::DoublyLinked).unwrap_err();
            assert!(matches!(err, Error::Domain(_)));
        }
    }

    #[test]
    fn depletion_requires_single_life() {
        let err = run(GameConfig { n: 5, k: 2, lives: 2 }, GameMode::Depletion, RingKind::DoublyLinked).unwrap_err();
        assert!(matches!(err, Error::UnsupportedMode(_)));
    }

    #[test]
    fn wrapping_hit_block_can_strike_twice() {
        // Two soldiers, two lives, blocks of two: after skipping 0, the block
        // hits 1 then wraps onto 0; the next round's block finishes 0 off.
        assert_eq!(survivor_of(2, 2, 2), 1);
        // Hit block longer than the circle.
        assert_eq!(survivor_of(3, 4, 4), 2);
    }

    #[test]
    fn termination_is_immediate_mid_block() {
        // n=2, k=3, lives=1: skip 0, eliminate 1, and the game must end with
        // 0 as survivor even though two hits of the block are still owed.
        let (outcome, events) = run_events(GameConfig { n: 2, k: 3, lives: 1 }, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
        assert_eq!(outcome.survivor, Some(0));
        assert_eq!(
            events,
            vec![
                GameEvent::Skip { soldier: 0 },
                GameEvent::Eliminate { soldier: 1, ordinal: 1 },
                GameEvent::Finished { survivor: Some(0) },
            ]
        );
    }

    #[test]
    fn one_life_snapshot_of_thirteen_with_three_lives() {
        let snap = one_life_snapshot(GameConfig { n: 13, k: 4, lives: 3 }).unwrap().unwrap();
        assert_eq!(snap.alive, vec![2, 4, 5, 7, 9, 10, 12]);
        assert_eq!(snap.cursor, 2);
        assert_eq!(snap.slots_elapsed, 40);
    }

    #[test]
    fn one_life_snapshot_of_thirteen_with_four_lives() {
        let snap = one_life_snapshot(GameConfig { n: 13, k: 4, lives: 4 }).unwrap().unwrap();
        assert_eq!(snap.alive, vec![4, 5, 6, 7, 9, 10, 11, 12]);
        assert_eq!(snap.cursor, 4);
    }

    #[test]
    fn single_life_games_snapshot_at_the_start() {
        for (n, k) in [(1, 3), (6, 2), (9, 4)] {
            let snap = one_life_snapshot(GameConfig { n, k, lives: 1 }).unwrap().unwrap();
            assert_eq!(snap.alive, (0..n).collect::<Vec<_>>());
            assert_eq!(snap.cursor, 0);
            assert_eq!(snap.slots_elapsed, 0);
        }
    }

    #[test]
    fn some_games_never_reach_all_ones() {
        // With two lives and blocks of three, the five-soldier game kills its
        // victims in pairs of hits straddling the boundary probes.
        assert_eq!(one_life_snapshot(GameConfig { n: 5, k: 3, lives: 2 }).unwrap(), None);
        assert_eq!(one_life_snapshot(GameConfig { n: 13, k: 5, lives: 2 }).unwrap(), None);
    }

    #[test]
    fn resume_from_snapshot_reaches_the_same_end() {
        let config = GameConfig { n: 13, k: 4, lives: 3 };
        let from_scratch = run(config, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
        let snap = one_life_snapshot(config).unwrap().unwrap();
        let mut resumed = GameState::resume(config, GameMode::Survivor, &snap, RingKind::DoublyLinked).unwrap();
        while !resumed.finished() {
            resumed.step().unwrap();
        }
        assert_eq!(resumed.survivor(), from_scratch.survivor);
        // Ordinals continue where the pre-snapshot game left off, so the
        // resumed order is exactly the tail of the full order.
        let done_before = config.n as usize - snap.alive.len();
        assert_eq!(resumed.order(), &from_scratch.order[done_before..]);
    }

    #[test]
    fn life_losses_balance_in_survivor_mode() {
        for (n, k, lives) in [(9, 2, 3), (12, 5, 2), (20, 3, 4)] {
            let config = GameConfig { n, k, lives };
            let mut state = GameState::new(config, GameMode::Survivor, RingKind::DoublyLinked).unwrap();
            let mut hits_dealt = 0u64;
            while !state.finished() {
                match state.step().unwrap() {
                    GameEvent::Hit { .. } | GameEvent::Eliminate { .. } => hits_dealt += 1,
                    _ => {}
                }
            }
            let survivor = state.survivor().unwrap();
            let left = state.remaining_lives(survivor).unwrap();
            assert_eq!(hits_dealt, lives * (n - 1) + (lives - left));
        }
    }
}
