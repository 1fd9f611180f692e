//! Closed forms for survivors, elimination times, and one-life sets, plus the
//! dispatcher that picks the right formula for a configuration.
//!
//! Two of the published formulas disagree with their own worked figures, so
//! those operations take a [`FormulaMode`]: `PaperPrinted` evaluates the
//! formula text verbatim (useful only for discrepancy reporting), while
//! `Reconciled` — the default everywhere — is the variant validated against
//! the simulation oracle. For the `lives = k` survivor the reconciliation is a
//! uniform `+1` (confirmed on every admissible configuration with k ≤ 8,
//! n ≤ 800); for the one-life set no uniform correction of the printed
//! algebra exists, so `Reconciled` returns the simulated snapshot.
//!
//! All arithmetic is overflow-checked through double-width intermediates;
//! powers are found by repeated multiplication, never floating-point logs.

use crate::error::{Error, Result};
use crate::game::{run, GameConfig, GameMode, OneLifeSnapshot};
use crate::ring::RingKind;
use crate::game;

/// Formula variant selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FormulaMode {
    /// Evaluate the published formula text verbatim.
    PaperPrinted,
    /// Evaluate the oracle-validated variant (the default).
    #[default]
    Reconciled,
}

/// Default ceiling on simulated slots for dispatcher fallbacks.
pub const DEFAULT_SIM_SLOT_CAP: u64 = 1_000_000_000;

/// Greatest common divisor (labels and block lengths are small enough that
/// plain Euclid is fine).
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// True when the reduced-lives and `lives = k` formulas apply to `n`.
pub fn coprime(n: u64, k: u64) -> bool {
    gcd(n, k + 1) == 1
}

fn checked_u64(v: u128, what: &str) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Arithmetic(format!("{what} does not fit in 64 bits")))
}

/// Largest `e` with `coeff * base^e <= cap`, together with `base^e`.
/// `coeff >= 1`, `base >= 2`, `coeff <= cap` are the caller's obligations.
fn largest_exponent(coeff: u128, base: u128, cap: u128) -> (u32, u128) {
    let mut exp = 0u32;
    let mut power = 1u128;
    loop {
        match power.checked_mul(base) {
            Some(next) if coeff.checked_mul(next).is_some_and(|v| v <= cap) => {
                power = next;
                exp += 1;
            }
            _ => return (exp, power),
        }
    }
}

/// The single-life survivor decomposition `n = a(k+1)^b + km` with
/// `a ≡ n (mod k)`, `1 ≤ a ≤ k`, and `b` as large as possible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct T1Decomposition {
    /// Residue-class representative, `1 ≤ a ≤ k`.
    pub a: u64,
    /// Maximal exponent.
    pub b: u32,
    /// Quotient: `m = (n - a(k+1)^b) / k`.
    pub m: u64,
}

impl T1Decomposition {
    /// Rebuilds `n`; used to check the decomposition is lossless.
    pub fn reconstruct(&self, k: u64) -> Result<u64> {
        let power = (0..self.b).try_fold(1u128, |p, _| {
            p.checked_mul(k as u128 + 1)
                .ok_or_else(|| Error::Arithmetic("power overflows".into()))
        })?;
        let total = (self.a as u128)
            .checked_mul(power)
            .and_then(|ap| ap.checked_add(self.k_m(k)))
            .ok_or_else(|| Error::Arithmetic("reconstruction overflows".into()))?;
        checked_u64(total, "reconstructed n")
    }

    fn k_m(&self, k: u64) -> u128 {
        k as u128 * self.m as u128
    }
}

/// Decomposes `n` for the single-life survivor formula.
pub fn decompose_t1(n: u64, k: u64) -> Result<T1Decomposition> {
    if n == 0 || k == 0 {
        return Err(Error::Domain(format!("n and k must be at least 1 (got n={n}, k={k})")));
    }
    let rem = n % k;
    // a ≤ n always: either a ≤ k ≤ n, or n < k and then a = n itself.
    let a = if rem == 0 { k } else { rem };
    let (b, power) = largest_exponent(a as u128, k as u128 + 1, n as u128);
    let m = (n as u128 - a as u128 * power) / k as u128;
    Ok(T1Decomposition { a, b, m: checked_u64(m, "m")? })
}

/// Single-life survivor: `(k+1) * m` from the decomposition.
pub fn survivor_t1(n: u64, k: u64) -> Result<u64> {
    let d = decompose_t1(n, k)?;
    checked_u64((k as u128 + 1) * d.m as u128, "survivor label")
}

/// How one soldier's elimination time decomposes in a single-life depletion
/// game. Labels that are not multiples of `k+1` are eliminated on their first
/// visit; multiples survive a round and need the factor-stripping form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum T2Decomposition {
    /// `x = (k+1)m + s` with `1 ≤ s ≤ k`: eliminated after `x - m` slots of
    /// elimination ordinal counting.
    Offset { m: u64, s: u64 },
    /// `x = (k+1)m`: write `n - km = a(k+1)^b` with `a` not divisible by
    /// `k+1`, then `a = (k+1)q + r` with `0 < r < k+1`; eliminated `n - q`th.
    Multiple { m: u64, a: u64, b: u32, q: u64, r: u64 },
}

/// Decomposes label `x` for the elimination-time formula.
pub fn decompose_t2(n: u64, k: u64, x: u64) -> Result<T2Decomposition> {
    if n == 0 || k == 0 {
        return Err(Error::Domain(format!("n and k must be at least 1 (got n={n}, k={k})")));
    }
    if x >= n {
        return Err(Error::Domain(format!("label {x} is outside 0..{n}")));
    }
    let m = x / (k + 1);
    let s = x % (k + 1);
    if s != 0 {
        return Ok(T2Decomposition::Offset { m, s });
    }
    let mut a = n - k * m; // positive: x < n forces km < n
    let mut b = 0u32;
    while a % (k + 1) == 0 {
        a /= k + 1;
        b += 1;
    }
    let q = a / (k + 1);
    let r = a % (k + 1);
    Ok(T2Decomposition::Multiple { m, a, b, q, r })
}

/// 1-based elimination ordinal of label `x` in the single-life depletion game
/// (skips cost nothing; the ordinal counts eliminations only).
pub fn elim_time_t2(n: u64, k: u64, x: u64) -> Result<u64> {
    Ok(match decompose_t2(n, k, x)? {
        T2Decomposition::Offset { m, .. } => x - m,
        T2Decomposition::Multiple { q, .. } => n - q,
    })
}

/// The `lives = k` survivor decomposition: `n = q(k+1) + r` with `1 ≤ r ≤ k`,
/// `b` the largest integer with `(k+1)^b ≤ q`, `i = (q-1) mod k`, and the
/// relabel quotient `t` with `tk + i = (k+1)(q - (k+1)^b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct T3Decomposition {
    pub q: u64,
    pub r: u64,
    pub b: u32,
    pub i: u64,
    pub t: u64,
}

/// Decomposes `n` for the `lives = k` survivor formula. Requires
/// `gcd(n, k+1) = 1` and `n > k`.
pub fn decompose_t3(n: u64, k: u64) -> Result<T3Decomposition> {
    if n == 0 || k == 0 {
        return Err(Error::Domain(format!("n and k must be at least 1 (got n={n}, k={k})")));
    }
    if n <= k {
        return Err(Error::Domain(format!("the lives=k survivor formula needs n > k (got n={n}, k={k})")));
    }
    if !coprime(n, k) {
        return Err(Error::Domain(format!("the lives=k survivor formula needs gcd(n, k+1) = 1 (got n={n}, k={k})")));
    }
    let q = n / (k + 1);
    let r = n % (k + 1); // 1..=k because of coprimality
    let (b, power) = largest_exponent(1, k as u128 + 1, q as u128);
    let i = (q - 1) % k;
    // (k+1)(q - (k+1)^b) ≡ q - 1 ≡ i (mod k), so t is exact.
    let scaled = (k as u128 + 1) * (q as u128 - power);
    let t = (scaled - i as u128) / k as u128;
    Ok(T3Decomposition { q, r, b, i, t: checked_u64(t, "t")? })
}

/// Survivor of the `lives = k` game on coprime `n > k`.
///
/// The printed formula `r + ((k+1)^2 (q - (k+1)^b) - i) / k` evaluates to one
/// less than the simulated survivor on every admissible configuration tested
/// (k ≤ 8, n ≤ 800 — e.g. 9 instead of 10 at n=13, k=4), so the reconciled
/// variant adds the uniform correction of 1.
pub fn survivor_t3(n: u64, k: u64, mode: FormulaMode) -> Result<u64> {
    let d = decompose_t3(n, k)?;
    let printed = d.r as u128 + (k as u128 + 1) * d.t as u128 + d.i as u128;
    let value = match mode {
        FormulaMode::PaperPrinted => printed,
        FormulaMode::Reconciled => printed + 1,
    };
    checked_u64(value, "survivor label")
}

/// Keeps the survivor fixed while reducing a lives count above `k` into
/// `1..=k`: after every soldier has been skipped exactly once, the game state
/// repeats with `k` fewer lives each, so `lives` and `((lives-1) mod k) + 1`
/// play identically. Requires `gcd(n, k+1) = 1`.
pub fn reduce_lives_lemma2(n: u64, k: u64, lives: u64) -> Result<u64> {
    if n == 0 || k == 0 || lives == 0 {
        return Err(Error::Domain(format!(
            "n, k, and lives must be at least 1 (got n={n}, k={k}, lives={lives})"
        )));
    }
    if !coprime(n, k) {
        return Err(Error::Precondition(format!(
            "lives reduction needs gcd(n, k+1) = 1 (got n={n}, k={k})"
        )));
    }
    Ok(if lives > k { (lives - 1) % k + 1 } else { lives })
}

/// Scales an inner survivor up by `k+1`: the game on `(k+1)n` soldiers plays
/// out as the game on `n` soldiers with every label multiplied by `k+1`.
/// Requires `n ≥ k` (the scaling hypothesis).
pub fn scale_lemma1(n: u64, k: u64, lives: u64, inner_survivor: u64) -> Result<u64> {
    if n == 0 || k == 0 || lives == 0 {
        return Err(Error::Domain(format!(
            "n, k, and lives must be at least 1 (got n={n}, k={k}, lives={lives})"
        )));
    }
    if n < k {
        return Err(Error::Precondition(format!("scaling needs n ≥ k (got n={n}, k={k})")));
    }
    checked_u64((k as u128 + 1) * inner_survivor as u128, "scaled survivor label")
}

/// The printed one-life-set algebra, executed verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneLifeAlgebra {
    /// Slot indices `t` in `0..lives*n` with `t ≡ 0 (mod k+1)`.
    pub s1: Vec<u64>,
    /// `t mod n` for each member of `s1`, in ascending `t` order.
    pub s2: Vec<u64>,
    /// The offset: the largest multiple of `k+1` below `lives*n`, mod `n`.
    pub l_offset: u64,
    /// Leading members to remove: `k - (n - l_offset)`; can be negative,
    /// which the printed steps do not account for.
    pub drop_count: i64,
    /// `s2` without its first `max(drop_count, 0)` members.
    pub result: Vec<u64>,
    /// True when `drop_count` is negative or exceeds the list length — an
    /// algorithm-domain anomaly reported rather than crashed on.
    pub drop_anomalous: bool,
}

/// Executes the printed one-life-set steps. Requires `gcd(n, k+1) = 1` and
/// `lives < k` (the algebra's setting).
pub fn one_life_algebra(n: u64, k: u64, lives: u64) -> Result<OneLifeAlgebra> {
    if n == 0 || k == 0 || lives == 0 {
        return Err(Error::Domain(format!(
            "n, k, and lives must be at least 1 (got n={n}, k={k}, lives={lives})"
        )));
    }
    if !coprime(n, k) {
        return Err(Error::Domain(format!("the one-life algebra needs gcd(n, k+1) = 1 (got n={n}, k={k})")));
    }
    if lives >= k {
        return Err(Error::Domain(format!("the one-life algebra needs lives < k (got lives={lives}, k={k})")));
    }
    let total = n
        .checked_mul(lives)
        .ok_or_else(|| Error::Arithmetic("lives * n does not fit in 64 bits".into()))?;
    let s1: Vec<u64> = (0..total).step_by((k + 1) as usize).collect();
    let s2: Vec<u64> = s1.iter().map(|&t| t % n).collect();
    let l_offset = (total - total % (k + 1)) % n;
    let drop_count = k as i64 - (n as i64 - l_offset as i64);
    let applied = drop_count.clamp(0, s2.len() as i64) as usize;
    let drop_anomalous = drop_count < 0 || drop_count > s2.len() as i64;
    let result = s2[applied..].to_vec();
    Ok(OneLifeAlgebra { s1, s2, l_offset, drop_count, result, drop_anomalous })
}

/// The set of soldiers alive at the first all-ones round boundary, in
/// ascending label order for both variants.
///
/// `PaperPrinted` runs the printed algebra (whose generation order is kept on
/// [`OneLifeAlgebra::result`]). `Reconciled` returns the simulated snapshot's
/// alive set — the printed algebra does not match the simulation on any
/// tested configuration and admits no uniform correction, so the oracle is
/// the reconciled definition. `Reconciled` additionally accepts `lives = k`;
/// `None` means the game ends without an all-ones boundary.
pub fn one_life_set(n: u64, k: u64, lives: u64, mode: FormulaMode) -> Result<Option<Vec<u64>>> {
    match mode {
        FormulaMode::PaperPrinted => {
            let mut labels = one_life_algebra(n, k, lives)?.result;
            labels.sort_unstable();
            Ok(Some(labels))
        }
        FormulaMode::Reconciled => {
            if n == 0 || k == 0 || lives == 0 {
                return Err(Error::Domain(format!(
                    "n, k, and lives must be at least 1 (got n={n}, k={k}, lives={lives})"
                )));
            }
            if !coprime(n, k) {
                return Err(Error::Domain(format!(
                    "the one-life set needs gcd(n, k+1) = 1 (got n={n}, k={k})"
                )));
            }
            if lives > k {
                return Err(Error::Domain(format!(
                    "the one-life set needs lives ≤ k (got lives={lives}, k={k})"
                )));
            }
            Ok(game::one_life_snapshot(GameConfig { n, k, lives })?.map(|snap| {
                let mut alive = snap.alive;
                alive.sort_unstable();
                alive
            }))
        }
    }
}

/// Both sides of the one-life comparison, for discrepancy reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneLifeComparison {
    /// The printed algebra's full working.
    pub algebra: OneLifeAlgebra,
    /// The simulated snapshot, when the game reaches an all-ones boundary.
    pub oracle: Option<OneLifeSnapshot>,
    /// True when the algebra's result equals the snapshot's alive set as sets.
    pub matches: bool,
}

/// Runs both the printed algebra and the simulation for one configuration.
/// Same preconditions as [`one_life_algebra`].
pub fn one_life_comparison(n: u64, k: u64, lives: u64) -> Result<OneLifeComparison> {
    let algebra = one_life_algebra(n, k, lives)?;
    let oracle = game::one_life_snapshot(GameConfig { n, k, lives })?;
    let matches = match &oracle {
        None => false,
        Some(snap) => {
            let mut lhs = algebra.result.clone();
            let mut rhs = snap.alive.clone();
            lhs.sort_unstable();
            rhs.sort_unstable();
            lhs == rhs
        }
    };
    Ok(OneLifeComparison { algebra, oracle, matches })
}

/// Closed-form survivor when one applies, without ever simulating.
///
/// Scaling is stripped first (`n` divisible by `k+1` with a large enough
/// quotient), then a lives count above `k` is reduced when `gcd(n, k+1) = 1`.
/// After that, single-life games use the single-life formula and `lives = k`
/// games on coprime `n > k` use the `lives = k` formula in the given mode.
/// Anything else is a domain error: no closed form is known.
pub fn survivor_closed(n: u64, k: u64, lives: u64, mode: FormulaMode) -> Result<u64> {
    GameConfig { n, k, lives }.validate()?;
    let (inner_n, multiplier) = strip_scaling(n, k);
    let mut lives = lives;
    if lives > 1 && coprime(inner_n, k) {
        lives = reduce_lives_lemma2(inner_n, k, lives)?;
    }
    let inner = if lives == 1 {
        survivor_t1(inner_n, k)?
    } else if lives == k && inner_n > k && coprime(inner_n, k) {
        survivor_t3(inner_n, k, mode)?
    } else {
        return Err(Error::Domain(format!(
            "no closed form applies to n={n}, k={k}, lives={lives}"
        )));
    };
    checked_u64(multiplier as u128 * inner as u128, "survivor label")
}

/// Survivor for any configuration: closed forms where they apply, capped
/// simulation otherwise. Always equals the simulated survivor.
pub fn survivor_feline(n: u64, k: u64, lives: u64) -> Result<u64> {
    survivor_feline_with_cap(n, k, lives, DEFAULT_SIM_SLOT_CAP)
}

/// [`survivor_feline`] with an explicit ceiling on fallback-simulation slots;
/// a configuration whose simulation would exceed it is refused with a
/// resource error.
pub fn survivor_feline_with_cap(n: u64, k: u64, lives: u64, max_slots: u64) -> Result<u64> {
    match survivor_closed(n, k, lives, FormulaMode::Reconciled) {
        Ok(label) => Ok(label),
        Err(Error::Domain(_)) => {
            GameConfig { n, k, lives }.validate()?;
            let (inner_n, multiplier) = strip_scaling(n, k);
            let mut inner_lives = lives;
            if inner_lives > 1 && coprime(inner_n, k) {
                inner_lives = reduce_lives_lemma2(inner_n, k, inner_lives)?;
            }
            let estimate = estimated_slots(inner_n, inner_lives);
            if estimate > max_slots as u128 {
                return Err(Error::Resource(format!(
                    "simulating n={inner_n}, lives={inner_lives} needs about {estimate} slots, over the cap of {max_slots}"
                )));
            }
            let outcome = run(
                GameConfig { n: inner_n, k, lives: inner_lives },
                GameMode::Survivor,
                RingKind::DoublyLinked,
            )?;
            let inner = outcome.survivor.expect("survivor mode always has a winner");
            checked_u64(multiplier as u128 * inner as u128, "survivor label")
        }
        Err(other) => Err(other),
    }
}

/// Upper bound on slots a survivor-mode game can take: at most `lives * n`
/// hits and one skip per `k` hits.
pub(crate) fn estimated_slots(n: u64, lives: u64) -> u128 {
    2 * n as u128 * lives as u128 + 2
}

/// Divides out `k+1` while the quotient stays at or above `k` (the scaling
/// hypothesis); returns the reduced n and the accumulated label multiplier.
fn strip_scaling(n: u64, k: u64) -> (u64, u64) {
    let mut n = n;
    let mut multiplier = 1u64;
    while n % (k + 1) == 0 && n / (k + 1) >= k {
        n /= k + 1;
        multiplier *= k + 1; // multiplier * n stays equal to the original n
    }
    (n, multiplier)
}
