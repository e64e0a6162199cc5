//! Normal-form games in which every player has exactly two pure strategies.
//!
//! Pure profiles are indexed with player 0 as the most significant bit: the
//! profile `(s_0, ..., s_{n-1})` sits at `sum s_i * 2^(n-1-i)`, where bit 0
//! is a player's first strategy and bit 1 the second. Mixed profiles store,
//! per player, the probability of the *first* strategy.

use std::fmt;

use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linear::LinearFn;
use crate::rational::Rational;

/// Player cap applied when none is given; the full search grows like 4^n.
pub const DEFAULT_MAX_PLAYERS: usize = 12;
/// Absolute ceiling for an overridden cap. Profile indices and partition
/// masks are machine words, and the payoff table has n * 2^n entries.
pub const HARD_MAX_PLAYERS: usize = 24;

/// Mask of `player`'s bit in a profile index.
#[inline]
pub(crate) fn player_bit(n: usize, player: usize) -> usize {
    1 << (n - 1 - player)
}

/// Inserts a 0 bit for `player` into an index over the other `n - 1` players.
#[inline]
pub(crate) fn spread_others(n: usize, player: usize, others: usize) -> usize {
    let low_width = n - 1 - player;
    let low = others & ((1 << low_width) - 1);
    let high = others >> low_width;
    (high << (low_width + 1)) | low
}

/// A choice of pure strategy for each player.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureProfile {
    bits: Vec<u8>,
}

impl PureProfile {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some((position, &value)) = bits.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(Error::StrategyBit { position, value });
        }
        Ok(Self { bits })
    }

    /// Inverse of [`PureProfile::index`].
    pub fn from_index(index: usize, n: usize) -> Result<Self> {
        if n == 0 || n > HARD_MAX_PLAYERS || index >= 1 << n {
            return Err(Error::OutOfRange {
                what: "profile",
                index,
                limit: if n <= HARD_MAX_PLAYERS { 1 << n } else { 0 },
            });
        }
        let bits = (0..n)
            .map(|player| u8::from(index & player_bit(n, player) != 0))
            .collect();
        Ok(Self { bits })
    }

    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .fold(0, |acc, &b| (acc << 1) | usize::from(b))
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The degenerate mixed profile that plays this pure profile.
    pub fn to_mixed(&self) -> MixedProfile {
        MixedProfile {
            probs: self
                .bits
                .iter()
                .map(|&b| {
                    if b == 0 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        }
    }
}

pub fn profile_index(profile: &PureProfile) -> usize {
    profile.index()
}

pub fn index_to_profile(index: usize, n: usize) -> Result<PureProfile> {
    PureProfile::from_index(index, n)
}

/// Per-player probability of playing the first pure strategy.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedProfile {
    probs: Vec<Rational>,
}

impl MixedProfile {
    pub fn new(probs: Vec<Rational>) -> Result<Self> {
        for (player, p) in probs.iter().enumerate() {
            if *p < Rational::zero() || *p > Rational::one() {
                return Err(Error::Probability {
                    player,
                    value: p.to_string(),
                });
            }
        }
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[Rational] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// The pure profile this stands for, if every probability is 0 or 1.
    pub fn as_pure(&self) -> Option<PureProfile> {
        self.probs
            .iter()
            .map(|p| {
                if p.is_one() {
                    Some(0)
                } else if p.is_zero() {
                    Some(1)
                } else {
                    None
                }
            })
            .collect::<Option<Vec<u8>>>()
            .map(|bits| PureProfile { bits })
    }
}

impl fmt::Display for MixedProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.probs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// An n-person game with two pure strategies per player and exact payoffs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    n: usize,
    /// Row-major: `payoffs[profile * n + player]`.
    payoffs: Vec<Rational>,
    players: Option<Vec<String>>,
}

impl Game {
    /// Builds a game from one row of `n` payoffs per pure profile, rows in
    /// profile-index order. Uses [`DEFAULT_MAX_PLAYERS`] as the cap.
    pub fn new(n: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        Self::with_max_players(n, rows, DEFAULT_MAX_PLAYERS)
    }

    pub fn with_max_players(n: usize, rows: Vec<Vec<Rational>>, max: usize) -> Result<Self> {
        let max = max.min(HARD_MAX_PLAYERS);
        if n < 2 || n > max {
            return Err(Error::PlayerCount { n, max });
        }
        let expected = 1usize << n;
        if rows.len() != expected {
            return Err(Error::ProfileCount {
                expected,
                found: rows.len(),
            });
        }
        let mut payoffs = Vec::with_capacity(n * expected);
        for (profile, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::PayoffArity {
                    profile,
                    expected: n,
                    found: row.len(),
                });
            }
            payoffs.extend(row);
        }
        Ok(Self {
            n,
            payoffs,
            players: None,
        })
    }

    /// Attaches player names, used only for display.
    pub fn with_players(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::PlayerNames {
                expected: self.n,
                found: names.len(),
            });
        }
        self.players = Some(names);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn profile_count(&self) -> usize {
        1 << self.n
    }

    pub fn players(&self) -> Option<&[String]> {
        self.players.as_deref()
    }

    /// Explicit name, or `A`, `B`, ... (`P1`, `P2`, ... past 26 players).
    pub fn player_name(&self, player: usize) -> String {
        match &self.players {
            Some(names) => names[player].clone(),
            None if self.n <= 26 => char::from(b'A' + player as u8).to_string(),
            None => format!("P{}", player + 1),
        }
    }

    /// Label of a pure strategy, e.g. `F1` for player `F`'s first strategy.
    pub fn strategy_label(&self, player: usize, bit: u8) -> String {
        format!("{}{}", self.player_name(player), bit + 1)
    }

    pub fn profile_label(&self, profile: &PureProfile) -> String {
        let parts: Vec<String> = profile
            .bits()
            .iter()
            .enumerate()
            .map(|(i, &b)| self.strategy_label(i, b))
            .collect();
        format!("({})", parts.join(","))
    }

    /// Payoff rows in profile-index order.
    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.payoffs.chunks(self.n)
    }

    /// `U_player` at the profile with the given index.
    ///
    /// Panics if either index is out of range.
    #[inline]
    pub fn payoff_at(&self, profile: usize, player: usize) -> &Rational {
        assert!(player < self.n, "player {player} out of range");
        &self.payoffs[profile * self.n + player]
    }

    pub fn payoff(&self, profile: &PureProfile, player: usize) -> Result<&Rational> {
        self.check_profile(profile.len())?;
        self.check_player(player)?;
        Ok(self.payoff_at(profile.index(), player))
    }

    /// Expected payoff of `player` under independent mixing.
    pub fn expected_payoff(&self, profile: &MixedProfile, player: usize) -> Result<Rational> {
        self.check_profile(profile.len())?;
        self.check_player(player)?;
        let mut values: Vec<Rational> = (0..self.profile_count())
            .map(|k| self.payoff_at(k, player).clone())
            .collect();
        // contract the least significant player first
        for p in profile.probs().iter().rev() {
            let q = Rational::one() - p;
            values = values
                .chunks(2)
                .map(|pair| {
                    if p.is_one() {
                        pair[0].clone()
                    } else if p.is_zero() {
                        pair[1].clone()
                    } else {
                        p * &pair[0] + &q * &pair[1]
                    }
                })
                .collect();
        }
        Ok(values.pop().expect("contraction leaves one value"))
    }

    /// `player`'s payoff as an affine function of their own probability,
    /// with the others fixed at the pure strategies in `others` (listed in
    /// player order, skipping `player`).
    pub fn payoff_line(&self, player: usize, others: &[u8]) -> Result<LinearFn> {
        self.check_player(player)?;
        if others.len() != self.n - 1 {
            return Err(Error::ProfileLength {
                expected: self.n - 1,
                found: others.len(),
            });
        }
        if let Some((position, &value)) = others.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(Error::StrategyBit { position, value });
        }
        let packed = others.iter().fold(0, |acc, &b| (acc << 1) | usize::from(b));
        Ok(self.line_for(player, packed))
    }

    /// Same as [`Game::payoff_line`] with the others packed into an index over
    /// the `n - 1` remaining players.
    pub(crate) fn line_for(&self, player: usize, others: usize) -> LinearFn {
        self.line_through(player, spread_others(self.n, player, others))
    }

    /// Line through the two profiles that differ from `base` only in
    /// `player`'s strategy; `base` must have `player`'s bit cleared.
    pub(crate) fn line_through(&self, player: usize, base: usize) -> LinearFn {
        let first = self.payoff_at(base, player);
        let second = self.payoff_at(base | player_bit(self.n, player), player);
        LinearFn::new(first - second, second.clone())
    }

    /// SHA-256 over a canonical rendering of the payoff table.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(format!("n={};", self.n).as_bytes());
        for value in &self.payoffs {
            hasher.update(value.to_string().as_bytes());
            hasher.update(b";");
        }
        hasher
            .finalize()
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    pub(crate) fn check_player(&self, player: usize) -> Result<()> {
        if player >= self.n {
            return Err(Error::OutOfRange {
                what: "player",
                index: player,
                limit: self.n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_profile(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::ProfileLength {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }
}
