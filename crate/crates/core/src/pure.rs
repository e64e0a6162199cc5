//! Pure-strategy analysis: disappointment, the disappointment table, pure
//! Berge and pure Nash equilibria, and the 2-player payoff swap.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::game::{player_bit, Game, PureProfile};
use crate::rational::Rational;

/// Disappointment of every player at every pure profile, laid out like the
/// game's payoff table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisappointmentTable {
    n: usize,
    values: Vec<Rational>,
}

impl DisappointmentTable {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, profile: usize, player: usize) -> &Rational {
        &self.values[profile * self.n + player]
    }

    #[inline]
    pub fn is_zero_at(&self, profile: usize, player: usize) -> bool {
        self.get(profile, player).is_zero()
    }

    /// True when nobody is disappointed at `profile`.
    pub fn is_null_vector(&self, profile: usize) -> bool {
        self.row(profile).iter().all(Zero::is_zero)
    }

    pub fn row(&self, profile: usize) -> &[Rational] {
        &self.values[profile * self.n..(profile + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.values.chunks(self.n)
    }
}

/// Best payoff `player` can receive while playing `bit`, over all pure
/// choices of the others. Ties need no resolution; only the value matters.
fn best_with_own(g: &Game, player: usize, bit: u8) -> &Rational {
    let mask = player_bit(g.n(), player);
    let want = if bit == 0 { 0 } else { mask };
    (0..g.profile_count())
        .filter(|k| k & mask == want)
        .map(|k| g.payoff_at(k, player))
        .max()
        .expect("at least one completion")
}

/// `max over t_{-i} of u_i(s_i, t_{-i}) - u_i(s)`; never negative.
pub fn disappointment(g: &Game, profile: &PureProfile, player: usize) -> Result<Rational> {
    let actual = g.payoff(profile, player)?;
    let best = best_with_own(g, player, profile.bits()[player]);
    Ok(best - actual)
}

pub fn disappointment_matrix(g: &Game) -> DisappointmentTable {
    let n = g.n();
    let best: Vec<[&Rational; 2]> = (0..n)
        .map(|i| [best_with_own(g, i, 0), best_with_own(g, i, 1)])
        .collect();
    let mut values = Vec::with_capacity(n * g.profile_count());
    for k in 0..g.profile_count() {
        for (i, best) in best.iter().enumerate() {
            let own = usize::from(k & player_bit(n, i) != 0);
            values.push(best[own] - g.payoff_at(k, i));
        }
    }
    DisappointmentTable { n, values }
}

/// Pure Berge equilibria: profiles whose disappointment vector is null,
/// in ascending profile-index order.
pub fn pure_berge(g: &Game) -> Vec<PureProfile> {
    pure_berge_from(&disappointment_matrix(g))
}

pub(crate) fn pure_berge_from(table: &DisappointmentTable) -> Vec<PureProfile> {
    (0..1usize << table.n())
        .filter(|&k| table.is_null_vector(k))
        .map(|k| PureProfile::from_index(k, table.n()).expect("index in range"))
        .collect()
}

/// Pure Nash equilibria: no player gains strictly by switching their own
/// strategy. Ascending profile-index order.
pub fn pure_nash(g: &Game) -> Vec<PureProfile> {
    let n = g.n();
    (0..g.profile_count())
        .filter(|&k| (0..n).all(|i| g.payoff_at(k, i) >= g.payoff_at(k ^ player_bit(n, i), i)))
        .map(|k| PureProfile::from_index(k, n).expect("index in range"))
        .collect()
}

/// The 2-player game with the two players' payoffs exchanged cellwise.
pub fn swap_payoffs(g: &Game) -> Result<Game> {
    if g.n() != 2 {
        return Err(Error::NotTwoPlayer { n: g.n() });
    }
    let rows = g
        .rows()
        .map(|row| vec![row[1].clone(), row[0].clone()])
        .collect();
    let swapped = Game::new(2, rows)?;
    match g.players() {
        Some(names) => swapped.with_players(names.to_vec()),
        None => Ok(swapped),
    }
}
