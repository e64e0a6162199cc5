//! Helpers shared by the integration tests: seeded random games and a
//! brute-force Berge check that touches nothing but the raw payoff rows.

#![allow(dead_code)]

use berge::rational::{int, ratio, Rational};
use berge::{EquilibriumBox, Game, MixedProfile, PlayerConstraint};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_rows(rng: &mut StdRng, n: usize, lo: i64, hi: i64) -> Vec<Vec<Rational>> {
    (0..1usize << n)
        .map(|_| (0..n).map(|_| int(rng.gen_range(lo..=hi))).collect())
        .collect()
}

pub fn random_game(rng: &mut StdRng, n: usize, lo: i64, hi: i64) -> Game {
    Game::with_max_players(n, random_rows(rng, n, lo, hi), n.max(2)).unwrap()
}

/// Small-range payoffs hit ties and continua far more often than wide ones.
pub fn random_degenerate_game(rng: &mut StdRng, n: usize) -> Game {
    random_game(rng, n, -1, 1)
}

pub fn raw_rows(g: &Game) -> Vec<Vec<Rational>> {
    g.rows().map(<[Rational]>::to_vec).collect()
}

/// Weight of pure profile `k` (player 0 most significant, bit 0 = first
/// strategy) under independent mixing.
fn weight(probs: &[Rational], k: usize) -> Rational {
    let n = probs.len();
    let mut w = Rational::one();
    for (j, p) in probs.iter().enumerate() {
        if (k >> (n - 1 - j)) & 1 == 0 {
            w *= p;
        } else {
            w *= Rational::one() - p;
        }
    }
    w
}

pub fn brute_expected(rows: &[Vec<Rational>], probs: &[Rational], player: usize) -> Rational {
    rows.iter()
        .enumerate()
        .map(|(k, row)| weight(probs, k) * &row[player])
        .fold(Rational::zero(), |a, b| a + b)
}

/// Berge condition straight from the definition, deviations restricted to
/// pure profiles of the other players.
pub fn brute_berge(rows: &[Vec<Rational>], probs: &[Rational]) -> bool {
    let n = probs.len();
    (0..n).all(|i| {
        let value = brute_expected(rows, probs, i);
        (0..1usize << n).all(|t| {
            let dev: Vec<Rational> = (0..n)
                .map(|j| {
                    if j == i {
                        probs[i].clone()
                    } else if (t >> (n - 1 - j)) & 1 == 0 {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            brute_expected(rows, &dev, i) <= value
        })
    })
}

pub fn mixed(probs: Vec<Rational>) -> MixedProfile {
    MixedProfile::new(probs).unwrap()
}

/// A random rational strictly inside (lo, hi).
pub fn interior(rng: &mut StdRng, lo: &Rational, hi: &Rational) -> Rational {
    let den: i64 = rng.gen_range(2..=64);
    let num: i64 = rng.gen_range(1..den);
    lo + (hi - lo) * ratio(num, den)
}

/// Draws a profile from a box: endpoints when they belong to the set,
/// random interior points otherwise.
pub fn sample_box(rng: &mut StdRng, b: &EquilibriumBox) -> MixedProfile {
    let probs = b
        .constraints
        .iter()
        .map(|c| match c {
            PlayerConstraint::Pure(0) => Rational::one(),
            PlayerConstraint::Pure(_) => Rational::zero(),
            PlayerConstraint::Point(v) => v.clone(),
            PlayerConstraint::Interval(iv) => match rng.gen_range(0..4) {
                0 if iv.lo_closed() => iv.lo().clone(),
                1 if iv.hi_closed() => iv.hi().clone(),
                _ => interior(rng, iv.lo(), iv.hi()),
            },
        })
        .collect();
    mixed(probs)
}

pub fn grid_values(resolution: usize) -> Vec<Rational> {
    (0..=resolution)
        .map(|k| ratio(k as i64, resolution as i64))
        .collect()
}

/// Every point of the grid, first coordinate slowest.
pub fn grid_points(n: usize, resolution: usize) -> Vec<Vec<Rational>> {
    let values = grid_values(resolution);
    let mut points = vec![vec![]];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut q = p.clone();
                    q.push(v.clone());
                    q
                })
            })
            .collect();
    }
    points
}

/// Replaces player `player`'s payoffs by `scale * u + shift`.
pub fn rescale_player(g: &Game, player: usize, scale: &Rational, shift: &Rational) -> Game {
    let rows = g
        .rows()
        .map(|row| {
            let mut row = row.to_vec();
            row[player] = &row[player] * scale + shift;
            row
        })
        .collect();
    Game::with_max_players(g.n(), rows, g.n()).unwrap()
}
